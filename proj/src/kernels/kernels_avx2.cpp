// AVX2 + FMA variants of the throughput kernels. Verified bitwise against
// the scalar backend in tests/test_kernels.cpp; loop tails reuse the
// scalar per-element functions.

#include "kernels_detail.hpp"

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

namespace wpcn::kernels {
namespace {

using namespace detail;

const __m256d kOne = _mm256_set1_pd(1.0);
const __m256d kHalf = _mm256_set1_pd(0.5);

// Integers in [0, 2^52) held in the low bits of each 64-bit lane.
inline __m256d u52_to_pd(__m256i v) {
    const __m256i magic = _mm256_set1_epi64x(0x4330000000000000ll);
    return _mm256_sub_pd(_mm256_castsi256_pd(_mm256_or_si256(v, magic)),
                         _mm256_set1_pd(4503599627370496.0));
}

// Lane-wise log2_elem: identical operations in identical order.
inline __m256d log2v(__m256d x) {
    const __m256i bits = _mm256_castpd_si256(x);
    __m256d e = _mm256_sub_pd(u52_to_pd(_mm256_srli_epi64(bits, 52)),
                              _mm256_set1_pd(1023.0));
    __m256d m = _mm256_castsi256_pd(_mm256_or_si256(
        _mm256_and_si256(bits, _mm256_set1_epi64x(0x000FFFFFFFFFFFFFll)),
        _mm256_set1_epi64x(0x3FF0000000000000ll)));
    const __m256d above = _mm256_cmp_pd(m, _mm256_set1_pd(kSqrt2),
                                        _CMP_GT_OQ);
    m = _mm256_blendv_pd(m, _mm256_mul_pd(m, kHalf), above);
    e = _mm256_add_pd(e, _mm256_and_pd(above, kOne));
    const __m256d r = _mm256_div_pd(_mm256_sub_pd(m, kOne),
                                    _mm256_add_pd(m, kOne));
    const __m256d s = _mm256_mul_pd(r, r);
    __m256d p = _mm256_set1_pd(kAtanhCoeff[12]);
    for (int k = 11; k >= 0; --k)
        p = _mm256_fmadd_pd(p, s, _mm256_set1_pd(kAtanhCoeff[k]));
    return _mm256_fmadd_pd(
        _mm256_mul_pd(_mm256_set1_pd(kTwoOverLn2), r), p, e);
}

struct LaneBest {
    __m256d value = _mm256_set1_pd(kNegInf);
    __m256d index = _mm256_set1_pd(-1.0);
    __m256d cursor = _mm256_set_pd(3.0, 2.0, 1.0, 0.0);

    inline void update(__m256d v) {
        const __m256d better = _mm256_cmp_pd(v, value, _CMP_GT_OQ);
        value = _mm256_blendv_pd(value, v, better);
        index = _mm256_blendv_pd(index, cursor, better);
        cursor = _mm256_add_pd(cursor, _mm256_set1_pd(4.0));
    }

    // Max value across lanes; equal values keep the smallest index, which
    // reproduces the sequential first-maximum scan.
    inline RowBest merge() const {
        alignas(32) double v[4];
        alignas(32) double ix[4];
        _mm256_store_pd(v, value);
        _mm256_store_pd(ix, index);
        RowBest rb{v[0], static_cast<std::int64_t>(ix[0])};
        for (int l = 1; l < 4; ++l) {
            const auto idx = static_cast<std::int64_t>(ix[l]);
            if (v[l] > rb.value || (v[l] == rb.value && idx < rb.index))
                rb = {v[l], idx};
        }
        return rb;
    }
};

RowBest best_ec_row_avx2(double c, const double* tau2, std::int64_t n) {
    const __m256d cv = _mm256_set1_pd(c);
    const __m256d zero = _mm256_setzero_pd();
    LaneBest lanes;
    std::int64_t j = 0;
    for (; j + 4 <= n; j += 4) {
        const __m256d t2 = _mm256_loadu_pd(tau2 + j);
        __m256d v = _mm256_mul_pd(
            t2, log2v(_mm256_add_pd(kOne, _mm256_div_pd(cv, t2))));
        v = _mm256_blendv_pd(zero, v, _mm256_cmp_pd(t2, zero, _CMP_GT_OQ));
        lanes.update(v);
    }
    RowBest rb = lanes.merge();
    for (; j < n; ++j) {
        const double v = ec_elem(c, tau2[j]);
        if (v > rb.value) rb = {v, j};
    }
    return rb;
}

RowBest best_dc_row_avx2(double half_tau2, double gamma_sa, double gamma_sr,
                         const double* gamma_ra, std::int64_t n) {
    const double base = 1.0 + gamma_sa;
    const __m256d basev = _mm256_set1_pd(base);
    const __m256d halfv = _mm256_set1_pd(half_tau2);
    const __m256d gsrv = _mm256_set1_pd(gamma_sr);
    LaneBest lanes;
    std::int64_t j = 0;
    for (; j + 4 <= n; j += 4) {
        const __m256d gra = _mm256_loadu_pd(gamma_ra + j);
        const __m256d num = _mm256_mul_pd(gsrv, gra);
        const __m256d den =
            _mm256_add_pd(_mm256_add_pd(gsrv, gra), kOne);
        const __m256d arg =
            _mm256_add_pd(basev, _mm256_div_pd(num, den));
        lanes.update(_mm256_mul_pd(halfv, log2v(arg)));
    }
    RowBest rb = lanes.merge();
    for (; j < n; ++j) {
        const double v = dc_elem(half_tau2, base, gamma_sr, gamma_ra[j]);
        if (v > rb.value) rb = {v, j};
    }
    return rb;
}

void gamma_ratio_scan_avx2(double a, double b, double c, double d, double e,
                           const double* t, double* out, std::int64_t n) {
    const __m256d av = _mm256_set1_pd(a);
    const __m256d bv = _mm256_set1_pd(b);
    const __m256d cv = _mm256_set1_pd(c);
    const __m256d dv = _mm256_set1_pd(d);
    const __m256d ev = _mm256_set1_pd(e);
    std::int64_t j = 0;
    for (; j + 4 <= n; j += 4) {
        const __m256d tv = _mm256_loadu_pd(t + j);
        const __m256d u = _mm256_div_pd(kOne, _mm256_add_pd(tv, kOne));
        const __m256d w = _mm256_mul_pd(tv, u);
        const __m256d g1 = _mm256_add_pd(cv, _mm256_mul_pd(dv, u));
        const __m256d g2 = _mm256_mul_pd(ev, w);
        const __m256d lhs = _mm256_add_pd(av, _mm256_mul_pd(bv, u));
        const __m256d num = _mm256_mul_pd(g1, g2);
        const __m256d den =
            _mm256_add_pd(_mm256_add_pd(g1, g2), kOne);
        _mm256_storeu_pd(out + j,
                         _mm256_add_pd(lhs, _mm256_div_pd(num, den)));
    }
    for (; j < n; ++j) out[j] = gamma_elem(a, b, c, d, e, t[j]);
}

} // namespace

const Backend& avx2_backend_impl() {
    static const Backend backend{
        "avx2",
        &best_ec_row_avx2,
        &best_dc_row_avx2,
        &gamma_ratio_scan_avx2,
    };
    return backend;
}

} // namespace wpcn::kernels

#endif // __AVX2__ && __FMA__
