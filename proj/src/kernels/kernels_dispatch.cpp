#include "kernels_detail.hpp"

namespace wpcn::kernels {

#ifdef WPCN_HAVE_AVX2
const Backend& avx2_backend_impl(); // kernels_avx2.cpp
#endif

const Backend* avx2_backend() {
#ifdef WPCN_HAVE_AVX2
    return &avx2_backend_impl();
#else
    return nullptr;
#endif
}

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const Backend& active_backend() {
    static const Backend& chosen = []() -> const Backend& {
        const Backend* vec = avx2_backend();
        if (vec != nullptr && cpu_has_avx2()) return *vec;
        return scalar_backend();
    }();
    return chosen;
}

double log2_poly(double x) { return detail::log2_elem(x); }

} // namespace wpcn::kernels
