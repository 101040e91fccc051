#include "wpcn/channel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace wpcn {
namespace {

// SplitMix64: one 64-bit state, full-period, counter-friendly.
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t state) : state_(state) {}

    std::uint64_t next() {
        state_ += kGolden;
        return mix64(state_);
    }

    // Uniform on (0, 1]; never returns 0, so -log is always finite.
    double uniform01() {
        return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
    }

    // Unit-mean exponential via inverse CDF.
    double exp1() { return -std::log(uniform01()); }

private:
    std::uint64_t state_;
};

// Decorrelates (seed, block_index) pairs into independent substreams.
std::uint64_t substream_key(std::uint64_t seed, std::uint64_t block_index) {
    return mix64(seed ^ mix64(block_index + kGolden));
}

} // namespace

double noise_watts(double n0_dbm) {
    return std::pow(10.0, (n0_dbm - 30.0) / 10.0);
}

double NetworkConfig::noise_w() const { return noise_watts(n0_dbm); }

void NetworkConfig::validate() const {
    auto fail = [](const std::string& msg) {
        throw std::invalid_argument("NetworkConfig: " + msg);
    };
    if (!(d_as > 0.0)) fail("d_as must be positive");
    if (!(d_sr > 0.0 && d_sr < d_as))
        fail("d_sr must lie strictly between 0 and d_as");
    if (!(alpha >= 2.0 && alpha <= 5.0)) fail("alpha must be in [2, 5]");
    if (!(eta > 0.0 && eta < 1.0)) fail("eta must be in (0, 1)");
    if (!std::isfinite(n0_dbm)) fail("n0_dbm must be finite");
    if (!(p_a_max > 0.0)) fail("p_a_max must be positive");
    if (!(p_r_max > 0.0)) fail("p_r_max must be positive");
    // mu == 0 is admitted as the degenerate zero-average-power budget.
    if (!(mu >= 0.0 && mu <= 1.0)) fail("mu must be in [0, 1]");
}

double mean_gain(double d, double alpha) {
    if (!(d > 0.0)) throw std::domain_error("mean_gain: d must be positive");
    if (!(alpha >= 2.0 && alpha <= 5.0))
        throw std::domain_error("mean_gain: alpha must be in [2, 5]");
    return 1e-3 * std::pow(d, -alpha);
}

UnitFading sample_unit_fading(std::uint64_t seed, std::uint64_t block_index,
                              bool reciprocal) {
    SplitMix64 rng(substream_key(seed, block_index));
    UnitFading u;
    if (reciprocal) {
        u.u_as = u.u_sa = rng.exp1();
        u.u_rs = u.u_sr = rng.exp1();
        u.u_ra = rng.exp1();
    } else {
        u.u_as = rng.exp1();
        u.u_sa = rng.exp1();
        u.u_rs = rng.exp1();
        u.u_sr = rng.exp1();
        u.u_ra = rng.exp1();
    }
    return u;
}

ChannelRealization realize(const NetworkConfig& cfg, const UnitFading& u) {
    const double m_as = mean_gain(cfg.d_as, cfg.alpha);
    const double m_sr = mean_gain(cfg.d_sr, cfg.alpha);
    const double m_ra = mean_gain(cfg.d_ar(), cfg.alpha);
    ChannelRealization ch;
    ch.h_as = m_as * u.u_as;
    ch.h_sa = m_as * u.u_sa;
    ch.h_rs = m_sr * u.u_rs;
    ch.h_sr = m_sr * u.u_sr;
    ch.h_ra = m_ra * u.u_ra;
    return ch;
}

ChannelRealization sample_realization(const NetworkConfig& cfg,
                                      std::uint64_t seed,
                                      std::uint64_t block_index) {
    cfg.validate();
    return realize(cfg,
                   sample_unit_fading(seed, block_index,
                                      cfg.reciprocal_channels));
}

} // namespace wpcn
