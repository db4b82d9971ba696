#ifndef SCLDPC_RNG_HPP
#define SCLDPC_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace scldpc {

// splitmix64 step; used for seed derivation so that one master seed can
// spawn independent, labelled streams.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t hash_label(std::string_view label) {
    std::uint64_t h = 0xcbf29ce484222325ULL; // FNV-1a 64
    for (unsigned char c : label) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Deterministic stream seed from (master, label, indices).
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view label,
                                 std::uint64_t i0 = 0, std::uint64_t i1 = 0) {
    std::uint64_t s = splitmix64(master ^ hash_label(label));
    s = splitmix64(s ^ i0);
    s = splitmix64(s ^ i1);
    return s;
}

// mt19937_64 with explicitly specified variate mappings. The standard
// distributions are implementation-defined, so uniform and Gaussian draws
// are generated here to keep outputs identical across compilers.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // uniform in [0, 1) with 53-bit resolution
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // uniform integer in [0, n) via rejection, n >= 1
    std::uint64_t uniform_below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    // standard normal via Marsaglia's polar method
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform01() - 1.0;
            v = 2.0 * uniform01() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        have_spare_ = true;
        return u * f;
    }

  private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// Normative per-frame stream: (master seed, SNR index, frame index).
inline Rng frame_stream(std::uint64_t master, std::size_t snr_index, std::size_t frame_index) {
    return Rng(derive_seed(master, "frame", snr_index, frame_index));
}

} // namespace scldpc

#endif
