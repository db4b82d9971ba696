#ifndef SCLDPC_CHANNEL_HPP
#define SCLDPC_CHANNEL_HPP

#include <cmath>
#include <string>

#include "decoder.hpp"
#include "errors.hpp"
#include "rng.hpp"

namespace scldpc {

// Eb/N0 in dB to noise standard deviation for BPSK at the given code rate:
// sigma^2 = 1 / (2 r 10^(snr/10)).
inline double ebno_db_to_sigma(double snr_db, double rate) {
    if (!(rate > 0.0 && rate < 1.0))
        raise(errc::invalid_params, "rate must lie in (0,1), got " + std::to_string(rate));
    if (!std::isfinite(snr_db)) raise(errc::invalid_params, "Eb/N0 must be finite");
    return std::sqrt(1.0 / (2.0 * rate * std::pow(10.0, snr_db / 10.0)));
}

// BI-AWGN observation of the all-zero codeword: y = +1 + n with
// n ~ N(0, sigma^2), reported as channel LLRs 2y / sigma^2.
inline LlrFrame awgn_llr(double snr_db, double rate, std::size_t n_bits, Rng& stream) {
    const double sigma = ebno_db_to_sigma(snr_db, rate);
    const double scale = 2.0 / (sigma * sigma);
    LlrFrame llrs(n_bits);
    for (auto& v : llrs) v = scale * (1.0 + sigma * stream.gaussian());
    return llrs;
}

} // namespace scldpc

#endif
