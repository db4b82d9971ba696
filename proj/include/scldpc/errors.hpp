#ifndef SCLDPC_ERRORS_HPP
#define SCLDPC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace scldpc {

// Error categories; the CLI maps each category to a distinct exit code.
enum class errc {
    invalid_params,     // bad degrees, gcd 1, L < d_l, T out of range, bad rate/SNR domain
    dimension_mismatch, // vector length does not match matrix
    malformed_path,     // circulant path violates alternation/closure
    unsupported_length, // cycle counting above the supported bound
    hypothesis_not_met, // lemma preconditions (T, d_l, L) not satisfied
    search_exhausted,   // randomized shift search gave up
    infeasible_degree,  // PEG cannot place the required edges
    bracket_failure,    // threshold bisection found no sign change
    io_failure,         // file cannot be opened/written
    parse_failure,      // malformed input file
    inconsistent_matrix // row/column adjacency disagree
};

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw error(code, what); }

} // namespace scldpc

#endif
