#ifndef SCLDPC_DECODER_HPP
#define SCLDPC_DECODER_HPP

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "sparse.hpp"

namespace scldpc {

// Channel / posterior log-likelihood ratios; positive means bit 0 is more likely.
using LlrFrame = std::vector<double>;

struct DecodeResult {
    std::vector<std::uint8_t> hard_decision;
    bool success = false; // H * hard_decision == 0 over GF(2)
    int iterations_used = 0;
    LlrFrame posteriors;
};

inline std::vector<std::uint8_t> syndrome(const SparseBinaryMatrix& h,
                                          const std::vector<std::uint8_t>& bits) {
    if (static_cast<int>(bits.size()) != h.n_cols())
        raise(errc::dimension_mismatch, "syndrome: vector length " + std::to_string(bits.size()) +
                                            " != column count " + std::to_string(h.n_cols()));
    std::vector<std::uint8_t> s(static_cast<std::size_t>(h.n_rows()), 0);
    for (int r = 0; r < h.n_rows(); ++r) {
        std::uint8_t acc = 0;
        for (int c : h.row(r)) acc ^= bits[static_cast<std::size_t>(c)];
        s[static_cast<std::size_t>(r)] = acc;
    }
    return s;
}

// Exact pairwise boxplus: sgn(a)sgn(b)(min(|a|,|b|)) plus the log-domain
// correction, stable for any magnitudes.
inline double boxplus(double a, double b) {
    const double mag = std::min(std::fabs(a), std::fabs(b)) +
                       std::log1p(std::exp(-std::fabs(a + b))) -
                       std::log1p(std::exp(-std::fabs(a - b)));
    return std::signbit(a) == std::signbit(b) ? mag : -mag;
}

// Precomputed edge structure for repeated decoding against one matrix.
// decode() is const and keeps all message state in the caller's workspace,
// so concurrent calls may share a Decoder.
class Decoder {
  public:
    struct Workspace {
        std::vector<double> check_to_bit; // per edge
        std::vector<double> operand;      // scratch, check-degree sized
        std::vector<double> forward;
        std::vector<double> backward;
        LlrFrame posterior;
        std::vector<std::uint8_t> hard;
    };

    explicit Decoder(const SparseBinaryMatrix& h, double llr_clip = 30.0)
        : h_(&h), clip_(llr_clip), n_edges_(0) {
        edge_of_.resize(static_cast<std::size_t>(h.n_rows()));
        for (int r = 0; r < h.n_rows(); ++r) {
            edge_of_[static_cast<std::size_t>(r)].reserve(h.row(r).size());
            for (std::size_t k = 0; k < h.row(r).size(); ++k)
                edge_of_[static_cast<std::size_t>(r)].push_back(n_edges_++);
        }
    }

    DecodeResult decode(const LlrFrame& channel, int max_iterations, Workspace& ws) const {
        const SparseBinaryMatrix& h = *h_;
        if (static_cast<int>(channel.size()) != h.n_cols())
            raise(errc::dimension_mismatch,
                  "decode: frame length " + std::to_string(channel.size()) + " != column count " +
                      std::to_string(h.n_cols()));
        if (max_iterations < 1) raise(errc::invalid_params, "max_iterations must be >= 1");

        const int n = h.n_cols();
        ws.check_to_bit.assign(static_cast<std::size_t>(n_edges_), 0.0);
        ws.posterior.resize(static_cast<std::size_t>(n));
        ws.hard.resize(static_cast<std::size_t>(n));
        for (int c = 0; c < n; ++c)
            ws.posterior[static_cast<std::size_t>(c)] = clamp(channel[static_cast<std::size_t>(c)]);

        int iterations = 0;
        while (true) {
            hard_decide(ws);
            if (syndrome_is_zero(ws.hard)) break;
            if (iterations == max_iterations) break;
            ++iterations;

            // check pass: boxplus of all bit-to-check inputs but one,
            // via forward/backward partial products
            for (int r = 0; r < h.n_rows(); ++r) {
                const auto& cols = h.row(r);
                const auto& edges = edge_of_[static_cast<std::size_t>(r)];
                const std::size_t deg = cols.size();
                if (deg == 0) continue;
                ws.operand.resize(deg);
                ws.forward.resize(deg);
                ws.backward.resize(deg);
                for (std::size_t k = 0; k < deg; ++k) {
                    const double v2c = ws.posterior[static_cast<std::size_t>(cols[k])] -
                                       ws.check_to_bit[static_cast<std::size_t>(edges[k])];
                    ws.operand[k] = clamp(v2c);
                }
                ws.forward[0] = ws.operand[0];
                for (std::size_t k = 1; k < deg; ++k)
                    ws.forward[k] = boxplus(ws.forward[k - 1], ws.operand[k]);
                ws.backward[deg - 1] = ws.operand[deg - 1];
                for (std::size_t k = deg - 1; k-- > 0;)
                    ws.backward[k] = boxplus(ws.backward[k + 1], ws.operand[k]);
                for (std::size_t k = 0; k < deg; ++k) {
                    double out;
                    if (deg == 1) out = clip_; // empty extrinsic product pins the bit to 0
                    else if (k == 0) out = ws.backward[1];
                    else if (k == deg - 1) out = ws.forward[deg - 2];
                    else out = boxplus(ws.forward[k - 1], ws.backward[k + 1]);
                    ws.check_to_bit[static_cast<std::size_t>(edges[k])] = out;
                }
            }

            // bit pass: posterior = channel + sum of incoming check messages
            for (int c = 0; c < n; ++c)
                ws.posterior[static_cast<std::size_t>(c)] = clamp(channel[static_cast<std::size_t>(c)]);
            for (int r = 0; r < h.n_rows(); ++r) {
                const auto& cols = h.row(r);
                const auto& edges = edge_of_[static_cast<std::size_t>(r)];
                for (std::size_t k = 0; k < cols.size(); ++k)
                    ws.posterior[static_cast<std::size_t>(cols[k])] +=
                        ws.check_to_bit[static_cast<std::size_t>(edges[k])];
            }
        }

        DecodeResult result;
        result.hard_decision = ws.hard;
        result.success = syndrome_is_zero(ws.hard);
        result.iterations_used = iterations;
        result.posteriors = ws.posterior;
        return result;
    }

  private:
    double clamp(double x) const { return x > clip_ ? clip_ : (x < -clip_ ? -clip_ : x); }

    void hard_decide(Workspace& ws) const {
        for (std::size_t i = 0; i < ws.posterior.size(); ++i)
            ws.hard[i] = ws.posterior[i] < 0.0 ? 1 : 0; // ties resolve to bit 0
    }

    bool syndrome_is_zero(const std::vector<std::uint8_t>& bits) const {
        for (int r = 0; r < h_->n_rows(); ++r) {
            std::uint8_t acc = 0;
            for (int c : h_->row(r)) acc ^= bits[static_cast<std::size_t>(c)];
            if (acc) return false;
        }
        return true;
    }

    const SparseBinaryMatrix* h_;
    double clip_;
    int n_edges_;
    std::vector<std::vector<int>> edge_of_; // per row: edge ids aligned with row adjacency
};

// Flooding-schedule sum-product decoding with zero-syndrome early stop.
inline DecodeResult sp_decode(const SparseBinaryMatrix& h, const LlrFrame& channel_llrs,
                              int max_iterations, double llr_clip = 30.0) {
    Decoder dec(h, llr_clip);
    Decoder::Workspace ws;
    return dec.decode(channel_llrs, max_iterations, ws);
}

} // namespace scldpc

#endif
