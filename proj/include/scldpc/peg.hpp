#ifndef SCLDPC_PEG_HPP
#define SCLDPC_PEG_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "protograph.hpp"
#include "sparse.hpp"

namespace scldpc {

namespace detail {

// Progressive edge growth over an explicit candidate set per bit. Bits are
// processed in index order; each edge goes to the candidate check furthest
// from the bit in the current graph (unreachable first), ties broken by
// lowest current degree, then lowest index. Checks are capped at
// `max_check_degree` so regular targets come out exactly regular.
class PegBuilder {
  public:
    PegBuilder(int n_checks, int n_bits, int max_check_degree)
        : n_checks_(n_checks), max_check_degree_(max_check_degree),
          check_adj_(static_cast<std::size_t>(n_checks)), bit_adj_(static_cast<std::size_t>(n_bits)),
          dist_(static_cast<std::size_t>(n_checks + n_bits), -1) {}

    void place_bit(int bit, int degree, const std::vector<int>& candidates) {
        for (int e = 0; e < degree; ++e) {
            const int chosen = (e == 0) ? nearest_by_degree(bit, candidates)
                                        : deepest_candidate(bit, candidates);
            if (chosen < 0)
                raise(errc::infeasible_degree,
                      "infeasible-degree: bit " + std::to_string(bit) + " cannot place edge " +
                          std::to_string(e + 1) + " of " + std::to_string(degree) +
                          " within its candidate checks");
            check_adj_[static_cast<std::size_t>(chosen)].push_back(bit);
            bit_adj_[static_cast<std::size_t>(bit)].push_back(chosen);
        }
    }

    SparseBinaryMatrix finish(int n_bits) {
        std::vector<std::vector<int>> cols(static_cast<std::size_t>(n_bits));
        for (int b = 0; b < n_bits; ++b) cols[static_cast<std::size_t>(b)] = bit_adj_[static_cast<std::size_t>(b)];
        return SparseBinaryMatrix::from_column_lists(n_checks_, n_bits, std::move(cols));
    }

  private:
    bool eligible(int check, int bit) const {
        const auto& adj = check_adj_[static_cast<std::size_t>(check)];
        if (static_cast<int>(adj.size()) >= max_check_degree_) return false;
        return std::find(bit_adj_[static_cast<std::size_t>(bit)].begin(),
                         bit_adj_[static_cast<std::size_t>(bit)].end(),
                         check) == bit_adj_[static_cast<std::size_t>(bit)].end();
    }

    int nearest_by_degree(int bit, const std::vector<int>& candidates) const {
        int best = -1;
        for (int c : candidates) {
            if (!eligible(c, bit)) continue;
            if (best < 0 || check_adj_[static_cast<std::size_t>(c)].size() <
                                check_adj_[static_cast<std::size_t>(best)].size())
                best = c;
        }
        return best;
    }

    // BFS from the bit through the partial graph; candidates not reached at
    // all are preferred, otherwise those at maximal depth.
    int deepest_candidate(int bit, const std::vector<int>& candidates) {
        std::fill(dist_.begin(), dist_.end(), -1);
        std::vector<int> queue;
        queue.push_back(check_node_count() + bit);
        dist_[static_cast<std::size_t>(check_node_count() + bit)] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int u = queue[head];
            const bool is_bit = u >= check_node_count();
            const auto& nbrs = is_bit ? bit_adj_[static_cast<std::size_t>(u - check_node_count())]
                                      : check_adj_[static_cast<std::size_t>(u)];
            for (int v : nbrs) {
                const int w = is_bit ? v : check_node_count() + v;
                if (dist_[static_cast<std::size_t>(w)] < 0) {
                    dist_[static_cast<std::size_t>(w)] = dist_[static_cast<std::size_t>(u)] + 1;
                    queue.push_back(w);
                }
            }
        }
        int best = -1;
        int best_depth = -2;
        for (int c : candidates) {
            if (!eligible(c, bit)) continue;
            const int d = dist_[static_cast<std::size_t>(c)]; // -1 = unreachable, preferred
            const int depth = (d < 0) ? 1 << 29 : d;
            if (depth > best_depth ||
                (depth == best_depth && check_adj_[static_cast<std::size_t>(c)].size() <
                                            check_adj_[static_cast<std::size_t>(best)].size())) {
                best = c;
                best_depth = depth;
            }
        }
        return best;
    }

    int check_node_count() const { return n_checks_; }

    int n_checks_;
    int max_check_degree_;
    std::vector<std::vector<int>> check_adj_;
    std::vector<std::vector<int>> bit_adj_;
    std::vector<int> dist_;
};

} // namespace detail

// Standard (d_l, d_r)-regular PEG block code of length n. The seed is
// recorded for manifests; selection itself is deterministic.
inline SparseBinaryMatrix peg_construct_standard(int n, int bit_degree, int check_degree,
                                                 std::uint64_t seed = 0) {
    (void)seed;
    if (n < 1 || bit_degree < 1 || check_degree < 1)
        raise(errc::invalid_params, "PEG parameters must be positive");
    const long long edges = static_cast<long long>(n) * bit_degree;
    if (edges % check_degree != 0)
        raise(errc::infeasible_degree, "infeasible-degree: N*d_l = " + std::to_string(edges) +
                                           " is not divisible by d_r = " + std::to_string(check_degree));
    const int n_checks = static_cast<int>(edges / check_degree);
    if (n_checks < bit_degree)
        raise(errc::infeasible_degree, "infeasible-degree: " + std::to_string(n_checks) +
                                           " checks cannot host column weight " +
                                           std::to_string(bit_degree) + " without repeats");
    detail::PegBuilder builder(n_checks, n, check_degree);
    std::vector<int> all(static_cast<std::size_t>(n_checks));
    for (int i = 0; i < n_checks; ++i) all[static_cast<std::size_t>(i)] = i;
    for (int b = 0; b < n; ++b) builder.place_bit(b, bit_degree, all);
    return builder.finish(n);
}

// Coupled variant: same dimensions as the QC expansion; each bit's
// candidate checks are the M * n_c rows of its d_l-group band.
inline SparseBinaryMatrix peg_construct_coupled(const CoupledProtograph& proto, int circulant_size,
                                                std::uint64_t seed = 0) {
    (void)seed;
    const ProtoParams& p = proto.params;
    if (circulant_size < 1) raise(errc::invalid_params, "circulant size must be >= 1");
    const int m = circulant_size;
    const int n_bits = p.bit_cols() * m;
    const int n_checks = p.block_rows() * m;
    detail::PegBuilder builder(n_checks, n_bits, p.check_degree);
    std::vector<int> band;
    for (int col = 0; col < p.bit_cols(); ++col) {
        band.clear();
        const int group = col / p.bits_per_group();
        for (int g = group; g < group + p.bit_degree; ++g)
            for (int r = g * p.checks_per_group() * m; r < (g + 1) * p.checks_per_group() * m; ++r)
                band.push_back(r);
        for (int lane = 0; lane < m; ++lane) builder.place_bit(col * m + lane, p.bit_degree, band);
    }
    return builder.finish(n_bits);
}

} // namespace scldpc

#endif
