#ifndef SCLDPC_CYCLES_HPP
#define SCLDPC_CYCLES_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "protograph.hpp"
#include "qc.hpp"
#include "sparse.hpp"

namespace scldpc {

// Closed alternating walk over occupied blocks: consecutive positions share
// a block column or a block row, in strict alternation, and the last
// position closes back onto the first.
struct CirculantPath {
    std::vector<std::pair<int, int>> positions; // (block_row, block_col)
    std::vector<int> shifts;                    // p at each position
};

inline void validate_path(const CirculantPath& path) {
    const std::size_t n = path.positions.size();
    if (n < 4 || n % 2 != 0)
        raise(errc::malformed_path, "malformed path: needs an even number of positions >= 4, got " +
                                        std::to_string(n));
    if (path.shifts.size() != n)
        raise(errc::malformed_path, "malformed path: one shift per position required");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (path.positions[i] == path.positions[j])
                raise(errc::malformed_path, "malformed path: repeated position at indices " +
                                                std::to_string(i) + " and " + std::to_string(j));
    // alternation, including the closing step
    bool share_row_first = path.positions[0].first == path.positions[1].first;
    for (std::size_t k = 0; k < n; ++k) {
        const auto& a = path.positions[k];
        const auto& b = path.positions[(k + 1) % n];
        const bool share_row = a.first == b.first;
        const bool share_col = a.second == b.second;
        if (share_row == share_col)
            raise(errc::malformed_path,
                  "malformed path: step " + std::to_string(k) + " must change exactly one index");
        const bool expect_row = (k % 2 == 0) == share_row_first;
        if (share_row != expect_row)
            raise(errc::malformed_path,
                  "malformed path: step " + std::to_string(k) + " breaks row/column alternation");
    }
}

// Alternating shift-difference condition: the walk closes in the lifted
// graph iff the signed sum of its shifts vanishes mod M.
inline bool cycle_exists(const CirculantPath& path, int circulant_size) {
    validate_path(path);
    long long sum = 0;
    for (std::size_t k = 0; k < path.shifts.size(); ++k)
        sum += (k % 2 == 0) ? path.shifts[k] : -path.shifts[k];
    const long long m = circulant_size;
    return ((sum % m) + m) % m == 0;
}

struct GirthResult {
    std::optional<int> length; // engaged iff a cycle shorter than cap exists
    int cap = 0;

    bool exact() const { return length.has_value(); }
    std::string to_string() const {
        return exact() ? std::to_string(*length) : ">= " + std::to_string(cap);
    }
};

// Exact girth by truncated BFS from every bit node. Each non-tree meet
// yields a closed walk of length dist(u) + dist(w) + 1; the minimum over
// all roots is the girth when it is below the cap.
inline GirthResult girth(const SparseBinaryMatrix& h, int cap = 16) {
    if (cap < 4 || cap % 2 != 0) raise(errc::invalid_params, "girth cap must be even and >= 4");
    if (h.n_cols() == 0 || h.n_rows() == 0) raise(errc::invalid_params, "girth of an empty matrix");
    const int n_bits = h.n_cols();
    const int n_nodes = n_bits + h.n_rows();
    const int limit = cap / 2;

    std::vector<int> dist(static_cast<std::size_t>(n_nodes));
    std::vector<int> parent(static_cast<std::size_t>(n_nodes));
    std::vector<int> stamp(static_cast<std::size_t>(n_nodes), -1);
    std::vector<int> queue;
    queue.reserve(static_cast<std::size_t>(n_nodes));

    int best = cap + 1;
    for (int root = 0; root < n_bits && best > 4; ++root) {
        queue.clear();
        queue.push_back(root);
        stamp[static_cast<std::size_t>(root)] = root;
        dist[static_cast<std::size_t>(root)] = 0;
        parent[static_cast<std::size_t>(root)] = -1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int u = queue[head];
            const int du = dist[static_cast<std::size_t>(u)];
            if (du >= limit) break;
            const auto& nbrs = (u < n_bits) ? h.col(u) : h.row(u - n_bits);
            for (int v : nbrs) {
                const int w = (u < n_bits) ? v + n_bits : v;
                if (w == parent[static_cast<std::size_t>(u)]) continue;
                if (stamp[static_cast<std::size_t>(w)] == root) {
                    best = std::min(best, du + dist[static_cast<std::size_t>(w)] + 1);
                    if (best == 4) break;
                } else {
                    stamp[static_cast<std::size_t>(w)] = root;
                    dist[static_cast<std::size_t>(w)] = du + 1;
                    parent[static_cast<std::size_t>(w)] = u;
                    queue.push_back(w);
                }
            }
            if (best == 4) break;
        }
    }
    GirthResult r;
    r.cap = cap;
    if (best < cap) r.length = best;
    return r;
}

namespace detail {

// Block-level view of a ShiftMatrix used by the cycle searches.
struct BlockView {
    std::vector<BlockEntry> entries;          // sorted by (row, col)
    std::vector<std::vector<int>> in_row;     // entry indices per block row
    std::vector<std::vector<int>> in_col;     // entry indices per block col
    int circulant_size = 1;
    int n_classes = 0;

    explicit BlockView(const ShiftMatrix& sm) {
        entries = sm.block_entries();
        std::sort(entries.begin(), entries.end(), [](const BlockEntry& a, const BlockEntry& b) {
            return a.block_row != b.block_row ? a.block_row < b.block_row : a.block_col < b.block_col;
        });
        circulant_size = sm.circulant_size();
        n_classes = sm.shift_count();
        const ProtoParams& p = sm.params();
        in_row.resize(static_cast<std::size_t>(p.block_rows()));
        in_col.resize(static_cast<std::size_t>(p.bit_cols()));
        for (std::size_t i = 0; i < entries.size(); ++i) {
            in_row[static_cast<std::size_t>(entries[i].block_row)].push_back(static_cast<int>(i));
            in_col[static_cast<std::size_t>(entries[i].block_col)].push_back(static_cast<int>(i));
        }
    }
};

} // namespace detail

// Shortest lifted cycle predicted from shift sums alone: BFS over states
// (block position, partial sum mod M, next-move type), allowing revisited
// positions. Exact counterpart of girth() for QC matrices; intended for
// desk-size instances, its state space is positions * M * 2 per start.
inline GirthResult min_cycle_from_shift_sums(const ShiftMatrix& sm, int cap = 12) {
    if (cap < 4 || cap % 2 != 0) raise(errc::invalid_params, "cycle cap must be even and >= 4");
    const detail::BlockView view(sm);
    const int m = view.circulant_size;
    const int n_pos = static_cast<int>(view.entries.size());
    const int n_states = n_pos * m * 2;

    std::vector<int> dist(static_cast<std::size_t>(n_states));
    std::vector<int> stamp(static_cast<std::size_t>(n_states), -1);
    std::vector<int> queue;
    queue.reserve(1024);

    const auto state_id = [m](int pos, int sum, int parity) { return (pos * m + sum) * 2 + parity; };

    int best = cap + 1;
    for (int start = 0; start < n_pos && best > 4; ++start) {
        queue.clear();
        const int s0 = state_id(start, view.entries[static_cast<std::size_t>(start)].shift % m, 0);
        stamp[static_cast<std::size_t>(s0)] = start;
        dist[static_cast<std::size_t>(s0)] = 0;
        queue.push_back(s0);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int st = queue[head];
            const int parity = st & 1;
            const int pos = st / 2 / m;
            const int sum = st / 2 % m;
            const int d = dist[static_cast<std::size_t>(st)];
            if (d + 1 > cap || d + 1 >= best) continue;
            const BlockEntry& e = view.entries[static_cast<std::size_t>(pos)];
            const auto& moves = (parity == 0) ? view.in_col[static_cast<std::size_t>(e.block_col)]
                                              : view.in_row[static_cast<std::size_t>(e.block_row)];
            for (int q : moves) {
                if (q == pos) continue;
                if (parity == 1 && q == start) {
                    if (sum == 0 && d + 1 >= 4) best = std::min(best, d + 1);
                    continue;
                }
                const int qs = view.entries[static_cast<std::size_t>(q)].shift % m;
                const int nsum = (parity == 0) ? (sum - qs + m) % m : (sum + qs) % m;
                const int ns = state_id(q, nsum, parity ^ 1);
                if (stamp[static_cast<std::size_t>(ns)] != start) {
                    stamp[static_cast<std::size_t>(ns)] = start;
                    dist[static_cast<std::size_t>(ns)] = d + 1;
                    queue.push_back(ns);
                }
            }
        }
    }
    GirthResult r;
    r.cap = cap;
    if (best < cap) r.length = best;
    return r;
}

namespace detail {

// Depth-first search for a closed alternating chain of exactly
// `target_len` positions whose signed sum cancels class by class, i.e. is
// zero for every choice of shift values. `distinct` forbids revisiting a
// position (witness form); without it the search also covers chains that
// reuse positions at opposite signs.
class FormalCycleSearch {
  public:
    FormalCycleSearch(const BlockView& view, int target_len, bool distinct)
        : view_(view), target_(target_len), distinct_(distinct),
          coeff_(static_cast<std::size_t>(view.n_classes), 0),
          on_path_(view.entries.size(), 0) {}

    std::optional<std::vector<int>> run(const std::vector<char>& allowed) {
        allowed_ = &allowed;
        const int n_pos = static_cast<int>(view_.entries.size());
        for (int s = 0; s < n_pos; ++s) {
            if (!allowed[static_cast<std::size_t>(s)]) continue;
            start_ = s;
            path_.clear();
            push(s, +1);
            if (dfs()) {
                auto found = path_;
                pop(s, +1);
                return found;
            }
            pop(s, +1);
        }
        return std::nullopt;
    }

  private:
    bool dfs() {
        const int depth = static_cast<int>(path_.size());
        if (depth == target_) {
            if (nonzero_ != 0) return false;
            const BlockEntry& last = view_.entries[static_cast<std::size_t>(path_.back())];
            const BlockEntry& first = view_.entries[static_cast<std::size_t>(start_)];
            return last.block_row == first.block_row; // closing move shares a row
        }
        if (nonzero_ > target_ - depth) return false;
        const int sign = (depth % 2 == 0) ? +1 : -1;
        const BlockEntry& cur = view_.entries[static_cast<std::size_t>(path_.back())];
        // moves alternate: column-sharing first, then row-sharing
        const auto& moves = (depth % 2 == 1)
                                ? view_.in_col[static_cast<std::size_t>(cur.block_col)]
                                : view_.in_row[static_cast<std::size_t>(cur.block_row)];
        for (int q : moves) {
            if (q == path_.back()) continue;
            if (q < start_) continue; // every chain is rooted at its minimal position
            if (!(*allowed_)[static_cast<std::size_t>(q)]) continue;
            if (q == start_) continue; // closure is tested at full depth only
            if (distinct_ && on_path_[static_cast<std::size_t>(q)]) continue;
            push(q, sign);
            if (dfs()) return true;
            pop(q, sign);
        }
        return false;
    }

    void push(int pos, int sign) {
        path_.push_back(pos);
        on_path_[static_cast<std::size_t>(pos)] += 1;
        const int cls = view_.entries[static_cast<std::size_t>(pos)].reuse_class;
        int& c = coeff_[static_cast<std::size_t>(cls)];
        if (c == 0) ++nonzero_;
        c += sign;
        if (c == 0) --nonzero_;
    }

    void pop(int pos, int sign) {
        path_.pop_back();
        on_path_[static_cast<std::size_t>(pos)] -= 1;
        const int cls = view_.entries[static_cast<std::size_t>(pos)].reuse_class;
        int& c = coeff_[static_cast<std::size_t>(cls)];
        if (c == 0) ++nonzero_;
        c -= sign;
        if (c == 0) --nonzero_;
    }

    const BlockView& view_;
    int target_;
    bool distinct_;
    const std::vector<char>* allowed_ = nullptr;
    int start_ = 0;
    int nonzero_ = 0;
    std::vector<int> path_;
    std::vector<int> coeff_;
    std::vector<char> on_path_;
};

inline std::optional<std::vector<int>> find_formal_cycle(const BlockView& view, int target_len,
                                                         bool distinct, int max_bit_col = -1) {
    std::vector<char> allowed(view.entries.size(), 1);
    if (max_bit_col >= 0)
        for (std::size_t i = 0; i < view.entries.size(); ++i)
            allowed[i] = view.entries[i].block_col < max_bit_col ? 1 : 0;
    FormalCycleSearch search(view, target_len, distinct);
    return search.run(allowed);
}

} // namespace detail

// Certificate for a cycle that is forced by the reuse structure alone.
struct CycleWitness {
    CirculantPath path;
    int length = 0;
    std::vector<std::pair<int, int>> equal_pairs; // path indices carrying the same shift class
    std::vector<int> expanded_bits;               // lifted bit nodes, one per alternating step
    std::vector<int> expanded_checks;             // lifted check nodes, interleaved with the bits
};

namespace detail {

// Walk the lifted graph along the chain starting from lane 0 of the first
// block column; closes exactly when the signed shift sum vanishes.
inline void trace_expanded_cycle(const std::vector<std::pair<int, int>>& positions,
                                 const std::vector<int>& shifts, int m, CycleWitness& w) {
    const int half = static_cast<int>(positions.size()) / 2;
    int gamma = 0;
    for (int k = 0; k < half; ++k) {
        const auto& enter = positions[static_cast<std::size_t>(2 * k)];
        const auto& via = positions[static_cast<std::size_t>(2 * k + 1)];
        w.expanded_bits.push_back(enter.second * m + gamma);
        const int rho = ((gamma - shifts[static_cast<std::size_t>(2 * k + 1)]) % m + m) % m;
        w.expanded_checks.push_back(via.first * m + rho);
        gamma = (rho + shifts[static_cast<std::size_t>((2 * k + 2) % positions.size())]) % m;
    }
}

} // namespace detail

// Concrete reuse-T inevitable cycle (length 6, 8, 10 for T = 1, 2, 3),
// found by searching for a closed chain whose shift sum cancels through the
// reuse equalities alone.
inline CycleWitness find_reuse_inevitable_cycle(const ShiftMatrix& sm) {
    const ProtoParams& p = sm.params();
    const int t = sm.reuse_period();
    if (t < 1 || t > 3)
        raise(errc::hypothesis_not_met,
              "hypothesis-not-met: reuse-inevitable cycles are established for T in {1,2,3}, got T=" +
                  std::to_string(t));
    const int need_dl = (t == 1) ? 3 : 4;
    if (p.bit_degree < need_dl)
        raise(errc::hypothesis_not_met, "hypothesis-not-met: T=" + std::to_string(t) +
                                            " requires d_l >= " + std::to_string(need_dl) + ", got " +
                                            std::to_string(p.bit_degree));
    if (p.chain_length < t + p.bit_degree - 1)
        raise(errc::hypothesis_not_met,
              "hypothesis-not-met: witness search needs L >= T + d_l - 1 = " +
                  std::to_string(t + p.bit_degree - 1) + ", got L=" + std::to_string(p.chain_length));

    const int target = 2 * (t + 2);
    const detail::BlockView view(sm);
    // The pattern is local; try a window of the first few bit groups first.
    const int window_cols = std::min(p.bit_cols(), (t + p.bit_degree) * p.bits_per_group());
    auto found = detail::find_formal_cycle(view, target, true, window_cols);
    if (!found) found = detail::find_formal_cycle(view, target, true);
    if (!found)
        raise(errc::hypothesis_not_met,
              "no shift-independent cycle of length " + std::to_string(target) +
                  " found; construction does not match the reuse hypothesis");

    CycleWitness w;
    w.length = target;
    for (int idx : *found) {
        const BlockEntry& e = view.entries[static_cast<std::size_t>(idx)];
        w.path.positions.emplace_back(e.block_row, e.block_col);
        w.path.shifts.push_back(e.shift);
    }
    for (std::size_t i = 0; i < found->size(); ++i)
        for (std::size_t j = i + 1; j < found->size(); ++j)
            if (view.entries[static_cast<std::size_t>((*found)[i])].reuse_class ==
                view.entries[static_cast<std::size_t>((*found)[j])].reuse_class)
                w.equal_pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
    detail::trace_expanded_cycle(w.path.positions, w.path.shifts, sm.circulant_size(), w);
    return w;
}

// Search for any chain whose sum cancels independently of the shift values;
// used to confirm that the unconstrained construction has no short forced
// cycles. Positions may repeat at opposite signs.
inline bool has_shift_independent_cycle(const ShiftMatrix& sm, int length) {
    if (length < 4 || length % 2 != 0)
        raise(errc::invalid_params, "chain length must be even and >= 4");
    const detail::BlockView view(sm);
    return detail::find_formal_cycle(view, length, false).has_value();
}

inline std::string witness_to_text(const CycleWitness& w, int circulant_size) {
    std::ostringstream out;
    out << "inevitable-cycle certificate\n";
    out << "length: " << w.length << '\n';
    out << "positions (block_row block_col shift):";
    for (std::size_t i = 0; i < w.path.positions.size(); ++i)
        out << " (" << w.path.positions[i].first << ' ' << w.path.positions[i].second << ' '
            << w.path.shifts[i] << ')';
    out << '\n';
    out << "shift equalities:";
    for (const auto& [a, b] : w.equal_pairs)
        out << " p[" << w.path.positions[static_cast<std::size_t>(a)].first << ','
            << w.path.positions[static_cast<std::size_t>(a)].second << "]==p["
            << w.path.positions[static_cast<std::size_t>(b)].first << ','
            << w.path.positions[static_cast<std::size_t>(b)].second << ']';
    out << '\n';
    long long sum = 0;
    for (std::size_t k = 0; k < w.path.shifts.size(); ++k)
        sum += (k % 2 == 0) ? w.path.shifts[k] : -w.path.shifts[k];
    out << "signed shift sum mod " << circulant_size << ": "
        << ((sum % circulant_size) + circulant_size) % circulant_size << '\n';
    out << "expanded cycle:";
    for (std::size_t k = 0; k < w.expanded_bits.size(); ++k)
        out << " b" << w.expanded_bits[k] << " c" << w.expanded_checks[k];
    out << '\n';
    return out.str();
}

// Exact number of cycles of the given length in the lifted Tanner graph,
// counted once per rotation/reversal class. Path enumeration is rooted at
// the minimal bit node of each cycle.
inline long long count_cycles(const SparseBinaryMatrix& h, int length) {
    if (length % 2 != 0 || length < 4 || length > 10)
        raise(errc::unsupported_length,
              "unsupported-length: cycle counting handles even lengths 4..10, got " +
                  std::to_string(length));
    const int n_bits = h.n_cols();
    const int n_nodes = n_bits + h.n_rows();
    std::vector<char> used(static_cast<std::size_t>(n_nodes), 0);
    std::vector<int> path;
    long long total = 0;

    // iterative DFS with explicit neighbor cursors
    std::vector<std::size_t> cursor(static_cast<std::size_t>(length), 0);
    for (int s = 0; s < n_bits; ++s) {
        path.assign(1, s);
        used[static_cast<std::size_t>(s)] = 1;
        cursor[0] = 0;
        while (!path.empty()) {
            const int depth = static_cast<int>(path.size());
            const int u = path.back();
            const auto& nbrs = (u < n_bits) ? h.col(u) : h.row(u - n_bits);
            if (depth == length) {
                // close back to s? s is a bit; u is a check at odd depth index
                const auto& back = h.row(u - n_bits);
                if (std::binary_search(back.begin(), back.end(), s)) ++total;
                used[static_cast<std::size_t>(u)] = 0;
                path.pop_back();
                continue;
            }
            std::size_t& cur = cursor[static_cast<std::size_t>(depth - 1)];
            bool advanced = false;
            while (cur < nbrs.size()) {
                const int v = nbrs[cur];
                ++cur;
                const int w = (u < n_bits) ? v + n_bits : v;
                if (w < n_bits && w <= s) continue; // root must stay minimal
                if (used[static_cast<std::size_t>(w)]) continue;
                path.push_back(w);
                used[static_cast<std::size_t>(w)] = 1;
                cursor[static_cast<std::size_t>(depth)] = 0;
                advanced = true;
                break;
            }
            if (!advanced) {
                used[static_cast<std::size_t>(u)] = 0;
                path.pop_back();
            }
        }
        used[static_cast<std::size_t>(s)] = 0;
    }
    return total / 2; // each cycle traversed in both directions
}

// Whether some cycle of exactly `length` passes through the given bit.
inline bool bit_in_cycle(const SparseBinaryMatrix& h, int bit, int length) {
    if (length % 2 != 0 || length < 4 || length > 10)
        raise(errc::unsupported_length, "unsupported-length: cycle search handles even lengths 4..10");
    if (bit < 0 || bit >= h.n_cols()) raise(errc::invalid_params, "bit index out of range");
    const int n_bits = h.n_cols();
    const int n_nodes = n_bits + h.n_rows();
    std::vector<char> used(static_cast<std::size_t>(n_nodes), 0);

    struct Frame {
        int node;
        std::size_t cur;
    };
    std::vector<Frame> stack;
    stack.push_back({bit, 0});
    used[static_cast<std::size_t>(bit)] = 1;
    while (!stack.empty()) {
        Frame& f = stack.back();
        const int u = f.node;
        const int depth = static_cast<int>(stack.size());
        const auto& nbrs = (u < n_bits) ? h.col(u) : h.row(u - n_bits);
        if (depth == length) {
            const auto& back = h.row(u - n_bits);
            if (std::binary_search(back.begin(), back.end(), bit)) return true;
            used[static_cast<std::size_t>(u)] = 0;
            stack.pop_back();
            continue;
        }
        bool advanced = false;
        while (f.cur < nbrs.size()) {
            const int v = nbrs[f.cur];
            ++f.cur;
            const int w = (u < n_bits) ? v + n_bits : v;
            if (used[static_cast<std::size_t>(w)]) continue;
            stack.push_back({w, 0});
            used[static_cast<std::size_t>(w)] = 1;
            advanced = true;
            break;
        }
        if (!advanced) {
            used[static_cast<std::size_t>(u)] = 0;
            stack.pop_back();
        }
    }
    return false;
}

// True iff two bit columns of the base matrix share at least three check
// rows (the 3x2 all-ones pattern); such codes carry forced length-12 cycles
// whatever the circulants, so their girth cannot exceed 12.
inline bool detect_p12(const CoupledProtograph& proto) {
    const ProtoParams& p = proto.params;
    const int nb = p.bits_per_group();
    const int cols = p.bit_cols();
    std::vector<std::vector<int>> rows_of(static_cast<std::size_t>(cols));
    for (const EdgeSlot& s : proto.slots) rows_of[static_cast<std::size_t>(s.bit_col)].push_back(s.block_row);
    for (auto& r : rows_of) std::sort(r.begin(), r.end());
    for (int a = 0; a < cols; ++a) {
        const int reach = std::min(cols, (a / nb + p.bit_degree) * nb);
        for (int b = a + 1; b < reach; ++b) {
            const auto& ra = rows_of[static_cast<std::size_t>(a)];
            const auto& rb = rows_of[static_cast<std::size_t>(b)];
            int common = 0;
            std::size_t i = 0, j = 0;
            while (i < ra.size() && j < rb.size()) {
                if (ra[i] == rb[j]) ++common, ++i, ++j;
                else if (ra[i] < rb[j]) ++i;
                else ++j;
            }
            if (common >= 3) return true;
        }
    }
    return false;
}

} // namespace scldpc

#endif
