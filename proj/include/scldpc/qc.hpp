#ifndef SCLDPC_QC_HPP
#define SCLDPC_QC_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "protograph.hpp"
#include "rng.hpp"
#include "sparse.hpp"

namespace scldpc {

// M x M circulant permutation: row r has its one at column (r + shift) mod M.
struct Circulant {
    int shift = 0;
    int size = 1;
};

// Occupied block position of the lifted matrix, with the reuse class that
// owns its shift value.
struct BlockEntry {
    int block_row = 0;
    int block_col = 0;
    int shift = 0;
    int reuse_class = 0;
};

// Compact QC description: one shift per reuse class. Slot (offset j, bit
// column y) draws its shift from class (y mod n_b*T, j), so columns T bit
// groups apart share circulants by construction.
class ShiftMatrix {
  public:
    ShiftMatrix() = default;

    ShiftMatrix(CoupledProtograph proto, int circulant_size, int reuse_period, std::uint64_t seed,
                std::vector<int> base_shifts)
        : proto_(std::move(proto)), m_(circulant_size), t_(reuse_period), seed_(seed),
          base_shifts_(std::move(base_shifts)) {}

    const CoupledProtograph& proto() const { return proto_; }
    const ProtoParams& params() const { return proto_.params; }
    int circulant_size() const { return m_; }
    int reuse_period() const { return t_; }
    std::uint64_t seed() const { return seed_; }

    int period_cols() const { return proto_.params.bits_per_group() * t_; }
    int shift_count() const { return static_cast<int>(base_shifts_.size()); }
    const std::vector<int>& base_shifts() const { return base_shifts_; }

    int reuse_class_of(int bit_col, int offset) const {
        return (bit_col % period_cols()) * proto_.params.bit_degree + offset;
    }

    int shift_at(int bit_col, int offset) const {
        return base_shifts_[static_cast<std::size_t>(reuse_class_of(bit_col, offset))];
    }

    std::vector<BlockEntry> block_entries() const {
        std::vector<BlockEntry> out;
        out.reserve(proto_.slots.size());
        for (const EdgeSlot& s : proto_.slots) {
            BlockEntry e;
            e.block_row = s.block_row;
            e.block_col = s.bit_col;
            e.reuse_class = reuse_class_of(s.bit_col, s.offset);
            e.shift = base_shifts_[static_cast<std::size_t>(e.reuse_class)];
            out.push_back(e);
        }
        return out;
    }

    bool period_divides_length() const { return params().chain_length % t_ == 0; }

    bool operator==(const ShiftMatrix& other) const {
        return params().bit_degree == other.params().bit_degree &&
               params().check_degree == other.params().check_degree &&
               params().chain_length == other.params().chain_length && m_ == other.m_ &&
               t_ == other.t_ && seed_ == other.seed_ && base_shifts_ == other.base_shifts_;
    }

  private:
    CoupledProtograph proto_;
    int m_ = 1;
    int t_ = 1;
    std::uint64_t seed_ = 0;
    std::vector<int> base_shifts_;
};

namespace detail {

// A violated 4-cycle: two block rows crossing two block columns with
// shift differences summing to 0 mod M. Stores the reuse classes involved.
struct FourCycle {
    std::array<int, 4> classes;
};

// Scan every pair of nearby columns for 2x2 all-occupied block submatrices
// whose alternating shift sum vanishes. Column pairs further apart than
// d_l - 1 groups share no block rows and are skipped.
template <typename OnViolation>
inline void scan_four_cycles(const ShiftMatrix& sm, OnViolation&& on_violation) {
    const ProtoParams& p = sm.params();
    const int nb = p.bits_per_group();
    const int dl = p.bit_degree;
    const int m = sm.circulant_size();
    const int cols = p.bit_cols();
    for (int y0 = 0; y0 < cols; ++y0) {
        const int g0 = y0 / nb;
        const int y1_end = std::min(cols, (g0 + dl) * nb);
        for (int y1 = y0 + 1; y1 < y1_end; ++y1) {
            // shared block rows of the two columns
            for (int j0 = 0; j0 < dl; ++j0) {
                const EdgeSlot& a0 = sm.proto().slot(y0, j0);
                for (int j1 = j0 + 1; j1 < dl; ++j1) {
                    const EdgeSlot& a1 = sm.proto().slot(y0, j1);
                    // find the matching offsets in column y1 (if any)
                    int b0 = -1, b1 = -1;
                    for (int k = 0; k < dl; ++k) {
                        const EdgeSlot& s = sm.proto().slot(y1, k);
                        if (s.block_row == a0.block_row) b0 = k;
                        if (s.block_row == a1.block_row) b1 = k;
                    }
                    if (b0 < 0 || b1 < 0) continue;
                    const int sum = sm.shift_at(y0, j0) - sm.shift_at(y1, b0) +
                                    sm.shift_at(y1, b1) - sm.shift_at(y0, j1);
                    if (((sum % m) + m) % m == 0) {
                        FourCycle fc{{sm.reuse_class_of(y0, j0), sm.reuse_class_of(y1, b0),
                                      sm.reuse_class_of(y1, b1), sm.reuse_class_of(y0, j1)}};
                        if (!on_violation(fc)) return;
                    }
                }
            }
        }
    }
}

} // namespace detail

inline bool has_four_cycle(const ShiftMatrix& sm) {
    bool found = false;
    detail::scan_four_cycles(sm, [&](const detail::FourCycle&) {
        found = true;
        return false; // stop
    });
    return found;
}

// Seeded randomized search for a 4-cycle-free assignment honouring the
// reuse law. Each pass resamples only the classes that took part in some
// violated 4-cycle; after a stuck run, everything is resampled afresh.
inline ShiftMatrix assign_shifts(const CoupledProtograph& proto, int circulant_size,
                                 int reuse_period, std::uint64_t seed, int max_attempts = 100) {
    const ProtoParams& p = proto.params;
    if (reuse_period < 1 || reuse_period > p.chain_length)
        raise(errc::invalid_params, "invalid-T: reuse period " + std::to_string(reuse_period) +
                                        " outside [1, L=" + std::to_string(p.chain_length) + "]");
    if (circulant_size < 1)
        raise(errc::invalid_params, "circulant size must be >= 1");
    if (max_attempts < 1)
        raise(errc::invalid_params, "max_attempts must be >= 1");

    const int n_classes = reuse_period * p.bits_per_group() * p.bit_degree;
    Rng rng(derive_seed(seed, "assign-shifts"));
    std::vector<int> shifts(static_cast<std::size_t>(n_classes));

    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        for (auto& s : shifts) s = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(circulant_size)));
        ShiftMatrix sm(proto, circulant_size, reuse_period, seed, shifts);

        const int max_passes = 40 + 4 * n_classes;
        for (int pass = 0; pass < max_passes; ++pass) {
            std::set<int> bad;
            detail::scan_four_cycles(sm, [&](const detail::FourCycle& fc) {
                for (int c : fc.classes) bad.insert(c);
                return true; // collect all
            });
            if (bad.empty()) return sm;
            for (int c : bad)
                shifts[static_cast<std::size_t>(c)] =
                    static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(circulant_size)));
            sm = ShiftMatrix(proto, circulant_size, reuse_period, seed, shifts);
        }
    }
    raise(errc::search_exhausted,
          "search-exhausted: no 4-cycle-free shift assignment found after " +
              std::to_string(max_attempts) + " restarts (M=" + std::to_string(circulant_size) +
              " may be too small)");
}

// Lift to the binary matrix: block (row, col) with shift p contributes
// entries (row*M + r, col*M + (r + p) mod M).
inline SparseBinaryMatrix expand(const ShiftMatrix& sm) {
    const ProtoParams& p = sm.params();
    const int m = sm.circulant_size();
    const int n_rows = p.block_rows() * m;
    const int n_cols = p.bit_cols() * m;
    std::vector<std::vector<int>> cols(static_cast<std::size_t>(n_cols));
    for (auto& c : cols) c.reserve(static_cast<std::size_t>(p.bit_degree));
    for (const BlockEntry& e : sm.block_entries()) {
        for (int r = 0; r < m; ++r) {
            const int row = e.block_row * m + r;
            const int col = e.block_col * m + (r + e.shift) % m;
            cols[static_cast<std::size_t>(col)].push_back(row);
        }
    }
    return SparseBinaryMatrix::from_column_lists(n_rows, n_cols, std::move(cols));
}

// Text form: "d_l d_r L M T seed" then T*d_l*n_b lines "offset bit_col shift".
inline void write_shift_matrix(const ShiftMatrix& sm, std::ostream& out) {
    const ProtoParams& p = sm.params();
    out << p.bit_degree << ' ' << p.check_degree << ' ' << p.chain_length << ' '
        << sm.circulant_size() << ' ' << sm.reuse_period() << ' ' << sm.seed() << '\n';
    for (int y = 0; y < sm.period_cols(); ++y)
        for (int j = 0; j < p.bit_degree; ++j)
            out << j << ' ' << y << ' ' << sm.base_shifts()[static_cast<std::size_t>(y * p.bit_degree + j)]
                << '\n';
}

inline ShiftMatrix read_shift_matrix(std::istream& in) {
    ProtoParams p;
    int m = 0, t = 0;
    std::uint64_t seed = 0;
    std::string line;
    if (!std::getline(in, line))
        raise(errc::parse_failure, "shift-matrix parse error: missing header line");
    {
        std::istringstream hs(line);
        if (!(hs >> p.bit_degree >> p.check_degree >> p.chain_length >> m >> t >> seed))
            raise(errc::parse_failure, "shift-matrix parse error: header must be 'd_l d_r L M T seed'");
    }
    validate(p);
    if (t < 1 || t > p.chain_length)
        raise(errc::parse_failure, "shift-matrix parse error: T outside [1, L]");
    if (m < 1) raise(errc::parse_failure, "shift-matrix parse error: M must be >= 1");

    const int n_classes = t * p.bits_per_group() * p.bit_degree;
    std::vector<int> shifts(static_cast<std::size_t>(n_classes), -1);
    for (int i = 0; i < n_classes; ++i) {
        if (!std::getline(in, line))
            raise(errc::parse_failure, "shift-matrix parse error: expected " + std::to_string(n_classes) +
                                           " shift lines, found " + std::to_string(i));
        std::istringstream ls(line);
        int j = 0, y = 0, s = 0;
        if (!(ls >> j >> y >> s))
            raise(errc::parse_failure,
                  "shift-matrix parse error: line " + std::to_string(i + 2) + " is not 'offset bit_col shift'");
        if (j < 0 || j >= p.bit_degree || y < 0 || y >= t * p.bits_per_group())
            raise(errc::parse_failure,
                  "shift-matrix parse error: slot (" + std::to_string(j) + ", " + std::to_string(y) +
                      ") out of range on line " + std::to_string(i + 2));
        if (s < 0 || s >= m)
            raise(errc::parse_failure, "shift-matrix parse error: shift " + std::to_string(s) +
                                           " outside [0, M) on line " + std::to_string(i + 2));
        auto& slot = shifts[static_cast<std::size_t>(y * p.bit_degree + j)];
        if (slot != -1)
            raise(errc::parse_failure,
                  "shift-matrix parse error: duplicate slot on line " + std::to_string(i + 2));
        slot = s;
    }
    return ShiftMatrix(build_coupled_protograph(p), m, t, seed, std::move(shifts));
}

inline void write_shift_matrix_file(const ShiftMatrix& sm, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) raise(errc::io_failure, "cannot open '" + path + "' for writing");
    write_shift_matrix(sm, out);
    if (!out) raise(errc::io_failure, "write failed for '" + path + "'");
}

inline ShiftMatrix read_shift_matrix_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(errc::io_failure, "cannot open '" + path + "' for reading");
    return read_shift_matrix(in);
}

} // namespace scldpc

#endif
