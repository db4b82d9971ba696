#ifndef SCLDPC_SPARSE_HPP
#define SCLDPC_SPARSE_HPP

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace scldpc {

// Binary parity-check matrix held as paired adjacency lists.
class SparseBinaryMatrix {
  public:
    SparseBinaryMatrix() = default;

    SparseBinaryMatrix(int n_rows, int n_cols) : n_rows_(n_rows), n_cols_(n_cols) {
        col_adjacency_.resize(static_cast<std::size_t>(n_cols));
        row_adjacency_.resize(static_cast<std::size_t>(n_rows));
    }

    static SparseBinaryMatrix from_column_lists(int n_rows, int n_cols,
                                                std::vector<std::vector<int>> cols) {
        SparseBinaryMatrix h(n_rows, n_cols);
        h.col_adjacency_ = std::move(cols);
        for (int col = 0; col < n_cols; ++col) {
            auto& c = h.col_adjacency_[static_cast<std::size_t>(col)];
            std::sort(c.begin(), c.end());
            for (std::size_t k = 0; k < c.size(); ++k) {
                if (c[k] < 0 || c[k] >= n_rows)
                    raise(errc::inconsistent_matrix, "row index " + std::to_string(c[k]) +
                                                         " out of range in column " + std::to_string(col));
                if (k > 0 && c[k] == c[k - 1])
                    raise(errc::inconsistent_matrix, "duplicate entry (" + std::to_string(c[k]) + ", " +
                                                         std::to_string(col) + ")");
            }
        }
        for (int col = 0; col < n_cols; ++col)
            for (int row : h.col_adjacency_[static_cast<std::size_t>(col)])
                h.row_adjacency_[static_cast<std::size_t>(row)].push_back(col);
        for (auto& r : h.row_adjacency_) std::sort(r.begin(), r.end());
        return h;
    }

    int n_rows() const { return n_rows_; }
    int n_cols() const { return n_cols_; }

    const std::vector<int>& col(int c) const { return col_adjacency_[static_cast<std::size_t>(c)]; }
    const std::vector<int>& row(int r) const { return row_adjacency_[static_cast<std::size_t>(r)]; }
    const std::vector<std::vector<int>>& col_adjacency() const { return col_adjacency_; }
    const std::vector<std::vector<int>>& row_adjacency() const { return row_adjacency_; }

    long long ones() const {
        long long n = 0;
        for (const auto& c : col_adjacency_) n += static_cast<long long>(c.size());
        return n;
    }

    int max_col_degree() const {
        std::size_t m = 0;
        for (const auto& c : col_adjacency_) m = std::max(m, c.size());
        return static_cast<int>(m);
    }

    int max_row_degree() const {
        std::size_t m = 0;
        for (const auto& r : row_adjacency_) m = std::max(m, r.size());
        return static_cast<int>(m);
    }

    bool operator==(const SparseBinaryMatrix& other) const {
        return n_rows_ == other.n_rows_ && n_cols_ == other.n_cols_ &&
               col_adjacency_ == other.col_adjacency_ && row_adjacency_ == other.row_adjacency_;
    }

  private:
    int n_rows_ = 0;
    int n_cols_ = 0;
    std::vector<std::vector<int>> col_adjacency_; // per column: sorted row indices
    std::vector<std::vector<int>> row_adjacency_; // per row: sorted column indices
};

namespace detail {

// Whitespace tokenizer that remembers line/column for diagnostics.
class AlistScanner {
  public:
    explicit AlistScanner(std::istream& in) : in_(in) {}

    long long next_int(const char* section) {
        skip_ws();
        if (!in_.good() || in_.peek() == EOF)
            raise(errc::parse_failure, std::string("alist parse error: unexpected end of file while reading ") +
                                           section + " (line " + std::to_string(line_) + ", column " +
                                           std::to_string(col_) + ")");
        std::string tok;
        int tok_line = line_, tok_col = col_;
        while (in_.good()) {
            int ch = in_.peek();
            if (ch == EOF || ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') break;
            tok.push_back(static_cast<char>(in_.get()));
            ++col_;
        }
        try {
            std::size_t pos = 0;
            long long v = std::stoll(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            return v;
        } catch (const std::exception&) {
            raise(errc::parse_failure, std::string("alist parse error: expected integer for ") + section +
                                           " but found '" + tok + "' (line " + std::to_string(tok_line) +
                                           ", column " + std::to_string(tok_col) + ")");
        }
    }

  private:
    void skip_ws() {
        while (in_.good()) {
            int ch = in_.peek();
            if (ch == '\n') {
                ++line_;
                col_ = 1;
                in_.get();
            } else if (ch == ' ' || ch == '\t' || ch == '\r') {
                ++col_;
                in_.get();
            } else {
                break;
            }
        }
    }

    std::istream& in_;
    int line_ = 1;
    int col_ = 1;
};

} // namespace detail

// alist layout: "N M", "max_col_deg max_row_deg", N column degrees, M row
// degrees, N index lines (1-based rows, zero-padded), M index lines
// (1-based columns, zero-padded).
inline void write_alist(const SparseBinaryMatrix& h, std::ostream& out) {
    const int max_cd = h.max_col_degree();
    const int max_rd = h.max_row_degree();
    out << h.n_cols() << ' ' << h.n_rows() << '\n';
    out << max_cd << ' ' << max_rd << '\n';
    for (int c = 0; c < h.n_cols(); ++c) out << h.col(c).size() << (c + 1 < h.n_cols() ? ' ' : '\n');
    for (int r = 0; r < h.n_rows(); ++r) out << h.row(r).size() << (r + 1 < h.n_rows() ? ' ' : '\n');
    for (int c = 0; c < h.n_cols(); ++c) {
        for (int k = 0; k < max_cd; ++k) {
            const auto& idx = h.col(c);
            out << (k < static_cast<int>(idx.size()) ? idx[static_cast<std::size_t>(k)] + 1 : 0)
                << (k + 1 < max_cd ? ' ' : '\n');
        }
    }
    for (int r = 0; r < h.n_rows(); ++r) {
        for (int k = 0; k < max_rd; ++k) {
            const auto& idx = h.row(r);
            out << (k < static_cast<int>(idx.size()) ? idx[static_cast<std::size_t>(k)] + 1 : 0)
                << (k + 1 < max_rd ? ' ' : '\n');
        }
    }
}

inline SparseBinaryMatrix read_alist(std::istream& in) {
    detail::AlistScanner scan(in);
    const long long n_cols = scan.next_int("matrix width (line 1)");
    const long long n_rows = scan.next_int("matrix height (line 1)");
    if (n_cols < 1 || n_rows < 1)
        raise(errc::parse_failure, "alist parse error: matrix dimensions must be positive, got " +
                                       std::to_string(n_cols) + " x " + std::to_string(n_rows));
    const long long max_cd = scan.next_int("max column degree (line 2)");
    const long long max_rd = scan.next_int("max row degree (line 2)");

    std::vector<int> col_deg(static_cast<std::size_t>(n_cols));
    std::vector<int> row_deg(static_cast<std::size_t>(n_rows));
    for (auto& d : col_deg) {
        d = static_cast<int>(scan.next_int("column degree list"));
        if (d < 0 || d > max_cd)
            raise(errc::parse_failure, "alist parse error: column degree " + std::to_string(d) +
                                           " outside [0, " + std::to_string(max_cd) + "]");
    }
    for (auto& d : row_deg) {
        d = static_cast<int>(scan.next_int("row degree list"));
        if (d < 0 || d > max_rd)
            raise(errc::parse_failure, "alist parse error: row degree " + std::to_string(d) +
                                           " outside [0, " + std::to_string(max_rd) + "]");
    }

    std::vector<std::vector<int>> cols(static_cast<std::size_t>(n_cols));
    for (long long c = 0; c < n_cols; ++c) {
        for (long long k = 0; k < max_cd; ++k) {
            const long long v = scan.next_int("column index block");
            if (v < 0 || v > n_rows)
                raise(errc::parse_failure, "alist parse error: row index " + std::to_string(v) +
                                               " out of range in column " + std::to_string(c + 1));
            if (k < col_deg[static_cast<std::size_t>(c)]) {
                if (v == 0)
                    raise(errc::parse_failure, "alist parse error: column " + std::to_string(c + 1) +
                                                   " has a zero entry before its stated degree");
                cols[static_cast<std::size_t>(c)].push_back(static_cast<int>(v - 1));
            } else if (v != 0) {
                raise(errc::parse_failure, "alist parse error: column " + std::to_string(c + 1) +
                                               " has nonzero padding");
            }
        }
    }

    std::vector<std::vector<int>> rows(static_cast<std::size_t>(n_rows));
    for (long long r = 0; r < n_rows; ++r) {
        for (long long k = 0; k < max_rd; ++k) {
            const long long v = scan.next_int("row index block");
            if (v < 0 || v > n_cols)
                raise(errc::parse_failure, "alist parse error: column index " + std::to_string(v) +
                                               " out of range in row " + std::to_string(r + 1));
            if (k < row_deg[static_cast<std::size_t>(r)]) {
                if (v == 0)
                    raise(errc::parse_failure, "alist parse error: row " + std::to_string(r + 1) +
                                                   " has a zero entry before its stated degree");
                rows[static_cast<std::size_t>(r)].push_back(static_cast<int>(v - 1));
            } else if (v != 0) {
                raise(errc::parse_failure, "alist parse error: row " + std::to_string(r + 1) +
                                               " has nonzero padding");
            }
        }
    }

    SparseBinaryMatrix h = SparseBinaryMatrix::from_column_lists(
        static_cast<int>(n_rows), static_cast<int>(n_cols), std::move(cols));

    // The row blocks are redundant; require them to agree with the column blocks.
    for (long long r = 0; r < n_rows; ++r) {
        auto sorted = rows[static_cast<std::size_t>(r)];
        std::sort(sorted.begin(), sorted.end());
        if (sorted != h.row(static_cast<int>(r)))
            raise(errc::inconsistent_matrix,
                  "alist inconsistency: row " + std::to_string(r + 1) +
                      " disagrees between the row and column index blocks");
    }
    return h;
}

inline void write_alist_file(const SparseBinaryMatrix& h, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) raise(errc::io_failure, "cannot open '" + path + "' for writing");
    write_alist(h, out);
    if (!out) raise(errc::io_failure, "write failed for '" + path + "'");
}

inline SparseBinaryMatrix read_alist_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(errc::io_failure, "cannot open '" + path + "' for reading");
    return read_alist(in);
}

} // namespace scldpc

#endif
