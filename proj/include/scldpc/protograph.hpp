#ifndef SCLDPC_PROTOGRAPH_HPP
#define SCLDPC_PROTOGRAPH_HPP

#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"

namespace scldpc {

// (d_l, d_r, L) description of a coupled regular chain.
struct ProtoParams {
    int bit_degree = 0;   // d_l
    int check_degree = 0; // d_r
    int chain_length = 0; // L

    int degree_gcd() const { return std::gcd(bit_degree, check_degree); }
    int bits_per_group() const { return check_degree / degree_gcd(); }   // n_b
    int checks_per_group() const { return bit_degree / degree_gcd(); }   // n_c
    int check_groups() const { return chain_length + bit_degree - 1; }   // L + d_l - 1
    int bit_cols() const { return bits_per_group() * chain_length; }
    int block_rows() const { return check_groups() * checks_per_group(); }
};

inline void validate(const ProtoParams& p) {
    if (p.bit_degree < 2 || p.check_degree < 2)
        raise(errc::invalid_params, "degrees must satisfy d_l >= 2, d_r >= 2 (got d_l=" +
                                        std::to_string(p.bit_degree) +
                                        ", d_r=" + std::to_string(p.check_degree) + ")");
    if (p.degree_gcd() == 1)
        raise(errc::invalid_params,
              "construction-undefined: gcd(d_r, d_l) = 1 for d_l=" + std::to_string(p.bit_degree) +
                  ", d_r=" + std::to_string(p.check_degree));
    if (p.chain_length < p.bit_degree)
        raise(errc::invalid_params, "degenerate-rate: L=" + std::to_string(p.chain_length) +
                                        " < d_l=" + std::to_string(p.bit_degree) +
                                        " gives a nonpositive design rate");
    const long long num = static_cast<long long>(p.bits_per_group()) * p.chain_length -
                          static_cast<long long>(p.checks_per_group()) * p.check_groups();
    if (num <= 0)
        raise(errc::invalid_params, "degenerate-rate: (d_l=" + std::to_string(p.bit_degree) +
                                        ", d_r=" + std::to_string(p.check_degree) +
                                        ", L=" + std::to_string(p.chain_length) +
                                        ") has nonpositive design rate");
}

// One protograph edge: bit column `bit_col` attached to the check group
// `offset` groups to the right of its own, landing on `check_row_in_group`
// when n_c > 1 splits each group into several block rows.
struct EdgeSlot {
    int bit_col = 0;
    int offset = 0; // 0 .. d_l-1
    int check_group = 0;
    int check_row_in_group = 0;
    int block_row = 0;
};

struct CoupledProtograph {
    ProtoParams params;
    std::vector<EdgeSlot> slots; // ordered bit_col-major, then offset

    int slot_index(int bit_col, int offset) const { return bit_col * params.bit_degree + offset; }
    const EdgeSlot& slot(int bit_col, int offset) const { return slots[slot_index(bit_col, offset)]; }
};

// Chain of L copies of the (d_l, d_r) protograph, each bit group tied to
// itself and the d_l - 1 check groups to its right. When n_c > 1 the edge
// with offset j from bit b of a group lands on row (j*n_b + b) mod n_c of
// the target group, which keeps interior block rows at degree d_r.
inline CoupledProtograph build_coupled_protograph(const ProtoParams& p) {
    validate(p);
    CoupledProtograph proto;
    proto.params = p;
    const int nb = p.bits_per_group();
    const int nc = p.checks_per_group();
    proto.slots.reserve(static_cast<std::size_t>(p.bit_cols()) * p.bit_degree);
    for (int col = 0; col < p.bit_cols(); ++col) {
        const int group = col / nb;
        const int b = col % nb;
        for (int j = 0; j < p.bit_degree; ++j) {
            EdgeSlot s;
            s.bit_col = col;
            s.offset = j;
            s.check_group = group + j;
            s.check_row_in_group = (j * nb + b) % nc;
            s.block_row = s.check_group * nc + s.check_row_in_group;
            proto.slots.push_back(s);
        }
    }
    return proto;
}

struct CodeParams {
    long long block_length = 0; // N
    long long rate_num = 0;     // n_b L - n_c (L + d_l - 1)
    long long rate_den = 0;     // n_b L

    double rate() const { return static_cast<double>(rate_num) / static_cast<double>(rate_den); }
};

inline CodeParams code_params(const ProtoParams& p, long long circulant_size) {
    validate(p);
    if (circulant_size < 1)
        raise(errc::invalid_params, "circulant size must be >= 1, got " + std::to_string(circulant_size));
    const long long nb = p.bits_per_group();
    const long long nc = p.checks_per_group();
    const long long L = p.chain_length;
    CodeParams cp;
    cp.block_length = nb * circulant_size * L;
    cp.rate_num = nb * L - nc * (L + p.bit_degree - 1);
    cp.rate_den = nb * L;
    return cp;
}

} // namespace scldpc

#endif
