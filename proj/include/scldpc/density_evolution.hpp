#ifndef SCLDPC_DENSITY_EVOLUTION_HPP
#define SCLDPC_DENSITY_EVOLUTION_HPP

#include <algorithm>
#include <charconv>
#include <cmath>
#include <complex>
#include <cstddef>
#include <deque>
#include <ostream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "fft.hpp"
#include "protograph.hpp"

namespace scldpc {

struct DeGrid {
    double step = 0.01;     // LLR quantization bin width
    double llr_max = 40.0;  // messages saturate at +/- llr_max

    int half_bins() const { return static_cast<int>(std::lround(llr_max / step)); } // K
    int signed_bins() const { return 2 * half_bins() + 1; }
};

struct DeOptions {
    DeGrid grid;
    int max_iters = 5000;
    double target_error = 1e-6;
    // a run is declared stuck when the error probability improves by less
    // than (1 - stall_ratio) over stall_window iterations
    int stall_window = 100;
    double stall_ratio = 0.9995;
};

struct DeRunResult {
    bool converged = false;
    int iterations = 0;
    double final_error = 1.0;
    double overflow_mass = 0.0;  // worst per-iteration mass folded into the saturation bins
    double max_norm_drift = 0.0; // worst |sum - 1| seen before renormalization
};

// Edge-class description of the protograph ensemble. Parallel edges that
// are exactly symmetric (n_c = 1) are merged with a multiplicity so the
// densities are computed once.
struct DeEnsemble {
    struct Operand {
        int slot = 0;
        int mult = 1;
    };
    struct BitClass {
        std::vector<Operand> slots; // sum of mult == d_l
        double weight = 1.0;        // bit columns represented
    };
    struct CheckClass {
        std::vector<Operand> slots;
    };

    int bit_degree = 0;
    int check_degree = 0;
    int chain_length = 0; // 0 for the uncoupled ensemble
    double rate = 0.0;
    int n_slots = 0;
    std::vector<BitClass> bits;
    std::vector<CheckClass> checks;
};

inline DeEnsemble make_coupled_ensemble(const CoupledProtograph& proto) {
    const ProtoParams& p = proto.params;
    DeEnsemble e;
    e.bit_degree = p.bit_degree;
    e.check_degree = p.check_degree;
    e.chain_length = p.chain_length;
    const CodeParams cp = code_params(p, 1);
    e.rate = cp.rate();
    const int nb = p.bits_per_group();
    if (p.checks_per_group() == 1) {
        // all n_b columns of a group are interchangeable
        e.n_slots = p.chain_length * p.bit_degree;
        e.bits.resize(static_cast<std::size_t>(p.chain_length));
        for (int t = 0; t < p.chain_length; ++t) {
            auto& bc = e.bits[static_cast<std::size_t>(t)];
            bc.weight = nb;
            for (int j = 0; j < p.bit_degree; ++j) bc.slots.push_back({t * p.bit_degree + j, 1});
        }
        e.checks.resize(static_cast<std::size_t>(p.check_groups()));
        for (int t = 0; t < p.chain_length; ++t)
            for (int j = 0; j < p.bit_degree; ++j)
                e.checks[static_cast<std::size_t>(t + j)].slots.push_back({t * p.bit_degree + j, nb});
    } else {
        // full per-column resolution
        e.n_slots = static_cast<int>(proto.slots.size());
        e.bits.resize(static_cast<std::size_t>(p.bit_cols()));
        e.checks.resize(static_cast<std::size_t>(p.block_rows()));
        for (std::size_t i = 0; i < proto.slots.size(); ++i) {
            const EdgeSlot& s = proto.slots[i];
            e.bits[static_cast<std::size_t>(s.bit_col)].slots.push_back({static_cast<int>(i), 1});
            e.checks[static_cast<std::size_t>(s.block_row)].slots.push_back({static_cast<int>(i), 1});
        }
    }
    return e;
}

inline DeEnsemble make_uncoupled_ensemble(int bit_degree, int check_degree) {
    if (bit_degree < 2 || check_degree <= bit_degree)
        raise(errc::invalid_params, "uncoupled ensemble needs d_r > d_l >= 2");
    DeEnsemble e;
    e.bit_degree = bit_degree;
    e.check_degree = check_degree;
    e.chain_length = 0;
    e.rate = 1.0 - static_cast<double>(bit_degree) / static_cast<double>(check_degree);
    e.n_slots = 1;
    e.bits.push_back({{{0, bit_degree}}, 1.0});
    e.checks.push_back({{{0, check_degree}}});
    return e;
}

// Quantized density evolution for the BI-AWGN channel, all-zero codeword.
// Bit updates are saturating convolutions on the signed LLR grid; check
// updates run in a (sum, difference) magnitude representation where the
// pairwise boxplus is applied diagonal by diagonal.
class DensityEvolver {
  public:
    DensityEvolver(DeEnsemble ensemble, DeOptions options)
        : ens_(std::move(ensemble)), opt_(options), k_(opt_.grid.half_bins()),
          s_(2 * k_ + 1), fft_(Fft::next_pow2(static_cast<std::size_t>(2 * s_ - 1))) {
        if (k_ < 4) raise(errc::invalid_params, "LLR grid too coarse");
        build_tables();
    }

    const DeEnsemble& ensemble() const { return ens_; }
    const DeOptions& options() const { return opt_; }

    DeRunResult run(double sigma) {
        if (!(sigma > 0.0)) raise(errc::invalid_params, "sigma must be positive");
        DeRunResult result;
        init_channel(sigma);

        std::vector<std::vector<double>> bit_to_check(
            static_cast<std::size_t>(ens_.n_slots), channel_);
        std::vector<std::vector<double>> check_to_bit(
            static_cast<std::size_t>(ens_.n_slots), std::vector<double>(static_cast<std::size_t>(s_), 0.0));

        std::deque<double> history;
        for (int iter = 1; iter <= opt_.max_iters; ++iter) {
            iter_overflow_ = 0.0;
            update_checks(bit_to_check, check_to_bit, result);
            const double pe = update_bits(check_to_bit, bit_to_check, result);
            result.overflow_mass = std::max(result.overflow_mass, iter_overflow_);
            result.iterations = iter;
            result.final_error = pe;
            if (pe <= opt_.target_error) {
                result.converged = true;
                return result;
            }
            history.push_back(pe);
            if (static_cast<int>(history.size()) > opt_.stall_window) {
                const double old = history.front();
                history.pop_front();
                if (iter >= 2 * opt_.stall_window && pe > opt_.stall_ratio * old) return result;
            }
        }
        return result;
    }

  private:
    void build_tables() {
        const double delta = opt_.grid.step;
        // corr[s] = log1p(exp(-s*delta)), truncated once below step/1000
        const double tiny = delta * 1e-3;
        int s_cut = 0;
        while (std::log1p(std::exp(-s_cut * delta)) >= tiny) ++s_cut;
        corr_.resize(static_cast<std::size_t>(s_cut));
        for (int s = 0; s < s_cut; ++s) corr_[static_cast<std::size_t>(s)] = std::log1p(std::exp(-s * delta));
        d0_ = 0;
        while (d0_ < s_cut && corr_[static_cast<std::size_t>(d0_)] >= delta / 2.0) ++d0_;
        off0_.resize(static_cast<std::size_t>(d0_));
        for (int d = 0; d < d0_; ++d)
            off0_[static_cast<std::size_t>(d)] =
                -static_cast<int>(std::lround(corr_[static_cast<std::size_t>(d)] / delta));
        suff_a_.resize(static_cast<std::size_t>(k_) + 2);
        suff_b_.resize(static_cast<std::size_t>(k_) + 2);
    }

    void init_channel(double sigma) {
        const double delta = opt_.grid.step;
        const double mean = 2.0 / (sigma * sigma);
        const double sd = 2.0 / sigma;
        channel_.assign(static_cast<std::size_t>(s_), 0.0);
        const auto phi = [](double z) { return 0.5 * std::erfc(-z / 1.4142135623730951); };
        for (int j = 0; j < s_; ++j) {
            const double x = (j - k_) * delta;
            const double lo = (j == 0) ? 0.0 : phi((x - delta / 2 - mean) / sd);
            const double hi = (j == s_ - 1) ? 1.0 : phi((x + delta / 2 - mean) / sd);
            channel_[static_cast<std::size_t>(j)] = std::max(0.0, hi - lo);
        }
        normalize(channel_, nullptr);
        channel_freq_ = to_freq(channel_);
    }

    // --- signed-grid helpers -------------------------------------------

    void normalize(std::vector<double>& p, DeRunResult* result) {
        double sum = 0.0;
        for (double v : p) sum += v;
        if (result) result->max_norm_drift = std::max(result->max_norm_drift, std::fabs(sum - 1.0));
        if (sum > 0.0) {
            const double inv = 1.0 / sum;
            for (double& v : p) v *= inv;
        }
    }

    std::vector<std::complex<double>> to_freq(const std::vector<double>& p) const {
        std::vector<std::complex<double>> f(fft_.size(), {0.0, 0.0});
        for (int j = 0; j < s_; ++j) f[static_cast<std::size_t>(j)] = p[static_cast<std::size_t>(j)];
        fft_.forward(f.data());
        return f;
    }

    // inverse transform of a frequency-domain product, folded back onto the
    // signed grid with saturation at both ends
    std::vector<double> from_freq_folded(std::vector<std::complex<double>> f, DeRunResult* result) {
        fft_.inverse(f.data());
        std::vector<double> out(static_cast<std::size_t>(s_), 0.0);
        double folded = 0.0;
        for (int c = 0; c < 2 * s_ - 1; ++c) {
            double v = f[static_cast<std::size_t>(c)].real();
            if (v < 0.0) v = 0.0;
            int t = c - k_; // signed-grid index of the convolution bin
            if (t < 0) {
                folded += v;
                t = 0;
            } else if (t > 2 * k_) {
                folded += v;
                t = 2 * k_;
            }
            out[static_cast<std::size_t>(t)] += v;
        }
        iter_overflow_ += folded;
        normalize(out, result);
        return out;
    }

    double error_probability(const std::vector<double>& p) const {
        double pe = 0.0;
        for (int j = 0; j < k_; ++j) pe += p[static_cast<std::size_t>(j)];
        pe += 0.5 * p[static_cast<std::size_t>(k_)];
        return pe;
    }

    // --- check-side magnitude machinery --------------------------------

    struct SplitMag {
        std::vector<double> sum;  // pos + neg per magnitude bin
        std::vector<double> diff; // pos - neg
    };

    SplitMag to_split(const std::vector<double>& p) const {
        SplitMag m;
        m.sum.assign(static_cast<std::size_t>(k_) + 1, 0.0);
        m.diff.assign(static_cast<std::size_t>(k_) + 1, 0.0);
        m.sum[0] = p[static_cast<std::size_t>(k_)];
        for (int j = 1; j <= k_; ++j) {
            const double pos = p[static_cast<std::size_t>(k_ + j)];
            const double neg = p[static_cast<std::size_t>(k_ - j)];
            m.sum[static_cast<std::size_t>(j)] = pos + neg;
            m.diff[static_cast<std::size_t>(j)] = pos - neg;
        }
        return m;
    }

    std::vector<double> from_split(const SplitMag& m, DeRunResult* result) {
        std::vector<double> p(static_cast<std::size_t>(s_), 0.0);
        p[static_cast<std::size_t>(k_)] = m.sum[0];
        for (int j = 1; j <= k_; ++j) {
            p[static_cast<std::size_t>(k_ + j)] =
                0.5 * (m.sum[static_cast<std::size_t>(j)] + m.diff[static_cast<std::size_t>(j)]);
            p[static_cast<std::size_t>(k_ - j)] =
                0.5 * (m.sum[static_cast<std::size_t>(j)] - m.diff[static_cast<std::size_t>(j)]);
        }
        for (double& v : p) v = std::max(0.0, v);
        normalize(p, result);
        return p;
    }

    // quantized pairwise boxplus of magnitude mass vectors, linear in both
    // arguments; regions: exact near-diagonal, offset-shifted mid range,
    // suffix-aggregated far range where the output bin equals min(i, j)
    void mag_op(const double* a, const double* b, double* out) {
        const double delta = opt_.grid.step;
        const int s_cut = static_cast<int>(corr_.size());
        std::fill(out, out + k_ + 1, 0.0);
        suff_a_[static_cast<std::size_t>(k_) + 1] = 0.0;
        suff_b_[static_cast<std::size_t>(k_) + 1] = 0.0;
        for (int i = k_; i >= 0; --i) {
            suff_a_[static_cast<std::size_t>(i)] = suff_a_[static_cast<std::size_t>(i) + 1] + a[i];
            suff_b_[static_cast<std::size_t>(i)] = suff_b_[static_cast<std::size_t>(i) + 1] + b[i];
        }
        for (int d = 0; d <= std::min(k_, s_cut); ++d) {
            const double c1 = (d < s_cut) ? -corr_[static_cast<std::size_t>(d)] : 0.0;
            const int near_end = std::min(k_ + 1, (s_cut + d + 2) / 2);
            for (int i = d; i < near_end; ++i) {
                const int ss = 2 * i - d;
                if (ss >= s_cut) continue;
                int bin = i - d + static_cast<int>(std::lround(
                                      (c1 + corr_[static_cast<std::size_t>(ss)]) / delta));
                bin = std::clamp(bin, 0, k_);
                out[bin] += (d == 0) ? a[i] * b[i] : a[i] * b[i - d] + a[i - d] * b[i];
            }
            if (d < d0_) {
                const int off = off0_[static_cast<std::size_t>(d)];
                for (int i = std::max(d, near_end); i <= k_; ++i) {
                    int bin = std::clamp(i - d + off, 0, k_);
                    out[bin] += (d == 0) ? a[i] * b[i] : a[i] * b[i - d] + a[i - d] * b[i];
                }
            }
        }
        // d >= d0 and 2i - d >= s_cut: output bin is exactly min(i, j)
        for (int j = 0; j <= k_; ++j) {
            const int lo = std::min(k_ + 1, std::max(j + d0_, s_cut - j));
            out[j] += b[j] * suff_a_[static_cast<std::size_t>(lo)] +
                      a[j] * suff_b_[static_cast<std::size_t>(lo)];
        }
    }

    SplitMag pair_op(const SplitMag& x, const SplitMag& y) {
        SplitMag out;
        out.sum.resize(static_cast<std::size_t>(k_) + 1);
        out.diff.resize(static_cast<std::size_t>(k_) + 1);
        mag_op(x.sum.data(), y.sum.data(), out.sum.data());
        mag_op(x.diff.data(), y.diff.data(), out.diff.data());
        return out;
    }

    void update_checks(const std::vector<std::vector<double>>& bit_to_check,
                       std::vector<std::vector<double>>& check_to_bit, DeRunResult& result) {
        std::vector<SplitMag> slot_split(static_cast<std::size_t>(ens_.n_slots));
        std::vector<char> have(static_cast<std::size_t>(ens_.n_slots), 0);
        for (const auto& check : ens_.checks) {
            // expand multiplicities into a flat operand list
            ops_.clear();
            for (const auto& op : check.slots) {
                if (!have[static_cast<std::size_t>(op.slot)]) {
                    slot_split[static_cast<std::size_t>(op.slot)] =
                        to_split(bit_to_check[static_cast<std::size_t>(op.slot)]);
                    have[static_cast<std::size_t>(op.slot)] = 1;
                }
                for (int kdup = 0; kdup < op.mult; ++kdup) ops_.push_back(op.slot);
            }
            const int deg = static_cast<int>(ops_.size());
            if (deg == 1) {
                // lone edge: the check pins its bit
                std::vector<double> point(static_cast<std::size_t>(s_), 0.0);
                point[static_cast<std::size_t>(2 * k_)] = 1.0;
                check_to_bit[static_cast<std::size_t>(ops_[0])] = point;
                continue;
            }
            prefix_.resize(static_cast<std::size_t>(deg));
            suffix_.resize(static_cast<std::size_t>(deg));
            prefix_[0] = slot_split[static_cast<std::size_t>(ops_[0])];
            for (int i = 1; i < deg; ++i)
                prefix_[static_cast<std::size_t>(i)] = pair_op(
                    prefix_[static_cast<std::size_t>(i - 1)], slot_split[static_cast<std::size_t>(ops_[i])]);
            suffix_[static_cast<std::size_t>(deg - 1)] = slot_split[static_cast<std::size_t>(ops_[deg - 1])];
            for (int i = deg - 2; i >= 0; --i)
                suffix_[static_cast<std::size_t>(i)] = pair_op(
                    suffix_[static_cast<std::size_t>(i + 1)], slot_split[static_cast<std::size_t>(ops_[i])]);
            int prev_slot = -1;
            for (int i = 0; i < deg; ++i) {
                const int slot = ops_[i];
                if (slot == prev_slot) continue; // same class: identical output
                prev_slot = slot;
                SplitMag extr;
                if (i == 0) extr = suffix_[1];
                else if (i == deg - 1) extr = prefix_[static_cast<std::size_t>(deg - 2)];
                else extr = pair_op(prefix_[static_cast<std::size_t>(i - 1)],
                                    suffix_[static_cast<std::size_t>(i + 1)]);
                check_to_bit[static_cast<std::size_t>(slot)] = from_split(extr, &result);
            }
        }
    }

    double update_bits(const std::vector<std::vector<double>>& check_to_bit,
                       std::vector<std::vector<double>>& bit_to_check, DeRunResult& result) {
        double pe_acc = 0.0;
        double weight_acc = 0.0;
        for (const auto& bit : ens_.bits) {
            ops_.clear();
            ops_.push_back(-1); // channel
            for (const auto& op : bit.slots)
                for (int kdup = 0; kdup < op.mult; ++kdup) ops_.push_back(op.slot);
            const int n_ops = static_cast<int>(ops_.size());

            // spatial prefixes/suffixes with cached transforms
            fprefix_.resize(static_cast<std::size_t>(n_ops));
            fsuffix_.resize(static_cast<std::size_t>(n_ops));
            std::vector<std::vector<std::complex<double>>> op_freq(static_cast<std::size_t>(n_ops));
            op_freq[0] = channel_freq_;
            for (int i = 1; i < n_ops; ++i)
                op_freq[static_cast<std::size_t>(i)] =
                    to_freq(check_to_bit[static_cast<std::size_t>(ops_[i])]);

            fprefix_[0] = op_freq[0];
            std::vector<double> prefix_spatial; // only the latest is needed
            for (int i = 1; i < n_ops; ++i) {
                auto prod = multiply(fprefix_[static_cast<std::size_t>(i - 1)],
                                     op_freq[static_cast<std::size_t>(i)]);
                prefix_spatial = from_freq_folded(std::move(prod), &result);
                if (i < n_ops - 1) fprefix_[static_cast<std::size_t>(i)] = to_freq(prefix_spatial);
            }
            const std::vector<double> posterior = prefix_spatial;

            fsuffix_[static_cast<std::size_t>(n_ops - 1)] = op_freq[static_cast<std::size_t>(n_ops - 1)];
            for (int i = n_ops - 2; i >= 1; --i) {
                auto prod = multiply(fsuffix_[static_cast<std::size_t>(i + 1)],
                                     op_freq[static_cast<std::size_t>(i)]);
                auto spatial = from_freq_folded(std::move(prod), &result);
                if (i >= 2) fsuffix_[static_cast<std::size_t>(i)] = to_freq(spatial);
            }

            int prev_slot = -2;
            for (int i = 1; i < n_ops; ++i) {
                const int slot = ops_[i];
                if (slot == prev_slot) continue;
                prev_slot = slot;
                std::vector<double> extr;
                if (i == n_ops - 1) {
                    auto prod = fprefix_[static_cast<std::size_t>(i - 1)];
                    extr = from_freq_folded(std::move(prod), &result);
                } else {
                    auto prod = multiply(fprefix_[static_cast<std::size_t>(i - 1)],
                                         fsuffix_[static_cast<std::size_t>(i + 1)]);
                    extr = from_freq_folded(std::move(prod), &result);
                }
                bit_to_check[static_cast<std::size_t>(slot)] = std::move(extr);
            }

            pe_acc += bit.weight * error_probability(posterior);
            weight_acc += bit.weight;
        }
        return pe_acc / weight_acc;
    }

    std::vector<std::complex<double>> multiply(const std::vector<std::complex<double>>& a,
                                               const std::vector<std::complex<double>>& b) const {
        std::vector<std::complex<double>> out(fft_.size());
        for (std::size_t i = 0; i < fft_.size(); ++i) out[i] = a[i] * b[i];
        return out;
    }

    DeEnsemble ens_;
    DeOptions opt_;
    int k_;
    int s_;
    Fft fft_;
    std::vector<double> corr_;
    int d0_ = 0;
    std::vector<int> off0_;
    std::vector<double> suff_a_, suff_b_;
    std::vector<double> channel_;
    std::vector<std::complex<double>> channel_freq_;
    double iter_overflow_ = 0.0;
    std::vector<int> ops_;
    std::vector<SplitMag> prefix_, suffix_;
    std::vector<std::vector<std::complex<double>>> fprefix_, fsuffix_;
};

inline DeRunResult de_iterate(const DeEnsemble& ensemble, double sigma, const DeOptions& options) {
    DensityEvolver de(ensemble, options);
    return de.run(sigma);
}

inline bool de_iterate(const CoupledProtograph& proto, double sigma, int max_iters,
                       double target_error) {
    DeOptions opt;
    opt.max_iters = max_iters;
    opt.target_error = target_error;
    return de_iterate(make_coupled_ensemble(proto), sigma, opt).converged;
}

struct ThresholdResult {
    double sigma_star = 0.0;
    double ebno_star_db = 0.0;
    int iterations_at_threshold = 0;
    bool converged = false; // bisection closed its bracket below tolerance
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    double rate = 0.0;
    double tolerance = 0.0;
    double grid_step = 0.0;
    double overflow_mass = 0.0;
};

inline double sigma_to_ebno_db(double sigma, double rate) {
    return 10.0 * std::log10(1.0 / (2.0 * rate * sigma * sigma));
}

// Bisection on the channel noise; requires the bracket to straddle the
// threshold (converged at lo, not at hi).
inline ThresholdResult find_threshold(const DeEnsemble& ensemble, double tolerance,
                                      const DeOptions& options, double bracket_lo = 0.4,
                                      double bracket_hi = 1.6) {
    if (!(tolerance > 0.0)) raise(errc::invalid_params, "tolerance must be positive");
    if (!(bracket_lo > 0.0 && bracket_hi > bracket_lo))
        raise(errc::invalid_params, "bisection bracket must satisfy 0 < lo < hi");
    DensityEvolver de(ensemble, options);

    ThresholdResult tr;
    tr.rate = ensemble.rate;
    tr.tolerance = tolerance;
    tr.grid_step = options.grid.step;

    DeRunResult at_lo = de.run(bracket_lo);
    if (!at_lo.converged)
        raise(errc::bracket_failure, "bracket-failure: density evolution does not converge at sigma = " +
                                         std::to_string(bracket_lo));
    DeRunResult at_hi = de.run(bracket_hi);
    if (at_hi.converged)
        raise(errc::bracket_failure, "bracket-failure: density evolution already converges at sigma = " +
                                         std::to_string(bracket_hi));
    tr.iterations_at_threshold = at_lo.iterations;
    tr.overflow_mass = std::max(at_lo.overflow_mass, at_hi.overflow_mass);

    double lo = bracket_lo, hi = bracket_hi;
    while (hi - lo > tolerance) {
        const double mid = 0.5 * (lo + hi);
        const DeRunResult r = de.run(mid);
        tr.overflow_mass = std::max(tr.overflow_mass, r.overflow_mass);
        if (r.converged) {
            lo = mid;
            tr.iterations_at_threshold = r.iterations;
        } else {
            hi = mid;
        }
    }
    tr.bracket_lo = lo;
    tr.bracket_hi = hi;
    tr.sigma_star = 0.5 * (lo + hi);
    tr.ebno_star_db = sigma_to_ebno_db(tr.sigma_star, ensemble.rate);
    tr.converged = true;
    return tr;
}

inline ThresholdResult find_threshold(const CoupledProtograph& proto, double tolerance) {
    return find_threshold(make_coupled_ensemble(proto), tolerance, DeOptions{});
}

// CSV row: d_l,d_r,L,sigma_star,ebno_star_db,tolerance,grid_step
inline void write_threshold_csv_header(std::ostream& out) {
    out << "d_l,d_r,L,sigma_star,ebno_star_db,tolerance,grid_step\n";
}

inline void write_threshold_csv_row(std::ostream& out, const DeEnsemble& ens,
                                    const ThresholdResult& tr) {
    char buf[40];
    const auto fmt = [&buf](double v) {
        auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
        (void)ec;
        return std::string(buf, ptr);
    };
    out << ens.bit_degree << ',' << ens.check_degree << ',' << ens.chain_length << ','
        << fmt(tr.sigma_star) << ',' << fmt(tr.ebno_star_db) << ',' << fmt(tr.tolerance) << ','
        << fmt(tr.grid_step) << '\n';
}

} // namespace scldpc

#endif
