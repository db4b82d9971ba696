#ifndef SCLDPC_SIMULATE_HPP
#define SCLDPC_SIMULATE_HPP

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>
#include <mutex>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "channel.hpp"
#include "decoder.hpp"
#include "errors.hpp"
#include "qc.hpp"
#include "rng.hpp"
#include "sparse.hpp"

namespace scldpc {

struct SimConfig {
    std::vector<double> snr_points_db;
    int max_iterations = 1000;
    long long min_word_errors = 50;
    long long max_frames = 1000000;
    std::uint64_t master_seed = 0;
    int workers = 1;
    double llr_clip = 30.0;
};

struct BerRecord {
    double snr_db = 0.0;
    long long frames = 0;
    long long bit_errors = 0;
    long long word_errors = 0;
    double ber = 0.0;
    double wer = 0.0;
    double avg_iterations = 0.0;
    bool censored = false; // stopped by max_frames before min_word_errors
};

namespace detail {

struct FrameOutcome {
    int bit_errors = 0;
    int iterations = 0;
    bool word_error = false;
    bool done = false;
};

} // namespace detail

// Monte Carlo BER/WER over the all-zero codeword. Each frame draws its
// noise from the stream (master_seed, snr_index, frame_index), and the
// stopping frame is the smallest prefix reaching min_word_errors, so the
// records are identical for any worker count.
inline std::vector<BerRecord> run_ber(const SparseBinaryMatrix& h, double rate,
                                      const SimConfig& cfg) {
    if (cfg.snr_points_db.empty()) raise(errc::invalid_params, "no SNR points configured");
    if (cfg.min_word_errors < 1) raise(errc::invalid_params, "min_word_errors must be >= 1");
    if (cfg.max_frames < 1) raise(errc::invalid_params, "max_frames must be >= 1");
    if (cfg.workers < 1) raise(errc::invalid_params, "workers must be >= 1");
    if (!(rate > 0.0 && rate < 1.0))
        raise(errc::invalid_params, "nonpositive-rate: design rate " + std::to_string(rate) +
                                        " is outside (0,1)");

    std::vector<double> snrs = cfg.snr_points_db;
    std::sort(snrs.begin(), snrs.end());
    const Decoder decoder(h, cfg.llr_clip);
    const std::size_t n = static_cast<std::size_t>(h.n_cols());

    std::vector<BerRecord> records;
    records.reserve(snrs.size());
    for (std::size_t snr_idx = 0; snr_idx < snrs.size(); ++snr_idx) {
        const double snr_db = snrs[snr_idx];
        std::vector<detail::FrameOutcome> outcomes(static_cast<std::size_t>(cfg.max_frames));
        std::atomic<long long> next_frame{0};
        std::atomic<long long> stop_frame{cfg.max_frames}; // exclusive bound, shrinks when decided
        std::mutex scan_mutex;
        long long scanned = 0;      // frames [0, scanned) inspected in order
        long long scanned_errors = 0;

        auto worker = [&]() {
            Decoder::Workspace ws;
            while (true) {
                const long long f = next_frame.fetch_add(1);
                if (f >= stop_frame.load()) break;
                Rng stream = frame_stream(cfg.master_seed, snr_idx, static_cast<std::size_t>(f));
                const LlrFrame llrs = awgn_llr(snr_db, rate, n, stream);
                const DecodeResult res = decoder.decode(llrs, cfg.max_iterations, ws);
                detail::FrameOutcome& out = outcomes[static_cast<std::size_t>(f)];
                int errs = 0;
                for (std::uint8_t b : res.hard_decision) errs += b;
                out.bit_errors = errs;
                out.iterations = res.iterations_used;
                out.word_error = !res.success || errs > 0;
                out.done = true;

                // advance the in-order scan and decide the stopping frame
                std::lock_guard<std::mutex> lock(scan_mutex);
                while (scanned < stop_frame.load() &&
                       outcomes[static_cast<std::size_t>(scanned)].done) {
                    if (outcomes[static_cast<std::size_t>(scanned)].word_error) ++scanned_errors;
                    ++scanned;
                    if (scanned_errors >= cfg.min_word_errors) {
                        long long cur = stop_frame.load();
                        while (cur > scanned && !stop_frame.compare_exchange_weak(cur, scanned)) {
                        }
                        break;
                    }
                }
            }
        };

        if (cfg.workers == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            pool.reserve(static_cast<std::size_t>(cfg.workers));
            for (int w = 0; w < cfg.workers; ++w) pool.emplace_back(worker);
            for (auto& t : pool) t.join();
        }

        const long long used = stop_frame.load();
        BerRecord rec;
        rec.snr_db = snr_db;
        rec.frames = used;
        long long iter_sum = 0;
        for (long long f = 0; f < used; ++f) {
            const auto& out = outcomes[static_cast<std::size_t>(f)];
            rec.bit_errors += out.bit_errors;
            rec.word_errors += out.word_error ? 1 : 0;
            iter_sum += out.iterations;
        }
        rec.ber = static_cast<double>(rec.bit_errors) /
                  (static_cast<double>(rec.frames) * static_cast<double>(n));
        rec.wer = static_cast<double>(rec.word_errors) / static_cast<double>(rec.frames);
        rec.avg_iterations = static_cast<double>(iter_sum) / static_cast<double>(rec.frames);
        rec.censored = rec.word_errors < cfg.min_word_errors;
        records.push_back(rec);
    }
    return records;
}

namespace detail {

inline std::string format_double(double v) {
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

} // namespace detail

// CSV rows ordered by ascending SNR; '#' lines carry run metadata.
inline void write_ber_csv(const std::vector<BerRecord>& records, std::ostream& out,
                          const std::vector<std::string>& metadata = {}) {
    out << "# snr axis: Eb/N0 in dB\n";
    for (const auto& m : metadata) out << "# " << m << '\n';
    out << "snr_db,frames,bit_errors,word_errors,ber,wer,avg_iterations,censored\n";
    for (const auto& r : records)
        out << detail::format_double(r.snr_db) << ',' << r.frames << ',' << r.bit_errors << ','
            << r.word_errors << ',' << detail::format_double(r.ber) << ','
            << detail::format_double(r.wer) << ',' << detail::format_double(r.avg_iterations) << ','
            << (r.censored ? 1 : 0) << '\n';
}

struct StorageReport {
    bool has_shift_form = false;
    long long shift_values = 0;  // stored circulant shifts
    int bits_per_shift = 0;      // ceil(log2 M)
    long long shift_bits = 0;
    long long ones = 0;          // nonzeros of the expanded matrix
    int bits_per_index = 0;      // ceil(log2 max(N, rows))
    long long adjacency_bits = 0;

    // explicit-storage bits per shift-storage bit; infinite when shifts
    // cost nothing (M = 1)
    double ratio() const {
        if (!has_shift_form) return 0.0;
        if (shift_bits == 0) return std::numeric_limits<double>::infinity();
        return static_cast<double>(adjacency_bits) / static_cast<double>(shift_bits);
    }
};

namespace detail {

inline int ceil_log2(long long v) {
    int bits = 0;
    long long x = 1;
    while (x < v) {
        x <<= 1;
        ++bits;
    }
    return bits;
}

} // namespace detail

inline StorageReport storage_report(const ShiftMatrix& sm) {
    const ProtoParams& p = sm.params();
    StorageReport r;
    r.has_shift_form = true;
    r.shift_values = sm.shift_count(); // T * d_l * n_b, capped by L * d_l * n_b
    r.bits_per_shift = detail::ceil_log2(sm.circulant_size());
    r.shift_bits = r.shift_values * r.bits_per_shift;
    const CodeParams cp = code_params(p, sm.circulant_size());
    r.ones = cp.block_length * p.bit_degree;
    const long long rows = static_cast<long long>(p.block_rows()) * sm.circulant_size();
    r.bits_per_index = detail::ceil_log2(std::max(cp.block_length, rows));
    r.adjacency_bits = r.ones * r.bits_per_index;
    return r;
}

inline StorageReport storage_report(const SparseBinaryMatrix& h) {
    StorageReport r;
    r.ones = h.ones();
    r.bits_per_index = detail::ceil_log2(std::max<long long>(h.n_cols(), h.n_rows()));
    r.adjacency_bits = r.ones * r.bits_per_index;
    return r;
}

inline std::string storage_report_to_text(const StorageReport& r) {
    std::string out;
    if (r.has_shift_form) {
        out += "shift_values: " + std::to_string(r.shift_values) + "\n";
        out += "bits_per_shift: " + std::to_string(r.bits_per_shift) + "\n";
        out += "shift_bits: " + std::to_string(r.shift_bits) + "\n";
    }
    out += "ones: " + std::to_string(r.ones) + "\n";
    out += "bits_per_index: " + std::to_string(r.bits_per_index) + "\n";
    out += "adjacency_bits: " + std::to_string(r.adjacency_bits) + "\n";
    if (r.has_shift_form) {
        const double ratio = r.ratio();
        out += "adjacency_to_shift_ratio: " +
               (std::isinf(ratio) ? std::string("inf") : detail::format_double(ratio)) + "\n";
    }
    return out;
}

} // namespace scldpc

#endif
