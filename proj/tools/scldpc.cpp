// Command-line front end: construct / analyze / simulate / threshold / storage.

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include <scldpc/scldpc.hpp>

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitParams = 3;
constexpr int kExitSearch = 4;
constexpr int kExitIo = 5;
constexpr int kExitInternal = 70;

int exit_code_for(scldpc::errc code) {
    switch (code) {
        case scldpc::errc::invalid_params:
        case scldpc::errc::dimension_mismatch:
        case scldpc::errc::malformed_path:
        case scldpc::errc::unsupported_length:
        case scldpc::errc::hypothesis_not_met:
            return kExitParams;
        case scldpc::errc::search_exhausted:
        case scldpc::errc::infeasible_degree:
        case scldpc::errc::bracket_failure:
            return kExitSearch;
        case scldpc::errc::io_failure:
        case scldpc::errc::parse_failure:
        case scldpc::errc::inconsistent_matrix:
            return kExitIo;
    }
    return kExitInternal;
}

std::string fmt_double(double v) {
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

// "a", "a:step:b" or comma list
std::vector<double> parse_snr_grid(const std::string& text) {
    std::vector<double> points;
    if (text.empty()) throw CLI::ValidationError("--snr", "empty SNR grid");
    if (text.find(':') != std::string::npos) {
        double start = 0, step = 0, stop = 0;
        char c1 = 0, c2 = 0;
        std::istringstream in(text);
        if (!(in >> start >> c1 >> step >> c2 >> stop) || c1 != ':' || c2 != ':' || !in.eof())
            throw CLI::ValidationError("--snr", "expected start:step:stop, got '" + text + "'");
        if (step <= 0) throw CLI::ValidationError("--snr", "step must be positive");
        if (stop < start) throw CLI::ValidationError("--snr", "stop must be >= start");
        for (double v = start; v <= stop + 1e-9; v += step) points.push_back(v);
        return points;
    }
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        points.push_back(std::stod(tok));
    }
    if (points.empty()) throw CLI::ValidationError("--snr", "empty SNR grid");
    return points;
}

// "33", "10..60..10" (begin..end..step, step defaults to 1) or comma list
std::vector<int> parse_length_sweep(const std::string& text) {
    std::vector<int> values;
    const auto dots = text.find("..");
    if (dots != std::string::npos) {
        const std::string head = text.substr(0, dots);
        std::string rest = text.substr(dots + 2);
        int step = 1;
        const auto dots2 = rest.find("..");
        if (dots2 != std::string::npos) {
            step = std::stoi(rest.substr(dots2 + 2));
            rest = rest.substr(0, dots2);
        }
        const int begin = std::stoi(head);
        const int end = std::stoi(rest);
        if (step < 1 || end < begin) throw CLI::ValidationError("-L", "bad sweep '" + text + "'");
        for (int v = begin; v <= end; v += step) values.push_back(v);
        return values;
    }
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        values.push_back(std::stoi(tok));
    }
    if (values.empty()) throw CLI::ValidationError("-L", "empty sweep");
    return values;
}

using MatrixInput = std::variant<scldpc::ShiftMatrix, scldpc::SparseBinaryMatrix>;

// Shift-matrix files start with a six-field header, alist files with two.
MatrixInput load_matrix(const std::string& path) {
    std::ifstream probe(path, std::ios::binary);
    if (!probe) scldpc::raise(scldpc::errc::io_failure, "cannot open '" + path + "' for reading");
    std::string first_line;
    std::getline(probe, first_line);
    std::istringstream tokens(first_line);
    int n_tokens = 0;
    std::string tok;
    while (tokens >> tok) ++n_tokens;
    probe.close();
    if (n_tokens == 6) return scldpc::read_shift_matrix_file(path);
    if (n_tokens == 2) return scldpc::read_alist_file(path);
    scldpc::raise(scldpc::errc::parse_failure,
                  "'" + path + "' is neither a shift matrix (6-field header) nor an alist (2-field header)");
}

std::string joined_args(int argc, char** argv) {
    std::string out;
    for (int i = 1; i < argc; ++i) {
        if (i > 1) out += ' ';
        out += argv[i];
    }
    return out;
}

struct ConstructArgs {
    int dl = 0, dr = 0, length = 0, m = 0, t = 0;
    std::uint64_t seed = 1;
    int max_attempts = 100;
    std::string out_prefix = "code";
    bool peg = false;
};

int run_construct(const ConstructArgs& a, const std::string& args_text) {
    scldpc::ProtoParams params{a.dl, a.dr, a.length};
    const auto proto = scldpc::build_coupled_protograph(params);
    const auto cp = scldpc::code_params(params, a.m);
    scldpc::Manifest manifest("construct", args_text);
    manifest.add("seed", std::to_string(a.seed));

    std::string alist_text;
    if (a.peg) {
        const auto h = scldpc::peg_construct_coupled(proto, a.m, a.seed);
        std::ostringstream out;
        scldpc::write_alist(h, out);
        alist_text = out.str();
        std::cout << "N=" << cp.block_length << " r=" << cp.rate_num << "/" << cp.rate_den << " ("
                  << fmt_double(cp.rate()) << ") construction=peg-coupled\n";
    } else {
        const int t = (a.t == 0) ? a.length : a.t;
        const auto sm = scldpc::assign_shifts(proto, a.m, t, a.seed, a.max_attempts);
        const auto h = scldpc::expand(sm);
        std::ostringstream out;
        scldpc::write_alist(h, out);
        alist_text = out.str();
        std::ostringstream sm_out;
        scldpc::write_shift_matrix(sm, sm_out);
        const std::string shift_path = a.out_prefix + ".shift";
        scldpc::atomic_write_file(shift_path, sm_out.str());
        manifest.add_output(shift_path, sm_out.str());
        std::cout << "N=" << cp.block_length << " r=" << cp.rate_num << "/" << cp.rate_den << " ("
                  << fmt_double(cp.rate()) << ") shifts=" << sm.shift_count() << "\n";
        if (!sm.period_divides_length()) {
            std::cout << "note: L=" << a.length << " is not divisible by T=" << t
                      << "; the reuse pattern is extended cyclically\n";
            manifest.add("note", "L not divisible by T; reuse pattern extended cyclically");
        }
    }
    const std::string alist_path = a.out_prefix + ".alist";
    scldpc::atomic_write_file(alist_path, alist_text);
    manifest.add_output(alist_path, alist_text);
    manifest.write(a.out_prefix + ".manifest");
    return 0;
}

struct AnalyzeArgs {
    std::string in;
    int girth_cap = 16;
    std::string count_list;
    bool witness = false;
};

int run_analyze(const AnalyzeArgs& a) {
    const MatrixInput input = load_matrix(a.in);
    const bool is_shift = std::holds_alternative<scldpc::ShiftMatrix>(input);
    const scldpc::SparseBinaryMatrix h = is_shift
                                             ? scldpc::expand(std::get<scldpc::ShiftMatrix>(input))
                                             : std::get<scldpc::SparseBinaryMatrix>(input);
    const auto g = scldpc::girth(h, a.girth_cap);
    std::cout << "girth: " << g.to_string() << "\n";
    if (!a.count_list.empty()) {
        std::istringstream in(a.count_list);
        std::string tok;
        while (std::getline(in, tok, ',')) {
            if (tok.empty()) continue;
            const int len = std::stoi(tok);
            std::cout << "cycles[" << len << "]: " << scldpc::count_cycles(h, len) << "\n";
        }
    }
    if (a.witness) {
        if (!is_shift)
            scldpc::raise(scldpc::errc::invalid_params,
                          "witness certificates need a shift-matrix input (reuse structure)");
        const auto& sm = std::get<scldpc::ShiftMatrix>(input);
        const auto w = scldpc::find_reuse_inevitable_cycle(sm);
        std::cout << scldpc::witness_to_text(w, sm.circulant_size());
    }
    return 0;
}

struct SimulateArgs {
    std::string in;
    std::string snr;
    int max_iters = 1000;
    long long min_word_errors = 50;
    long long max_frames = 1000000;
    std::uint64_t seed = 1;
    int workers = 1;
    double clip = 30.0;
    std::string out = "ber.csv";
};

int run_simulate(const SimulateArgs& a, const std::string& args_text) {
    const MatrixInput input = load_matrix(a.in);
    scldpc::SparseBinaryMatrix h;
    double rate = 0.0;
    if (std::holds_alternative<scldpc::ShiftMatrix>(input)) {
        const auto& sm = std::get<scldpc::ShiftMatrix>(input);
        h = scldpc::expand(sm);
        rate = scldpc::code_params(sm.params(), sm.circulant_size()).rate();
    } else {
        h = std::get<scldpc::SparseBinaryMatrix>(input);
        rate = 1.0 - static_cast<double>(h.n_rows()) / static_cast<double>(h.n_cols());
    }

    scldpc::SimConfig cfg;
    cfg.snr_points_db = parse_snr_grid(a.snr);
    cfg.max_iterations = a.max_iters;
    cfg.min_word_errors = a.min_word_errors;
    cfg.max_frames = a.max_frames;
    cfg.master_seed = a.seed;
    cfg.workers = a.workers;
    cfg.llr_clip = a.clip;

    const auto records = scldpc::run_ber(h, rate, cfg);
    std::ostringstream csv;
    scldpc::write_ber_csv(records, csv,
                          {"matrix: " + a.in, "rate: " + fmt_double(rate),
                           "seed: " + std::to_string(a.seed),
                           "max_iterations: " + std::to_string(a.max_iters),
                           "min_word_errors: " + std::to_string(a.min_word_errors),
                           "max_frames: " + std::to_string(a.max_frames)});
    scldpc::atomic_write_file(a.out, csv.str());
    scldpc::Manifest manifest("simulate", args_text);
    manifest.add("seed", std::to_string(a.seed));
    manifest.add_input(a.in);
    manifest.add_output(a.out, csv.str());
    manifest.write(a.out + ".manifest");
    std::cout << "wrote " << a.out << " (" << records.size() << " SNR points)\n";
    return 0;
}

struct ThresholdArgs {
    int dl = 0, dr = 0;
    std::string length = "0";
    bool uncoupled = false;
    double tol = 1e-3;
    double grid_step = 0.01;
    double llr_max = 40.0;
    double target_error = 1e-6;
    int max_iters = 5000;
    double bracket_lo = 0.4;
    double bracket_hi = 1.6;
    std::string out = "thresholds.csv";
};

int run_threshold(const ThresholdArgs& a, const std::string& args_text) {
    scldpc::DeOptions opt;
    opt.grid.step = a.grid_step;
    opt.grid.llr_max = a.llr_max;
    opt.max_iters = a.max_iters;
    opt.target_error = a.target_error;

    std::ostringstream csv;
    scldpc::write_threshold_csv_header(csv);
    if (a.uncoupled) {
        const auto ens = scldpc::make_uncoupled_ensemble(a.dl, a.dr);
        const auto tr = scldpc::find_threshold(ens, a.tol, opt, a.bracket_lo, a.bracket_hi);
        scldpc::write_threshold_csv_row(csv, ens, tr);
        std::cout << "uncoupled (" << a.dl << "," << a.dr << "): sigma*=" << fmt_double(tr.sigma_star)
                  << " Eb/N0*=" << fmt_double(tr.ebno_star_db) << " dB\n";
    } else {
        for (int length : parse_length_sweep(a.length)) {
            const auto proto = scldpc::build_coupled_protograph({a.dl, a.dr, length});
            const auto ens = scldpc::make_coupled_ensemble(proto);
            const auto tr = scldpc::find_threshold(ens, a.tol, opt, a.bracket_lo, a.bracket_hi);
            scldpc::write_threshold_csv_row(csv, ens, tr);
            std::cout << "(" << a.dl << "," << a.dr << ",L=" << length
                      << "): sigma*=" << fmt_double(tr.sigma_star)
                      << " Eb/N0*=" << fmt_double(tr.ebno_star_db) << " dB\n";
        }
    }
    scldpc::atomic_write_file(a.out, csv.str());
    scldpc::Manifest manifest("threshold", args_text);
    manifest.add_output(a.out, csv.str());
    manifest.write(a.out + ".manifest");
    return 0;
}

int run_storage(const std::string& in) {
    const MatrixInput input = load_matrix(in);
    scldpc::StorageReport report;
    if (std::holds_alternative<scldpc::ShiftMatrix>(input))
        report = scldpc::storage_report(std::get<scldpc::ShiftMatrix>(input));
    else
        report = scldpc::storage_report(std::get<scldpc::SparseBinaryMatrix>(input));
    std::cout << scldpc::storage_report_to_text(report);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"periodic time-variant QC SC-LDPC construction, analysis and simulation"};
    app.require_subcommand(1);
    const std::string args_text = joined_args(argc, argv);

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "build a QC SC-LDPC matrix");
    construct->add_option("--dl", ca.dl, "bit-node degree d_l")->required();
    construct->add_option("--dr", ca.dr, "check-node degree d_r")->required();
    construct->add_option("-L", ca.length, "coupling length L")->required();
    construct->add_option("-M", ca.m, "circulant size M")->required();
    construct->add_option("-T", ca.t, "reuse period (default: L, non-periodic)");
    construct->add_option("--seed", ca.seed, "construction seed");
    construct->add_option("--max-attempts", ca.max_attempts, "shift-search restarts");
    construct->add_option("--out", ca.out_prefix, "output prefix");
    construct->add_flag("--peg", ca.peg, "coupled PEG baseline instead of QC");

    AnalyzeArgs aa;
    auto* analyze = app.add_subcommand("analyze", "girth and cycle report");
    analyze->add_option("--in", aa.in, "matrix file (shift or alist)")->required();
    analyze->add_option("--girth-cap", aa.girth_cap, "even search cap for the girth");
    analyze->add_option("--count", aa.count_list, "comma list of cycle lengths to count");
    analyze->add_flag("--witness", aa.witness, "print the reuse-inevitable cycle certificate");

    SimulateArgs sa;
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo BER/WER on BI-AWGN");
    simulate->add_option("--in", sa.in, "matrix file (shift or alist)")->required();
    simulate->add_option("--snr", sa.snr, "Eb/N0 grid, start:step:stop or comma list")->required();
    simulate->add_option("--max-iters", sa.max_iters, "decoder iteration cap");
    simulate->add_option("--min-word-errors", sa.min_word_errors, "stop after this many word errors");
    simulate->add_option("--max-frames", sa.max_frames, "frame cap per SNR point");
    simulate->add_option("--seed", sa.seed, "master seed");
    simulate->add_option("--workers", sa.workers, "decoder threads");
    simulate->add_option("--clip", sa.clip, "LLR clip magnitude");
    simulate->add_option("--out", sa.out, "output CSV path");

    ThresholdArgs ta;
    auto* threshold = app.add_subcommand("threshold", "density-evolution BP threshold");
    threshold->add_option("--dl", ta.dl, "bit-node degree d_l")->required();
    threshold->add_option("--dr", ta.dr, "check-node degree d_r")->required();
    threshold->add_option("-L", ta.length, "coupling length, single value, a..b..step or comma list");
    threshold->add_flag("--uncoupled", ta.uncoupled, "standard (d_l,d_r) ensemble");
    threshold->add_option("--tol", ta.tol, "bisection tolerance in sigma")
        ->check(CLI::PositiveNumber)
        ->required();
    threshold->add_option("--grid-step", ta.grid_step, "LLR grid step")->check(CLI::PositiveNumber);
    threshold->add_option("--llr-max", ta.llr_max, "LLR saturation")->check(CLI::PositiveNumber);
    threshold->add_option("--target-error", ta.target_error, "convergence target");
    threshold->add_option("--max-iters", ta.max_iters, "DE iteration cap");
    threshold->add_option("--bracket-lo", ta.bracket_lo, "initial sigma bracket low end");
    threshold->add_option("--bracket-hi", ta.bracket_hi, "initial sigma bracket high end");
    threshold->add_option("--out", ta.out, "output CSV path");

    std::string storage_in;
    auto* storage = app.add_subcommand("storage", "matrix storage cost report");
    storage->add_option("--in", storage_in, "matrix file (shift or alist)")->required();

    try {
        app.parse(argc, argv);
        if (construct->parsed()) return run_construct(ca, args_text);
        if (analyze->parsed()) return run_analyze(aa);
        if (simulate->parsed()) return run_simulate(sa, args_text);
        if (threshold->parsed()) {
            if (!ta.uncoupled && ta.length == "0")
                throw CLI::ValidationError("-L", "coupling length required unless --uncoupled");
            return run_threshold(ta, args_text);
        }
        if (storage->parsed()) return run_storage(storage_in);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    } catch (const scldpc::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return kExitInternal;
    }
}
