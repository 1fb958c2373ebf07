// Command-line front end: interval signals in, exact DFT bounds out.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "idft/io.hpp"
#include "idft/verification.hpp"

namespace {

constexpr int exit_input_error = 2;
constexpr int exit_verification_failure = 3;

struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::int64_t> parse_harmonics(const std::string& selection, std::size_t n_samples) {
    if (selection == "all") return idft::all_harmonics(n_samples);
    if (selection == "half") return idft::half_harmonics(n_samples);
    std::vector<std::int64_t> hs;
    std::stringstream ss(selection);
    std::string token;
    while (std::getline(ss, token, ',')) {
        std::int64_t h = 0;
        try {
            h = std::stoll(token);
        } catch (const std::exception&) {
            throw input_error("bad harmonic '" + token + "'");
        }
        if (h < 0 || h >= static_cast<std::int64_t>(n_samples))
            throw input_error("harmonic " + std::to_string(h) + " out of [0, " +
                              std::to_string(n_samples) + ")");
        hs.push_back(h);
    }
    if (hs.empty()) throw input_error("no harmonics selected");
    return hs;
}

idft::zonogon_mode parse_mode(const std::string& mode) {
    return mode == "chain" ? idft::zonogon_mode::chain : idft::zonogon_mode::fast;
}

/// Writes to --out when given, stdout otherwise.
class output_sink {
public:
    explicit output_sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw input_error("cannot open output file '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact bounds on the discrete Fourier transform of interval signals"};
    app.require_subcommand(1);

    std::string input_path, out_path, harmonics = "all", mode = "fast", format = "table";
    unsigned threads = 1;
    bool with_vertices = false, with_configs = false;
    long samples = 100000;
    std::uint64_t seed = 1;
    std::int64_t single_harmonic = 0;

    auto* transform = app.add_subcommand("transform", "bounds per harmonic");
    transform->add_option("input", input_path, "signal file, rows 'lo,hi' or 'v'")->required();
    transform->add_option("--harmonics", harmonics, "all | half | comma list");
    transform->add_option("--mode", mode)->check(CLI::IsMember({"chain", "fast"}));
    transform->add_option("--format", format)->check(CLI::IsMember({"table", "json", "csv"}));
    transform->add_option("--out", out_path, "output path (default stdout)");
    transform->add_flag("--vertices", with_vertices, "include united-set vertices");
    transform->add_flag("--configs", with_configs, "include critical endpoint configurations");
    transform->add_option("--threads", threads)->check(CLI::PositiveNumber);

    auto* polygon = app.add_subcommand("polygon", "united-set vertex dump for one harmonic");
    polygon->add_option("input", input_path)->required();
    polygon->add_option("--harmonic,-H", single_harmonic, "harmonic index")->required();
    polygon->add_option("--mode", mode)->check(CLI::IsMember({"chain", "fast"}));
    polygon->add_option("--out", out_path);

    auto* verify = app.add_subcommand("verify", "run independent oracles against the polygons");
    verify->add_option("input", input_path)->required();
    verify->add_option("--harmonics", harmonics, "all | half | comma list");
    verify->add_option("--mode", mode)->check(CLI::IsMember({"chain", "fast"}));
    verify->add_option("--samples", samples)->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", seed);
    verify->add_option("--threads", threads)->check(CLI::PositiveNumber);
    verify->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_input_error;
    }

    try {
        const idft::interval_vector signal = idft::io::read_signal_file(input_path);
        output_sink sink(out_path);
        std::ostream& os = sink.stream();

        if (*transform) {
            const auto hs = parse_harmonics(harmonics, signal.size());
            const auto results = idft::spectrum(signal, hs, parse_mode(mode), threads);
            idft::io::result_options opts{with_vertices, with_configs};
            idft::io::output_format fmt = format == "json"  ? idft::io::output_format::json
                                          : format == "csv" ? idft::io::output_format::csv
                                                            : idft::io::output_format::table;
            idft::io::write_results(os, results, signal.size(), fmt, opts);
            return 0;
        }

        if (*polygon) {
            if (single_harmonic < 0 || single_harmonic >= static_cast<std::int64_t>(signal.size()))
                throw input_error("harmonic " + std::to_string(single_harmonic) + " out of [0, " +
                                  std::to_string(signal.size()) + ")");
            idft::io::write_polygon_csv(os, idft::united_set(signal, single_harmonic,
                                                             parse_mode(mode)));
            return 0;
        }

        // verify
        const auto hs = parse_harmonics(harmonics, signal.size());
        if (signal.size() > idft::corner_enumeration_limit)
            os << "note: corner oracle skipped for N=" << signal.size() << " (enumeration guard is "
               << idft::corner_enumeration_limit << ")\n";
        std::vector<idft::oracle_report> reports(hs.size());
        const unsigned workers = std::max(1u, std::min<unsigned>(threads, hs.size()));
        auto run_range = [&](unsigned tid) {
            for (std::size_t i = tid; i < hs.size(); i += workers) {
                idft::verify_options options;
                options.samples = samples;
                options.seed = seed + static_cast<std::uint64_t>(hs[i]);
                options.mode = parse_mode(mode);
                reports[i] = idft::verify_harmonic(signal, hs[i], options);
            }
        };
        if (workers == 1) {
            run_range(0);
        } else {
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < workers; ++t) pool.emplace_back(run_range, t);
            for (std::thread& th : pool) th.join();
        }
        bool all_pass = true;
        for (const idft::oracle_report& r : reports) {
            os << "h=" << r.harmonic << " box_deviation=" << idft::io::format_double(r.box_deviation);
            if (r.corner_checked)
                os << " hausdorff=" << idft::io::format_double(r.hausdorff_distance);
            os << " samples_outside=" << r.samples_outside << "/" << samples
               << " area_ratio=" << idft::io::format_double(r.area_ratio)
               << " verdict=" << (r.pass ? "pass" : "FAIL") << "\n";
            all_pass = all_pass && r.pass;
        }
        os << (all_pass ? "verify: all harmonics pass\n" : "verify: FAILURES detected\n");
        return all_pass ? 0 : exit_verification_failure;
    } catch (const idft::io::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    }
}
