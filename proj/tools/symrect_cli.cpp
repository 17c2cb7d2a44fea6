#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symrect/io.hpp"
#include "symrect/ordering.hpp"
#include "symrect/pipeline.hpp"
#include "symrect/report.hpp"

namespace {

using namespace symrect;

constexpr int kExitError = 1;
constexpr int kExitParse = 2;
constexpr int kExitInfeasible = 3;

struct InputArgs {
    std::string input;
    std::string format = "mtx";
    std::string order = "nat";
    bool symmetrize = true;
    bool drop_self_loops = false;
    bool compact_ids = false;
    std::string instance;
};

struct RunArgs {
    std::string algo;
    vid_t parts = 0;
    nnz_t max_load = 0;
    double max_load_frac = 0;
    int tau = 20;
    double epsilon = 0.0001;
};

struct OutputArgs {
    std::string output = "json";
    std::string out;
    bool no_timing = false;
};

void add_input_options(CLI::App *cmd, InputArgs &in, bool required) {
    cmd->add_option("--input", in.input, "matrix file, '-' for stdin")->required(required);
    cmd->add_option("--format", in.format, "input format")->check(CLI::IsMember({"mtx", "edges"}));
    cmd->add_option("--order", in.order, "vertex ordering")->check(CLI::IsMember({"nat", "deg", "rcm"}));
    cmd->add_flag("--symmetrize,!--no-symmetrize", in.symmetrize, "store (v,u) for every (u,v) (default on)");
    cmd->add_flag("--drop-self-loops", in.drop_self_loops, "discard diagonal entries");
    cmd->add_flag("--compact-ids", in.compact_ids, "edge lists: relabel distinct ids to 0..k-1");
    cmd->add_option("--instance", in.instance, "instance name in reports (default: input file stem)");
}

void add_config_options(CLI::App *cmd, RunArgs &run) {
    cmd->add_option("--tau", run.tau, "max refinement iterations");
    cmd->add_option("--epsilon", run.epsilon, "convergence threshold on the cut vector change");
}

void add_output_options(CLI::App *cmd, OutputArgs &out, bool with_format) {
    if (with_format)
        cmd->add_option("--output", out.output, "report format")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", out.out, "output file (default stdout)");
    cmd->add_flag("--no-timing", out.no_timing, "report wall time as 0 for byte-stable output");
}

struct LoadedInput {
    SparseMatrix A;
    InputDigest digest;
};

LoadedInput load_input(const InputArgs &in) {
    std::string bytes;
    if (in.input == "-") {
        std::ostringstream s;
        s << std::cin.rdbuf();
        bytes = s.str();
    } else {
        bytes = read_file(in.input);
    }
    LoadOptions opts;
    opts.symmetrize = in.symmetrize;
    opts.drop_self_loops = in.drop_self_loops;
    opts.compact_ids = in.compact_ids;
    LoadedInput li{load_matrix(std::string_view(bytes), format_from_name(in.format), opts), {}};
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fnv1a64(bytes)));
    li.digest = {in.input, li.A.n(), li.A.nnz(), hex};
    return li;
}

std::string instance_name(const InputArgs &in) {
    if (!in.instance.empty())
        return in.instance;
    if (in.input == "-")
        return "stdin";
    return std::filesystem::path(in.input).stem().string();
}

RunOptions run_options(const RunArgs &run, const SparseMatrix &A) {
    RunOptions o;
    o.algorithm = algorithm_from_name(run.algo);
    o.config = {run.tau, run.epsilon};
    o.parts = run.parts;
    if (is_mincuts(o.algorithm)) {
        if (run.max_load > 0)
            o.max_load = run.max_load;
        else
            o.max_load = static_cast<nnz_t>(std::floor(run.max_load_frac * static_cast<double>(A.nnz())));
        if (o.max_load < 1)
            throw InfeasibleError("max load resolves to " + std::to_string(o.max_load) + "; it must be >= 1");
    }
    return o;
}

PartitionReport run(const InputArgs &in, const RunArgs &args, const OutputArgs &out) {
    auto li = load_input(in);
    auto r = run_pipeline(li.A, ordering_from_name(in.order), run_options(args, li.A));
    r.instance = instance_name(in);
    r.input = li.digest;
    if (out.no_timing)
        r.wall_ms = 0;
    return r;
}

template <class Fn>
void with_output(const std::string &path, Fn &&fn) {
    if (path.empty() || path == "-") {
        fn(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw Error("cannot write " + path);
    fn(f);
    if (!f)
        throw Error("write failed for " + path);
}

void emit_report(const PartitionReport &r, const OutputArgs &out) {
    with_output(out.out, [&](std::ostream &os) {
        if (out.output == "csv")
            write_report_csv(os, r);
        else
            os << to_json(r).dump(2) << '\n';
    });
}

std::vector<ProfileSample> samples_from_file(const std::string &path) {
    const auto text = read_file(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error &e) {
            throw ParseError(path + ": " + e.what(), 0);
        }
        const auto r = report_from_json(j);
        const auto key = r.ordering.empty() ? r.instance : r.instance + "@" + r.ordering;
        return {{key, r.algorithm, r.lambda}};
    }
    std::istringstream s(text);
    return read_profile_table(s);
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Symmetric rectilinear partitioning of sparse matrices"};
    app.require_subcommand(1);

    InputArgs in;
    RunArgs args;
    OutputArgs out;

    auto *partition = app.add_subcommand("partition", "minimize load imbalance for a given number of parts");
    add_input_options(partition, in, true);
    partition->add_option("--algo", args.algo, "algorithm")
        ->required()
        ->check(CLI::IsMember({"uni", "nic", "pbd", "pbi", "ptc"}));
    partition->add_option("--parts", args.parts, "number of intervals p")->required();
    add_config_options(partition, args);
    add_output_options(partition, out, true);

    auto *mincuts = app.add_subcommand("mincuts", "minimize the number of parts for a tile-load bound");
    add_input_options(mincuts, in, true);
    mincuts->add_option("--algo", args.algo, "algorithm")
        ->required()
        ->check(CLI::IsMember({"btl-pbd", "btl-pbi", "ptl"}));
    auto *z_abs = mincuts->add_option("--max-load", args.max_load, "absolute tile-load bound Z");
    auto *z_frac = mincuts->add_option("--max-load-frac", args.max_load_frac, "Z as a fraction of nnz");
    z_abs->excludes(z_frac);
    z_frac->excludes(z_abs);
    add_config_options(mincuts, args);
    add_output_options(mincuts, out, true);

    std::string report_path;
    bool ascii = false;
    auto *density = app.add_subcommand("density-map", "tile nonzero percentages as CSV and an ASCII table");
    density->add_option("--report", report_path, "JSON report to render instead of running");
    add_input_options(density, in, false);
    density->add_option("--algo", args.algo, "algorithm for an inline run")
        ->check(CLI::IsMember({"uni", "nic", "pbd", "pbi", "ptc", "btl-pbd", "btl-pbi", "ptl"}));
    density->add_option("--parts", args.parts, "number of intervals p");
    density->add_option("--max-load", args.max_load, "absolute tile-load bound Z");
    density->add_option("--max-load-frac", args.max_load_frac, "Z as a fraction of nnz");
    add_config_options(density, args);
    add_output_options(density, out, false);
    density->add_flag("--ascii", ascii, "also print the aligned heat table to stdout");

    std::vector<std::string> profile_inputs;
    std::vector<double> x_grid{1.0, 1.1, 1.25, 1.5, 2.0, 3.0, 5.0};
    auto *profile = app.add_subcommand("perf-profile", "performance profile over per-instance imbalances");
    profile->add_option("inputs", profile_inputs, "JSON reports and/or CSV tables (instance,algorithm,value)")
        ->required()
        ->check(CLI::ExistingFile);
    profile->add_option("--x-grid", x_grid, "factors at which to evaluate the profile")->delimiter(',');
    profile->add_option("--out", out.out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const auto code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    try {
        if (partition->parsed() || mincuts->parsed()) {
            emit_report(run(in, args, out), out);
        } else if (density->parsed()) {
            PartitionReport r;
            if (!report_path.empty()) {
                try {
                    r = report_from_json(nlohmann::json::parse(read_file(report_path)));
                } catch (const nlohmann::json::parse_error &e) {
                    throw ParseError(report_path + ": " + e.what(), 0);
                }
            } else {
                if (in.input.empty() || args.algo.empty())
                    throw CLI::RequiredError("density-map needs --report or --input with --algo");
                r = run(in, args, out);
            }
            const auto grid = density_percentages(r);
            with_output(out.out, [&](std::ostream &os) { write_density_csv(os, grid); });
            if (ascii) {
                if (out.out.empty() || out.out == "-")
                    std::cout << '\n';
                write_density_ascii(std::cout, grid);
            }
        } else if (profile->parsed()) {
            std::vector<ProfileSample> samples;
            for (const auto &path : profile_inputs) {
                auto s = samples_from_file(path);
                samples.insert(samples.end(), s.begin(), s.end());
            }
            const auto prof = performance_profile(samples, x_grid);
            with_output(out.out, [&](std::ostream &os) { write_profile_csv(os, prof); });
        }
    } catch (const CLI::Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const ParseError &e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const DimensionError &e) {
        std::cerr << "dimension error: " << e.what() << '\n';
        return kExitParse;
    } catch (const InfeasibleError &e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const std::invalid_argument &e) {
        std::cerr << "invalid parameter: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return 0;
}
