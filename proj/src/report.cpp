#include "symrect/report.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "symrect/metrics.hpp"

namespace symrect {

using nlohmann::json;

json to_json(const PartitionReport &r) {
    json j;
    j["schema"] = kReportSchema;
    j["instance"] = r.instance;
    j["algorithm"] = r.algorithm;
    j["ordering"] = r.ordering;
    j["p"] = r.p;
    j["q"] = r.q;
    j["symmetric"] = r.symmetric;
    j["col_cuts"] = r.col_cuts;
    j["row_cuts"] = r.row_cuts;
    j["lambda"] = r.lambda;
    j["max_load"] = r.max_load;
    j["avg_load"] = r.avg_load;
    j["tile_loads"] = r.tile_loads;
    if (r.lambda_row_symmetric || r.lambda_col_symmetric) {
        auto &s = j["lambda_symmetric"];
        if (r.lambda_row_symmetric)
            s["row_cuts"] = *r.lambda_row_symmetric;
        if (r.lambda_col_symmetric)
            s["col_cuts"] = *r.lambda_col_symmetric;
    }
    if (r.max_load_bound)
        j["max_load_bound"] = *r.max_load_bound;
    if (r.bound_satisfied)
        j["bound_satisfied"] = *r.bound_satisfied;
    j["converged"] = r.converged;
    j["params"] = {{"tau", r.tau}, {"epsilon", r.epsilon}};
    j["input"] = {{"source", r.input.source}, {"n", r.input.n}, {"nnz", r.input.nnz}, {"hash", r.input.hash}};
    j["timing"] = {{"wall_ms", r.wall_ms}};
    return j;
}

PartitionReport report_from_json(const json &j) {
    if (!j.is_object())
        throw ParseError("report must be a JSON object", 0);
    if (j.value("schema", 0) != kReportSchema)
        throw ParseError("unsupported report schema " + j.value("schema", json(nullptr)).dump(), 0);
    try {
        PartitionReport r;
        r.instance = j.at("instance").get<std::string>();
        r.algorithm = j.at("algorithm").get<std::string>();
        r.ordering = j.at("ordering").get<std::string>();
        r.p = j.at("p").get<vid_t>();
        r.q = j.at("q").get<vid_t>();
        r.symmetric = j.at("symmetric").get<bool>();
        r.col_cuts = j.at("col_cuts").get<std::vector<vid_t>>();
        r.row_cuts = j.at("row_cuts").get<std::vector<vid_t>>();
        r.lambda = j.at("lambda").get<double>();
        r.max_load = j.at("max_load").get<nnz_t>();
        r.avg_load = j.at("avg_load").get<double>();
        r.tile_loads = j.at("tile_loads").get<std::vector<std::vector<nnz_t>>>();
        if (auto it = j.find("lambda_symmetric"); it != j.end()) {
            if (it->contains("row_cuts"))
                r.lambda_row_symmetric = it->at("row_cuts").get<double>();
            if (it->contains("col_cuts"))
                r.lambda_col_symmetric = it->at("col_cuts").get<double>();
        }
        if (j.contains("max_load_bound"))
            r.max_load_bound = j.at("max_load_bound").get<nnz_t>();
        if (j.contains("bound_satisfied"))
            r.bound_satisfied = j.at("bound_satisfied").get<bool>();
        r.converged = j.at("converged").get<bool>();
        r.tau = j.at("params").at("tau").get<int>();
        r.epsilon = j.at("params").at("epsilon").get<double>();
        const auto &in = j.at("input");
        r.input = {in.at("source").get<std::string>(), in.at("n").get<vid_t>(), in.at("nnz").get<nnz_t>(),
                   in.at("hash").get<std::string>()};
        if (j.contains("timing"))
            r.wall_ms = j.at("timing").value("wall_ms", 0.0);
        return r;
    } catch (const json::exception &e) {
        throw ParseError(std::string("malformed report: ") + e.what(), 0);
    }
}

namespace {

template <class T>
std::string joined(const std::vector<T> &v) {
    std::ostringstream s;
    for (std::size_t i = 0; i < v.size(); i++)
        s << (i ? " " : "") << v[i];
    return s.str();
}

} // namespace

void write_report_csv(std::ostream &out, const PartitionReport &r) {
    out << "instance,algorithm,ordering,p,q,lambda,max_load,avg_load,converged,wall_ms,col_cuts,row_cuts\n";
    out << r.instance << ',' << r.algorithm << ',' << r.ordering << ',' << r.p << ',' << r.q << ',' << r.lambda
        << ',' << r.max_load << ',' << r.avg_load << ',' << (r.converged ? 1 : 0) << ',' << r.wall_ms << ','
        << joined(r.col_cuts) << ',' << joined(r.row_cuts) << '\n';
}

std::vector<std::vector<double>> density_percentages(const PartitionReport &r) {
    std::vector<std::vector<double>> grid;
    grid.reserve(r.tile_loads.size());
    const auto nnz = r.input.nnz;
    for (const auto &row : r.tile_loads) {
        auto &g = grid.emplace_back();
        g.reserve(row.size());
        for (auto load : row)
            g.push_back(nnz > 0 ? 100.0 * static_cast<double>(load) / static_cast<double>(nnz) : 0.0);
    }
    return grid;
}

void write_density_csv(std::ostream &out, const std::vector<std::vector<double>> &grid) {
    out << "row_band";
    const auto cols = grid.empty() ? 0 : grid.front().size();
    for (std::size_t j = 0; j < cols; j++)
        out << ',' << j;
    out << '\n';
    char buf[32];
    for (std::size_t i = 0; i < grid.size(); i++) {
        out << i;
        for (auto v : grid[i]) {
            std::snprintf(buf, sizeof buf, "%.6f", v);
            out << ',' << buf;
        }
        out << '\n';
    }
}

void write_density_ascii(std::ostream &out, const std::vector<std::vector<double>> &grid) {
    static constexpr char shades[] = " .:-=+*#%@";
    double peak = 0;
    for (const auto &row : grid)
        for (auto v : row)
            peak = std::max(peak, v);
    char buf[32];
    const auto cols = grid.empty() ? 0 : grid.front().size();
    out << "      ";
    for (std::size_t j = 0; j < cols; j++) {
        std::snprintf(buf, sizeof buf, " %8zu", j);
        out << buf;
    }
    out << '\n';
    for (std::size_t i = 0; i < grid.size(); i++) {
        std::snprintf(buf, sizeof buf, "%5zu ", i);
        out << buf;
        for (auto v : grid[i]) {
            const auto level = peak > 0 ? static_cast<int>(v / peak * 9.0 + 0.5) : 0;
            std::snprintf(buf, sizeof buf, " %6.2f%%%c", v, shades[std::clamp(level, 0, 9)]);
            out << buf;
        }
        out << '\n';
    }
}

PerformanceProfile performance_profile(std::span<const ProfileSample> samples, std::vector<double> x_grid) {
    std::map<std::string, std::map<std::string, double>> by_algo;
    std::set<std::string> instances;
    for (const auto &s : samples) {
        if (!by_algo[s.algorithm].emplace(s.instance, s.value).second)
            throw Error("duplicate value for algorithm '" + s.algorithm + "' on instance '" + s.instance + "'");
        instances.insert(s.instance);
    }
    std::string missing;
    for (const auto &[algo, values] : by_algo)
        for (const auto &inst : instances)
            if (!values.count(inst))
                missing += (missing.empty() ? "" : "; ") + algo + " lacks " + inst;
    if (!missing.empty())
        throw Error("instance sets differ: " + missing);

    std::map<std::string, double> best;
    for (const auto &inst : instances) {
        double b = 0;
        bool first = true;
        for (const auto &[algo, values] : by_algo) {
            const auto v = values.at(inst);
            if (first || v < b)
                b = v;
            first = false;
        }
        best[inst] = b;
    }

    PerformanceProfile prof;
    std::sort(x_grid.begin(), x_grid.end());
    prof.x = std::move(x_grid);
    prof.instances = instances.size();
    for (const auto &[algo, values] : by_algo) {
        prof.algorithms.push_back(algo);
        auto &frac = prof.fraction.emplace_back();
        for (auto x : prof.x) {
            std::size_t within = 0;
            for (const auto &[inst, v] : values) {
                const auto b = best.at(inst);
                const bool ok = b > 0 ? v <= x * b * (1 + 1e-12) : v <= b;
                within += ok ? 1 : 0;
            }
            frac.push_back(instances.empty() ? 0.0 : static_cast<double>(within) / static_cast<double>(instances.size()));
        }
    }
    return prof;
}

void write_profile_csv(std::ostream &out, const PerformanceProfile &profile) {
    out << "algorithm,x,fraction\n";
    for (std::size_t a = 0; a < profile.algorithms.size(); a++)
        for (std::size_t k = 0; k < profile.x.size(); k++)
            out << profile.algorithms[a] << ',' << profile.x[k] << ',' << profile.fraction[a][k] << '\n';
}

namespace {

std::vector<std::string> split_csv(const std::string &line) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream s(line);
    while (std::getline(s, cur, ','))
        out.push_back(cur);
    if (!line.empty() && line.back() == ',')
        out.emplace_back();
    for (auto &f : out) {
        while (!f.empty() && (f.back() == '\r' || f.back() == ' '))
            f.pop_back();
        while (!f.empty() && f.front() == ' ')
            f.erase(f.begin());
    }
    return out;
}

} // namespace

std::vector<ProfileSample> read_profile_table(std::istream &in) {
    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line))
        throw ParseError("empty profile table", 0);
    line_no++;
    const auto header = split_csv(line);
    auto column = [&](std::initializer_list<const char *> names) -> std::size_t {
        for (const auto *name : names)
            if (auto it = std::find(header.begin(), header.end(), name); it != header.end())
                return static_cast<std::size_t>(it - header.begin());
        throw ParseError(std::string("profile table lacks a '") + *names.begin() + "' column", 1);
    };
    const auto ci = column({"instance"});
    const auto ca = column({"algorithm"});
    const auto cv = column({"value", "lambda"});
    std::vector<ProfileSample> out;
    while (std::getline(in, line)) {
        line_no++;
        if (line.empty() || line == "\r")
            continue;
        const auto f = split_csv(line);
        if (f.size() <= std::max({ci, ca, cv}))
            throw ParseError("too few fields", line_no);
        try {
            std::size_t used = 0;
            const auto v = std::stod(f[cv], &used);
            if (used != f[cv].size())
                throw std::invalid_argument("trailing characters");
            out.push_back({f[ci], f[ca], v});
        } catch (const std::exception &) {
            throw ParseError("bad value '" + f[cv] + "'", line_no);
        }
    }
    return out;
}

} // namespace symrect
