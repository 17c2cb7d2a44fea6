#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "symrect/baselines.hpp"
#include "symrect/ccp.hpp"
#include "symrect/io.hpp"
#include "symrect/metrics.hpp"
#include "symrect/mincuts.hpp"
#include "symrect/ordering.hpp"
#include "symrect/pipeline.hpp"
#include "symrect/prefix.hpp"
#include "symrect/report.hpp"
#include "symrect/sym_partitioners.hpp"

namespace py = pybind11;
using namespace symrect;

namespace {

SparseMatrix matrix_from_edges(vid_t n, std::vector<std::pair<vid_t, vid_t>> edges, bool symmetrize) {
    if (symmetrize) {
        const auto k = edges.size();
        for (std::size_t i = 0; i < k; i++)
            edges.emplace_back(edges[i].second, edges[i].first);
    }
    return SparseMatrix::from_entries(n, std::move(edges));
}

PartitionVector cuts_arg(const std::vector<vid_t> &c) { return PartitionVector(c); }

MliConfig config(int tau, double epsilon) {
    MliConfig c{tau, epsilon};
    c.validate();
    return c;
}

py::dict mnc_dict(const MncResult &r) {
    py::dict d;
    d["cuts"] = r.cuts.vector();
    d["p"] = r.p;
    d["max_tile_load"] = r.max_tile_load;
    d["bound_satisfied"] = r.bound_satisfied;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Symmetric rectilinear partitioning of sparse binary matrices.";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
    py::register_exception<InfeasibleError>(m, "InfeasibleError", PyExc_ValueError);

    py::class_<SparseMatrix>(m, "SparseMatrix")
        .def(py::init(&matrix_from_edges), py::arg("n"), py::arg("edges"), py::arg("symmetrize") = false)
        .def_property_readonly("n", &SparseMatrix::n)
        .def_property_readonly("nnz", &SparseMatrix::nnz)
        .def("entries", &SparseMatrix::entries)
        .def("degree", &SparseMatrix::degree)
        .def("contains", &SparseMatrix::contains)
        .def("transpose", &SparseMatrix::transpose)
        .def("is_symmetric", &SparseMatrix::is_symmetric)
        .def("__eq__", [](const SparseMatrix &a, const SparseMatrix &b) { return a == b; })
        .def("__repr__", [](const SparseMatrix &a) {
            return "<SparseMatrix n=" + std::to_string(a.n()) + " nnz=" + std::to_string(a.nnz()) + ">";
        });

    m.def(
        "load_matrix",
        [](const std::string &text, const std::string &format, bool symmetrize, bool drop_self_loops,
           bool compact_ids) {
            return load_matrix(std::string_view(text), format_from_name(format),
                               LoadOptions{symmetrize, drop_self_loops, compact_ids});
        },
        py::arg("text"), py::arg("format") = "mtx", py::arg("symmetrize") = true, py::arg("drop_self_loops") = false,
        py::arg("compact_ids") = false);
    m.def(
        "load_matrix_file",
        [](const std::string &path, const std::string &format, bool symmetrize, bool drop_self_loops,
           bool compact_ids) {
            return load_matrix_file(path, format_from_name(format),
                                    LoadOptions{symmetrize, drop_self_loops, compact_ids});
        },
        py::arg("path"), py::arg("format") = "mtx", py::arg("symmetrize") = true, py::arg("drop_self_loops") = false,
        py::arg("compact_ids") = false);
    m.def(
        "dump_matrix",
        [](const SparseMatrix &A, const std::string &format) {
            std::ostringstream s;
            write_matrix(s, A, format_from_name(format));
            return s.str();
        },
        py::arg("A"), py::arg("format") = "mtx");

    m.def(
        "ordering",
        [](const SparseMatrix &A, const std::string &kind) {
            const auto p = compute_ordering(A, ordering_from_name(kind));
            return std::vector<vid_t>(p.perm().begin(), p.perm().end());
        },
        py::arg("A"), py::arg("kind"), "perm[old] = new");
    m.def(
        "reorder",
        [](const SparseMatrix &A, const std::string &kind) {
            return apply_ordering(A, compute_ordering(A, ordering_from_name(kind)));
        },
        py::arg("A"), py::arg("kind"));
    m.def("bandwidth", &bandwidth, py::arg("A"));

    m.def(
        "count_rect",
        [](const SparseMatrix &A, vid_t r_lo, vid_t r_hi, vid_t c_lo, vid_t c_hi) {
            return PrefixSum2D(A).count(r_lo, r_hi, c_lo, c_hi);
        },
        py::arg("A"), py::arg("r_lo"), py::arg("r_hi"), py::arg("c_lo"), py::arg("c_hi"));

    m.def(
        "optimal_1d_partition",
        [](const std::vector<nnz_t> &weights, vid_t p) {
            const auto prefix = PrefixSum1D::from_weights(weights);
            auto cuts = optimal_1d_partition(prefix, p);
            return py::make_tuple(cuts.vector(), bottleneck(prefix, cuts.cuts()));
        },
        py::arg("weights"), py::arg("p"), "(cuts, bottleneck)");

    m.def(
        "tile_loads",
        [](const SparseMatrix &A, const std::vector<vid_t> &col_cuts, const std::vector<vid_t> &row_cuts) {
            const auto t = tile_loads(A, cuts_arg(col_cuts), cuts_arg(row_cuts));
            std::vector<std::vector<nnz_t>> g(static_cast<std::size_t>(t.row_bands));
            for (vid_t i = 0; i < t.row_bands; i++)
                for (vid_t j = 0; j < t.col_bands; j++)
                    g[i].push_back(t.at(i, j));
            return g;
        },
        py::arg("A"), py::arg("col_cuts"), py::arg("row_cuts"));
    m.def(
        "load_imbalance",
        [](const SparseMatrix &A, const std::vector<vid_t> &col_cuts, std::optional<std::vector<vid_t>> row_cuts) {
            return load_imbalance(A, cuts_arg(col_cuts), cuts_arg(row_cuts ? *row_cuts : col_cuts));
        },
        py::arg("A"), py::arg("col_cuts"), py::arg("row_cuts") = py::none());

    m.def(
        "uni", [](vid_t n, vid_t p) { return uni(n, p).vector(); }, py::arg("n"), py::arg("p"));
    m.def(
        "nic",
        [](const SparseMatrix &A, vid_t p, int tau, double epsilon) {
            const auto r = nic(A, p, p, config(tau, epsilon));
            return py::make_tuple(r.col_cuts.vector(), r.row_cuts.vector());
        },
        py::arg("A"), py::arg("p"), py::arg("tau") = 20, py::arg("epsilon") = 0.0001, "(col_cuts, row_cuts)");
    m.def(
        "pbd", [](const SparseMatrix &A, vid_t p, int tau, double epsilon) { return pbd(A, p, config(tau, epsilon)).vector(); },
        py::arg("A"), py::arg("p"), py::arg("tau") = 20, py::arg("epsilon") = 0.0001);
    m.def(
        "pbi", [](const SparseMatrix &A, vid_t p, int tau, double epsilon) { return pbi(A, p, config(tau, epsilon)).vector(); },
        py::arg("A"), py::arg("p"), py::arg("tau") = 20, py::arg("epsilon") = 0.0001);
    m.def(
        "ptc", [](const SparseMatrix &A, vid_t p) { return ptc(A, p).vector(); }, py::arg("A"), py::arg("p"));
    m.def(
        "probe", [](const SparseMatrix &A, vid_t p, double ell) { return probe(PrefixSum2D(A), p, ell); },
        py::arg("A"), py::arg("p"), py::arg("ell"));
    m.def(
        "brute_force_symmetric",
        [](const SparseMatrix &A, vid_t p) {
            const auto r = brute_force_symmetric(A, p);
            return py::make_tuple(r.cuts.vector(), r.lambda);
        },
        py::arg("A"), py::arg("p"), "(cuts, lambda)");

    m.def(
        "btl",
        [](const SparseMatrix &A, nnz_t z, const std::string &inner, int tau, double epsilon) {
            if (inner != "pbd" && inner != "pbi")
                throw std::invalid_argument("inner must be 'pbd' or 'pbi'");
            return mnc_dict(btl(A, z, inner == "pbd" ? BtlInner::pbd : BtlInner::pbi, config(tau, epsilon)));
        },
        py::arg("A"), py::arg("z"), py::arg("inner") = "pbd", py::arg("tau") = 20, py::arg("epsilon") = 0.0001);
    m.def(
        "ptl", [](const SparseMatrix &A, nnz_t z) { return mnc_dict(ptl(A, z)); }, py::arg("A"), py::arg("z"));

    m.def(
        "run",
        [](const SparseMatrix &A, const std::string &algorithm, vid_t parts, nnz_t max_load, const std::string &order,
           int tau, double epsilon) {
            RunOptions o;
            o.algorithm = algorithm_from_name(algorithm);
            o.parts = parts;
            o.max_load = max_load;
            o.config = config(tau, epsilon);
            return to_json(run_pipeline(A, ordering_from_name(order), o)).dump();
        },
        py::arg("A"), py::arg("algorithm"), py::arg("parts") = 1, py::arg("max_load") = 0, py::arg("order") = "nat",
        py::arg("tau") = 20, py::arg("epsilon") = 0.0001, "JSON report string");
}
