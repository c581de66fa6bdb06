#include <cstdint>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cyclicpoly/cyclic.hpp"
#include "cyclicpoly/exactcomb.hpp"
#include "cyclicpoly/oracle.hpp"
#include "cyclicpoly/shape.hpp"
#include "cyclicpoly/sweep.hpp"

namespace py = pybind11;
using namespace cyclicpoly;

namespace {

// Counts cross the boundary as arbitrary-precision python ints, via decimal
// strings so no width is ever silently truncated.
py::int_ to_py(const Count& c) {
    return py::int_(py::str(c.str()));
}

Count to_count(const py::int_& x) {
    return Count(py::str(x).cast<std::string>());
}

py::list to_py_list(const std::vector<Count>& xs) {
    py::list out;
    for (const Count& x : xs) {
        out.append(to_py(x));
    }
    return out;
}

std::vector<Count> to_counts(const py::sequence& xs) {
    std::vector<Count> out;
    out.reserve(xs.size());
    for (py::handle x : xs) {
        out.push_back(to_count(py::int_(py::reinterpret_borrow<py::object>(x))));
    }
    return out;
}

py::dict shape_dict(const ShapeReport& report) {
    py::dict out;
    out["dips"] = report.dips;
    out["log_concave"] = report.log_concave;
    out["unimodal"] = report.unimodal;
    out["peak_start"] = report.peak_start ? py::object(py::int_(*report.peak_start))
                                          : py::object(py::none());
    out["peak_end"] =
        report.peak_end ? py::object(py::int_(*report.peak_end)) : py::object(py::none());
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact f-vectors of cyclic polytopes C(v,d), their generalized Pascal "
              "triangle, a Gale-evenness face-counting oracle, and log-concavity "
              "checks. All values are exact arbitrary-precision integers.";

    m.def(
        "binom", [](std::int64_t n, std::int64_t k) { return to_py(binom(n, k)); },
        py::arg("n"), py::arg("k"), "Binomial coefficient C(n, k); 0 outside 0 <= k <= n.");

    m.def(
        "pascal_row", [](std::int64_t n) { return to_py_list(pascal_row(n)); }, py::arg("n"),
        "Classical Pascal row (C(n,0), ..., C(n,n)).");

    m.def(
        "h_vector",
        [](std::int64_t v, std::int64_t d) { return to_py_list(h_vector({v, d}).entries); },
        py::arg("v"), py::arg("d"), "h-vector h_0..h_d of C(v, d).");

    m.def(
        "f_vector",
        [](std::int64_t v, std::int64_t d, const std::string& route, std::int64_t cap) {
            const PolytopeParams p{v, d};
            if (route == "direct") {
                return to_py_list(f_vector_direct(p).entries());
            }
            if (route == "triangle") {
                return to_py_list(f_vector_triangle_streaming(p).entries());
            }
            if (route == "oracle") {
                return to_py_list(oracle_f_vector(p, cap).entries());
            }
            throw std::invalid_argument("unknown route: " + route);
        },
        py::arg("v"), py::arg("d"), py::arg("route") = "direct",
        py::arg("cap") = kDefaultOracleCap,
        "Extended f-sequence f_-1, f_0, ..., f_{d-1}, 1 of C(v, d). Routes: direct "
        "(binomial transform), triangle (Pascal-type recursion), oracle (facet "
        "enumeration, capped).");

    m.def(
        "f_entry",
        [](std::int64_t v, std::int64_t d, std::int64_t j) {
            return to_py(f_entry_direct({v, d}, j));
        },
        py::arg("v"), py::arg("d"), py::arg("j"), "f_j of C(v, d), for j in [-1, d-1].");

    m.def(
        "triangle_rows",
        [](std::int64_t v, std::int64_t d) {
            const FanTriangle tri = build_triangle({v, d});
            py::list rows;
            for (std::int64_t k = 0; k <= tri.dim(); ++k) {
                rows.append(to_py_list(tri.row(k)));
            }
            return rows;
        },
        py::arg("v"), py::arg("d"),
        "All rows P(0)..P(d) of the generalized Pascal triangle; row k lists the "
        "entries at logical indices -1..k.");

    m.def(
        "triangle_entry",
        [](std::int64_t v, std::int64_t d, std::int64_t k, std::int64_t j) {
            return to_py(triangle_entry_direct({v, d}, k, j));
        },
        py::arg("v"), py::arg("d"), py::arg("k"), py::arg("j"),
        "Triangle entry evaluated directly from its defining sum.");

    m.def(
        "find_dips", [](const py::sequence& s) { return find_dips(PositiveSequence(to_counts(s))); },
        py::arg("seq"),
        "Logical indices j (first entry sits at -1) with seq[j]^2 < seq[j-1]*seq[j+1].");

    m.def(
        "is_log_concave",
        [](const py::sequence& s) { return is_log_concave(PositiveSequence(to_counts(s))); },
        py::arg("seq"));

    m.def(
        "is_unimodal",
        [](const py::sequence& s) -> py::tuple {
            const Unimodality u = is_unimodal(PositiveSequence(to_counts(s)));
            if (!u.unimodal) {
                return py::make_tuple(false, py::none(), py::none());
            }
            return py::make_tuple(true, py::int_(u.peak_start), py::int_(u.peak_end));
        },
        py::arg("seq"),
        "(unimodal, peak_start, peak_end); peak bounds are logical indices of the "
        "maximal plateau, None when not unimodal.");

    m.def(
        "analyze",
        [](const py::sequence& s) { return shape_dict(analyze_shape(PositiveSequence(to_counts(s)))); },
        py::arg("seq"), "Dips, log-concavity, unimodality and peak of a positive sequence.");

    m.def(
        "analyze_params",
        [](std::int64_t v, std::int64_t d) {
            const ExtendedFSequence f = f_vector_triangle_streaming({v, d});
            return shape_dict(analyze_shape(PositiveSequence(f.entries())));
        },
        py::arg("v"), py::arg("d"), "Shape report for the extended f-sequence of C(v, d).");

    m.def(
        "pascal_extend",
        [](const py::sequence& s, const py::int_& seed) {
            return to_py_list(pascal_extend(PositiveSequence(to_counts(s)), to_count(seed)).entries());
        },
        py::arg("seq"), py::arg("seed"),
        "One triangle step: keep the leading 1, add adjacent pairs, append seed.");

    m.def(
        "lemma_check",
        [](const py::sequence& s, const py::int_& seed) {
            return lemma_check(PositiveSequence(to_counts(s)), to_count(seed));
        },
        py::arg("seq"), py::arg("seed"),
        "Whether the Pascal extension of a log-concave sequence with leading 1 "
        "stays log-concave, for seed <= last entry.");

    m.def(
        "audit_dip_propagation",
        [](std::int64_t v, std::int64_t d) {
            const DipAudit audit = audit_dip_propagation({v, d});
            py::dict out;
            out["row_dips"] = audit.row_dips;
            out["prefix_rows_dip_free"] = audit.prefix_rows_dip_free;
            out["propagation_ok"] = audit.propagation_ok;
            out["seeds_bounded"] = audit.seeds_bounded;
            out["final_row_dip_free"] = audit.final_row_dip_free;
            out["pass"] = audit.pass;
            return out;
        },
        py::arg("v"), py::arg("d"),
        "Row-by-row dip audit of the triangle of C(v, d).");

    m.def(
        "is_gale_facet",
        [](std::int64_t v, std::int64_t d, const std::vector<std::int64_t>& s) {
            return is_gale_facet({v, d}, s);
        },
        py::arg("v"), py::arg("d"), py::arg("vertices"),
        "Gale's evenness condition for a d-subset of {1..v}.");

    m.def(
        "enumerate_facets",
        [](std::int64_t v, std::int64_t d, std::int64_t cap) {
            return enumerate_facets({v, d}, cap).facets;
        },
        py::arg("v"), py::arg("d"), py::arg("cap") = kDefaultOracleCap,
        "All facets of C(v, d) by Gale's evenness condition, lexicographic.");

    m.def(
        "sweep",
        [](std::int64_t d_min, std::int64_t d_max, std::int64_t v_min, std::int64_t v_max,
           unsigned jobs) {
            const SweepReport report = sweep_verify(d_min, d_max, v_min, v_max,
                                                    kDefaultChecks, jobs);
            py::list failures;
            for (const SweepFailure& f : report.failures) {
                py::dict item;
                item["v"] = f.v;
                item["d"] = f.d;
                item["check"] = f.check;
                item["details"] = f.details;
                failures.append(item);
            }
            py::dict out;
            out["checked"] = report.checked;
            out["failures"] = failures;
            out["elapsed_ms"] = report.elapsed.count();
            out["pass"] = report.pass();
            return out;
        },
        py::arg("d_min"), py::arg("d_max"), py::arg("v_min"), py::arg("v_max"),
        py::arg("jobs") = 1,
        "Verify log-concavity, the Euler relation and sampled route equivalence "
        "over every valid (v, d) in the window.");

    m.attr("DEFAULT_ORACLE_CAP") = kDefaultOracleCap;
    m.attr("__version__") = "1.0.0";
}
