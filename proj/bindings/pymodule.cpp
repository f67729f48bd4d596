// pymodule.cpp - pybind11 bindings. Python ints map to BigInt losslessly
// (via decimal strings), exact rationals map to fractions.Fraction.
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wptri/correction.hpp"
#include "wptri/ehrhart.hpp"
#include "wptri/hj.hpp"
#include "wptri/selfcheck.hpp"
#include "wptri/unity.hpp"
#include "wptri/weights.hpp"

namespace py = pybind11;

namespace {

py::object to_pyint(const wptri::BigInt& v) {
    return py::reinterpret_steal<py::object>(
        PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

bool from_pyint(py::handle src, wptri::BigInt& out) {
    if (!PyLong_Check(src.ptr())) return false;
    py::str s(src);
    out = wptri::BigInt(std::string(s));
    return true;
}

py::object to_fraction(const wptri::Rational& x) {
    py::object fraction_type = py::module_::import("fractions").attr("Fraction");
    return fraction_type(to_pyint(x.num()), to_pyint(x.den()));
}

} // namespace

namespace pybind11::detail {

template <>
struct type_caster<wptri::BigInt> {
    PYBIND11_TYPE_CASTER(wptri::BigInt, const_name("int"));

    bool load(handle src, bool) { return from_pyint(src, value); }

    static handle cast(const wptri::BigInt& src, return_value_policy, handle) {
        return to_pyint(src).release();
    }
};

template <>
struct type_caster<wptri::Rational> {
    PYBIND11_TYPE_CASTER(wptri::Rational, const_name("Fraction"));

    bool load(handle src, bool) {
        wptri::BigInt n;
        if (from_pyint(src, n)) {
            value = wptri::Rational(n);
            return true;
        }
        // anything Rational-like: int-valued numerator/denominator attrs
        if (py::hasattr(src, "numerator") && py::hasattr(src, "denominator")) {
            wptri::BigInt num, den;
            if (from_pyint(src.attr("numerator"), num) &&
                from_pyint(src.attr("denominator"), den)) {
                value = wptri::Rational(num, den);
                return true;
            }
        }
        return false;
    }

    static handle cast(const wptri::Rational& src, return_value_policy,
                       handle) {
        return to_fraction(src).release();
    }
};

} // namespace pybind11::detail

using namespace wptri;

PYBIND11_MODULE(_wptri, m) {
    m.doc() = "Exact lattice-point counts on weighted rational triangles";

    auto err_base = py::register_exception<Error>(m, "Error");
    py::register_exception<NotCoprimeError>(m, "NotCoprimeError", err_base);
    py::register_exception<InvalidTypeError>(m, "InvalidTypeError", err_base);
    py::register_exception<DimensionError>(m, "DimensionError", err_base);
    py::register_exception<TooLargeError>(m, "TooLargeError", err_base);
    py::register_exception<NumericError>(m, "NumericError", err_base);
    py::register_exception<InternalError>(m, "InternalError", err_base);

    // exact arithmetic primitives
    m.def(
        "gcd_ext",
        [](const BigInt& a, const BigInt& b) {
            GcdExt r = gcd_ext(a, b);
            return py::make_tuple(r.g, r.x, r.y);
        },
        py::arg("a"), py::arg("b"),
        "(g, x, y) with g = gcd(|a|,|b|) and a*x + b*y = g");
    m.def("mod_inverse", &mod_inverse, py::arg("a"), py::arg("m"));
    m.def("canonical_residue", &canonical_residue, py::arg("k"), py::arg("m"),
          "residue of k in [0, m), also for negative k");
    m.def("frac_part", &frac_part, py::arg("x"),
          "fractional part in [0, 1) as an exact Fraction");

    // weight reduction
    py::class_<ReductionData>(m, "ReductionData")
        .def_property_readonly("w01", [](const ReductionData& r) { return r.gcds.w01; })
        .def_property_readonly("w02", [](const ReductionData& r) { return r.gcds.w02; })
        .def_property_readonly("w12", [](const ReductionData& r) { return r.gcds.w12; })
        .def_property_readonly("v",
                               [](const ReductionData& r) {
                                   return py::make_tuple(r.v.w0, r.v.w1, r.v.w2);
                               })
        .def_property_readonly("r",
                               [](const ReductionData& r) {
                                   return py::make_tuple(r.r0, r.r1, r.r2);
                               })
        .def_readonly("e", &ReductionData::e);
    m.def(
        "pairwise_gcds",
        [](const BigInt& w0, const BigInt& w1, const BigInt& w2) {
            PairwiseGcds g = pairwise_gcds(WeightVector(w0, w1, w2));
            return py::make_tuple(g.w01, g.w02, g.w12);
        },
        py::arg("w0"), py::arg("w1"), py::arg("w2"));
    m.def(
        "residues_r",
        [](const BigInt& w0, const BigInt& w1, const BigInt& w2,
           const BigInt& d) {
            auto r = residues_r(WeightVector(w0, w1, w2), d);
            return py::make_tuple(r[0], r[1], r[2]);
        },
        py::arg("w0"), py::arg("w1"), py::arg("w2"), py::arg("d"));
    m.def(
        "reduce",
        [](const BigInt& w0, const BigInt& w1, const BigInt& w2,
           const BigInt& d) { return reduce(WeightVector(w0, w1, w2), d); },
        py::arg("w0"), py::arg("w1"), py::arg("w2"), py::arg("d"));

    // correction terms
    py::class_<RecursionStep>(m, "RecursionStep")
        .def_readonly("d", &RecursionStep::d)
        .def_readonly("q", &RecursionStep::q)
        .def_readonly("k", &RecursionStep::k)
        .def_readonly("term", &RecursionStep::term)
        .def_readonly("contribution", &RecursionStep::contribution);
    py::class_<CorrectionChain>(m, "CorrectionChain")
        .def_readonly("steps", &CorrectionChain::steps)
        .def_readonly("value", &CorrectionChain::value);
    m.def(
        "normalize_type",
        [](const BigInt& d, const BigInt& a, const BigInt& b, const BigInt& k) {
            NormalizedType n = normalize_type(CyclicQuotient(d, a, b), k);
            return py::make_tuple(n.d, n.q, n.k);
        },
        py::arg("d"), py::arg("a"), py::arg("b"), py::arg("k"));
    m.def("correction_chain", &correction_chain, py::arg("d"), py::arg("q"),
          py::arg("k"));
    m.def("correction_r_1q", &correction_r_1q, py::arg("d"), py::arg("q"),
          py::arg("k"));
    m.def(
        "correction_r",
        [](const BigInt& d, const BigInt& a, const BigInt& b, const BigInt& k) {
            return correction_r(CyclicQuotient(d, a, b), k);
        },
        py::arg("d"), py::arg("a"), py::arg("b"), py::arg("k"));
    m.def(
        "correction_r_global",
        [](const BigInt& w0, const BigInt& w1, const BigInt& w2,
           const BigInt& d) {
            return correction_r_global(WeightVector(w0, w1, w2), d);
        },
        py::arg("w0"), py::arg("w1"), py::arg("w2"), py::arg("d"));
    m.def("a_count", &a_count, py::arg("p"), py::arg("q"), py::arg("r"),
          "#{(i,j) >= 1 : p*i + q*j <= q*r}");
    m.def("delta_comb", &delta_comb, py::arg("p"), py::arg("q"), py::arg("r"));
    m.def(
        "delta_invariant",
        [](const BigInt& d, const BigInt& a, const BigInt& b, const BigInt& k) {
            return delta_invariant(CyclicQuotient(d, a, b), k);
        },
        py::arg("d"), py::arg("a"), py::arg("b"), py::arg("k"));

    // counting pipeline and oracles
    m.def(
        "count",
        [](const BigInt& w0, const BigInt& w1, const BigInt& w2,
           const BigInt& d) { return count(WeightVector(w0, w1, w2), d); },
        py::arg("w0"), py::arg("w1"), py::arg("w2"), py::arg("d"));
    m.def(
        "euler_characteristic",
        [](const BigInt& w0, const BigInt& w1, const BigInt& w2,
           const BigInt& d) {
            return euler_characteristic(WeightVector(w0, w1, w2), d).num();
        },
        py::arg("w0"), py::arg("w1"), py::arg("w2"), py::arg("d"));
    m.def(
        "quadratic_term",
        [](const BigInt& w0, const BigInt& w1, const BigInt& w2,
           const BigInt& d) {
            return quadratic_term(WeightVector(w0, w1, w2), d);
        },
        py::arg("w0"), py::arg("w1"), py::arg("w2"), py::arg("d"));
    m.def(
        "virtual_genus",
        [](const BigInt& w0, const BigInt& w1, const BigInt& w2,
           const BigInt& d) {
            return virtual_genus(WeightVector(w0, w1, w2), d);
        },
        py::arg("w0"), py::arg("w1"), py::arg("w2"), py::arg("d"));
    m.def(
        "intersection_number",
        [](const BigInt& w0, const BigInt& w1, const BigInt& w2,
           const BigInt& d1, const BigInt& d2) {
            return intersection_number(WeightVector(w0, w1, w2), d1, d2);
        },
        py::arg("w0"), py::arg("w1"), py::arg("w2"), py::arg("d1"),
        py::arg("d2"));
    m.def(
        "count_bruteforce",
        [](const BigInt& w0, const BigInt& w1, const BigInt& w2,
           const BigInt& d) {
            return count_bruteforce(WeightVector(w0, w1, w2), d);
        },
        py::arg("w0"), py::arg("w1"), py::arg("w2"), py::arg("d"));
    m.def(
        "bruteforce_triples",
        [](const BigInt& w0, const BigInt& w1, const BigInt& w2,
           const BigInt& d) {
            auto triples = bruteforce_triples(WeightVector(w0, w1, w2), d);
            py::list out;
            for (const auto& t : triples)
                out.append(py::make_tuple(t[0], t[1], t[2]));
            return out;
        },
        py::arg("w0"), py::arg("w1"), py::arg("w2"), py::arg("d"));
    m.def(
        "count_series",
        [](const BigInt& w0, const BigInt& w1, const BigInt& w2,
           const BigInt& d) {
            return count_series(WeightVector(w0, w1, w2), d);
        },
        py::arg("w0"), py::arg("w1"), py::arg("w2"), py::arg("d"));
    m.def("pick_area", &pick_area, py::arg("interior"), py::arg("boundary"));

    // Hirzebruch-Jung resolution data
    py::class_<HJData>(m, "HJData")
        .def_readonly("d", &HJData::d)
        .def_readonly("c", &HJData::c)
        .def_readonly("q", &HJData::q)
        .def_readonly("qbar", &HJData::qbar)
        .def("__len__", &HJData::length);
    m.def("hj_expand", &hj_expand, py::arg("d"), py::arg("q"));
    m.def("intersection_matrix", &intersection_matrix, py::arg("hj"));
    m.def("relative_canonical", &relative_canonical, py::arg("hj"));
    m.def("lct", &lct, py::arg("d"), py::arg("q"));
    m.def("delta_top", &delta_top, py::arg("hj"), py::arg("exceptional"));
    m.def("gorenstein_index", &gorenstein_index, py::arg("d"), py::arg("q"));
    m.def("canonical_multiple_degree", &canonical_multiple_degree,
          py::arg("d"), py::arg("q"), py::arg("ell"));

    py::class_<BlacheBoundEntry>(m, "BlacheBoundEntry")
        .def_readonly("ell", &BlacheBoundEntry::ell)
        .def_readonly("r", &BlacheBoundEntry::r)
        .def_readonly("bound", &BlacheBoundEntry::bound)
        .def_readonly("holds", &BlacheBoundEntry::holds);
    py::class_<BlacheBoundReport>(m, "BlacheBoundReport")
        .def_readonly("index", &BlacheBoundReport::index)
        .def_readonly("entries", &BlacheBoundReport::entries)
        .def_readonly("holds", &BlacheBoundReport::holds);
    m.def("blache_bound_report", &blache_bound_report, py::arg("d"),
          py::arg("q"));

    py::class_<BlacheDiffEntry>(m, "BlacheDiffEntry")
        .def_readonly("ell", &BlacheDiffEntry::ell)
        .def_readonly("diff", &BlacheDiffEntry::diff)
        .def_readonly("attains_bound", &BlacheDiffEntry::attains_bound);
    py::class_<BlacheDiffReport>(m, "BlacheDiffReport")
        .def_readonly("bound", &BlacheDiffReport::bound)
        .def_readonly("entries", &BlacheDiffReport::entries)
        .def_readonly("max_diff", &BlacheDiffReport::max_diff)
        .def_readonly("holds", &BlacheDiffReport::holds);
    m.def("blache_diff_report", &blache_diff_report, py::arg("d"),
          py::arg("q"));

    // floating-point cross-checks
    m.def("r_via_roots", &r_via_roots, py::arg("d"), py::arg("a"),
          py::arg("b"), py::arg("k"));
    m.def("unity_sum_identity", &unity_sum_identity, py::arg("q"));

    // verification engine
    py::class_<selfcheck::CheckOutcome>(m, "CheckOutcome")
        .def_readonly("name", &selfcheck::CheckOutcome::name)
        .def_readonly("cases", &selfcheck::CheckOutcome::cases)
        .def_readonly("failures", &selfcheck::CheckOutcome::failures)
        .def_readonly("detail", &selfcheck::CheckOutcome::detail)
        .def("ok", &selfcheck::CheckOutcome::ok);
    py::class_<selfcheck::VerifyReport>(m, "VerifyReport")
        .def_readonly("checks", &selfcheck::VerifyReport::checks)
        .def_readonly("worst_float_error",
                      &selfcheck::VerifyReport::worst_float_error)
        .def("ok", &selfcheck::VerifyReport::ok)
        .def("total_cases", &selfcheck::VerifyReport::total_cases);
    m.def(
        "verify",
        [](long max_weight, long max_degree, unsigned long long seed,
           long cases) {
            selfcheck::VerifyOptions opts;
            opts.max_weight = max_weight;
            opts.max_degree = max_degree;
            opts.seed = seed;
            opts.oracle_cases = cases;
            return selfcheck::run_verify(opts);
        },
        py::arg("max_weight") = 30, py::arg("max_degree") = 500,
        py::arg("seed") = 1, py::arg("cases") = 400);
}
