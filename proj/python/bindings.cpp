// Python bindings. Structured results cross the boundary as JSON text in the
// same layout the CLI emits; big integers cross as Python ints.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "noether/arith.hpp"
#include "noether/json_io.hpp"
#include "noether/lattice.hpp"

namespace py = pybind11;
using namespace noether;

namespace {

py::int_ to_py(BigInt const& v)
{
    return py::int_(py::str(v.get_str()));
}

BigInt from_py(py::handle h)
{
    return BigInt(py::str(h).cast<std::string>());
}

std::vector<BigInt> from_py_list(py::sequence const& seq)
{
    std::vector<BigInt> out;
    out.reserve(seq.size());
    for (auto const& item : seq)
        out.push_back(from_py(item));
    return out;
}

py::list to_py_list(std::vector<BigInt> const& v)
{
    py::list out;
    for (auto const& x : v)
        out.append(to_py(x));
    return out;
}

CyclotomicInt element(std::uint64_t m, py::sequence const& coeffs)
{
    return CyclotomicInt(m, from_py_list(coeffs));
}

ClassifyParams classify_params(std::uint64_t budget, unsigned bound, std::uint64_t probe_budget)
{
    ClassifyParams c;
    c.search.budget = budget;
    c.search.coeff_bound = bound;
    c.probe_budget = probe_budget;
    return c;
}

}  // namespace

PYBIND11_MODULE(_noether, m)
{
    m.doc() = "Exact arithmetic core for norm certificates in cyclotomic rings";
    m.attr("tool_version") = tool_version;

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (std::domain_error const& e) {
            py::set_error(PyExc_ValueError, e.what());
        }
    });
    py::register_exception<IndeterminateComparison>(m, "IndeterminateComparison", PyExc_ArithmeticError);
    py::register_exception<CutoffFailure>(m, "CutoffFailure", PyExc_RuntimeError);
    py::register_exception<JsonFormatError>(m, "JsonFormatError", PyExc_ValueError);

    m.def("is_prime", &is_prime, py::arg("n"));
    m.def("euler_phi", &euler_phi, py::arg("n"));
    m.def("moebius", &moebius, py::arg("n"));
    m.def("divisors", &divisors, py::arg("n"));
    m.def("factorize", [](u64 n) {
        std::vector<std::pair<u64, unsigned>> out;
        for (auto const& f : factorize(n).factors)
            out.emplace_back(f.prime, f.exponent);
        return out;
    }, py::arg("n"));
    m.def("element_of_order", &element_of_order, py::arg("m"), py::arg("p"));

    m.def("cyclotomic_poly", [](std::uint64_t n) { return to_py_list(cyclotomic_poly(n).coeffs()); },
          py::arg("m"), "Coefficients of Phi_m, constant term first");
    m.def("resultant", [](py::sequence const& f, py::sequence const& g) {
        return to_py(resultant(IntPoly(from_py_list(f)), IntPoly(from_py_list(g))));
    }, py::arg("f"), py::arg("g"));
    m.def("cyc_mul", [](std::uint64_t n, py::sequence const& a, py::sequence const& b) {
        return to_py_list(cyc_mul(element(n, a), element(n, b)).coeffs());
    }, py::arg("m"), py::arg("a"), py::arg("b"));
    m.def("cyc_conjugate", [](std::uint64_t n, py::sequence const& a, std::uint64_t k) {
        return to_py_list(cyc_conjugate(element(n, a), k).coeffs());
    }, py::arg("m"), py::arg("a"), py::arg("k"));
    m.def("cyc_norm", [](std::uint64_t n, py::sequence const& a) { return to_py(cyc_norm(element(n, a))); },
          py::arg("m"), py::arg("a"));

    m.def("lll_reduce", [](std::vector<py::sequence> const& rows) {
        LatticeBasis b;
        for (auto const& r : rows)
            b.rows.push_back(from_py_list(r));
        auto const res = lll_reduce(b);
        py::list basis, transform;
        for (auto const& r : res.basis.rows)
            basis.append(to_py_list(r));
        for (auto const& r : res.transform)
            transform.append(to_py_list(r));
        return py::make_tuple(basis, transform);
    }, py::arg("rows"), "Returns (reduced_rows, transform) with transform * rows == reduced_rows");

    m.def("find_norm_certificate", [](std::uint64_t p, std::uint64_t budget, unsigned bound, bool escalate) {
        SearchParams params;
        params.budget = budget;
        params.coeff_bound = bound;
        params.escalate = escalate;
        SearchResult r;
        {
            py::gil_scoped_release release;
            r = find_norm_certificate(p, params);
        }
        Json j{{"certificate", r.certificate ? to_json(*r.certificate) : Json(nullptr)},
               {"search", to_json(r.report)}};
        return j.dump();
    }, py::arg("p"), py::arg("budget") = SearchParams{}.budget, py::arg("bound") = SearchParams{}.coeff_bound,
       py::arg("escalate") = true);
    m.def("verify_certificate", [](std::string const& text) { return verify_certificate(parse_certificate(text)); },
          py::arg("certificate_json"));

    m.def("classify_prime", [](std::uint64_t p, std::uint64_t budget, unsigned bound, std::uint64_t probe) {
        Verdict v;
        {
            py::gil_scoped_release release;
            v = classify_prime(p, classify_params(budget, bound, probe));
        }
        return to_json(v).dump();
    }, py::arg("p"), py::arg("budget") = SearchParams{}.budget, py::arg("bound") = SearchParams{}.coeff_bound,
       py::arg("probe_budget") = ClassifyParams{}.probe_budget);
    m.def("scan", [](std::uint64_t max_p, std::uint64_t budget, unsigned bound, std::uint64_t probe, unsigned jobs) {
        std::vector<Verdict> verdicts;
        {
            py::gil_scoped_release release;
            verdicts = scan(max_p, classify_params(budget, bound, probe), jobs);
        }
        Json arr = Json::array();
        for (auto const& v : verdicts)
            arr.push_back(to_json(v));
        return Json{{"verdicts", std::move(arr)}, {"summary", to_json(summarize(verdicts))}}.dump();
    }, py::arg("max_p"), py::arg("budget") = SearchParams{}.budget, py::arg("bound") = SearchParams{}.coeff_bound,
       py::arg("probe_budget") = ClassifyParams{}.probe_budget, py::arg("jobs") = 1);

    m.def("ratio", &ratio, py::arg("p"));
    m.def("rs_f", &rs_f, py::arg("x"));
    m.def("eliminate_prime", [](std::uint64_t p) { return to_json(eliminate_prime(p)).dump(); }, py::arg("p"));
    m.def("cutoff_certificate", [](std::uint64_t limit, std::uint64_t grid_hi) {
        CutoffReport r;
        {
            py::gil_scoped_release release;
            r = cutoff_certificate(limit, grid_hi);
        }
        return to_json(r).dump();
    }, py::arg("envelope_limit") = 100'000, py::arg("grid_hi") = 10'000);
    m.def("is_rational_cyclic", &is_rational_cyclic, py::arg("n"));
    m.def("lenstra_lemma_check", [](std::uint64_t p, unsigned r) { return to_json(lenstra_lemma_check(p, r)).dump(); },
          py::arg("p"), py::arg("r"));
}
