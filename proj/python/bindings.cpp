#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "arithspin/errors.hpp"
#include "arithspin/euler.hpp"
#include "arithspin/exactq.hpp"
#include "arithspin/profinite.hpp"
#include "arithspin/qforms.hpp"
#include "arithspin/serialize.hpp"
#include "arithspin/verify.hpp"

namespace py = pybind11;
using namespace arithspin;

namespace {

py::object big_to_py(const BigInt& v) {
    return py::reinterpret_steal<py::object>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

py::object to_fraction(const Rational& r) {
    const py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(big_to_py(r.num()), big_to_py(r.den()));
}

// Accepts int, Fraction or any object whose str() is "p" or "p/q".
Rational from_py(const py::handle& obj) { return Rational::parse(py::str(obj).cast<std::string>()); }

py::object to_py(const io::json& j) {
    const py::object loads = py::module_::import("json").attr("loads");
    return loads(j.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Euler characteristics and commensurability of arithmetic spin groups";

    py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const std::domain_error& e) {
            py::set_error(PyExc_ValueError, e.what());
        }
    });

    m.def("chi", [](int a, int b) { return to_fraction(euler::chi_closed(a, b).value); }, py::arg("m"), py::arg("n"),
          "Euler characteristic of Gamma_{m,n} as a Fraction.");
    m.def("chi_factored", [](int a, int b) { return euler::chi_closed(a, b).factored; }, py::arg("m"), py::arg("n"));
    m.def("chi_record", [](int a, int b) { return to_py(io::chi_json(a, b)); }, py::arg("m"), py::arg("n"),
          "Full result record, same schema as the command-line JSON.");
    m.def("chi_sign", &euler::chi_sign, py::arg("m"), py::arg("n"));
    m.def("adelic_exact", [](int a, int b) { return to_fraction(euler::adelic_assembly_exact(a, b)); }, py::arg("m"),
          py::arg("n"));
    m.def(
        "adelic_float",
        [](int a, int b, std::uint64_t bound) {
            const auto f = euler::adelic_assembly_float(a, b, bound);
            return py::make_tuple(f.sign, f.log_abs);
        },
        py::arg("m"), py::arg("n"), py::arg("prime_bound") = 100000,
        "(sign, log|chi|) from the truncated Euler product.");
    m.def("l2_profile", [](int a, int b) { return to_py(io::l2_json(euler::l2_profile(a, b))); }, py::arg("m"),
          py::arg("n"));
    m.def(
        "s_arithmetic_sign",
        [](int a, int b, const std::vector<std::uint64_t>& primes) {
            return to_py(io::srank_json(a, b, euler::s_arithmetic_sign(a, b, primes)));
        },
        py::arg("m"), py::arg("n"), py::arg("primes"));

    m.def(
        "compare",
        [](int a, int b, int a2, int b2) {
            return to_py(io::compare_json(profinite::profinitely_commensurable(a, b, a2, b2)));
        },
        py::arg("m"), py::arg("n"), py::arg("m2"), py::arg("n2"));
    m.def("sweep", [](int d_max) { return to_py(io::sweep_json(profinite::sweep_theorem_frank_dim(d_max))); },
          py::arg("d_max"));

    m.def(
        "witt",
        [](const std::string& form, const std::string& place) {
            const auto w = qforms::witt_decomposition(qforms::DiagonalForm::parse(form), qforms::Place::parse(place));
            return py::make_tuple(w.witt_index, w.anisotropic_dim);
        },
        py::arg("form"), py::arg("place"), "(witt index, anisotropic dimension)");
    m.def(
        "hilbert_symbol",
        [](const py::object& a, const py::object& b, const std::string& place) {
            return qforms::hilbert_symbol(from_py(a), from_py(b), qforms::Place::parse(place));
        },
        py::arg("a"), py::arg("b"), py::arg("place"));
    m.def("genus_equal", &qforms::genus_equal_finite_places, py::arg("m"), py::arg("n"), py::arg("m2"), py::arg("n2"));

    m.def("bernoulli", [](unsigned n) { return to_fraction(exactq::bernoulli(n)); }, py::arg("n"));
    m.def("gen_bernoulli_mod4", [](unsigned n) { return to_fraction(exactq::gen_bernoulli_mod4(n)); }, py::arg("n"));

    m.def(
        "verify",
        [](const std::string& suite, std::uint64_t prime_bound) {
            verify::Options opts;
            opts.prime_bound = prime_bound;
            py::list out;
            for (const auto& r : verify::run(suite, opts)) {
                py::dict d;
                d["suite"] = r.name;
                d["passed"] = r.passed;
                d["checks"] = r.checks;
                d["detail"] = r.detail;
                out.append(d);
            }
            return out;
        },
        py::arg("suite") = "all", py::arg("prime_bound") = 10000);
}
