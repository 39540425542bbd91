#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "explog/cli.hpp"
#include "explog/constant_parser.hpp"
#include "explog/evaluator.hpp"
#include "explog/integrand.hpp"
#include "explog/numeric.hpp"
#include "explog/parse_error.hpp"
#include "explog/special_values.hpp"

namespace py = pybind11;
using namespace explog;

namespace {

ArgPoint arg_point(const py::object& x) {
    if (py::isinstance<py::int_>(x)) return ArgPoint::integer(x.cast<long>());
    return ArgPoint::from_rational(Rational::parse(py::str(x).cast<std::string>()));
}

py::tuple grade_tuple(const SymbolicConstant& c) {
    Grade g = grade(c);
    switch (g.kind) {
        case Grade::Kind::Homogeneous:
            // weights of gamma and zeta(k) are integers
            return py::make_tuple("homogeneous", g.weight.num().convert_to<long long>());
        case Grade::Kind::Inhomogeneous: return py::make_tuple("inhomogeneous", py::none());
        case Grade::Kind::Ungradable: break;
    }
    return py::make_tuple("ungradable", py::none());
}

}  // namespace

PYBIND11_MODULE(_explog, m) {
    m.doc() = "Exact closed forms for integrals of x^(s-1) exp(-mu x) log(x)^n";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<UnsupportedIntegrand>(m, "UnsupportedIntegrand", PyExc_ValueError);
    py::register_exception<UnboundGenerator>(m, "UnboundGenerator", PyExc_LookupError);

    py::class_<SymbolicConstant>(m, "Constant")
        .def(py::init<>())
        .def(py::init([](const std::string& text) { return parse_constant(text); }), py::arg("text"))
        .def(py::init([](long long v) { return SymbolicConstant(Rational(v)); }))
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__pow__", [](const SymbolicConstant& c, unsigned k) { return c.pow(k); })
        .def("is_zero", &SymbolicConstant::is_zero)
        .def("render", [](const SymbolicConstant& c, bool paper_style) { return render(c, {paper_style}); },
             py::arg("paper_style") = false)
        .def("to_json", [](const SymbolicConstant& c) { return to_json(c).dump(); })
        .def("grade", &grade_tuple)
        .def(
            "evaluate",
            [](const SymbolicConstant& c, std::optional<double> mu) {
                double log_mu = mu ? std::log(*mu) : 0.0;
                return evaluate(c, numeric::default_constants().bindings(log_mu));
            },
            py::arg("mu") = py::none())
        .def("__str__", [](const SymbolicConstant& c) { return render(c); })
        .def("__repr__", [](const SymbolicConstant& c) { return "Constant('" + render(c) + "')"; });

    m.def("parse_constant", [](const std::string& text) { return parse_constant(text); });
    m.def("constant_from_json", [](const std::string& text) {
        return constant_from_json(nlohmann::ordered_json::parse(text));
    });

    m.def("eval_In", &eval_In, py::arg("n"), "I_n = Gamma^(n)(1)");
    m.def(
        "gamma_deriv_at", [](unsigned k, const py::object& x) { return gamma_deriv_at(k, arg_point(x)); },
        py::arg("k"), py::arg("x"), "k-th derivative of Gamma at an integer or half-integer such as '7/2'");
    m.def(
        "psi_deriv_at", [](unsigned k, const py::object& x) { return psi_deriv_at(k, arg_point(x)); },
        py::arg("m"), py::arg("x"));

    m.def("parse_integrand", [](const std::string& text) { return print(parse_integrand(text)); },
          "Canonical text of a parsed integrand");

    m.def("digamma", &numeric::digamma_m, py::arg("m"), py::arg("x"));
    m.def("hurwitz_zeta", &numeric::hurwitz_zeta, py::arg("z"), py::arg("q"));
    m.def("constants", [] {
        const auto& t = numeric::default_constants();
        py::dict d;
        d["gamma"] = t.gamma_const;
        d["log2"] = t.log2_const;
        d["sqrt_pi"] = t.sqrt_pi_const;
        for (const auto& [k, v] : t.zeta_consts) d[("zeta(" + std::to_string(k) + ")").c_str()] = v;
        return d;
    });

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code;
            {
                py::gil_scoped_release release;
                code = cli::run(args, out, err);
            }
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run the command line; returns (exit_code, stdout, stderr)");
}
