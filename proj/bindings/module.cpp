// Python bindings for the multiquadric translate approximation library.
// Exact rationals cross the boundary as fractions.Fraction (accepted as
// Fraction, int, float, or "p/q" text); high-precision coefficients stay
// inside the Approximant and round only on evaluate().

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mqapprox/approximator.hpp"
#include "mqapprox/centers.hpp"
#include "mqapprox/errors.hpp"
#include "mqapprox/expansion.hpp"
#include "mqapprox/expression.hpp"
#include "mqapprox/polynomial.hpp"
#include "mqapprox/scalar.hpp"
#include "mqapprox/vandermonde.hpp"

namespace py = pybind11;
using namespace mq;

namespace {

Rational to_rational(py::handle obj) {
    if (py::isinstance<py::str>(obj)) {
        return rational_from_string(obj.cast<std::string>());
    }
    if (py::isinstance<py::bool_>(obj)) {
        throw py::type_error("bool is not a number here");
    }
    if (py::isinstance<py::int_>(obj)) {
        return rational_from_string(py::str(obj).cast<std::string>());
    }
    if (py::isinstance<py::float_>(obj)) {
        return rational_from_double(obj.cast<double>());
    }
    if (py::hasattr(obj, "numerator") && py::hasattr(obj, "denominator")) {
        return make_rational(Integer(py::str(obj.attr("numerator")).cast<std::string>(), 10),
                             Integer(py::str(obj.attr("denominator")).cast<std::string>(), 10));
    }
    throw py::type_error("expected a Fraction, int, float, or 'p/q' string");
}

py::object to_fraction(const Rational& r) {
    return py::module_::import("fractions").attr("Fraction")(rational_to_string(r));
}

py::list to_fractions(const std::vector<Rational>& values) {
    py::list out;
    for (const Rational& v : values) out.append(to_fraction(v));
    return out;
}

std::vector<Rational> rational_vector(const py::iterable& items) {
    std::vector<Rational> out;
    for (py::handle item : items) out.push_back(to_rational(item));
    return out;
}

TargetFunction make_target(const std::string& text) {
    auto expr = std::make_shared<Expression>(parse_expression(text));
    return TargetFunction{[expr](double x) { return expr->evaluate(x); }, text};
}

ScatteredSequence make_sequence(const std::string& kind, py::handle jitter_radius,
                                std::uint64_t seed, const std::optional<py::iterable>& centers) {
    if (centers.has_value()) {
        return ScatteredSequence::explicit_list(rational_vector(*centers));
    }
    if (kind == "lattice") {
        return ScatteredSequence::integer_lattice();
    }
    if (kind == "jitter") {
        return ScatteredSequence::jittered_lattice(to_rational(jitter_radius), seed);
    }
    throw py::value_error("sequence must be 'lattice' or 'jitter', or pass centers=[...]");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Approximation of continuous functions by scattered translates of "
              "generalized multiquadrics (t^2 + c^2)^(k - 1/2).";

    py::register_exception<ParseError>(m, "ExpressionParseError", PyExc_ValueError);
    py::register_exception<EvalError>(m, "ExpressionEvalError", PyExc_ValueError);
    py::register_exception<SequenceExhausted>(m, "SequenceExhausted", PyExc_RuntimeError);
    py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);

    py::class_<Approximant>(m, "Approximant",
                            "Finite combination sum_j a_j * phi_k(x - y_j) over an interval.")
        .def_property_readonly("k", [](const Approximant& a) { return a.params().k; })
        .def_property_readonly("c", [](const Approximant& a) { return to_fraction(a.params().c); })
        .def_property_readonly("precision_bits", &Approximant::precision_bits)
        .def_property_readonly("interval",
                               [](const Approximant& a) {
                                   return py::make_tuple(a.interval().a, a.interval().b);
                               })
        .def_property_readonly("terms",
                               [](const Approximant& a) {
                                   py::list out;
                                   for (const ApproximantTerm& t : a.terms()) {
                                       out.append(py::make_tuple(to_fraction(t.center),
                                                                 t.coeff.to_double()));
                                   }
                                   return out;
                               },
                               "List of (center, coefficient-as-float) pairs.")
        .def("evaluate", &Approximant::evaluate, py::arg("x"))
        .def("__call__", &Approximant::evaluate, py::arg("x"))
        .def("to_json", &approximant_to_json,
             "Serialize losslessly (coefficients keep full precision).")
        .def_static("from_json", &approximant_from_json, py::arg("text"))
        .def("__len__", [](const Approximant& a) { return a.terms().size(); });

    py::class_<ApproxResult>(m, "ApproxResult")
        .def_readonly("approximant", &ApproxResult::approximant)
        .def_readonly("proxy_degree", &ApproxResult::proxy_degree)
        .def_readonly("doublings", &ApproxResult::doublings)
        .def_property_readonly("y_min",
                               [](const ApproxResult& r) { return to_fraction(r.y_min); })
        .def_property_readonly("sup_error",
                               [](const ApproxResult& r) { return r.report.sup_error; })
        .def_property_readonly("grid_points",
                               [](const ApproxResult& r) { return r.report.grid_points; })
        .def_property_readonly("lp_errors", [](const ApproxResult& r) {
            py::dict out;
            for (const auto& [p, value] : r.report.lp_errors) out[py::float_(p)] = value;
            return out;
        });

    m.def(
        "expansion_polynomial",
        [](unsigned k, py::handle c, unsigned j) {
            const RationalPolynomial p = expansion_polynomial(MultiquadricParams(k, to_rational(c)), j);
            return to_fractions(p.coefficients());
        },
        py::arg("k"), py::arg("c"), py::arg("j"),
        "Coefficients (constant term first) of the expansion polynomial A[k,j].");

    m.def(
        "expansion_coefficient",
        [](unsigned k, py::handle c, unsigned j, unsigned l) {
            return to_fraction(coefficient(MultiquadricParams(k, to_rational(c)), j, l));
        },
        py::arg("k"), py::arg("c"), py::arg("j"), py::arg("l"),
        "Coefficient of x^(j-2l) in A[k,j](x), computed by the direct sum.");

    m.def(
        "multiquadric",
        [](unsigned k, py::handle c, double t, long precision) {
            return multiquadric_eval(MultiquadricParams(k, to_rational(c)),
                                     BigFloat(t, precision), precision)
                .to_double();
        },
        py::arg("k"), py::arg("c"), py::arg("t"), py::arg("precision") = 128,
        "phi_k(t) = (t^2 + c^2)^(k - 1/2).");

    m.def(
        "truncated_expansion",
        [](unsigned k, py::handle c, py::handle x, py::handle y, unsigned J) {
            return to_fraction(truncated_expansion_exact(MultiquadricParams(k, to_rational(c)),
                                                         to_rational(x), to_rational(y), J));
        },
        py::arg("k"), py::arg("c"), py::arg("x"), py::arg("y"), py::arg("J"),
        "Exact value of y^(2k-1) * sum_{j<=J} A[k,j](x) / y^j.");

    m.def(
        "convergence_threshold",
        [](unsigned k, py::handle c, py::handle abs_x) {
            return to_fraction(
                convergence_threshold(MultiquadricParams(k, to_rational(c)), to_rational(abs_x)));
        },
        py::arg("k"), py::arg("c"), py::arg("abs_x"),
        "Smallest center admitted for arguments up to |x|: 4 * (|x| + c).");

    m.def(
        "solve_weights",
        [](const py::iterable& centers, unsigned k, unsigned N) {
            return to_fractions(
                solve_weights_exact(CenterSet(rational_vector(centers)), k, N).weights);
        },
        py::arg("centers"), py::arg("k"), py::arg("N"),
        "Exact weights of the modified power system on a doubling center set.");

    m.def(
        "normalized_weights",
        [](const py::iterable& centers, unsigned k, unsigned N) {
            return to_fractions(
                normalized_weights(solve_weights_exact(CenterSet(rational_vector(centers)), k, N)));
        },
        py::arg("centers"), py::arg("k"), py::arg("N"),
        "Weights rescaled by y_j^-(N+1); bounded below 3.4628 in magnitude.");

    m.def(
        "recover_polynomial",
        [](unsigned k, py::handle c, unsigned N, py::handle y_min, double a, double b,
           long precision) {
            const MultiquadricParams params(k, to_rational(c));
            const auto lattice = ScatteredSequence::integer_lattice();
            const CenterSet centers = select_centers(lattice, 2 * k + N + 1, to_rational(y_min));
            if (precision <= 0) {
                precision = required_precision_bits(k, N, to_double(centers.back()) + 1.0);
            }
            return recover_expansion_polynomial(params, N, centers, Interval(a, b), precision);
        },
        py::arg("k"), py::arg("c"), py::arg("N"), py::arg("y_min"), py::arg("a"), py::arg("b"),
        py::arg("precision") = 0,
        "Translate combination recovering A[k,2k+N] on [a, b] from lattice centers.");

    m.def(
        "approximate",
        [](const std::string& target, double a, double b, double epsilon, unsigned k,
           py::handle c, std::size_t grid_points, unsigned max_doublings,
           unsigned max_proxy_degree, unsigned threads, int precision_scale,
           const std::string& sequence, py::handle jitter_radius, std::uint64_t seed,
           const std::optional<py::iterable>& centers) {
            const MultiquadricParams params(k, to_rational(c));
            const TargetFunction f = make_target(target);
            const ScatteredSequence seq = make_sequence(sequence, jitter_radius, seed, centers);
            ApproxOptions options;
            options.grid_points = grid_points;
            options.max_doublings = max_doublings;
            options.max_proxy_degree = max_proxy_degree;
            options.threads = threads;
            options.precision_scale = precision_scale;
            py::gil_scoped_release release;
            return approximate_function(f, Interval(a, b), epsilon, params, seq, options);
        },
        py::arg("target"), py::arg("a"), py::arg("b"), py::arg("epsilon"), py::arg("k") = 1,
        py::arg("c") = 1, py::arg("grid_points") = 2049, py::arg("max_doublings") = 40,
        py::arg("max_proxy_degree") = 64, py::arg("threads") = 1,
        py::arg("precision_scale") = 1, py::arg("sequence") = "lattice",
        py::arg("jitter_radius") = "1/4", py::arg("seed") = 0,
        py::arg("centers") = py::none(),
        "End-to-end run: Chebyshev proxy, then doubling centers until the grid "
        "sup error of the translate combination drops below epsilon. The target "
        "is an expression in x, e.g. 'exp(x)' or 'x^2+1'.");

    m.def(
        "sup_error",
        [](const Approximant& appr, const std::string& target, std::size_t grid_points) {
            return sup_error(appr, make_target(target), appr.interval(), grid_points);
        },
        py::arg("approximant"), py::arg("target"), py::arg("grid_points") = 2049,
        "Max |approximant - target| over an equispaced grid on its interval.");

    m.def(
        "evaluate_expression",
        [](const std::string& text, double x) { return parse_expression(text).evaluate(x); },
        py::arg("text"), py::arg("x"),
        "Parse and evaluate an expression in the variable x.");
}
