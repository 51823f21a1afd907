#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "mqapprox/approximator.hpp"
#include "mqapprox/errors.hpp"
#include "mqapprox/vandermonde.hpp"
#include "support.hpp"

using namespace mq;

// Reference digits computed with an unrelated decimal arithmetic package:
// (64/3) sqrt(65) - 32 sqrt(257) + (32/3) sqrt(1025).
static const char* kRecoveredAtZero =
    "0.495765953249606853976005980279060912833374312742392312783";

namespace {

MultiquadricParams basic_params() { return MultiquadricParams(1, make_rational(1)); }

TargetFunction poly_target(const RationalPolynomial& p) {
    return TargetFunction{[p](double x) { return p(BigFloat(x, 96)).to_double(); },
                          p.to_string()};
}

CenterSet doubling_from(long y1, unsigned count) {
    std::vector<Rational> values;
    Rational y = make_rational(y1);
    for (unsigned i = 0; i < count; ++i) {
        values.push_back(y);
        y *= 2;
    }
    return CenterSet(values);
}

}  // namespace

TEST_CASE("interval sanity") {
    Interval I(-2.0, 3.0);
    CHECK(I.width() == 5.0);
    CHECK(I.abs_max() == 3.0);
    CHECK_THROWS_AS(Interval(1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(Interval(2.0, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(Interval(0.0, std::numeric_limits<double>::infinity()),
                    std::invalid_argument);
}

TEST_CASE("approximant construction enforces the center threshold") {
    Interval I(-1.0, 1.0);
    std::vector<ApproximantTerm> ok = {{make_rational(8), BigFloat(1.0, 64)}};
    CHECK_NOTHROW(Approximant(basic_params(), ok, I, 64));  // exactly at 4*(1+1)

    std::vector<ApproximantTerm> low = {{make_rational(1599, 200), BigFloat(1.0, 64)}};
    CHECK_THROWS_AS(Approximant(basic_params(), low, I, 64), std::invalid_argument);

    std::vector<ApproximantTerm> unsorted = {{make_rational(16), BigFloat(1.0, 64)},
                                             {make_rational(9), BigFloat(1.0, 64)}};
    CHECK_THROWS_AS(Approximant(basic_params(), unsorted, I, 64), std::invalid_argument);

    CHECK_THROWS_AS(Approximant(basic_params(), ok, I, 8), std::invalid_argument);
}

TEST_CASE("approximant evaluation") {
    Interval I(-1.0, 1.0);
    std::vector<ApproximantTerm> single = {{make_rational(8), BigFloat(1.0, 128)}};
    Approximant appr(basic_params(), single, I, 128);
    // One unit translate at y = 8: value at 0 is sqrt(65).
    CHECK(appr.evaluate(0.0) == doctest::Approx(8.06225774829854965).epsilon(1e-15));

    BigFloat wide = appr.evaluate_hp(BigFloat(0.0, 300));
    CHECK(wide.precision() == 300);

    Approximant empty(basic_params(), {}, I, 64);
    CHECK(empty.evaluate(0.25) == 0.0);
    CHECK_THROWS_AS(appr.evaluate_at_precision(0.0, 8), std::invalid_argument);
}

TEST_CASE("translate recovery of an expansion polynomial") {
    MultiquadricParams params = basic_params();
    Interval I(-1.0, 1.0);
    // N = 0 over three doubling centers recovers A_{1,2}(x) = 1/2.
    RationalPolynomial target = expansion_polynomial(params, 2);
    TargetFunction f = poly_target(target);

    Approximant appr = recover_expansion_polynomial(params, 0, doubling_from(8, 3), I, 128);
    double at_zero = appr.evaluate(0.0);
    double reference = BigFloat::from_string(kRecoveredAtZero, 200).to_double();
    CHECK(at_zero == doctest::Approx(reference).epsilon(1e-13));

    double defect_zero = std::fabs(at_zero - 0.5);
    CHECK(defect_zero <= 0.005);
    CHECK(defect_zero >= 0.004);  // the exact value is 0.0042340...

    // Sup defect over the interval halves as the centers double.
    double previous = 0.0;
    Rational y1 = make_rational(8);
    for (int step = 0; step < 4; ++step) {
        CenterSet centers({y1, y1 * 2, y1 * 4});
        Approximant a = recover_expansion_polynomial(params, 0, centers, I, 160);
        double sup = sup_error(a, f, I, 129);
        if (step > 0) {
            double ratio = previous / sup;
            CHECK(ratio > 1.5);
            CHECK(ratio < 2.7);
        }
        previous = sup;
        y1 *= 2;
    }

    CHECK_THROWS_AS(recover_expansion_polynomial(params, 0, doubling_from(4, 3), I, 128),
                    std::invalid_argument);
}

TEST_CASE("decomposition over the expansion basis") {
    MultiquadricParams params = basic_params();

    std::vector<Rational> one = a_basis_decompose(params, RationalPolynomial::constant(make_rational(1)));
    REQUIRE(one.size() == 1);
    CHECK(one[0] == make_rational(2));

    std::vector<Rational> x = a_basis_decompose(params, RationalPolynomial::monomial(make_rational(1), 1));
    REQUIRE(x.size() == 2);
    CHECK(x[0] == make_rational(0));
    CHECK(x[1] == make_rational(2));

    CHECK(a_basis_decompose(params, RationalPolynomial()).empty());

    // Basis polynomials decompose to unit vectors.
    ExpansionTable table(params);
    for (unsigned N = 0; N <= 5; ++N) {
        std::vector<Rational> e = a_basis_decompose(params, table.poly(2 * params.k + N));
        REQUIRE(e.size() == N + 1);
        for (unsigned i = 0; i <= N; ++i) {
            CHECK(e[i] == (i == N ? make_rational(1) : make_rational(0)));
        }
    }

    // Exact round trip on random polynomials across orders.
    std::mt19937_64 rng(0xDECAF);
    for (unsigned k = 1; k <= 3; ++k) {
        MultiquadricParams p(k, make_rational(2, 3));
        ExpansionTable tab(p);
        for (int trial = 0; trial < 10; ++trial) {
            RationalPolynomial poly =
                testsupport::random_poly(rng, static_cast<unsigned>(trial % 9));
            std::vector<Rational> coeffs = a_basis_decompose(p, poly);
            RationalPolynomial rebuilt;
            for (std::size_t N = 0; N < coeffs.size(); ++N) {
                rebuilt = rebuilt +
                          coeffs[N] * tab.poly(2 * k + static_cast<unsigned>(N));
            }
            CHECK(rebuilt == poly);
        }
    }
}

TEST_CASE("polynomial approximation through translate combinations") {
    MultiquadricParams params = basic_params();
    Interval I(0.0, 1.0);
    ScatteredSequence lattice = ScatteredSequence::integer_lattice();

    SUBCASE("constant target") {
        RationalPolynomial one = RationalPolynomial::constant(make_rational(1));
        Approximant appr = approximate_polynomial(params, one, I, lattice, make_rational(8), 160);
        REQUIRE(appr.terms().size() == 3);
        CHECK(appr.terms()[0].center == make_rational(8));
        CHECK(appr.terms()[2].center == make_rational(32));
        CHECK(std::fabs(appr.evaluate(0.0) - 1.0) <= 0.02);

        TargetFunction f = poly_target(one);
        double previous = 0.0;
        for (long y1 : {8L, 16L, 32L}) {
            Approximant a =
                approximate_polynomial(params, one, I, lattice, make_rational(y1), 160);
            double sup = sup_error(a, f, I, 257);
            if (previous > 0.0) {
                double ratio = previous / sup;
                CHECK(ratio > 1.5);
                CHECK(ratio < 2.7);
            }
            previous = sup;
        }
    }

    SUBCASE("linear target combines the nested systems exactly") {
        RationalPolynomial px = RationalPolynomial::monomial(make_rational(1), 1);
        Approximant appr = approximate_polynomial(params, px, I, lattice, make_rational(8), 160);
        REQUIRE(appr.terms().size() == 4);
        for (unsigned j = 0; j < 4; ++j) {
            CHECK(appr.terms()[j].center == make_rational(8L << j));
        }
        // x = 0*A_2 + 2*A_3, so the stored coefficients are exactly twice
        // the N = 1 system weights, rounded once.
        CenterSet centers({make_rational(8), make_rational(16), make_rational(32),
                           make_rational(64)});
        WeightVector wv = solve_weights_exact(centers, 1, 1);
        for (unsigned j = 0; j < 4; ++j) {
            BigFloat expected(make_rational(2) * wv.weights[j], 160);
            CHECK(appr.terms()[j].coeff == expected);
        }
    }

    SUBCASE("zero target yields the empty combination") {
        Approximant appr =
            approximate_polynomial(params, RationalPolynomial(), I, lattice, make_rational(8), 64);
        CHECK(appr.terms().empty());
        CHECK(appr.evaluate(0.7) == 0.0);
    }

    SUBCASE("y_min below the expansion threshold is rejected") {
        RationalPolynomial one = RationalPolynomial::constant(make_rational(1));
        CHECK_THROWS_AS(
            approximate_polynomial(params, one, I, lattice, make_rational(7), 160),
            std::domain_error);
    }
}

TEST_CASE("chebyshev proxy interpolation") {
    SUBCASE("reproduces a quadratic") {
        TargetFunction f{[](double x) { return x * x; }, "x^2"};
        RationalPolynomial proxy = chebyshev_proxy(f, Interval(-1.0, 1.0), 2);
        REQUIRE(proxy.degree() == 2);
        CHECK(std::fabs(to_double(proxy.coefficient(2)) - 1.0) < 1e-12);
        CHECK(std::fabs(to_double(proxy.coefficient(1))) < 1e-12);
        CHECK(std::fabs(to_double(proxy.coefficient(0))) < 1e-12);
    }

    SUBCASE("degree zero samples the midpoint") {
        TargetFunction f{[](double x) { return x * x; }, "x^2"};
        RationalPolynomial proxy = chebyshev_proxy(f, Interval(0.0, 1.0), 0);
        CHECK(proxy == RationalPolynomial::constant(make_rational(1, 4)));
    }

    SUBCASE("a moderate degree captures exp to 1e-6") {
        TargetFunction f{[](double x) { return std::exp(x); }, "exp(x)"};
        Interval I(0.0, 1.0);
        RationalPolynomial proxy = chebyshev_proxy(f, I, 8);
        CHECK(polynomial_sup_error(proxy, f, I, 513) < 1e-6);
    }

    SUBCASE("inadequate working precision is detected, not absorbed") {
        TargetFunction f{[](double x) { return x; }, "x"};
        CHECK_THROWS_AS(chebyshev_proxy(f, Interval(1e8, 1e8 + 1e-7), 10, 53),
                        std::domain_error);
        CHECK_THROWS_AS(chebyshev_proxy(f, Interval(0.0, 1.0), 2, 32), std::invalid_argument);
    }

    SUBCASE("non-finite samples are reported") {
        TargetFunction f{[](double x) { return 1.0 / (x - 0.5); }, "pole"};
        // Degree 0 samples exactly the midpoint x = 0.5.
        CHECK_THROWS_AS(chebyshev_proxy(f, Interval(0.0, 1.0), 0), std::domain_error);
    }
}

TEST_CASE("grid error measures on degenerate combinations are exact") {
    MultiquadricParams params = basic_params();
    Interval I(0.0, 1.0);
    Approximant empty(params, {}, I, 64);

    TargetFunction zero{[](double) { return 0.0; }, "0"};
    CHECK(sup_error(empty, zero, I, 2049) == 0.0);
    CHECK(lp_error(empty, zero, I, 2.0, 2049) == 0.0);

    TargetFunction one{[](double) { return 1.0; }, "1"};
    CHECK(sup_error(empty, one, I, 2049) == 1.0);
    CHECK(lp_error(empty, one, I, 1.0, 2049) == 1.0);
    CHECK(lp_error(empty, one, I, 2.0, 2049) == 1.0);

    RationalPolynomial px = RationalPolynomial::monomial(make_rational(1), 1);
    TargetFunction fx{[](double x) { return x; }, "x"};
    CHECK(polynomial_sup_error(px, fx, I, 1025) == 0.0);

    CHECK_THROWS_AS(lp_error(empty, one, I, 0.5, 64), std::invalid_argument);
    CHECK_THROWS_AS(sup_error(empty, one, I, 1), std::invalid_argument);
    CHECK_THROWS_AS(sup_error(empty, one, I, 64, 0), std::invalid_argument);
}

TEST_CASE("end-to-end approximation") {
    MultiquadricParams params = basic_params();
    Interval I(0.0, 1.0);
    ScatteredSequence lattice = ScatteredSequence::integer_lattice();
    ApproxOptions options;
    options.grid_points = 257;

    SUBCASE("a linear target needs a degree-one proxy") {
        TargetFunction f{[](double x) { return x; }, "x"};
        ApproxResult r = approximate_function(f, I, 1e-2, params, lattice, options);
        CHECK(r.proxy_degree == 1);
        CHECK(r.report.sup_error < 1e-2);
        CHECK(r.approximant.terms().size() == 4);
        CHECK(r.y_min == make_rational(8L << r.doublings));
    }

    SUBCASE("exp within 1e-2, with coherent error report") {
        TargetFunction f{[](double x) { return std::exp(x); }, "exp(x)"};
        ApproxResult r = approximate_function(f, I, 1e-2, params, lattice, options);
        CHECK(r.report.sup_error < 1e-2);
        CHECK(r.report.grid_points == options.grid_points);
        REQUIRE(r.report.lp_errors.size() == 3);
        for (const auto& [p, value] : r.report.lp_errors) {
            // Interval width 1: every L^p grid error is below the sup error.
            CHECK(value <= std::pow(I.width(), 1.0 / p) * r.report.sup_error + 1e-9);
            CHECK(value > 0.0);
        }

        // Identical rerun with more threads must give identical numbers.
        ApproxOptions threaded = options;
        threaded.threads = 4;
        ApproxResult r4 = approximate_function(f, I, 1e-2, params, lattice, threaded);
        CHECK(r4.report.sup_error == r.report.sup_error);
        CHECK(r4.doublings == r.doublings);
        REQUIRE(r4.approximant.terms().size() == r.approximant.terms().size());
        for (std::size_t i = 0; i < r.approximant.terms().size(); ++i) {
            CHECK(r4.approximant.terms()[i].coeff == r.approximant.terms()[i].coeff);
        }

        // Doubling the working precision leaves the measured error alone.
        double sup_hi = sup_error(r.approximant, f, I, options.grid_points, 1,
                                  2 * r.approximant.precision_bits());
        CHECK(std::fabs(sup_hi - r.report.sup_error) <=
              std::ldexp(r.report.sup_error, -40));
    }

    SUBCASE("caps convert stagnation into errors") {
        TargetFunction f{[](double x) { return std::exp(x); }, "exp(x)"};
        ApproxOptions tight = options;
        tight.max_proxy_degree = 0;
        CHECK_THROWS_AS(approximate_function(f, I, 1e-2, params, lattice, tight), CapExceeded);

        ApproxOptions nodoubling = options;
        nodoubling.max_doublings = 0;
        CHECK_THROWS_AS(approximate_function(f, I, 1e-3, params, lattice, nodoubling),
                        CapExceeded);
    }

    SUBCASE("parameter validation") {
        TargetFunction f{[](double x) { return x; }, "x"};
        CHECK_THROWS_AS(approximate_function(f, I, 0.0, params, lattice, options),
                        std::invalid_argument);
        CHECK_THROWS_AS(approximate_function(f, I, -1.0, params, lattice, options),
                        std::invalid_argument);
        ApproxOptions bad = options;
        bad.precision_scale = 0;
        CHECK_THROWS_AS(approximate_function(f, I, 1e-2, params, lattice, bad),
                        std::invalid_argument);
    }

    SUBCASE("finite sequences can run out of centers") {
        TargetFunction f{[](double x) { return std::exp(x); }, "exp(x)"};
        ScatteredSequence short_list = ScatteredSequence::explicit_list(
            {make_rational(8), make_rational(16), make_rational(32), make_rational(64)});
        CHECK_THROWS_AS(approximate_function(f, I, 1e-3, params, short_list, options),
                        SequenceExhausted);
    }
}
