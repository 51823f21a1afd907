#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mqapprox/bigfloat.hpp"
#include "mqapprox/centers.hpp"
#include "mqapprox/expansion.hpp"
#include "mqapprox/polynomial.hpp"

namespace mq {

/// Closed interval [a, b] with a < b.
struct Interval {
    double a;
    double b;
    Interval(double a, double b);
    double width() const { return b - a; }
    double abs_max() const;
};

/// A continuous target f on the interval; evaluation must be deterministic,
/// finite, and reentrant.
struct TargetFunction {
    std::function<double(double)> fn;
    std::string description;
    double operator()(double x) const { return fn(x); }
};

struct ApproximantTerm {
    Rational center;
    BigFloat coeff;
};

/// Finite translate combination sum_j a_j phi_k(x - y_j) over an interval,
/// evaluated at a fixed stored precision. Centers are strictly increasing
/// and sit at or beyond the expansion threshold 4*(max(|a|,|b|) + c).
class Approximant {
public:
    Approximant(MultiquadricParams params, std::vector<ApproximantTerm> terms, Interval interval,
                long precision_bits);

    const MultiquadricParams& params() const { return params_; }
    const std::vector<ApproximantTerm>& terms() const { return terms_; }
    const Interval& interval() const { return interval_; }
    long precision_bits() const { return precision_bits_; }

    double evaluate(double x) const;
    BigFloat evaluate_hp(const BigFloat& x) const;
    /// Same combination evaluated at a different working precision (the
    /// stored coefficients convert exactly when widening).
    BigFloat evaluate_at_precision(double x, long bits) const;

private:
    MultiquadricParams params_;
    std::vector<ApproximantTerm> terms_;
    Interval interval_;
    long precision_bits_;
};

struct ErrorReport {
    double sup_error = 0.0;
    std::size_t grid_points = 0;
    std::map<double, double> lp_errors;
};

/// Translate recovery of the expansion polynomial A_{k,2k+N}: weights from
/// the exact power-system solve attached to phi_k translates. The result
/// matches A_{k,2k+N} on the interval up to O(1/y_1).
Approximant recover_expansion_polynomial(const MultiquadricParams& params, unsigned N,
                                         const CenterSet& centers, const Interval& interval,
                                         long precision);

/// Coefficients c_0..c_n with p(x) = sum_N c_N * A_{k,2k+N}(x), found by
/// exact back-substitution down the degrees.
std::vector<Rational> a_basis_decompose(const MultiquadricParams& params,
                                        const RationalPolynomial& p);

/// Translate approximant for a polynomial target: one doubling center set
/// of size 2k+deg(p)+1, per-degree weight systems on nested prefixes,
/// coefficients combined exactly.
Approximant approximate_polynomial(const MultiquadricParams& params, const RationalPolynomial& p,
                                   const Interval& interval, const ScatteredSequence& seq,
                                   const Rational& y_min, long precision);

/// Interpolant of f at the degree+1 Chebyshev points of the interval,
/// expressed in the monomial basis with coefficients rounded to exact
/// rationals at the working precision.
RationalPolynomial chebyshev_proxy(const TargetFunction& f, const Interval& interval,
                                   unsigned degree, long working_precision = 192);

/// Max |p(x) - f(x)| over an equispaced grid including both endpoints.
double polynomial_sup_error(const RationalPolynomial& p, const TargetFunction& f,
                            const Interval& interval, std::size_t grid_points,
                            unsigned threads = 1);

double sup_error(const Approximant& appr, const TargetFunction& f, const Interval& interval,
                 std::size_t grid_points, unsigned threads = 1, long precision_override = 0);

/// Composite-trapezoid L^p error (p >= 1) of f - appr over the interval.
double lp_error(const Approximant& appr, const TargetFunction& f, const Interval& interval,
                double p, std::size_t grid_points, unsigned threads = 1);

struct ApproxOptions {
    std::size_t grid_points = 2049;
    std::vector<double> lp_exponents = {1.0, 2.0, 4.0};
    unsigned max_doublings = 40;
    unsigned max_proxy_degree = 64;
    unsigned threads = 1;
    int precision_scale = 1;
    long proxy_working_precision = 192;
};

struct ApproxResult {
    Approximant approximant;
    ErrorReport report;
    unsigned proxy_degree = 0;
    Rational y_min;
    unsigned doublings = 0;
};

/// End-to-end run: pick the smallest Chebyshev proxy degree whose measured
/// defect is below epsilon/2, then raise y_min by doubling until the total
/// measured sup error drops below epsilon. Throws CapExceeded when either
/// cap is hit.
ApproxResult approximate_function(const TargetFunction& f, const Interval& interval,
                                  double epsilon, const MultiquadricParams& params,
                                  const ScatteredSequence& seq, const ApproxOptions& options = {});

/// JSON document {k, c, precision_bits, interval, terms}; deserialization
/// round-trips evaluation at the stored precision.
std::string approximant_to_json(const Approximant& appr);
Approximant approximant_from_json(const std::string& text);

}  // namespace mq
