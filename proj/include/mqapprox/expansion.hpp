#pragma once

#include <deque>
#include <mutex>
#include <vector>

#include "mqapprox/bigfloat.hpp"
#include "mqapprox/polynomial.hpp"
#include "mqapprox/rational.hpp"

namespace mq {

/// Order k and shape parameter c of the generalized multiquadric
/// phi_k(t) = (t^2 + c^2)^(k - 1/2). Requires k >= 1 and c > 0.
struct MultiquadricParams {
    unsigned k;
    Rational c;
    MultiquadricParams(unsigned k, Rational c);
};

/// Coefficient A_{k,j}(x) of y^-j in the large-y expansion
/// y^(1-2k) * phi_k(x - y) = sum_j A_{k,j}(x) y^-j, as an exact polynomial.
RationalPolynomial expansion_polynomial(const MultiquadricParams& params, unsigned j);

/// Coefficient of x^(j-2l) in A_{k,j}(x), computed by the direct inner sum
/// rather than by assembling the whole polynomial. Requires l <= j/2.
Rational coefficient(const MultiquadricParams& params, unsigned j, unsigned l);

/// Coefficient of x^(j-2k) in A_{k,j}(x), the leading term for j >= 2k.
/// Equals c^(2k) * C(k-1/2, k), independent of j.
Rational leading_coefficient(const MultiquadricParams& params, unsigned j);

/// Exact checks of the degree-drop structure of A_{k,j} for j >= 2k:
/// the coefficients of x^(j-2l) vanish for l < k, and the magnitude of the
/// l = k coefficient equals c^(2k) * C(k-1/2, k).
struct CoefficientLemmaReport {
    std::vector<bool> zero_checks;  // l = 0 .. k-1
    bool leading_match = false;
    bool all_ok() const;
};
CoefficientLemmaReport verify_coefficient_lemma(const MultiquadricParams& params, unsigned j);

/// Write-once cache of A_{k,j} for one parameter set. Safe for concurrent
/// readers; fills are idempotent.
class ExpansionTable {
public:
    explicit ExpansionTable(MultiquadricParams params);
    const MultiquadricParams& params() const { return params_; }
    const RationalPolynomial& poly(unsigned j) const;

private:
    MultiquadricParams params_;
    mutable std::mutex mutex_;
    mutable std::deque<RationalPolynomial> polys_;
};

/// phi_k(t) = (t^2 + c^2)^(k-1/2) at the stated precision (>= 16 bits),
/// evaluated as an integer power times a square root.
BigFloat multiquadric_eval(const MultiquadricParams& params, const BigFloat& t, long precision);

/// Smallest y admitted by the truncated expansion for arguments of
/// magnitude |x|: 4 * (|x| + c). At or above this threshold the binomial
/// series argument stays within |u| <= 9/16.
Rational convergence_threshold(const MultiquadricParams& params, const Rational& abs_x);

/// y^(2k-1) * sum_{j=0}^{J} A_{k,j}(x) / y^j, exact. Rejects y below the
/// convergence threshold.
Rational truncated_expansion_exact(const MultiquadricParams& params, const Rational& x,
                                   const Rational& y, unsigned J);

/// The exact truncated sum rounded once to the stated precision.
BigFloat truncated_expansion_eval(const MultiquadricParams& params, const Rational& x,
                                  const Rational& y, unsigned J, long precision);

}  // namespace mq
