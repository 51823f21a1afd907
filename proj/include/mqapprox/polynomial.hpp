#pragma once

#include <string>
#include <vector>

#include "mqapprox/bigfloat.hpp"
#include "mqapprox/rational.hpp"

namespace mq {

/// Univariate polynomial with exact rational coefficients, stored densely
/// by monomial degree with trailing zeros trimmed. The zero polynomial
/// stores no coefficients and reports degree -1.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rational> coefficients);

    static RationalPolynomial constant(const Rational& value);
    static RationalPolynomial monomial(const Rational& coefficient, unsigned degree);

    bool is_zero() const { return coefficients_.empty(); }
    int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
    /// Coefficient of x^d (zero beyond the stored degree).
    const Rational& coefficient(unsigned d) const;
    /// Leading coefficient; zero for the zero polynomial.
    const Rational& leading() const;
    const std::vector<Rational>& coefficients() const { return coefficients_; }

    Rational operator()(const Rational& x) const;
    BigFloat operator()(const BigFloat& x) const;

    RationalPolynomial operator-() const;
    friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
    friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b);
    friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
    friend RationalPolynomial operator*(const Rational& s, const RationalPolynomial& p);
    friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b);

    /// Human-readable form, e.g. "1/2*x^3 - x + 3/8"; "0" for zero.
    std::string to_string(const std::string& variable = "x") const;

private:
    void trim();
    std::vector<Rational> coefficients_;
};

}  // namespace mq
