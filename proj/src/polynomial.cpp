#include "mqapprox/polynomial.hpp"

#include <algorithm>

namespace mq {

namespace {
const Rational kZero(0);
}

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
    trim();
}

RationalPolynomial RationalPolynomial::constant(const Rational& value) {
    return RationalPolynomial(std::vector<Rational>{value});
}

RationalPolynomial RationalPolynomial::monomial(const Rational& coefficient, unsigned degree) {
    std::vector<Rational> c(degree + 1, kZero);
    c[degree] = coefficient;
    return RationalPolynomial(std::move(c));
}

const Rational& RationalPolynomial::coefficient(unsigned d) const {
    if (d >= coefficients_.size()) return kZero;
    return coefficients_[d];
}

const Rational& RationalPolynomial::leading() const {
    if (coefficients_.empty()) return kZero;
    return coefficients_.back();
}

Rational RationalPolynomial::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

BigFloat RationalPolynomial::operator()(const BigFloat& x) const {
    BigFloat acc(0L, x.precision());
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
        acc = acc * x + BigFloat(*it, x.precision());
    }
    return acc;
}

RationalPolynomial RationalPolynomial::operator-() const {
    std::vector<Rational> c(coefficients_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -coefficients_[i];
    return RationalPolynomial(std::move(c));
}

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
    std::vector<Rational> c(std::max(a.coefficients_.size(), b.coefficients_.size()), kZero);
    for (std::size_t i = 0; i < a.coefficients_.size(); ++i) c[i] += a.coefficients_[i];
    for (std::size_t i = 0; i < b.coefficients_.size(); ++i) c[i] += b.coefficients_[i];
    return RationalPolynomial(std::move(c));
}

RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
    return a + (-b);
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return RationalPolynomial();
    std::vector<Rational> c(a.coefficients_.size() + b.coefficients_.size() - 1, kZero);
    for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
        for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
            c[i + j] += a.coefficients_[i] * b.coefficients_[j];
        }
    }
    return RationalPolynomial(std::move(c));
}

RationalPolynomial operator*(const Rational& s, const RationalPolynomial& p) {
    std::vector<Rational> c(p.coefficients_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = s * p.coefficients_[i];
    return RationalPolynomial(std::move(c));
}

bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
    return a.coefficients_ == b.coefficients_;
}

std::string RationalPolynomial::to_string(const std::string& variable) const {
    if (is_zero()) return "0";
    std::string out;
    for (int d = degree(); d >= 0; --d) {
        const Rational& c = coefficients_[d];
        if (c == 0) continue;
        bool negative = c < 0;
        Rational mag = negative ? Rational(-c) : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        bool unit = mag == 1;
        if (!unit || d == 0) out += rational_to_string(mag);
        if (d > 0) {
            if (!unit) out += "*";
            out += variable;
            if (d > 1) out += "^" + std::to_string(d);
        }
    }
    return out;
}

void RationalPolynomial::trim() {
    while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

}  // namespace mq
