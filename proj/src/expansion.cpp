#include "mqapprox/expansion.hpp"

#include <stdexcept>

#include "mqapprox/scalar.hpp"

namespace mq {

namespace {

Integer binomial(unsigned long n, unsigned long r) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, r);
    return b;
}

}  // namespace

MultiquadricParams::MultiquadricParams(unsigned k_, Rational c_) : k(k_), c(std::move(c_)) {
    if (k < 1) throw std::invalid_argument("multiquadric order k must be >= 1");
    if (c <= 0) throw std::invalid_argument("multiquadric shape parameter c must be positive");
}

RationalPolynomial expansion_polynomial(const MultiquadricParams& params, unsigned j) {
    // A_{k,j}(x) = (-1)^j sum_{n=ceil(j/2)}^{j} sum_{l=0}^{j-n}
    //   C(k-1/2, n) C(n, j-n) C(j-n, l) 2^(2n-j) c^(2l) x^(j-2l)
    std::vector<Rational> coeffs(j + 1, Rational(0));
    for (unsigned n = (j + 1) / 2; n <= j; ++n) {
        Rational outer = half_integer_binomial(params.k, n) * Rational(binomial(n, j - n));
        Integer two_pow;
        mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, 2 * n - j);
        outer *= two_pow;
        for (unsigned l = 0; l <= j - n; ++l) {
            Rational term = outer * Rational(binomial(j - n, l)) *
                            rational_pow(params.c, 2 * static_cast<long>(l));
            coeffs[j - 2 * l] += term;
        }
    }
    if (j % 2 == 1) {
        for (auto& c : coeffs) c = -c;
    }
    return RationalPolynomial(std::move(coeffs));
}

Rational coefficient(const MultiquadricParams& params, unsigned j, unsigned l) {
    if (l > j / 2) {
        throw std::invalid_argument("coefficient index l must satisfy l <= j/2");
    }
    // Inner sum of the re-indexed double-sum form: the x^(j-2l) coefficient is
    // (-1)^j c^(2l) sum_{n=ceil(j/2)}^{j-l} C(k-1/2, n) C(n, j-n) C(j-n, l) 2^(2n-j).
    Rational sum(0);
    for (unsigned n = (j + 1) / 2; n + l <= j; ++n) {
        Integer two_pow;
        mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, 2 * n - j);
        sum += half_integer_binomial(params.k, n) * Rational(binomial(n, j - n)) *
               Rational(binomial(j - n, l)) * Rational(two_pow);
    }
    Rational value = rational_pow(params.c, 2 * static_cast<long>(l)) * sum;
    return j % 2 == 1 ? Rational(-value) : value;
}

Rational leading_coefficient(const MultiquadricParams& params, unsigned j) {
    if (j < 2 * params.k) {
        throw std::invalid_argument("leading_coefficient requires j >= 2k");
    }
    return coefficient(params, j, params.k);
}

bool CoefficientLemmaReport::all_ok() const {
    for (bool ok : zero_checks) {
        if (!ok) return false;
    }
    return leading_match;
}

CoefficientLemmaReport verify_coefficient_lemma(const MultiquadricParams& params, unsigned j) {
    if (j < 2 * params.k) {
        throw std::invalid_argument("verify_coefficient_lemma requires j >= 2k");
    }
    CoefficientLemmaReport report;
    report.zero_checks.reserve(params.k);
    for (unsigned l = 0; l < params.k; ++l) {
        report.zero_checks.push_back(coefficient(params, j, l) == 0);
    }
    Rational expected = rational_pow(params.c, 2 * static_cast<long>(params.k)) *
                        half_integer_binomial(params.k, params.k);
    Rational actual = coefficient(params, j, params.k);
    if (actual < 0) actual = -actual;
    report.leading_match = actual == expected;
    return report;
}

ExpansionTable::ExpansionTable(MultiquadricParams params) : params_(std::move(params)) {}

const RationalPolynomial& ExpansionTable::poly(unsigned j) const {
    std::lock_guard<std::mutex> lock(mutex_);
    while (polys_.size() <= j) {
        polys_.push_back(expansion_polynomial(params_, static_cast<unsigned>(polys_.size())));
    }
    return polys_[j];
}

BigFloat multiquadric_eval(const MultiquadricParams& params, const BigFloat& t, long precision) {
    if (precision < 16) throw std::invalid_argument("multiquadric_eval requires precision >= 16");
    BigFloat tp(t, precision);
    BigFloat base = tp * tp + BigFloat(params.c * params.c, precision);
    return BigFloat::pow_ui(base, params.k - 1) * BigFloat::sqrt(base);
}

Rational convergence_threshold(const MultiquadricParams& params, const Rational& abs_x) {
    return 4 * (abs_x + params.c);
}

Rational truncated_expansion_exact(const MultiquadricParams& params, const Rational& x,
                                   const Rational& y, unsigned J) {
    Rational abs_x = x < 0 ? Rational(-x) : x;
    if (y < convergence_threshold(params, abs_x)) {
        throw std::domain_error("truncated expansion requires y >= 4*(|x| + c)");
    }
    Rational inv_y = make_rational(y.get_den(), y.get_num());
    Rational sum(0);
    Rational scale(1);
    for (unsigned j = 0; j <= J; ++j) {
        sum += expansion_polynomial(params, j)(x) * scale;
        scale *= inv_y;
    }
    return rational_pow(y, 2 * static_cast<long>(params.k) - 1) * sum;
}

BigFloat truncated_expansion_eval(const MultiquadricParams& params, const Rational& x,
                                  const Rational& y, unsigned J, long precision) {
    return BigFloat(truncated_expansion_exact(params, x, y, J), precision);
}

}  // namespace mq
