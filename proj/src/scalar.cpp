#include "mqapprox/scalar.hpp"

#include <cmath>
#include <stdexcept>

namespace mq {

Rational half_integer_binomial(unsigned k, unsigned n) {
    if (k < 1) throw std::invalid_argument("half_integer_binomial requires k >= 1");
    // Product of (2k-1-2i)/2 over i = 0..n-1, divided by n!.
    Integer num(1);
    for (unsigned i = 0; i < n; ++i) {
        long factor = 2 * static_cast<long>(k) - 1 - 2 * static_cast<long>(i);
        num *= factor;
    }
    Integer den;
    mpz_fac_ui(den.get_mpz_t(), n);
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), n);
    return make_rational(num, den);
}

Integer double_factorial(long m) {
    if (m == -1 || m == 1) return Integer(1);
    if (m < -1) throw std::invalid_argument("double_factorial undefined below -1");
    if (m % 2 == 0) throw std::invalid_argument("double_factorial requires odd m");
    Integer r(1);
    for (long v = m; v >= 3; v -= 2) r *= v;
    return r;
}

Rational alternating_binomial_sum(unsigned N, const RationalPolynomial& p) {
    if (N < 1) throw std::invalid_argument("alternating_binomial_sum requires N >= 1");
    if (p.degree() > static_cast<int>(N)) {
        throw std::invalid_argument("alternating_binomial_sum requires deg(p) <= N");
    }
    Rational sum(0);
    for (unsigned j = 0; j <= N; ++j) {
        Integer binom;
        mpz_bin_uiui(binom.get_mpz_t(), N, j);
        Rational term = Rational(binom) * p(Rational(static_cast<long>(j)));
        if (j % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum;
}

Rational monic_odd_ratio(unsigned n, unsigned m) {
    Integer num(1);
    for (unsigned i = 1; i <= m; ++i) {
        num *= 2 * static_cast<long>(n) + 2 * static_cast<long>(i) + 1;
    }
    Integer den(1);
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), m);
    return make_rational(num, den);
}

long required_precision_bits(unsigned k, unsigned N, double y_max) {
    if (k < 1) throw std::invalid_argument("required_precision_bits requires k >= 1");
    if (!(y_max >= 1.0)) throw std::invalid_argument("required_precision_bits requires y_max >= 1");
    double bits = (2.0 * k + N + 1.0) * std::log2(y_max);
    return static_cast<long>(std::ceil(bits)) + 64;
}

}  // namespace mq
