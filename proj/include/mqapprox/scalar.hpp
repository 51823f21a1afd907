#pragma once

#include "mqapprox/polynomial.hpp"
#include "mqapprox/rational.hpp"

namespace mq {

/// C(k - 1/2, n) = (k-1/2)(k-3/2)...(k-1/2-n+1) / n!, exact. Requires k >= 1.
Rational half_integer_binomial(unsigned k, unsigned n);

/// m!! for odd m, with (-1)!! = 1. Rejects even m and m < -1.
Integer double_factorial(long m);

/// Sum_{j=0}^{N} (-1)^j C(N,j) p(j). Requires deg(p) <= N and N >= 1.
/// Equals 0 when deg(p) < N and (-1)^N * leading(p) * N! when deg(p) = N.
Rational alternating_binomial_sum(unsigned N, const RationalPolynomial& p);

/// (2(n+m)+1)!! / (2^m (2n+1)!!) = (2n+2m+1)(2n+2m-1)...(2n+3) / 2^m.
/// As a function of n this is a monic polynomial of degree m.
Rational monic_odd_ratio(unsigned n, unsigned m);

/// ceil((2k+N+1)*log2(y_max)) + 64. Working precision that keeps at least
/// 64 correct bits through the cancellation of translate sums whose terms
/// grow like y_max^(2k+N). Requires y_max >= 1.
long required_precision_bits(unsigned k, unsigned N, double y_max);

}  // namespace mq
