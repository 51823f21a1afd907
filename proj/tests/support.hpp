#pragma once

// Deterministic random inputs shared by the unit and acceptance suites.

#include <random>
#include <vector>

#include "mqapprox/centers.hpp"
#include "mqapprox/expression.hpp"
#include "mqapprox/polynomial.hpp"
#include "mqapprox/rational.hpp"

namespace testsupport {

inline mq::Rational random_rational(std::mt19937_64& rng, long num_lo = -9, long num_hi = 9,
                                    long den_hi = 9) {
    std::uniform_int_distribution<long> num(num_lo, num_hi);
    std::uniform_int_distribution<long> den(1, den_hi);
    return mq::make_rational(num(rng), den(rng));
}

/// Random polynomial of exactly the requested degree.
inline mq::RationalPolynomial random_poly(std::mt19937_64& rng, unsigned degree) {
    std::vector<mq::Rational> coeffs(degree + 1);
    for (auto& coeff : coeffs) {
        coeff = random_rational(rng);
    }
    if (coeffs.back() == 0) {
        coeffs.back() = mq::make_rational(1);
    }
    return mq::RationalPolynomial(coeffs);
}

/// Random positive strictly-doubling centers with rational values.
inline mq::CenterSet random_doubling_centers(std::mt19937_64& rng, unsigned size) {
    std::uniform_int_distribution<long> base_num(1, 800);
    std::uniform_int_distribution<long> base_den(1, 8);
    std::uniform_int_distribution<int> stretch(0, 3);
    static const mq::Rational kStretch[] = {mq::make_rational(2), mq::make_rational(7, 3),
                                            mq::make_rational(5, 2), mq::make_rational(3)};
    std::vector<mq::Rational> centers;
    centers.push_back(mq::make_rational(base_num(rng), base_den(rng)));
    while (centers.size() < size) {
        centers.push_back(centers.back() * kStretch[stretch(rng)]);
    }
    return mq::CenterSet(centers);
}

/// Random well-formed expression tree of bounded depth, exercising every
/// node kind the grammar can produce.
inline mq::Expression random_expression(std::mt19937_64& rng, unsigned depth) {
    using mq::Expression;
    std::uniform_int_distribution<int> leaf_pick(0, 3);
    if (depth == 0) {
        switch (leaf_pick(rng)) {
            case 0:
                return Expression::variable();
            case 1: {
                std::uniform_int_distribution<long> num(0, 99);
                std::uniform_int_distribution<long> den(1, 99);
                return Expression::rational(mq::make_rational(num(rng), den(rng)));
            }
            case 2: {
                static const double kDoubles[] = {0.0, 0.5, 1.0, 2.75, 1e-3, 6.02e23,
                                                  0.1, 3.14159, 1e-300};
                std::uniform_int_distribution<int> pick(0, 8);
                return Expression::number(kDoubles[pick(rng)]);
            }
            default: {
                std::uniform_int_distribution<long> num(0, 9);
                return Expression::rational(mq::make_rational(num(rng)));
            }
        }
    }
    std::uniform_int_distribution<int> node_pick(0, 6);
    switch (node_pick(rng)) {
        case 0:
            return Expression::negate(random_expression(rng, depth - 1));
        case 1:
        case 2: {
            std::uniform_int_distribution<int> op(0, 3);
            return Expression::binary(static_cast<mq::BinaryOp>(op(rng)),
                                      random_expression(rng, depth - 1),
                                      random_expression(rng, depth - 1));
        }
        case 3: {
            std::uniform_int_distribution<long> exp(-6, 6);
            return Expression::power(random_expression(rng, depth - 1), exp(rng));
        }
        case 4: {
            std::uniform_int_distribution<int> f(0, 5);
            return Expression::call(static_cast<mq::Func>(f(rng)),
                                    random_expression(rng, depth - 1));
        }
        default:
            return random_expression(rng, depth - 1);
    }
}

}  // namespace testsupport
