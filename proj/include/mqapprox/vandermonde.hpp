#pragma once

#include <vector>

#include "mqapprox/centers.hpp"
#include "mqapprox/rational.hpp"

namespace mq {

/// Exact solution b_1..b_M of the inverted-power system
/// sum_j b_j y_j^l = delta_{l,-N-1}, l = 2k-1, 2k-2, ..., -N-1,
/// together with its defining context.
struct WeightVector {
    std::vector<Rational> weights;
    unsigned order_k = 0;
    unsigned degree_n = 0;
    std::vector<Rational> centers;
};

/// Upper bound on |b_j * y_j^-(N+1)| over doubling centers:
/// prod_{m>=1} (1 - 2^-m)^-1 = 3.46274661945...
inline constexpr double kNormalizedWeightBound = 3.4628;

/// Core solver on raw nodes (positive, pairwise distinct; k may be zero).
/// Exact Gaussian elimination of the (2k+N+1)-square system.
std::vector<Rational> solve_power_weights(const std::vector<Rational>& nodes, unsigned k,
                                          unsigned N);

/// Closed form b_j = y_j^(N+1) * prod_{l != j} (1 - y_j/y_l)^-1 on raw
/// nodes. Agrees with solve_power_weights exactly.
std::vector<Rational> closed_form_power_weights(const std::vector<Rational>& nodes, unsigned k,
                                                unsigned N);

WeightVector solve_weights_exact(const CenterSet& centers, unsigned k, unsigned N);
WeightVector closed_form_weights(const CenterSet& centers, unsigned k, unsigned N);

/// Normalized products c_j = b_j * y_j^-(N+1). Bounded by
/// kNormalizedWeightBound whenever the centers double.
std::vector<Rational> normalized_weights(const WeightVector& wv);

}  // namespace mq
