#include "mqapprox/vandermonde.hpp"

#include <stdexcept>

namespace mq {

namespace {

void check_nodes(const std::vector<Rational>& nodes, unsigned k, unsigned N) {
    std::size_t m = 2 * static_cast<std::size_t>(k) + N + 1;
    if (nodes.size() != m) {
        throw std::invalid_argument("system needs exactly 2k+N+1 centers, got " +
                                    std::to_string(nodes.size()));
    }
    for (const auto& y : nodes) {
        if (y <= 0) throw std::invalid_argument("centers must be positive");
    }
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        for (std::size_t j = i + 1; j < nodes.size(); ++j) {
            if (nodes[i] == nodes[j]) {
                throw std::invalid_argument("repeated centers make the system singular");
            }
        }
    }
}

}  // namespace

std::vector<Rational> solve_power_weights(const std::vector<Rational>& nodes, unsigned k,
                                          unsigned N) {
    check_nodes(nodes, k, N);
    const std::size_t m = nodes.size();

    // Row r carries power l = 2k-1-r, ending at l = -N-1 on the last row.
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m + 1, Rational(0)));
    for (std::size_t r = 0; r < m; ++r) {
        long l = 2 * static_cast<long>(k) - 1 - static_cast<long>(r);
        for (std::size_t j = 0; j < m; ++j) {
            a[r][j] = rational_pow(nodes[j], l);
        }
        a[r][m] = r + 1 == m ? 1 : 0;
    }

    for (std::size_t col = 0; col < m; ++col) {
        std::size_t pivot = col;
        Rational best = abs(a[col][col]);
        for (std::size_t r = col + 1; r < m; ++r) {
            Rational mag = abs(a[r][col]);
            if (mag > best) {
                best = mag;
                pivot = r;
            }
        }
        if (best == 0) throw std::invalid_argument("singular system");
        std::swap(a[col], a[pivot]);
        for (std::size_t r = col + 1; r < m; ++r) {
            if (a[r][col] == 0) continue;
            Rational factor = a[r][col] / a[col][col];
            for (std::size_t j = col; j <= m; ++j) {
                a[r][j] -= factor * a[col][j];
            }
        }
    }

    std::vector<Rational> b(m, Rational(0));
    for (std::size_t i = m; i-- > 0;) {
        Rational acc = a[i][m];
        for (std::size_t j = i + 1; j < m; ++j) {
            acc -= a[i][j] * b[j];
        }
        b[i] = acc / a[i][i];
    }
    return b;
}

std::vector<Rational> closed_form_power_weights(const std::vector<Rational>& nodes, unsigned k,
                                                unsigned N) {
    check_nodes(nodes, k, N);
    std::vector<Rational> b;
    b.reserve(nodes.size());
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        Rational product(1);
        for (std::size_t l = 0; l < nodes.size(); ++l) {
            if (l == j) continue;
            product *= 1 - nodes[j] / nodes[l];
        }
        b.push_back(rational_pow(nodes[j], static_cast<long>(N) + 1) / product);
    }
    return b;
}

WeightVector solve_weights_exact(const CenterSet& centers, unsigned k, unsigned N) {
    if (k < 1) throw std::invalid_argument("weight solve requires k >= 1");
    return WeightVector{solve_power_weights(centers.values(), k, N), k, N, centers.values()};
}

WeightVector closed_form_weights(const CenterSet& centers, unsigned k, unsigned N) {
    if (k < 1) throw std::invalid_argument("weight solve requires k >= 1");
    return WeightVector{closed_form_power_weights(centers.values(), k, N), k, N, centers.values()};
}

std::vector<Rational> normalized_weights(const WeightVector& wv) {
    std::vector<Rational> c;
    c.reserve(wv.weights.size());
    for (std::size_t j = 0; j < wv.weights.size(); ++j) {
        c.push_back(wv.weights[j] / rational_pow(wv.centers[j], static_cast<long>(wv.degree_n) + 1));
    }
    return c;
}

}  // namespace mq
