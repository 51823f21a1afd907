#include "mqapprox/approximator.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <thread>

#include "mqapprox/errors.hpp"
#include "mqapprox/scalar.hpp"
#include "mqapprox/vandermonde.hpp"

namespace mq {

namespace {

constexpr long kMinPrecision = 16;

void check_precision(long bits) {
    if (bits < kMinPrecision) {
        throw std::invalid_argument("precision must be at least 16 bits");
    }
}

void check_threads(unsigned threads) {
    if (threads == 0) {
        throw std::invalid_argument("thread count must be positive");
    }
}

void check_grid(std::size_t grid_points) {
    if (grid_points < 2) {
        throw std::invalid_argument("error grids need at least two points");
    }
}

double checked_sample(const TargetFunction& f, double x) {
    double v = f(x);
    if (!std::isfinite(v)) {
        throw std::domain_error("target function returned a non-finite value");
    }
    return v;
}

/// Equispaced grid over [a, b] including both endpoints; sample(i, x_i) is
/// filled index-parallel, so the result does not depend on the thread
/// count.
std::vector<double> tabulate_grid(const Interval& interval, std::size_t grid_points,
                                  unsigned threads, const std::function<double(double)>& sample) {
    std::vector<double> values(grid_points);
    const double step = interval.width() / static_cast<double>(grid_points - 1);
    auto point = [&](std::size_t i) {
        return i + 1 == grid_points ? interval.b : interval.a + step * static_cast<double>(i);
    };
    auto run = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            values[i] = sample(point(i));
        }
    };
    const std::size_t workers = std::min<std::size_t>(threads, grid_points);
    if (workers <= 1) {
        run(0, grid_points);
        return values;
    }
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const std::size_t chunk = (grid_points + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(grid_points, lo + chunk);
        if (lo >= hi) {
            break;
        }
        pool.emplace_back([&, lo, hi] {
            try {
                run(lo, hi);
            } catch (...) {
                std::lock_guard<std::mutex> hold(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return values;
}

double max_of(const std::vector<double>& values) {
    double best = 0.0;
    for (double v : values) {
        best = std::max(best, v);
    }
    return best;
}

}  // namespace

Interval::Interval(double a, double b) : a(a), b(b) {
    if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
        throw std::invalid_argument("interval endpoints must be finite with a < b");
    }
}

double Interval::abs_max() const { return std::max(std::fabs(a), std::fabs(b)); }

Approximant::Approximant(MultiquadricParams params, std::vector<ApproximantTerm> terms,
                         Interval interval, long precision_bits)
    : params_(std::move(params)),
      terms_(std::move(terms)),
      interval_(interval),
      precision_bits_(precision_bits) {
    check_precision(precision_bits_);
    const Rational threshold =
        convergence_threshold(params_, rational_from_double(interval_.abs_max()));
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].center < threshold) {
            throw std::invalid_argument("approximant centers must clear the expansion threshold");
        }
        if (i > 0 && !(terms_[i - 1].center < terms_[i].center)) {
            throw std::invalid_argument("approximant centers must be strictly increasing");
        }
    }
}

namespace {

BigFloat evaluate_terms(const MultiquadricParams& params, const std::vector<ApproximantTerm>& terms,
                        const BigFloat& x, long prec) {
    BigFloat acc(0L, prec);
    for (const auto& term : terms) {
        const BigFloat shift = x - BigFloat(term.center, prec);
        acc += BigFloat(term.coeff, prec) * multiquadric_eval(params, shift, prec);
    }
    return acc;
}

}  // namespace

double Approximant::evaluate(double x) const {
    return evaluate_at_precision(x, precision_bits_).to_double();
}

BigFloat Approximant::evaluate_hp(const BigFloat& x) const {
    const long prec = std::max(x.precision(), precision_bits_);
    return evaluate_terms(params_, terms_, BigFloat(x, prec), prec);
}

BigFloat Approximant::evaluate_at_precision(double x, long bits) const {
    check_precision(bits);
    return evaluate_terms(params_, terms_, BigFloat(x, bits), bits);
}

Approximant recover_expansion_polynomial(const MultiquadricParams& params, unsigned N,
                                         const CenterSet& centers, const Interval& interval,
                                         long precision) {
    check_precision(precision);
    const WeightVector wv = solve_weights_exact(centers, params.k, N);
    std::vector<ApproximantTerm> terms;
    terms.reserve(wv.weights.size());
    for (std::size_t j = 0; j < wv.weights.size(); ++j) {
        terms.push_back({wv.centers[j], BigFloat(wv.weights[j], precision)});
    }
    return Approximant(params, std::move(terms), interval, precision);
}

std::vector<Rational> a_basis_decompose(const MultiquadricParams& params,
                                        const RationalPolynomial& p) {
    if (p.is_zero()) {
        return {};
    }
    ExpansionTable table(params);
    const int top = p.degree();
    std::vector<Rational> coeffs(static_cast<std::size_t>(top) + 1);
    RationalPolynomial residual = p;
    for (int N = top; N >= 0; --N) {
        const unsigned j = 2 * params.k + static_cast<unsigned>(N);
        const Rational cN = residual.coefficient(static_cast<unsigned>(N)) /
                            leading_coefficient(params, j);
        coeffs[static_cast<std::size_t>(N)] = cN;
        if (cN != 0) {
            residual = residual - cN * table.poly(j);
        }
    }
    if (!residual.is_zero()) {
        throw std::logic_error("basis reduction left a nonzero residual");
    }
    return coeffs;
}

Approximant approximate_polynomial(const MultiquadricParams& params, const RationalPolynomial& p,
                                   const Interval& interval, const ScatteredSequence& seq,
                                   const Rational& y_min, long precision) {
    check_precision(precision);
    const Rational threshold =
        convergence_threshold(params, rational_from_double(interval.abs_max()));
    if (y_min < threshold) {
        throw std::domain_error("y_min sits below the expansion threshold for this interval");
    }
    if (p.is_zero()) {
        return Approximant(params, {}, interval, precision);
    }
    const unsigned degree = static_cast<unsigned>(p.degree());
    const unsigned M = 2 * params.k + degree + 1;
    const CenterSet centers = select_centers(seq, M, y_min);
    const std::vector<Rational> coeffs = a_basis_decompose(params, p);
    std::vector<Rational> combined(M);
    for (unsigned N = 0; N <= degree; ++N) {
        if (coeffs[N] == 0) {
            continue;
        }
        const WeightVector wv =
            solve_weights_exact(centers.prefix(2 * params.k + N + 1), params.k, N);
        for (std::size_t j = 0; j < wv.weights.size(); ++j) {
            combined[j] += coeffs[N] * wv.weights[j];
        }
    }
    std::vector<ApproximantTerm> terms;
    terms.reserve(M);
    for (unsigned j = 0; j < M; ++j) {
        terms.push_back({centers[j], BigFloat(combined[j], precision)});
    }
    return Approximant(params, std::move(terms), interval, precision);
}

RationalPolynomial chebyshev_proxy(const TargetFunction& f, const Interval& interval,
                                   unsigned degree, long working_precision) {
    if (working_precision < 53) {
        throw std::invalid_argument("proxy interpolation needs at least 53 working bits");
    }
    const long wp = working_precision;
    const std::size_t count = static_cast<std::size_t>(degree) + 1;
    const BigFloat two(2L, wp);
    const BigFloat mid = (BigFloat(interval.a, wp) + BigFloat(interval.b, wp)) / two;
    const BigFloat half = (BigFloat(interval.b, wp) - BigFloat(interval.a, wp)) / two;
    const BigFloat pi = BigFloat::pi(wp);
    const BigFloat slots(static_cast<long>(2 * count), wp);

    std::vector<BigFloat> nodes;
    std::vector<BigFloat> table;
    nodes.reserve(count);
    table.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const BigFloat theta = pi * BigFloat(static_cast<long>(2 * i + 1), wp) / slots;
        nodes.push_back(mid + half * BigFloat::cos(theta));
        if (i > 0 && nodes[i] == nodes[i - 1]) {
            throw std::domain_error("working precision too low to separate interpolation nodes");
        }
        table.emplace_back(checked_sample(f, nodes[i].to_double()), wp);
    }
    // Newton divided differences over the (strictly decreasing) nodes.
    for (std::size_t level = 1; level < count; ++level) {
        for (std::size_t i = count - 1; i >= level; --i) {
            table[i] = (table[i] - table[i - 1]) / (nodes[i] - nodes[i - level]);
        }
    }
    // The dyadic table entries convert exactly; the Newton-to-monomial
    // expansion is then exact rational arithmetic.
    RationalPolynomial poly = RationalPolynomial::constant(table[count - 1].to_rational());
    for (std::size_t i = count - 1; i > 0; --i) {
        const Rational t = nodes[i - 1].to_rational();
        poly = poly * RationalPolynomial({-t, make_rational(1)}) +
               RationalPolynomial::constant(table[i - 1].to_rational());
    }
    return poly;
}

double polynomial_sup_error(const RationalPolynomial& p, const TargetFunction& f,
                            const Interval& interval, std::size_t grid_points, unsigned threads) {
    check_grid(grid_points);
    check_threads(threads);
    const long prec = 192;
    auto sample = [&](double x) {
        const BigFloat diff = p(BigFloat(x, prec)) - BigFloat(checked_sample(f, x), prec);
        return BigFloat::abs(diff).to_double();
    };
    return max_of(tabulate_grid(interval, grid_points, threads, sample));
}

namespace {

std::vector<double> approximant_grid_diffs(const Approximant& appr, const TargetFunction& f,
                                           const Interval& interval, std::size_t grid_points,
                                           unsigned threads, long precision) {
    auto sample = [&](double x) {
        const BigFloat diff =
            BigFloat(checked_sample(f, x), precision) - appr.evaluate_at_precision(x, precision);
        return BigFloat::abs(diff).to_double();
    };
    return tabulate_grid(interval, grid_points, threads, sample);
}

}  // namespace

double sup_error(const Approximant& appr, const TargetFunction& f, const Interval& interval,
                 std::size_t grid_points, unsigned threads, long precision_override) {
    check_grid(grid_points);
    check_threads(threads);
    const long prec = precision_override > 0 ? precision_override : appr.precision_bits();
    check_precision(prec);
    return max_of(approximant_grid_diffs(appr, f, interval, grid_points, threads, prec));
}

double lp_error(const Approximant& appr, const TargetFunction& f, const Interval& interval,
                double p, std::size_t grid_points, unsigned threads) {
    check_grid(grid_points);
    check_threads(threads);
    if (!std::isfinite(p) || p < 1.0) {
        throw std::invalid_argument("L^p error needs a finite exponent p >= 1");
    }
    const std::vector<double> diffs = approximant_grid_diffs(appr, f, interval, grid_points,
                                                             threads, appr.precision_bits());
    // Composite trapezoid rule: half weight on both endpoints.
    const double h = interval.width() / static_cast<double>(grid_points - 1);
    double total = 0.0;
    for (std::size_t i = 0; i < diffs.size(); ++i) {
        const double w = (i == 0 || i + 1 == diffs.size()) ? 0.5 : 1.0;
        total += w * std::pow(diffs[i], p);
    }
    return std::pow(h * total, 1.0 / p);
}

ApproxResult approximate_function(const TargetFunction& f, const Interval& interval,
                                  double epsilon, const MultiquadricParams& params,
                                  const ScatteredSequence& seq, const ApproxOptions& options) {
    if (!std::isfinite(epsilon) || epsilon <= 0.0) {
        throw std::invalid_argument("tolerance must be positive");
    }
    check_grid(options.grid_points);
    check_threads(options.threads);
    if (options.precision_scale < 1) {
        throw std::invalid_argument("precision scale must be at least 1");
    }

    // Stage 1: cheapest Chebyshev proxy whose own defect leaves half the
    // budget for the translate stage.
    RationalPolynomial proxy;
    unsigned proxy_degree = 0;
    bool proxy_found = false;
    for (unsigned n = 0; n <= options.max_proxy_degree; ++n) {
        proxy = chebyshev_proxy(f, interval, n, options.proxy_working_precision);
        const double defect =
            polynomial_sup_error(proxy, f, interval, options.grid_points, options.threads);
        if (defect < epsilon / 2.0) {
            proxy_degree = n;
            proxy_found = true;
            break;
        }
    }
    if (!proxy_found) {
        throw CapExceeded("no polynomial proxy within the degree cap reached half the tolerance");
    }

    // Stage 2: push the centers out until the measured total error clears
    // the tolerance. Working precision tracks the largest center.
    const unsigned basis_degree = proxy.is_zero() ? 0 : static_cast<unsigned>(proxy.degree());
    const unsigned M = 2 * params.k + basis_degree + 1;
    const Rational threshold =
        convergence_threshold(params, rational_from_double(interval.abs_max()));
    Rational y_min(rational_ceil(threshold));
    for (unsigned d = 0; d <= options.max_doublings; ++d) {
        const CenterSet centers = select_centers(seq, M, y_min);
        const long precision =
            required_precision_bits(params.k, basis_degree, to_double(centers.back()) + 1.0) *
            options.precision_scale;
        const Approximant appr =
            approximate_polynomial(params, proxy, interval, seq, y_min, precision);
        const double sup =
            sup_error(appr, f, interval, options.grid_points, options.threads);
        if (sup < epsilon) {
            ErrorReport report;
            report.sup_error = sup;
            report.grid_points = options.grid_points;
            for (double exponent : options.lp_exponents) {
                report.lp_errors[exponent] =
                    lp_error(appr, f, interval, exponent, options.grid_points, options.threads);
            }
            return ApproxResult{appr, report, proxy_degree, y_min, d};
        }
        y_min *= 2;
    }
    throw CapExceeded("tolerance not reached within the center doubling cap");
}

}  // namespace mq
