// mqapprox: build and probe multiquadric translate approximations from the
// command line. Subcommands map one-to-one onto the library stages:
//
//   expand   print the expansion polynomial A[k,j]
//   weights  solve the inverted-power system for a center list
//   recover  defect table for polynomial recovery over doubling y_min
//   approx   full approximation run; writes approximant JSON + error CSV
//   verify   property suites (exit 4 when a check fails)
//   sweep    error-vs-y1 or error-vs-degree CSV for plotting
//
// All numeric output is deterministic for a fixed flag set (including the
// jitter seed and thread count). Exit codes: 0 ok, 2 bad config, 3
// computation gave up, 4 verification failure.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mqapprox/approximator.hpp"
#include "mqapprox/errors.hpp"
#include "mqapprox/expansion.hpp"
#include "mqapprox/expression.hpp"
#include "mqapprox/scalar.hpp"
#include "mqapprox/vandermonde.hpp"

namespace {

using nlohmann::json;

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_exponent(double p) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", p);
    return buf;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        parts.push_back(item);
    }
    return parts;
}

mq::Interval parse_interval(const std::string& text) {
    const auto parts = split_list(text);
    if (parts.size() != 2) {
        throw std::invalid_argument("interval must be given as a,b");
    }
    return mq::Interval(std::stod(parts[0]), std::stod(parts[1]));
}

std::vector<mq::Rational> parse_centers(const std::string& text) {
    std::vector<mq::Rational> centers;
    for (const auto& part : split_list(text)) {
        centers.push_back(mq::rational_from_string(part));
    }
    if (centers.empty()) {
        throw std::invalid_argument("at least one center is required");
    }
    return centers;
}

std::vector<double> parse_exponents(const std::string& text) {
    std::vector<double> out;
    for (const auto& part : split_list(text)) {
        out.push_back(std::stod(part));
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream ofs(path, std::ios::binary);
    if (!ofs) {
        throw std::invalid_argument("cannot open output file: " + path);
    }
    ofs << content;
    if (!ofs) {
        throw std::runtime_error("failed while writing " + path);
    }
}

// ---------------------------------------------------------------------------
// Shared flag bundles

struct SequenceSpec {
    std::string type = "lattice";  // lattice | jitter | file
    std::string radius = "1/4";
    std::uint64_t seed = 1;
    std::string path;

    mq::ScatteredSequence build() const {
        if (type == "lattice") {
            return mq::ScatteredSequence::integer_lattice();
        }
        if (type == "jitter") {
            return mq::ScatteredSequence::jittered_lattice(mq::rational_from_string(radius), seed);
        }
        if (type == "file") {
            if (path.empty()) {
                throw std::invalid_argument("--seq-file is required with --seq file");
            }
            return mq::ScatteredSequence::from_file(path);
        }
        throw std::invalid_argument("unknown sequence type: " + type);
    }
};

struct ApproxFlags {
    std::string expression;
    std::string interval = "-1,1";
    double epsilon = 1e-3;
    unsigned k = 1;
    std::string c = "1";
    SequenceSpec seq;
    std::size_t grid = 2049;
    std::string lp = "1,2,4";
    unsigned threads = 1;
    unsigned max_doublings = 40;
    unsigned max_proxy_degree = 64;
    int precision_scale = 1;
    std::string out_json = "approximant.json";
    std::string out_csv = "errors.csv";
    std::string config_path;
};

// RunConfig document: a JSON object whose fields override the equivalent
// flags. Unknown keys are rejected so typos fail fast.
void apply_config(ApproxFlags& flags, const std::string& path) {
    std::ifstream ifs(path);
    if (!ifs) {
        throw std::invalid_argument("cannot read config file: " + path);
    }
    json doc;
    try {
        doc = json::parse(ifs);
    } catch (const json::parse_error& err) {
        throw std::invalid_argument("config file " + path + ": " + err.what());
    }
    if (!doc.is_object()) {
        throw std::invalid_argument("config file must hold a JSON object");
    }
    for (const auto& [key, value] : doc.items()) {
        try {
            if (key == "f") {
                flags.expression = value.get<std::string>();
            } else if (key == "k") {
                flags.k = value.get<unsigned>();
            } else if (key == "c") {
                flags.c = value.is_string() ? value.get<std::string>()
                                            : mq::rational_to_string(mq::rational_from_double(
                                                  value.get<double>()));
            } else if (key == "interval") {
                if (!value.is_array() || value.size() != 2) {
                    throw std::invalid_argument("interval must be a two-element array");
                }
                flags.interval =
                    fmt17(value.at(0).get<double>()) + "," + fmt17(value.at(1).get<double>());
            } else if (key == "epsilon") {
                flags.epsilon = value.get<double>();
            } else if (key == "sequence") {
                for (const auto& [skey, sval] : value.items()) {
                    if (skey == "type") {
                        flags.seq.type = sval.get<std::string>();
                    } else if (skey == "radius") {
                        flags.seq.radius = sval.is_string()
                                               ? sval.get<std::string>()
                                               : mq::rational_to_string(
                                                     mq::rational_from_double(sval.get<double>()));
                    } else if (skey == "seed") {
                        flags.seq.seed = sval.get<std::uint64_t>();
                    } else if (skey == "path") {
                        flags.seq.path = sval.get<std::string>();
                    } else {
                        throw std::invalid_argument("unknown sequence key: " + skey);
                    }
                }
            } else if (key == "grid_points") {
                flags.grid = value.get<std::size_t>();
            } else if (key == "lp_exponents") {
                std::string joined;
                for (const auto& e : value) {
                    joined += (joined.empty() ? "" : ",") + fmt_exponent(e.get<double>());
                }
                flags.lp = joined;
            } else if (key == "threads") {
                flags.threads = value.get<unsigned>();
            } else if (key == "max_doublings") {
                flags.max_doublings = value.get<unsigned>();
            } else if (key == "max_proxy_degree") {
                flags.max_proxy_degree = value.get<unsigned>();
            } else if (key == "precision_scale") {
                flags.precision_scale = value.get<int>();
            } else if (key == "output_json") {
                flags.out_json = value.get<std::string>();
            } else if (key == "output_csv") {
                flags.out_csv = value.get<std::string>();
            } else {
                throw std::invalid_argument("unknown config key: " + key);
            }
        } catch (const json::exception& err) {
            throw std::invalid_argument("config key '" + key + "': " + err.what());
        }
    }
}

mq::TargetFunction target_from_expression(const std::string& text) {
    if (text.empty()) {
        throw std::invalid_argument("a target expression is required (--f)");
    }
    mq::Expression expr = mq::parse_expression(text);
    return mq::TargetFunction{[expr](double x) { return expr.evaluate(x); }, text};
}

// ---------------------------------------------------------------------------
// expand

int run_expand(unsigned k, const std::string& c, unsigned j) {
    mq::MultiquadricParams params(k, mq::rational_from_string(c));
    const mq::RationalPolynomial poly = mq::expansion_polynomial(params, j);
    std::cout << "A[" << k << "," << j << "](x) = " << poly.to_string() << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// weights

std::string join_rationals(const std::vector<mq::Rational>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        out += (i ? ", " : "") + mq::rational_to_string(values[i]);
    }
    return out;
}

int run_weights(unsigned k, unsigned n, const std::string& centers_text) {
    if (k == 0) {
        throw std::invalid_argument("k must be at least 1");
    }
    const std::vector<mq::Rational> centers = parse_centers(centers_text);
    bool doubling = true;
    for (std::size_t i = 1; i < centers.size(); ++i) {
        if (centers[i] < 2 * centers[i - 1]) {
            doubling = false;
        }
    }
    const std::vector<mq::Rational> b = mq::solve_power_weights(centers, k, n);
    std::vector<mq::Rational> normalized;
    normalized.reserve(b.size());
    mq::Rational max_abs;
    for (std::size_t j = 0; j < b.size(); ++j) {
        mq::Rational c_j = b[j] * mq::rational_pow(centers[j], -(static_cast<long>(n) + 1));
        if (abs(c_j) > max_abs) {
            max_abs = abs(c_j);
        }
        normalized.push_back(std::move(c_j));
    }
    std::cout << "b = " << join_rationals(b) << "\n";
    std::cout << "normalized = " << join_rationals(normalized) << "\n";
    const bool within = mq::to_double(max_abs) < mq::kNormalizedWeightBound;
    std::cout << "max |normalized| = " << mq::rational_to_string(max_abs) << " ("
              << fmt17(mq::to_double(max_abs)) << ")";
    if (doubling) {
        std::cout << (within ? " within bound 3.4628" : " EXCEEDS bound 3.4628") << "\n";
        return within ? 0 : 4;
    }
    std::cout << "; centers do not double, bound not guaranteed\n";
    return 0;
}

// ---------------------------------------------------------------------------
// recover

int run_recover(unsigned k, const std::string& c, unsigned n, const std::string& y_min_text,
                unsigned doublings, const std::string& interval_text, std::size_t grid,
                long precision) {
    mq::MultiquadricParams params(k, mq::rational_from_string(c));
    const mq::Interval interval = parse_interval(interval_text);
    const mq::RationalPolynomial target_poly = mq::expansion_polynomial(params, 2 * k + n);
    const mq::TargetFunction target{
        [target_poly](double x) { return target_poly(mq::BigFloat(x, 96)).to_double(); },
        "A[" + std::to_string(k) + "," + std::to_string(2 * k + n) + "]"};
    const auto seq = mq::ScatteredSequence::integer_lattice();
    const unsigned M = 2 * k + n + 1;

    mq::Rational y_min = mq::rational_from_string(y_min_text);
    std::cout << "y1,sup_defect,ratio\n";
    double prev = 0.0;
    for (unsigned step = 0; step <= doublings; ++step) {
        const mq::CenterSet centers = mq::select_centers(seq, M, y_min);
        const long prec = precision > 0
                              ? precision
                              : mq::required_precision_bits(k, n, mq::to_double(centers.back()) + 1);
        const mq::Approximant rec =
            mq::recover_expansion_polynomial(params, n, centers, interval, prec);
        const double defect = mq::sup_error(rec, target, interval, grid);
        std::cout << mq::rational_to_string(centers.front()) << "," << fmt17(defect);
        if (step > 0) {
            std::cout << "," << fmt17(prev / defect);
        } else {
            std::cout << ",";
        }
        std::cout << "\n";
        prev = defect;
        y_min *= 2;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// approx

int run_approx(const ApproxFlags& flags) {
    const mq::TargetFunction f = target_from_expression(flags.expression);
    const mq::Interval interval = parse_interval(flags.interval);
    mq::MultiquadricParams params(flags.k, mq::rational_from_string(flags.c));
    const mq::ScatteredSequence seq = flags.seq.build();

    mq::ApproxOptions options;
    options.grid_points = flags.grid;
    options.lp_exponents = parse_exponents(flags.lp);
    options.threads = flags.threads;
    options.max_doublings = flags.max_doublings;
    options.max_proxy_degree = flags.max_proxy_degree;
    options.precision_scale = flags.precision_scale;

    const mq::ApproxResult result =
        mq::approximate_function(f, interval, flags.epsilon, params, seq, options);
    const mq::Approximant& appr = result.approximant;

    std::cout << "target: " << f.description << " on [" << fmt17(interval.a) << ","
              << fmt17(interval.b) << "]\n";
    std::cout << "k=" << flags.k << " c=" << mq::rational_to_string(params.c)
              << " epsilon=" << fmt17(flags.epsilon) << "\n";
    std::cout << "proxy degree " << result.proxy_degree << "; y1 = "
              << mq::rational_to_string(result.y_min) << "; " << appr.terms().size()
              << " terms at " << appr.precision_bits() << " bits (" << result.doublings
              << " doublings)\n";
    std::cout << "sup_error = " << fmt17(result.report.sup_error) << " ("
              << result.report.grid_points << "-point grid)\n";

    std::string csv = "metric,value\n";
    csv += "sup_error," + fmt17(result.report.sup_error) + "\n";
    for (const auto& [p, err] : result.report.lp_errors) {
        const std::string name = "l" + fmt_exponent(p) + "_error";
        std::cout << name << " = " << fmt17(err) << "\n";
        csv += name + "," + fmt17(err) + "\n";
    }
    csv += "grid_points," + std::to_string(result.report.grid_points) + "\n";
    csv += "proxy_degree," + std::to_string(result.proxy_degree) + "\n";
    csv += "doublings," + std::to_string(result.doublings) + "\n";
    csv += "y1," + mq::rational_to_string(result.y_min) + "\n";
    csv += "terms," + std::to_string(appr.terms().size()) + "\n";
    csv += "precision_bits," + std::to_string(appr.precision_bits()) + "\n";

    write_text_file(flags.out_json, mq::approximant_to_json(appr));
    write_text_file(flags.out_csv, csv);
    std::cout << "wrote " << flags.out_json << "\n";
    std::cout << "wrote " << flags.out_csv << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// verify

struct SuiteResult {
    std::string name;
    unsigned checks = 0;
    unsigned failures = 0;
};

void report(std::vector<SuiteResult>& results, SuiteResult r) {
    std::cout << r.name << ": " << (r.checks - r.failures) << "/" << r.checks << " checks passed"
              << (r.failures ? "  <-- FAIL" : "") << "\n";
    results.push_back(std::move(r));
}

mq::RationalPolynomial random_poly(std::mt19937_64& rng, unsigned degree) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    std::vector<mq::Rational> coeffs(degree + 1);
    for (auto& coeff : coeffs) {
        coeff = mq::make_rational(num(rng), den(rng));
    }
    if (coeffs.back() == 0) {
        coeffs.back() = mq::make_rational(1);
    }
    return mq::RationalPolynomial(coeffs);
}

SuiteResult suite_lemma21(unsigned n_max, unsigned count, std::uint64_t seed) {
    SuiteResult r{"lemma21"};
    std::mt19937_64 rng(seed);
    for (unsigned N = 1; N <= n_max; ++N) {
        for (unsigned i = 0; i < count; ++i) {
            std::uniform_int_distribution<unsigned> pick(0, N - 1);
            // Degree below N annihilates; degree N leaves (-1)^N leading N!.
            const mq::RationalPolynomial low = random_poly(rng, pick(rng));
            ++r.checks;
            if (mq::alternating_binomial_sum(N, low) != 0) {
                ++r.failures;
            }
            const mq::RationalPolynomial full = random_poly(rng, N);
            mq::Rational expected = full.leading();
            for (unsigned m = 1; m <= N; ++m) {
                expected *= m;
            }
            if (N % 2 == 1) {
                expected = -expected;
            }
            ++r.checks;
            if (mq::alternating_binomial_sum(N, full) != expected) {
                ++r.failures;
            }
        }
    }
    return r;
}

SuiteResult suite_lemma41(unsigned k_max, unsigned j_max) {
    SuiteResult r{"lemma41"};
    for (unsigned k = 1; k <= k_max; ++k) {
        for (const char* c_text : {"1", "2", "1/3"}) {
            mq::MultiquadricParams params(k, mq::rational_from_string(c_text));
            for (unsigned j = 2 * k; j <= j_max; ++j) {
                ++r.checks;
                if (!mq::verify_coefficient_lemma(params, j).all_ok()) {
                    ++r.failures;
                }
            }
        }
    }
    return r;
}

mq::CenterSet random_doubling_centers(std::mt19937_64& rng, unsigned size) {
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

SuiteResult suite_vandermonde(unsigned count, std::uint64_t seed) {
    SuiteResult r{"vandermonde"};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<unsigned> pick_k(1, 3);
    std::uniform_int_distribution<unsigned> pick_n(0, 6);
    for (unsigned i = 0; i < count; ++i) {
        const unsigned k = pick_k(rng);
        const unsigned n = pick_n(rng);
        const mq::CenterSet centers = random_doubling_centers(rng, 2 * k + n + 1);
        const mq::WeightVector solved = mq::solve_weights_exact(centers, k, n);
        const mq::WeightVector closed = mq::closed_form_weights(centers, k, n);
        ++r.checks;
        if (solved.weights != closed.weights) {
            ++r.failures;
        }
        ++r.checks;
        bool bounded = true;
        for (const auto& c_j : mq::normalized_weights(solved)) {
            if (!(mq::to_double(abs(c_j)) < mq::kNormalizedWeightBound)) {
                bounded = false;
            }
        }
        if (!bounded) {
            ++r.failures;
        }
    }
    return r;
}

SuiteResult suite_hoelder(unsigned threads) {
    SuiteResult r{"hoelder"};
    const mq::TargetFunction f{[](double x) { return std::exp(x); }, "exp(x)"};
    const mq::Interval interval(0.0, 1.0);
    mq::ApproxOptions options;
    options.threads = threads;
    const mq::MultiquadricParams params(1, mq::make_rational(1));
    const mq::ApproxResult result = mq::approximate_function(
        f, interval, 1e-2, params, mq::ScatteredSequence::integer_lattice(), options);
    for (const auto& [p, err] : result.report.lp_errors) {
        ++r.checks;
        const double allowance =
            std::pow(interval.width(), 1.0 / p) * result.report.sup_error + 1e-9;
        if (!(err <= allowance)) {
            ++r.failures;
        }
    }
    return r;
}

int run_verify(const std::string& suite, unsigned k_max, unsigned j_max, unsigned n_max,
               unsigned count, std::uint64_t seed, unsigned threads) {
    std::vector<SuiteResult> results;
    const bool all = suite == "all";
    if (all || suite == "lemma21") {
        report(results, suite_lemma21(n_max, count, seed));
    }
    if (all || suite == "lemma41" || suite == "lemma") {
        report(results, suite_lemma41(k_max, j_max));
    }
    if (all || suite == "vandermonde") {
        report(results, suite_vandermonde(count, seed));
    }
    if (all || suite == "hoelder") {
        report(results, suite_hoelder(threads));
    }
    if (results.empty()) {
        throw std::invalid_argument("unknown suite: " + suite +
                                    " (expected lemma21, lemma41, vandermonde, hoelder, or all)");
    }
    unsigned failures = 0;
    for (const auto& r : results) {
        failures += r.failures;
    }
    if (failures) {
        std::cout << failures << " check(s) failed\n";
        return 4;
    }
    std::cout << "all checks passed\n";
    return 0;
}

// ---------------------------------------------------------------------------
// sweep

int run_sweep(const ApproxFlags& flags, const std::string& mode, unsigned proxy_degree,
              unsigned steps, const std::string& y_min_text, const std::string& out_path) {
    const mq::TargetFunction f = target_from_expression(flags.expression);
    const mq::Interval interval = parse_interval(flags.interval);
    mq::MultiquadricParams params(flags.k, mq::rational_from_string(flags.c));
    const mq::ScatteredSequence seq = flags.seq.build();
    const mq::Rational threshold = mq::convergence_threshold(
        params, mq::rational_from_double(interval.abs_max()));
    mq::Rational y_min = y_min_text.empty() ? mq::Rational(mq::rational_ceil(threshold))
                                            : mq::rational_from_string(y_min_text);

    std::string csv;
    auto row_errors = [&](const mq::Approximant& appr) {
        const double sup = mq::sup_error(appr, f, interval, flags.grid, flags.threads);
        const double l1 = mq::lp_error(appr, f, interval, 1.0, flags.grid, flags.threads);
        const double l2 = mq::lp_error(appr, f, interval, 2.0, flags.grid, flags.threads);
        return fmt17(sup) + "," + fmt17(l1) + "," + fmt17(l2);
    };
    auto precision_for = [&](unsigned degree, const mq::Rational& y) {
        const mq::CenterSet centers =
            mq::select_centers(seq, 2 * params.k + degree + 1, y);
        return mq::required_precision_bits(params.k, degree, mq::to_double(centers.back()) + 1) *
               flags.precision_scale;
    };

    if (mode == "y1") {
        const mq::RationalPolynomial proxy =
            mq::chebyshev_proxy(f, interval, proxy_degree, 192);
        const unsigned degree = proxy.is_zero() ? 0 : static_cast<unsigned>(proxy.degree());
        csv = "y1,grid_sup_error,l1_error,l2_error\n";
        for (unsigned step = 0; step < steps; ++step) {
            const mq::Approximant appr = mq::approximate_polynomial(
                params, proxy, interval, seq, y_min, precision_for(degree, y_min));
            const mq::Rational y1 =
                appr.terms().empty() ? y_min : appr.terms().front().center;
            csv += mq::rational_to_string(y1) + "," + row_errors(appr) + "\n";
            y_min *= 2;
        }
    } else if (mode == "degree") {
        csv = "degree,grid_sup_error,l1_error,l2_error\n";
        for (unsigned degree = 0; degree <= proxy_degree; ++degree) {
            const mq::RationalPolynomial proxy = mq::chebyshev_proxy(f, interval, degree, 192);
            const unsigned effective =
                proxy.is_zero() ? 0 : static_cast<unsigned>(proxy.degree());
            const mq::Approximant appr = mq::approximate_polynomial(
                params, proxy, interval, seq, y_min, precision_for(effective, y_min));
            csv += std::to_string(degree) + "," + row_errors(appr) + "\n";
        }
    } else {
        throw std::invalid_argument("unknown sweep mode: " + mode + " (expected y1 or degree)");
    }

    if (out_path.empty()) {
        std::cout << csv;
    } else {
        write_text_file(out_path, csv);
        std::cout << "wrote " << out_path << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multiquadric translate approximation toolkit"};
    app.require_subcommand(1);

    // expand
    unsigned expand_k = 1;
    unsigned expand_j = 0;
    std::string expand_c = "1";
    auto* expand = app.add_subcommand("expand", "print the expansion polynomial A[k,j]");
    expand->add_option("--k", expand_k, "multiquadric order k >= 1");
    expand->add_option("--c", expand_c, "shape parameter c > 0 (rational)");
    expand->add_option("--j", expand_j, "expansion index j >= 0")->required();

    // weights
    unsigned weights_k = 1;
    unsigned weights_n = 0;
    std::string weights_centers;
    auto* weights = app.add_subcommand("weights", "solve the inverted-power weight system");
    weights->add_option("--k", weights_k, "multiquadric order k >= 1");
    weights->add_option("--n", weights_n, "polynomial degree index N >= 0");
    weights->add_option("--centers", weights_centers, "comma-separated centers, e.g. 8,16,32")
        ->required();

    // recover
    unsigned recover_k = 1;
    unsigned recover_n = 0;
    unsigned recover_doublings = 4;
    std::string recover_c = "1";
    std::string recover_y_min = "8";
    std::string recover_interval = "-1,1";
    std::size_t recover_grid = 129;
    long recover_precision = 0;
    auto* recover = app.add_subcommand("recover", "defect table for expansion recovery");
    recover->add_option("--k", recover_k, "multiquadric order k >= 1");
    recover->add_option("--c", recover_c, "shape parameter c > 0 (rational)");
    recover->add_option("--n", recover_n, "recover A[k,2k+n]");
    recover->add_option("--y-min", recover_y_min, "starting y_min (rational)");
    recover->add_option("--doublings", recover_doublings, "number of y_min doublings");
    recover->add_option("--interval", recover_interval, "interval a,b");
    recover->add_option("--grid", recover_grid, "grid points for the sup defect");
    recover->add_option("--precision", recover_precision, "override working precision bits");

    // approx
    ApproxFlags approx_flags;
    auto* approx = app.add_subcommand("approx", "approximate a target function");
    approx->add_option("--f", approx_flags.expression, "target expression, e.g. exp(x)");
    approx->add_option("--interval", approx_flags.interval, "interval a,b");
    approx->add_option("--epsilon", approx_flags.epsilon, "target sup-error tolerance");
    approx->add_option("--k", approx_flags.k, "multiquadric order k >= 1");
    approx->add_option("--c", approx_flags.c, "shape parameter c > 0 (rational)");
    approx->add_option("--seq", approx_flags.seq.type, "center sequence: lattice|jitter|file");
    approx->add_option("--jitter-radius", approx_flags.seq.radius, "jitter radius in [0,1/2)");
    approx->add_option("--seed", approx_flags.seq.seed, "jitter seed");
    approx->add_option("--seq-file", approx_flags.seq.path, "file with one point per line");
    approx->add_option("--grid", approx_flags.grid, "error grid points");
    approx->add_option("--lp", approx_flags.lp, "comma-separated L^p exponents");
    approx->add_option("--threads", approx_flags.threads, "grid evaluation threads");
    approx->add_option("--max-doublings", approx_flags.max_doublings, "y_min doubling cap");
    approx->add_option("--max-proxy-degree", approx_flags.max_proxy_degree, "proxy degree cap");
    approx->add_option("--precision-scale", approx_flags.precision_scale,
                       "multiply planned precision");
    approx->add_option("--out-json", approx_flags.out_json, "approximant output path");
    approx->add_option("--out-csv", approx_flags.out_csv, "error report output path");
    approx->add_option("--config", approx_flags.config_path, "RunConfig JSON overriding flags");

    // verify
    std::string verify_suite = "all";
    unsigned verify_k_max = 4;
    unsigned verify_j_max = 14;
    unsigned verify_n_max = 12;
    unsigned verify_count = 100;
    unsigned verify_threads = 1;
    std::uint64_t verify_seed = 12345;
    auto* verify = app.add_subcommand("verify", "run property suites");
    verify->add_option("--suite", verify_suite, "lemma21|lemma41|vandermonde|hoelder|all");
    verify->add_option("--k-max", verify_k_max, "largest k");
    verify->add_option("--j-max", verify_j_max, "largest expansion index j");
    verify->add_option("--n-max", verify_n_max, "largest N for lemma21");
    verify->add_option("--count", verify_count, "randomized cases per suite");
    verify->add_option("--seed", verify_seed, "RNG seed");
    verify->add_option("--threads", verify_threads, "grid evaluation threads");

    // sweep
    ApproxFlags sweep_flags;
    std::string sweep_mode = "y1";
    std::string sweep_y_min;
    std::string sweep_out;
    unsigned sweep_proxy_degree = 8;
    unsigned sweep_steps = 6;
    auto* sweep = app.add_subcommand("sweep", "error sweep CSV for plotting");
    sweep->add_option("--mode", sweep_mode, "y1 (error vs y1) or degree (error vs degree)");
    sweep->add_option("--f", sweep_flags.expression, "target expression");
    sweep->add_option("--interval", sweep_flags.interval, "interval a,b");
    sweep->add_option("--k", sweep_flags.k, "multiquadric order k >= 1");
    sweep->add_option("--c", sweep_flags.c, "shape parameter c > 0 (rational)");
    sweep->add_option("--seq", sweep_flags.seq.type, "center sequence: lattice|jitter|file");
    sweep->add_option("--jitter-radius", sweep_flags.seq.radius, "jitter radius in [0,1/2)");
    sweep->add_option("--seed", sweep_flags.seq.seed, "jitter seed");
    sweep->add_option("--seq-file", sweep_flags.seq.path, "file with one point per line");
    sweep->add_option("--grid", sweep_flags.grid, "error grid points");
    sweep->add_option("--threads", sweep_flags.threads, "grid evaluation threads");
    sweep->add_option("--proxy-degree", sweep_proxy_degree,
                      "proxy degree (y1 mode) or degree cap (degree mode)");
    sweep->add_option("--steps", sweep_steps, "doubling steps in y1 mode");
    sweep->add_option("--y-min", sweep_y_min, "starting y_min (defaults to the threshold)");
    sweep->add_option("--precision-scale", sweep_flags.precision_scale,
                      "multiply planned precision");
    sweep->add_option("--out", sweep_out, "write CSV here instead of stdout");
    sweep->add_option("--config", sweep_flags.config_path, "RunConfig JSON overriding flags");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);
        }
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(expand)) {
            return run_expand(expand_k, expand_c, expand_j);
        }
        if (app.got_subcommand(weights)) {
            return run_weights(weights_k, weights_n, weights_centers);
        }
        if (app.got_subcommand(recover)) {
            return run_recover(recover_k, recover_c, recover_n, recover_y_min, recover_doublings,
                               recover_interval, recover_grid, recover_precision);
        }
        if (app.got_subcommand(approx)) {
            if (!approx_flags.config_path.empty()) {
                apply_config(approx_flags, approx_flags.config_path);
            }
            return run_approx(approx_flags);
        }
        if (app.got_subcommand(verify)) {
            return run_verify(verify_suite, verify_k_max, verify_j_max, verify_n_max, verify_count,
                              verify_seed, verify_threads);
        }
        if (app.got_subcommand(sweep)) {
            if (!sweep_flags.config_path.empty()) {
                apply_config(sweep_flags, sweep_flags.config_path);
            }
            return run_sweep(sweep_flags, sweep_mode, sweep_proxy_degree, sweep_steps, sweep_y_min,
                             sweep_out);
        }
    } catch (const mq::CapExceeded& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 3;
    } catch (const mq::SequenceExhausted& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 3;
    } catch (const mq::ParseError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 3;
    }
    return 0;
}
