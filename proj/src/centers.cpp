#include "mqapprox/centers.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "mqapprox/errors.hpp"

namespace mq {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

constexpr long kJitterGrain = 65536;  // offsets live on radius * [-1, 1] / 2^16

}  // namespace

bool validate_separation(const std::vector<Rational>& sorted_points, const Rational& delta) {
    if (delta <= 0) throw std::invalid_argument("separation delta must be positive");
    for (std::size_t i = 1; i < sorted_points.size(); ++i) {
        if (sorted_points[i] < sorted_points[i - 1]) {
            throw std::invalid_argument("validate_separation requires ascending input");
        }
    }
    for (std::size_t i = 1; i < sorted_points.size(); ++i) {
        if (sorted_points[i] - sorted_points[i - 1] < delta) return false;
    }
    return true;
}

ScatteredSequence::ScatteredSequence(std::variant<Lattice, Jitter, List> source, Rational delta)
    : source_(std::move(source)), delta_(std::move(delta)) {}

ScatteredSequence ScatteredSequence::integer_lattice() {
    return ScatteredSequence(Lattice{}, Rational(1));
}

ScatteredSequence ScatteredSequence::jittered_lattice(const Rational& jitter_radius,
                                                      std::uint64_t seed) {
    if (jitter_radius < 0 || jitter_radius >= make_rational(1, 2)) {
        throw std::invalid_argument("jitter radius must lie in [0, 1/2)");
    }
    return ScatteredSequence(Jitter{jitter_radius, seed}, 1 - 2 * jitter_radius);
}

ScatteredSequence ScatteredSequence::explicit_list(std::vector<Rational> points) {
    if (points.empty()) throw std::invalid_argument("explicit sequence must be nonempty");
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i] <= points[i - 1]) {
            throw std::invalid_argument("explicit sequence must be strictly increasing");
        }
    }
    Rational delta(1);
    for (std::size_t i = 1; i < points.size(); ++i) {
        Rational gap = points[i] - points[i - 1];
        if (i == 1 || gap < delta) delta = gap;
    }
    return ScatteredSequence(List{std::move(points)}, delta);
}

ScatteredSequence ScatteredSequence::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open sequence file '" + path + "'");
    std::vector<Rational> points;
    std::string line;
    while (std::getline(in, line)) {
        std::size_t begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos || line[begin] == '#') continue;
        points.push_back(rational_from_string(line));
    }
    if (points.empty()) throw std::invalid_argument("sequence file '" + path + "' has no points");
    return explicit_list(std::move(points));
}

bool ScatteredSequence::finite() const {
    return std::holds_alternative<List>(source_);
}

Rational ScatteredSequence::jitter_point(const Jitter& j, long n) const {
    std::uint64_t h = splitmix64(j.seed ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(n)));
    long centered = static_cast<long>(h % (2 * kJitterGrain + 1)) - kJitterGrain;
    return Rational(n) + j.radius * make_rational(centered, kJitterGrain);
}

Rational ScatteredSequence::next_at_least(const Rational& t) const {
    if (const auto* lattice = std::get_if<Lattice>(&source_)) {
        (void)lattice;
        return Rational(rational_ceil(t));
    }
    if (const auto* jitter = std::get_if<Jitter>(&source_)) {
        Rational start = t - jitter->radius;
        Integer n0 = rational_floor(start);
        if (!n0.fits_slong_p()) throw std::overflow_error("lattice index out of range");
        long n = n0.get_si();
        Rational p = jitter_point(*jitter, n);
        while (p < t) {
            ++n;
            p = jitter_point(*jitter, n);
        }
        return p;
    }
    const auto& points = std::get<List>(source_).points;
    auto it = std::lower_bound(points.begin(), points.end(), t);
    if (it == points.end()) {
        throw SequenceExhausted("no sequence element at or above " + rational_to_string(t));
    }
    return *it;
}

CenterSet::CenterSet(std::vector<Rational> centers) : centers_(std::move(centers)) {
    if (centers_.empty()) throw std::invalid_argument("center set must be nonempty");
    if (centers_.front() <= 0) throw std::invalid_argument("centers must be positive");
    for (std::size_t i = 1; i < centers_.size(); ++i) {
        if (centers_[i] < 2 * centers_[i - 1]) {
            throw std::invalid_argument("centers must satisfy y_j >= 2*y_{j-1}");
        }
    }
}

CenterSet CenterSet::prefix(std::size_t m) const {
    if (m == 0 || m > centers_.size()) throw std::invalid_argument("bad center prefix length");
    return CenterSet(std::vector<Rational>(centers_.begin(), centers_.begin() + m));
}

Rational next_at_least(const ScatteredSequence& seq, const Rational& t) {
    return seq.next_at_least(t);
}

CenterSet select_centers(const ScatteredSequence& seq, unsigned M, const Rational& y_min) {
    if (M < 1) throw std::invalid_argument("select_centers requires M >= 1");
    if (y_min <= 0) throw std::invalid_argument("select_centers requires y_min > 0");
    std::vector<Rational> centers;
    centers.reserve(M);
    centers.push_back(seq.next_at_least(y_min));
    for (unsigned j = 1; j < M; ++j) {
        centers.push_back(seq.next_at_least(2 * centers.back()));
    }
    return CenterSet(std::move(centers));
}

}  // namespace mq
