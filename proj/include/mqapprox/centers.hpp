#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "mqapprox/rational.hpp"

namespace mq {

/// True iff every adjacent gap in the ascending list is at least delta.
/// Rejects descending input and nonpositive delta.
bool validate_separation(const std::vector<Rational>& sorted_points, const Rational& delta);

/// A delta-separated source of exact rational points: the integer lattice,
/// a jittered lattice (integers plus deterministic per-point offsets
/// bounded by a radius below 1/2), or an explicit strictly increasing
/// finite list. Lattice sources are unbounded above.
class ScatteredSequence {
public:
    static ScatteredSequence integer_lattice();
    static ScatteredSequence jittered_lattice(const Rational& jitter_radius, std::uint64_t seed);
    static ScatteredSequence explicit_list(std::vector<Rational> points);
    /// One number per line ("8", "3/4", "2.5"); blank lines and lines
    /// starting with '#' are skipped. The values must be strictly increasing.
    static ScatteredSequence from_file(const std::string& path);

    const Rational& declared_delta() const { return delta_; }
    bool finite() const;

    /// Smallest sequence element >= t. Throws SequenceExhausted when a
    /// finite list has none.
    Rational next_at_least(const Rational& t) const;

private:
    struct Lattice {};
    struct Jitter {
        Rational radius;
        std::uint64_t seed;
    };
    struct List {
        std::vector<Rational> points;
    };

    ScatteredSequence(std::variant<Lattice, Jitter, List> source, Rational delta);
    Rational jitter_point(const Jitter& j, long n) const;

    std::variant<Lattice, Jitter, List> source_;
    Rational delta_;
};

/// Strictly increasing positive centers y_1 < ... < y_M with the doubling
/// property y_j >= 2 y_{j-1}. Validated at construction.
class CenterSet {
public:
    explicit CenterSet(std::vector<Rational> centers);

    std::size_t size() const { return centers_.size(); }
    const Rational& operator[](std::size_t i) const { return centers_[i]; }
    const std::vector<Rational>& values() const { return centers_; }
    const Rational& front() const { return centers_.front(); }
    const Rational& back() const { return centers_.back(); }
    /// First m centers (a doubling set in its own right).
    CenterSet prefix(std::size_t m) const;

private:
    std::vector<Rational> centers_;
};

Rational next_at_least(const ScatteredSequence& seq, const Rational& t);

/// Greedy doubling selection: y_1 is the first element at or above y_min,
/// then y_j is the first element at or above 2*y_{j-1}.
CenterSet select_centers(const ScatteredSequence& seq, unsigned M, const Rational& y_min);

}  // namespace mq
