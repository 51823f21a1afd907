#pragma once

#include <mpfr.h>

#include <string>

#include "mqapprox/rational.hpp"

namespace mq {

/// Binary floating-point value with explicit precision, backed by MPFR.
///
/// The precision (in bits) is fixed when a value is constructed; every
/// arithmetic operation rounds its result to the larger of the operand
/// precisions, so mixing precisions widens rather than silently
/// truncates. All rounding is to nearest.
class BigFloat {
public:
    /// NaN at the given precision.
    explicit BigFloat(long precision_bits = 64);
    BigFloat(double value, long precision_bits);
    BigFloat(long value, long precision_bits);
    BigFloat(const Rational& value, long precision_bits);
    /// Re-round an existing value to a new precision.
    BigFloat(const BigFloat& other, long precision_bits);

    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    /// Parses a decimal string (as produced by to_string) at the given
    /// precision.
    static BigFloat from_string(const std::string& text, long precision_bits);

    long precision() const;
    bool is_nan() const;
    bool is_finite() const;
    bool is_zero() const;
    int sign() const;  // -1, 0, +1

    double to_double() const;
    /// Exact rational value (MPFR values are dyadic). Finite values only.
    Rational to_rational() const;
    /// Decimal string with enough digits that from_string at the same
    /// precision recovers the value exactly.
    std::string to_string() const;

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    BigFloat operator-() const;
    BigFloat& operator+=(const BigFloat& b);
    BigFloat& operator-=(const BigFloat& b);
    BigFloat& operator*=(const BigFloat& b);
    BigFloat& operator/=(const BigFloat& b);

    friend bool operator==(const BigFloat& a, const BigFloat& b);
    friend bool operator!=(const BigFloat& a, const BigFloat& b);
    friend bool operator<(const BigFloat& a, const BigFloat& b);
    friend bool operator<=(const BigFloat& a, const BigFloat& b);
    friend bool operator>(const BigFloat& a, const BigFloat& b);
    friend bool operator>=(const BigFloat& a, const BigFloat& b);

    static BigFloat sqrt(const BigFloat& x);
    static BigFloat abs(const BigFloat& x);
    /// x^e for a nonnegative integer exponent.
    static BigFloat pow_ui(const BigFloat& x, unsigned long e);
    static BigFloat cos(const BigFloat& x);
    static BigFloat pi(long precision_bits);

private:
    mpfr_t value_;
};

}  // namespace mq
