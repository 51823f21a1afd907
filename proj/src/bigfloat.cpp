#include "mqapprox/bigfloat.hpp"

#include <algorithm>
#include <stdexcept>

namespace mq {

namespace {

long checked_precision(long bits) {
    if (bits < MPFR_PREC_MIN) {
        throw std::invalid_argument("BigFloat precision must be at least " +
                                    std::to_string(MPFR_PREC_MIN) + " bits");
    }
    return bits;
}

}  // namespace

BigFloat::BigFloat(long precision_bits) {
    mpfr_init2(value_, checked_precision(precision_bits));
}

BigFloat::BigFloat(double value, long precision_bits) {
    mpfr_init2(value_, checked_precision(precision_bits));
    mpfr_set_d(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(long value, long precision_bits) {
    mpfr_init2(value_, checked_precision(precision_bits));
    mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& value, long precision_bits) {
    mpfr_init2(value_, checked_precision(precision_bits));
    mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other, long precision_bits) {
    mpfr_init2(value_, checked_precision(precision_bits));
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        mpfr_set_prec(value_, mpfr_get_prec(other.value_));
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    if (this != &other) mpfr_swap(value_, other.value_);
    return *this;
}

BigFloat::~BigFloat() {
    mpfr_clear(value_);
}

BigFloat BigFloat::from_string(const std::string& text, long precision_bits) {
    BigFloat r(precision_bits);
    if (mpfr_set_str(r.value_, text.c_str(), 10, MPFR_RNDN) != 0) {
        throw std::invalid_argument("invalid float literal '" + text + "'");
    }
    return r;
}

long BigFloat::precision() const {
    return mpfr_get_prec(value_);
}

bool BigFloat::is_nan() const {
    return mpfr_nan_p(value_) != 0;
}

bool BigFloat::is_finite() const {
    return mpfr_number_p(value_) != 0;
}

bool BigFloat::is_zero() const {
    return mpfr_zero_p(value_) != 0;
}

int BigFloat::sign() const {
    return mpfr_sgn(value_);
}

double BigFloat::to_double() const {
    return mpfr_get_d(value_, MPFR_RNDN);
}

Rational BigFloat::to_rational() const {
    if (!is_finite()) throw std::domain_error("non-finite BigFloat has no rational value");
    Rational q;
    mpfr_get_q(q.get_mpq_t(), value_);
    return q;
}

std::string BigFloat::to_string() const {
    if (mpfr_nan_p(value_)) return "nan";
    if (mpfr_inf_p(value_)) return mpfr_sgn(value_) < 0 ? "-inf" : "inf";
    if (mpfr_zero_p(value_)) return mpfr_signbit(value_) ? "-0" : "0";
    mpfr_exp_t exp10 = 0;
    // n = 0 requests exactly enough digits for a round trip at this precision.
    char* raw = mpfr_get_str(nullptr, &exp10, 10, 0, value_, MPFR_RNDN);
    std::string digits(raw);
    mpfr_free_str(raw);
    std::string sign;
    if (!digits.empty() && digits[0] == '-') {
        sign = "-";
        digits.erase(digits.begin());
    }
    // digits represent 0.DDDD * 10^exp10
    std::string out = sign + digits.substr(0, 1);
    if (digits.size() > 1) out += "." + digits.substr(1);
    out += "e" + std::to_string(static_cast<long>(exp10 - 1));
    return out;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.precision(), b.precision()));
    mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.precision(), b.precision()));
    mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.precision(), b.precision()));
    mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.precision(), b.precision()));
    mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator-() const {
    BigFloat r(precision());
    mpfr_neg(r.value_, value_, MPFR_RNDN);
    return r;
}

BigFloat& BigFloat::operator+=(const BigFloat& b) {
    return *this = *this + b;
}

BigFloat& BigFloat::operator-=(const BigFloat& b) {
    return *this = *this - b;
}

BigFloat& BigFloat::operator*=(const BigFloat& b) {
    return *this = *this * b;
}

BigFloat& BigFloat::operator/=(const BigFloat& b) {
    return *this = *this / b;
}

bool operator==(const BigFloat& a, const BigFloat& b) {
    return mpfr_equal_p(a.value_, b.value_) != 0;
}

bool operator!=(const BigFloat& a, const BigFloat& b) {
    return !(a == b);
}

bool operator<(const BigFloat& a, const BigFloat& b) {
    return mpfr_less_p(a.value_, b.value_) != 0;
}

bool operator<=(const BigFloat& a, const BigFloat& b) {
    return mpfr_lessequal_p(a.value_, b.value_) != 0;
}

bool operator>(const BigFloat& a, const BigFloat& b) {
    return mpfr_greater_p(a.value_, b.value_) != 0;
}

bool operator>=(const BigFloat& a, const BigFloat& b) {
    return mpfr_greaterequal_p(a.value_, b.value_) != 0;
}

BigFloat BigFloat::sqrt(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_sqrt(r.value_, x.value_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::abs(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_abs(r.value_, x.value_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pow_ui(const BigFloat& x, unsigned long e) {
    BigFloat r(x.precision());
    mpfr_pow_ui(r.value_, x.value_, e, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::cos(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_cos(r.value_, x.value_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pi(long precision_bits) {
    BigFloat r(precision_bits);
    mpfr_const_pi(r.value_, MPFR_RNDN);
    return r;
}

}  // namespace mq
