#include "mqapprox/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace mq {

namespace {

bool valid_integer_text(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

Integer integer_from_text(const std::string& s, const std::string& context) {
    if (!valid_integer_text(s)) {
        throw std::invalid_argument("invalid integer literal '" + s + "' in " + context);
    }
    return Integer(s, 10);  // explicit base: leading zeros must not mean octal
}

/// Exact decimal parse: [sign] digits [. digits] [e[sign]digits].
Rational rational_from_decimal(const std::string& text) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    std::string digits;
    long frac_len = 0;
    bool saw_digit = false;
    for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
        digits += text[i];
        saw_digit = true;
    }
    if (i < text.size() && text[i] == '.') {
        ++i;
        for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
            digits += text[i];
            ++frac_len;
            saw_digit = true;
        }
    }
    long exponent = 0;
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        std::size_t mark = ++i;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
        std::size_t digits_at = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == digits_at) throw std::invalid_argument("invalid exponent in '" + text + "'");
        exponent = std::stol(text.substr(mark, i - mark));
    }
    if (!saw_digit || i != text.size()) {
        throw std::invalid_argument("invalid number literal '" + text + "'");
    }
    Integer mantissa = digits.empty() ? Integer(0) : Integer(digits, 10);
    if (negative) mantissa = -mantissa;
    long e10 = exponent - frac_len;
    Integer pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(e10 < 0 ? -e10 : e10));
    Rational r = e10 < 0 ? Rational(mantissa, pow10) : Rational(mantissa * pow10);
    r.canonicalize();
    return r;
}

}  // namespace

Rational make_rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational rational_from_string(const std::string& text) {
    std::size_t begin = text.find_first_not_of(" \t");
    std::size_t end = text.find_last_not_of(" \t");
    if (begin == std::string::npos) throw std::invalid_argument("empty number literal");
    std::string body = text.substr(begin, end - begin + 1);

    std::size_t slash = body.find('/');
    if (slash != std::string::npos) {
        Integer num = integer_from_text(body.substr(0, slash), body);
        Integer den = integer_from_text(body.substr(slash + 1), body);
        return make_rational(num, den);
    }
    if (body.find('.') != std::string::npos || body.find('e') != std::string::npos ||
        body.find('E') != std::string::npos) {
        return rational_from_decimal(body);
    }
    return Rational(integer_from_text(body, body));
}

std::string rational_to_string(const Rational& r) {
    return r.get_str();
}

Rational rational_from_double(double v) {
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite double has no rational value");
    Rational r;
    mpq_set_d(r.get_mpq_t(), v);
    return r;
}

Rational rational_pow(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    if (base == 0 && exp < 0) throw std::invalid_argument("negative power of zero");
    unsigned long e = static_cast<unsigned long>(exp < 0 ? -exp : exp);
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), e);
    // base canonical => powers share no factor; only the sign of a negative
    // denominator would need fixing, and den > 0 here.
    return exp < 0 ? make_rational(den, num) : Rational(num, den);
}

Integer rational_ceil(const Rational& r) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

Integer rational_floor(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

bool is_integer(const Rational& r) {
    return r.get_den() == 1;
}

double to_double(const Rational& r) {
    return r.get_d();
}

}  // namespace mq
