#include "phg/rational.hpp"
#include "phg/errors.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cctype>

namespace phg {

namespace {

bool valid_integer_token(std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// The backing integer's string constructor rejects a leading '+'.
Int int_from_token(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return Int(std::string(s));
}

} // namespace

Rational make_rational(Int num, Int den) {
    if (den == 0) fail(ErrorKind::Domain, "rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(std::move(num), std::move(den));
}

Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) fail(ErrorKind::Parse, "empty rational literal");
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        if (!valid_integer_token(s))
            fail(ErrorKind::Parse, "malformed rational literal '" + std::string(text) + "'");
        return Rational(int_from_token(s));
    }
    std::string_view num_part = trim(s.substr(0, slash));
    std::string_view den_part = trim(s.substr(slash + 1));
    if (!valid_integer_token(num_part) || !valid_integer_token(den_part))
        fail(ErrorKind::Parse, "malformed rational literal '" + std::string(text) + "'");
    Int num = int_from_token(num_part);
    Int den = int_from_token(den_part);
    if (den == 0)
        fail(ErrorKind::Domain, "zero denominator in rational literal '" + std::string(text) + "'");
    return make_rational(std::move(num), std::move(den));
}

std::string to_string(const Rational& value) {
    return value.str(); // prints "p/q", omitting "/1" for integers
}

std::string to_decimal_string(const Rational& value, int digits) {
    if (digits < 0) fail(ErrorKind::Domain, "negative decimal digit count");
    Int num = boost::multiprecision::numerator(value);
    Int den = boost::multiprecision::denominator(value);
    bool negative = num < 0;
    if (negative) num = -num;
    Int scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    Int scaled = num * scale;
    Int q = scaled / den;
    Int rem = scaled % den;
    if (2 * rem >= den) ++q; // half-up
    std::string body = q.str();
    std::string result;
    if (digits == 0) {
        result = body;
    } else {
        while (static_cast<int>(body.size()) <= digits) body.insert(body.begin(), '0');
        result = body.substr(0, body.size() - digits) + "." + body.substr(body.size() - digits);
    }
    if (negative && q != 0) result.insert(result.begin(), '-');
    return result;
}

Int numerator(const Rational& value) { return boost::multiprecision::numerator(value); }
Int denominator(const Rational& value) { return boost::multiprecision::denominator(value); }

Rational pow_rational(const Rational& base, unsigned exp) {
    Rational result(1);
    Rational factor = base;
    while (exp > 0) {
        if (exp & 1u) result *= factor;
        exp >>= 1u;
        if (exp > 0) factor *= factor;
    }
    return result;
}

std::optional<Rational> exact_sqrt(const Rational& value) {
    if (value < 0) fail(ErrorKind::Domain, "square root of negative rational");
    Int num = boost::multiprecision::numerator(value);
    Int den = boost::multiprecision::denominator(value);
    Int sn = boost::multiprecision::sqrt(num);
    Int sd = boost::multiprecision::sqrt(den);
    if (sn * sn != num || sd * sd != den) return std::nullopt;
    return Rational(sn, sd);
}

bool in_unit_interval(const Rational& value) {
    return value >= 0 && value <= 1;
}

Int lcm_int(const Int& a, const Int& b) {
    return boost::multiprecision::lcm(a, b);
}

} // namespace phg
