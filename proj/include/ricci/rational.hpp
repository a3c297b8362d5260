#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ricci {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational with arbitrary-precision numerator and denominator.
/// Always kept in lowest terms with a positive denominator.
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

inline BigInt numer(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denom(const Rational& r) { return boost::multiprecision::denominator(r); }

/// "p/q", or "p" when q = 1.
inline std::string to_string(const Rational& r) { return r.str(); }

class RationalParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline bool is_integer_token(std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

} // namespace detail

/// Parses "p/q" or "p". Decimal notation is rejected so that exactness is
/// preserved end to end.
inline Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!detail::is_integer_token(num, true) || !detail::is_integer_token(den, false)) {
        throw RationalParseError("not an exact rational (expected p/q): '" + std::string(text) + "'");
    }
    BigInt p(std::string(num[0] == '+' ? num.substr(1) : num));
    BigInt q{std::string(den)};
    if (q == 0) throw RationalParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(p, q);
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
    if (a == 0 || b == 0) return 0;
    return a / boost::multiprecision::gcd(a, b) * b;
}

} // namespace ricci
