#include "lowprev/rational.hpp"

#include "lowprev/errors.hpp"

#include <algorithm>
#include <cctype>

namespace lowprev {

namespace {

bool all_digits(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    if (s.empty()) throw ParseError("empty rational literal");
    bool negative = false;
    if (s[0] == '+' || s[0] == '-') {
        negative = s[0] == '-';
        s.erase(0, 1);
    }
    std::string num = s, den = "1";
    if (auto slash = s.find('/'); slash != std::string::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den))
        throw ParseError("malformed rational literal '" + text + "'");
    Int n(num), d(den);
    if (d == 0) throw ParseError("zero denominator in '" + text + "'");
    Rational value(n, d);
    return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) {
    Int num = numerator(value);
    Int den = denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string to_decimal(const Rational& value, int significant) {
    if (significant < 1) significant = 1;
    if (value == 0) return "0." + std::string(static_cast<std::size_t>(significant), '0');

    bool negative = value < 0;
    Rational a = negative ? Rational(-value) : value;
    Int num = numerator(a), den = denominator(a);

    // Decimal exponent e such that a = d.ddd... * 10^e with d in [1, 9].
    long long e = 0;
    if (num >= den) {
        Int ip = num / den;
        e = static_cast<long long>(ip.str().size()) - 1;
    } else {
        Int scaled = num;
        while (scaled * 10 < den) {
            scaled *= 10;
            --e;
        }
        --e;
    }

    // First `significant` digits of a * 10^{significant-1-e}, rounded half to even.
    long long shift = significant - 1 - e;
    Int scaled_num = num, scaled_den = den;
    if (shift >= 0)
        scaled_num *= pow(Int(10), static_cast<unsigned>(shift));
    else
        scaled_den *= pow(Int(10), static_cast<unsigned>(-shift));
    Int digits = scaled_num / scaled_den;
    Int rem = scaled_num % scaled_den;
    Int twice = rem * 2;
    if (twice > scaled_den || (twice == scaled_den && (digits % 2) != 0)) ++digits;

    std::string ds = digits.str();
    if (static_cast<int>(ds.size()) > significant) {
        // Rounding carried into an extra digit (e.g. 999... -> 1000...).
        ds.pop_back();
        ++e;
    }

    std::string out;
    if (e >= 0) {
        auto int_len = static_cast<std::size_t>(e) + 1;
        if (int_len >= ds.size()) {
            out = ds + std::string(int_len - ds.size(), '0');
        } else {
            out = ds.substr(0, int_len) + "." + ds.substr(int_len);
        }
    } else {
        out = "0." + std::string(static_cast<std::size_t>(-e) - 1, '0') + ds;
    }
    return negative ? "-" + out : out;
}

Int factorial(int n) {
    Int result = 1;
    for (int i = 2; i <= n; ++i) result *= i;
    return result;
}

Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Int result = 1;
    for (int i = 0; i < k; ++i) {
        result *= (n - i);
        result /= (i + 1);
    }
    return result;
}

Rational pow_rational(const Rational& base, int exponent) {
    Rational result = 1;
    for (int i = 0; i < exponent; ++i) result *= base;
    return result;
}

}  // namespace lowprev
