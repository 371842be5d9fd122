#include "ordturan/rational.hpp"

#include "ordturan/errors.hpp"

#include <cctype>
#include <cmath>
#include <limits>

namespace ordturan {

std::string rat_to_string(const Rat& r) {
    std::string s = numerator(r).str();
    s += '/';
    s += denominator(r).str();
    return s;
}

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_token(s)) throw ParseError("not a rational: '" + s + "'");
        return Rat(BigInt(s));
    }
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den))
        throw ParseError("not a rational: '" + s + "'");
    BigInt d(den);
    if (d == 0) throw ParseError("zero denominator: '" + s + "'");
    return Rat(BigInt(num), d);
}

double rat_to_double(const Rat& r) {
    // IEEE division of two exactly represented integers is correctly rounded,
    // which covers every value this library reports.
    const BigInt& num = numerator(r);
    const BigInt& den = denominator(r);
    static const BigInt kExact = BigInt(1) << 53;
    if (abs(num) < kExact && den < kExact)
        return num.convert_to<double>() / den.convert_to<double>();
    return r.convert_to<double>();
}

Rat rat_from_double(double x) {
    if (!std::isfinite(x)) throw PreconditionError("non-finite double has no rational value");
    return Rat(x);
}

} // namespace ordturan
