#include "shuffle_lab/numeric.hpp"

#include <cmath>
#include <cstdio>

namespace shuffle_lab {

std::string to_fraction_string(const Rational& q) {
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string to_decimal_string(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, x);
    std::string s = buf;
    if (s == "-0" || s.find_first_not_of("-0.") == std::string::npos) {
        if (!s.empty() && s[0] == '-') s.erase(0, 1);
    }
    return s;
}

std::string to_general_string(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

Rational harmonic(int n) {
    Rational h = 0;
    for (int k = 1; k <= n; ++k) h += Rational(1, k);
    return h;
}

Rational rational_pow(const Rational& base, int exponent) {
    Rational result = 1;
    Rational b = exponent < 0 ? Rational(1) / base : base;
    unsigned e = static_cast<unsigned>(exponent < 0 ? -exponent : exponent);
    while (e) {
        if (e & 1u) result *= b;
        b *= b;
        e >>= 1u;
    }
    return result;
}

void CompensatedSum::add(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x))
        carry_ += (sum_ - t) + x;
    else
        carry_ += (x - t) + sum_;
    sum_ = t;
}

}  // namespace shuffle_lab
