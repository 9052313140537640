#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace shuffle_lab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }
inline double to_double(const BigInt& z) { return z.convert_to<double>(); }

// "p/q", or "p" when the denominator is 1.
std::string to_fraction_string(const Rational& q);

// Fixed-point decimal with the given number of digits, no locale.
std::string to_decimal_string(double x, int digits = 12);
// Shortest of fixed or exponent form with the given significant digits, no locale.
std::string to_general_string(double x, int digits = 12);

Rational harmonic(int n);

// Exact integer power of a rational; negative exponents invert.
Rational rational_pow(const Rational& base, int exponent);

// Neumaier compensated sum.
class CompensatedSum {
public:
    void add(double x);
    double value() const { return sum_ + carry_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

}  // namespace shuffle_lab
