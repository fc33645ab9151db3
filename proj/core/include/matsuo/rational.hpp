#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace matsuo {

// Exact arithmetic everywhere. cpp_rational keeps values in lowest terms
// with positive denominator; equality is structural.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }
inline bool is_integer(const Rat& r) { return den(r) == 1; }

std::string str(const Int& v);
std::string str(const Rat& r);  // "p" or "p/q"

// Strict parser for "P" or "P/Q" with Q > 0 after normalisation. Floats and
// anything else are rejected.
Rat parse_rat(const std::string& text);

std::optional<long long> to_int64(const Int& v);

Int int_gcd(Int a, Int b);
Int int_lcm(const Int& a, const Int& b);

// Odd prime factors of |v| by trial division.
std::vector<Int> odd_prime_factors(Int v);

}  // namespace matsuo
