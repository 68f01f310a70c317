#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace hylag {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat rat(long long num, long long den = 1) { return Rat(Int(num), Int(den)); }

/// C(n, k) as an exact integer; 0 when k < 0 or k > n.
Int binomial(long long n, long long k);

Rat pow_rat(const Rat& base, unsigned exp);

double to_double(const Rat& x);

/// "p/q" (or "p" when q == 1); used for exact values in reports.
std::string rat_string(const Rat& x);

/// Solve A x = b exactly by Gaussian elimination. Throws on singular A.
std::vector<Rat> solve_linear(std::vector<std::vector<Rat>> a, std::vector<Rat> b);

}  // namespace hylag
