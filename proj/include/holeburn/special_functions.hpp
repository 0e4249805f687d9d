#pragma once

#include <cstdint>

namespace holeburn {

/// n! as a double, exact through n = 22 and correctly rounded up to n = 170.
/// Throws invalid_parameter for n < 0 or n > 170.
double factorial(int n);

/// ln(n!) for n >= 0.
double log_factorial(int n);

/// Binomial coefficient C(n, k). Zero when k < 0 or k > n; n must be >= 0.
double binomial(int n, int k);

/// Rising factorial x(x+1)...(x+n-1); (x)_0 = 1. Requires n >= 0.
double pochhammer(double x, int n);

/// Double factorial with the conventions (-1)!! = 0!! = 1. Requires n >= -1.
double double_factorial(int n);

/// Stirling number of the second kind S2(u, v): partitions of u items into
/// v nonempty blocks. Requires u, v >= 0; returns 0 for v > u.
std::uint64_t stirling2(int u, int v);

/// x^e for integer e >= 0 with the 0^0 = 1 convention.
double int_pow(double x, int e);

}  // namespace holeburn
