#include "holeburn/special_functions.hpp"

#include <array>
#include <cmath>
#include <vector>

#include "holeburn/errors.hpp"

namespace holeburn {

namespace {

constexpr int kMaxFactorial = 170;  // 171! overflows double

const std::array<double, kMaxFactorial + 1>& factorial_table() {
  static const auto table = [] {
    std::array<double, kMaxFactorial + 1> t{};
    t[0] = 1.0;
    for (int n = 1; n <= kMaxFactorial; ++n) t[n] = t[n - 1] * static_cast<double>(n);
    return t;
  }();
  return table;
}

}  // namespace

double factorial(int n) {
  if (n < 0 || n > kMaxFactorial) {
    throw invalid_parameter("factorial argument out of range: " + std::to_string(n));
  }
  return factorial_table()[n];
}

double log_factorial(int n) {
  if (n < 0) throw invalid_parameter("log_factorial of negative argument");
  return std::lgamma(static_cast<double>(n) + 1.0);
}

double binomial(int n, int k) {
  if (n < 0) throw invalid_parameter("binomial with negative n");
  if (k < 0 || k > n) return 0.0;
  if (k > n - k) k = n - k;
  if (n <= kMaxFactorial) {
    return factorial_table()[n] / (factorial_table()[k] * factorial_table()[n - k]);
  }
  return std::round(std::exp(log_factorial(n) - log_factorial(k) - log_factorial(n - k)));
}

double pochhammer(double x, int n) {
  if (n < 0) throw invalid_parameter("pochhammer with negative n");
  double result = 1.0;
  for (int i = 0; i < n; ++i) result *= x + static_cast<double>(i);
  return result;
}

double double_factorial(int n) {
  if (n < -1) throw invalid_parameter("double_factorial argument below -1");
  double result = 1.0;
  for (int k = n; k > 1; k -= 2) result *= static_cast<double>(k);
  return result;
}

std::uint64_t stirling2(int u, int v) {
  if (u < 0 || v < 0) throw invalid_parameter("stirling2 with negative argument");
  if (v > u) return 0;
  if (u == 0) return 1;  // v == 0 here
  if (v == 0) return 0;
  // S2(n, k) = k*S2(n-1, k) + S2(n-1, k-1), rolled row by row.
  std::vector<std::uint64_t> row(static_cast<std::size_t>(v) + 1, 0);
  row[0] = 1;  // S2(0, 0)
  for (int n = 1; n <= u; ++n) {
    for (int k = std::min(n, v); k >= 1; --k) {
      row[k] = static_cast<std::uint64_t>(k) * row[k] + row[k - 1];
    }
    row[0] = 0;
  }
  return row[v];
}

double int_pow(double x, int e) {
  if (e < 0) throw invalid_parameter("int_pow with negative exponent");
  double result = 1.0;
  double base = x;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

}  // namespace holeburn
