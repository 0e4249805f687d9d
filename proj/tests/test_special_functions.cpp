#include <doctest.h>

#include <cmath>

#include "holeburn/errors.hpp"
#include "holeburn/special_functions.hpp"

using namespace holeburn;

namespace {

// Independent route: S2(u, v) = (1/v!) sum_i (-1)^i C(v, i) (v - i)^u,
// evaluated in 128-bit integers so the alternating sum stays exact.
std::uint64_t stirling2_by_explicit_sum(int u, int v) {
  if (v == 0) return u == 0 ? 1 : 0;
  __int128 acc = 0;
  for (int i = 0; i <= v; ++i) {
    __int128 c = 1;
    for (int t = 0; t < i; ++t) c = c * (v - t) / (t + 1);
    __int128 power = 1;
    for (int t = 0; t < u; ++t) power *= (v - i);
    acc += (i % 2 == 0 ? 1 : -1) * c * power;
  }
  __int128 vfact = 1;
  for (int t = 2; t <= v; ++t) vfact *= t;
  return static_cast<std::uint64_t>(acc / vfact);
}

}  // namespace

TEST_CASE("factorial exact small values and range guard") {
  CHECK(factorial(0) == 1.0);
  CHECK(factorial(5) == 120.0);
  CHECK(factorial(12) == 479001600.0);
  CHECK_THROWS_AS(factorial(-1), invalid_parameter);
  CHECK_THROWS_AS(factorial(171), invalid_parameter);
}

TEST_CASE("pochhammer basics") {
  CHECK(pochhammer(0.5, 0) == 1.0);
  CHECK(pochhammer(0.5, 2) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(pochhammer(3.0, 3) == doctest::Approx(60.0).epsilon(1e-15));
  CHECK_THROWS_AS(pochhammer(1.0, -1), invalid_parameter);
}

TEST_CASE("pochhammer half-integer identity (1/2)_{l/2} = (l-1)!!/2^{l/2}") {
  for (int l = 2; l <= 20; l += 2) {
    const double lhs = pochhammer(0.5, l / 2);
    const double rhs = double_factorial(l - 1) / std::pow(2.0, l / 2.0);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-14));
  }
}

TEST_CASE("double factorial conventions") {
  CHECK(double_factorial(-1) == 1.0);
  CHECK(double_factorial(0) == 1.0);
  CHECK(double_factorial(3) == 3.0);
  CHECK(double_factorial(8) == 384.0);
  CHECK_THROWS_AS(double_factorial(-2), invalid_parameter);
}

TEST_CASE("stirling2 against the explicit alternating-sum oracle") {
  CHECK(stirling2(4, 2) == 7);
  CHECK(stirling2(0, 0) == 1);
  CHECK(stirling2(5, 0) == 0);
  CHECK(stirling2(3, 5) == 0);
  for (int u = 0; u <= 20; ++u) {
    for (int v = 0; v <= u; ++v) {
      CAPTURE(u);
      CAPTURE(v);
      CHECK(stirling2(u, v) == stirling2_by_explicit_sum(u, v));
    }
  }
  CHECK_THROWS_AS(stirling2(-1, 0), invalid_parameter);
}

TEST_CASE("binomial and integer power") {
  CHECK(binomial(10, 3) == 120.0);
  CHECK(binomial(4, -1) == 0.0);
  CHECK(binomial(4, 5) == 0.0);
  CHECK(int_pow(0.0, 0) == 1.0);
  CHECK(int_pow(2.0, 10) == 1024.0);
}
