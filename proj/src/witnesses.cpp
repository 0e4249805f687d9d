#include "holeburn/witnesses.hpp"

#include <cmath>
#include <vector>

#include "holeburn/errors.hpp"
#include "holeburn/special_functions.hpp"
#include "holeburn/states.hpp"

namespace holeburn {

namespace {

constexpr double kDiscrepancyTol = 1e-8;
constexpr double kDiagonalImagTol = 1e-10;

bool values_disagree(double formula, double oracle) {
  return std::abs(formula - oracle) > kDiscrepancyTol * std::max(1.0, std::abs(oracle));
}

double real_diagonal(const MomentTable& m, int j) {
  const complexd value = m.get(j, j);
  if (std::abs(value.imag()) >= kDiagonalImagTol) {
    throw invalid_parameter("diagonal moment (" + std::to_string(j) + "," + std::to_string(j) +
                            ") has a non-real part " + std::to_string(value.imag()));
  }
  return value.real();
}

// A(v) of the antibunching criterion; A(0) = <N> - <N> = 0 by definition.
double antibunching_value(const MomentTable& m, int xi) {
  if (xi == 0) return 0.0;
  const double nbar = real_diagonal(m, 1);
  return real_diagonal(m, xi + 1) - int_pow(nbar, xi + 1);
}

}  // namespace

const char* witness_kind_name(WitnessKind k) {
  switch (k) {
    case WitnessKind::antibunching: return "hoa";
    case WitnessKind::squeezing: return "hos";
    case WitnessKind::sub_poissonian: return "hosps";
  }
  return "?";
}

WitnessReport higher_order_antibunching(const MomentTable& m, int xi) {
  if (xi < 1) throw invalid_parameter("antibunching order must be a positive integer");
  const double value = antibunching_value(m, xi);
  return WitnessReport{WitnessKind::antibunching, xi, value, value, value < 0.0, false, ""};
}

const char* squeezing_reading_name(SqueezingReading r) {
  switch (r) {
    case SqueezingReading::plain_factorial: return "plain-factorial";
    case SqueezingReading::double_factorial_shifted: return "double-factorial-shifted-binomial";
  }
  return "?";
}

double quadrature_central_moment_formula(const MomentTable& m, int l, SqueezingReading reading) {
  if (l < 2 || l % 2 != 0) throw invalid_parameter("squeezing order must be even and >= 2");
  const double x_sum = (m.get(1, 0) + m.get(0, 1)).real();  // <a^dagger + a>
  complexd total{0.0, 0.0};
  const double half_pow = std::pow(2.0, -l / 2.0);
  for (int r = 0; r <= l; ++r) {
    const double sign = (r % 2 == 0) ? 1.0 : -1.0;
    const double outer = sign * half_pow * binomial(l, r) * int_pow(x_sum, l - r);
    for (int i = 0; 2 * i <= r; ++i) {
      const double weight = reading == SqueezingReading::double_factorial_shifted
                                ? double_factorial(2 * i - 1)
                                : (i == 0 ? 1.0 : factorial(2 * i - 1));
      const double coupling = outer * weight * binomial(r, 2 * i);
      for (int k = 0; k <= r - 2 * i; ++k) {
        const double choose = reading == SqueezingReading::double_factorial_shifted
                                  ? binomial(r - 2 * i, k)
                                  : binomial(2 * i, k);
        if (choose == 0.0) continue;
        total += coupling * choose * m.get(k, r - 2 * i - k);
      }
    }
  }
  return total.real();
}

SqueezingReading selected_squeezing_reading() {
  static const SqueezingReading selected = [] {
    std::vector<FockVector> states;
    states.push_back(fock_basis_state(0, 8));
    states.push_back(fock_basis_state(1, 9));
    states.push_back(fock_basis_state(2, 10));
    states.push_back(coherent_state({0.5, 0.0}, 1e-12, 12));
    states.push_back(coherent_state({1.0, 0.0}, 1e-12, 12));
    StateSpec ecs;
    ecs.family = Family::even_coherent;
    ecs.alpha_mag = 1.0;
    states.push_back(build_state(ecs, 1e-12, 12));

    const auto validates = [&states](SqueezingReading reading) {
      for (const FockVector& v : states) {
        const MomentTable table = oracle_moment_table(v, 6, 6);
        for (int l : {2, 4, 6}) {
          const double formula = quadrature_central_moment_formula(table, l, reading);
          const double oracle = quadrature_central_moment_oracle(v, l);
          if (std::abs(formula - oracle) > 1e-8 * std::max(1.0, std::abs(oracle))) return false;
        }
      }
      return true;
    };

    if (validates(SqueezingReading::double_factorial_shifted)) {
      return SqueezingReading::double_factorial_shifted;
    }
    if (validates(SqueezingReading::plain_factorial)) {
      return SqueezingReading::plain_factorial;
    }
    throw convergence_failure("no squeezing-formula reading matches the quadrature oracle");
  }();
  return selected;
}

WitnessReport hong_mandel_squeezing(const MomentTable& m, const FockVector& v, int l) {
  if (l < 2 || l % 2 != 0) throw invalid_parameter("squeezing order must be even and >= 2");
  const SqueezingReading reading = selected_squeezing_reading();
  const double reference = pochhammer(0.5, l / 2);  // = (l-1)!!/2^{l/2}
  const double formula_moment = quadrature_central_moment_formula(m, l, reading);
  const double oracle_moment = quadrature_central_moment_oracle(v, l);
  const double formula = (formula_moment - reference) / reference;
  const double oracle = (oracle_moment - reference) / reference;
  return WitnessReport{WitnessKind::squeezing, l,      formula, oracle, formula < 0.0,
                       values_disagree(formula, oracle), squeezing_reading_name(reading)};
}

double poisson_central_moment(int l, double lambda) {
  if (l < 1) throw invalid_parameter("central moment order must be >= 1");
  if (lambda < 0.0) throw invalid_parameter("Poisson mean must be nonnegative");
  if (lambda == 0.0) return 0.0;
  double pmf = std::exp(-lambda);
  double cumulative = 0.0;
  double sum = 0.0;
  int small_run = 0;
  for (int n = 0; n < 100000; ++n) {
    cumulative += pmf;
    const double term = pmf * int_pow(static_cast<double>(n) - lambda, l);
    sum += term;
    // Stop only after the pmf tail target is met and the weighted terms
    // themselves stopped contributing.
    if (std::abs(term) <= 1e-17 * std::max(1.0, std::abs(sum))) ++small_run;
    else small_run = 0;
    if (1.0 - cumulative < 1e-15 && static_cast<double>(n) > lambda + 10.0 && small_run >= 3) {
      return sum;
    }
    pmf *= lambda / static_cast<double>(n + 1);
  }
  throw convergence_failure("Poisson pmf summation did not reach the tail target");
}

WitnessReport sub_poissonian_statistics(const MomentTable& m, const FockVector& v, int l) {
  if (l < 2) throw invalid_parameter("sub-Poissonian order must be >= 2");
  const double nbar = real_diagonal(m, 1);
  double formula = 0.0;
  for (int u = 0; u <= l; ++u) {
    const double sign = (u % 2 == 0) ? 1.0 : -1.0;
    const double outer = sign * binomial(l, u) * int_pow(nbar, l - u);
    for (int w = 0; w <= u; ++w) {
      const auto s2 = static_cast<double>(stirling2(u, w));
      if (s2 == 0.0) continue;
      formula += outer * s2 * antibunching_value(m, w);
    }
  }
  const double oracle =
      number_central_moment_oracle(v, l) - poisson_central_moment(l, mean_photon_number(v));
  return WitnessReport{WitnessKind::sub_poissonian, l,      formula, oracle, formula < 0.0,
                       values_disagree(formula, oracle), ""};
}

}  // namespace holeburn
