#include "holeburn/entanglement.hpp"

#include <cmath>
#include <vector>

#include "holeburn/errors.hpp"
#include "holeburn/special_functions.hpp"

namespace holeburn {

TwoModeVector::TwoModeVector(int cutoff, std::vector<complexd> amplitudes)
    : cutoff_(cutoff), amps_(std::move(amplitudes)) {
  const auto expected = static_cast<std::size_t>(cutoff_ + 1) * static_cast<std::size_t>(cutoff_ + 1);
  if (cutoff_ < 0 || amps_.size() != expected) {
    throw invalid_parameter("two-mode amplitude array has the wrong shape");
  }
}

complexd TwoModeVector::amplitude(int j, int m) const {
  if (j < 0 || m < 0 || j > cutoff_ || m > cutoff_) return {0.0, 0.0};
  return amps_[static_cast<std::size_t>(j) * static_cast<std::size_t>(cutoff_ + 1) +
               static_cast<std::size_t>(m)];
}

double TwoModeVector::squared_norm() const {
  double s = 0.0;
  for (const auto& c : amps_) s += std::norm(c);
  return s;
}

TwoModeVector beamsplit_with_vacuum(const FockVector& v) {
  const int n_max = v.cutoff();
  const auto dim = static_cast<std::size_t>(n_max + 1);
  std::vector<complexd> amps(dim * dim, complexd{0.0, 0.0});
  for (int n = 0; n <= n_max; ++n) {
    const complexd c = v.amplitude(n);
    if (c == complexd{0.0, 0.0}) continue;
    for (int j = 0; j <= n; ++j) {
      const double split = std::sqrt(binomial(n, j) * int_pow(0.5, n));
      amps[static_cast<std::size_t>(j) * dim + static_cast<std::size_t>(n - j)] = c * split;
    }
  }
  return TwoModeVector(n_max, std::move(amps));
}

double reduced_purity(const TwoModeVector& t) {
  const int n_max = t.cutoff();
  double purity = 0.0;
  for (int m = 0; m <= n_max; ++m) {
    for (int mp = m; mp <= n_max; ++mp) {
      complexd gram{0.0, 0.0};
      // d_{j,m} vanishes for j + m > cutoff.
      const int j_max = n_max - mp;
      for (int j = 0; j <= j_max; ++j) {
        gram += std::conj(t.amplitude(j, m)) * t.amplitude(j, mp);
      }
      const double w = std::norm(gram);
      purity += (mp == m) ? w : 2.0 * w;
    }
  }
  return purity;
}

double linear_entropy(const FockVector& v) { return 1.0 - reduced_purity(beamsplit_with_vacuum(v)); }

namespace {

// Inner binomial sum over state indices: sum_k C(n, k) C(r, r + k - m).
double inner_binomial_sum(int n, int r, int m) {
  const int k_lo = std::max(0, m - r);
  const int k_hi = std::min(n, m);
  double sum = 0.0;
  for (int k = k_lo; k <= k_hi; ++k) sum += binomial(n, k) * binomial(r, r + k - m);
  return sum;
}

double fock_state_linear_entropy(int n0) {
  return 1.0 - binomial(2 * n0, n0) * int_pow(0.25, n0);
}

double parity_factor(int n) { return n % 2 == 0 ? 2.0 : 0.0; }

double ecs_family_entropy(const StateSpec& spec, double tail_tol) {
  const double a2 = spec.alpha_mag * spec.alpha_mag;
  const int n_max = choose_cutoff(spec, tail_tol);
  const Engineering eng = spec.engineering;

  if (a2 == 0.0) return fock_state_linear_entropy(eng == Engineering::photon_added ? 1 : 0);

  std::vector<double> pois(static_cast<std::size_t>(n_max) + 1);
  pois[0] = 1.0;
  for (int n = 1; n <= n_max; ++n) pois[static_cast<std::size_t>(n)] = pois[n - 1] * a2 / n;

  double prefactor;
  switch (eng) {
    case Engineering::none: {
      const double e = std::exp(-2.0 * a2);
      prefactor = e / (4.0 * (1.0 + e) * (1.0 + e));
      break;
    }
    default: {
      const double n1 = derived_normalization(spec);
      prefactor = n1 * n1 * n1 * n1;
    }
  }

  const int lo = eng == Engineering::vacuum_filtered ? 1 : 0;
  const bool added = eng == Engineering::photon_added;
  double sum = 0.0;
  for (int n = lo; n <= n_max; ++n) {
    if (n % 2 != 0) continue;
    for (int r = lo; r <= n_max; ++r) {
      if (r % 2 != 0) continue;
      const double radial = pois[static_cast<std::size_t>(n)] * pois[static_cast<std::size_t>(r)];
      for (int m = lo; m <= std::min(n_max, n + r); ++m) {
        if (m % 2 != 0) continue;
        const int s = n + r - m;
        if (eng == Engineering::vacuum_filtered && s < 1) continue;  // removed vacuum component
        const double parity = parity_factor(n) * parity_factor(m) * parity_factor(r) * parity_factor(s);
        if (parity == 0.0) continue;
        double term;
        if (added) {
          term = radial * parity * inner_binomial_sum(n + 1, r + 1, m + 1) *
                 int_pow(0.5, n + r + 2) * (m + 1) * (s + 1);
        } else {
          term = radial * parity * inner_binomial_sum(n, r, m) * int_pow(0.5, n + r);
        }
        sum += term;
      }
    }
  }
  return 1.0 - prefactor * sum;
}

double bs_family_entropy(const StateSpec& spec, double tail_tol) {
  (void)tail_tol;
  const int cap = spec.photon_cap;
  const double p = spec.p;
  const Engineering eng = spec.engineering;

  if (p == 0.0 || cap == 0) return fock_state_linear_entropy(eng == Engineering::photon_added ? 1 : 0);
  if (p == 1.0) return fock_state_linear_entropy(cap + (eng == Engineering::photon_added ? 1 : 0));

  double prefactor = 1.0;
  if (eng != Engineering::none) {
    const double n1 = derived_normalization(spec);
    prefactor = n1 * n1 * n1 * n1;
  }

  const double lp = std::log(p);
  const double lq = std::log1p(-p);
  const double lcap = log_factorial(cap);
  const int lo = eng == Engineering::vacuum_filtered ? 1 : 0;
  const bool added = eng == Engineering::photon_added;

  double sum = 0.0;
  for (int n = lo; n <= cap; ++n) {
    for (int r = lo; r <= cap; ++r) {
      for (int m = lo; m <= std::min(cap, n + r); ++m) {
        const int s = n + r - m;
        if (s > cap) continue;  // (M - n - r + m)! of negative argument
        if (eng == Engineering::vacuum_filtered && s < 1) continue;
        const double log_term = 2.0 * lcap +
                                0.5 * (2.0 * (n + r) * lp + (4.0 * cap - 2.0 * (n + r)) * lq -
                                       log_factorial(cap - n) - log_factorial(cap - m) -
                                       log_factorial(cap - r) - log_factorial(cap - s)) -
                                log_factorial(n) - log_factorial(r);
        double term;
        if (added) {
          term = std::exp(log_term) * inner_binomial_sum(n + 1, r + 1, m + 1) *
                 int_pow(0.5, n + r + 2) * (m + 1) * (s + 1);
        } else {
          term = std::exp(log_term) * inner_binomial_sum(n, r, m) * int_pow(0.5, n + r);
        }
        sum += term;
      }
    }
  }
  return 1.0 - prefactor * sum;
}

double ks_family_entropy(const StateSpec& spec, double tail_tol) {
  const double a2 = spec.alpha_mag * spec.alpha_mag;
  const double chi = spec.chi;
  const int n_max = choose_cutoff(spec, tail_tol);
  const Engineering eng = spec.engineering;

  if (a2 == 0.0) return fock_state_linear_entropy(eng == Engineering::photon_added ? 1 : 0);

  std::vector<double> pois(static_cast<std::size_t>(n_max) + 1);
  pois[0] = 1.0;
  for (int n = 1; n <= n_max; ++n) pois[static_cast<std::size_t>(n)] = pois[n - 1] * a2 / n;

  double prefactor;
  switch (eng) {
    case Engineering::none:
      prefactor = std::exp(-2.0 * a2);
      break;
    default: {
      const double n1 = derived_normalization(spec);
      prefactor = n1 * n1 * n1 * n1;
    }
  }

  const auto phase_index = [](int i) { return static_cast<double>(i) * (i - 1); };
  const int lo = eng == Engineering::vacuum_filtered ? 1 : 0;
  const bool added = eng == Engineering::photon_added;
  complexd sum{0.0, 0.0};
  for (int n = lo; n <= n_max; ++n) {
    for (int r = lo; r <= n_max; ++r) {
      const double radial = pois[static_cast<std::size_t>(n)] * pois[static_cast<std::size_t>(r)];
      for (int m = lo; m <= std::min(n_max, n + r); ++m) {
        const int s = n + r - m;
        if (eng == Engineering::vacuum_filtered && s < 1) continue;
        const double arg = chi * (phase_index(m) - phase_index(n) - phase_index(r) + phase_index(s));
        double body;
        if (added) {
          body = radial * inner_binomial_sum(n + 1, r + 1, m + 1) * int_pow(0.5, n + r + 2) *
                 (m + 1) * (s + 1);
        } else {
          body = radial * inner_binomial_sum(n, r, m) * int_pow(0.5, n + r);
        }
        sum += body * std::polar(1.0, arg);
      }
    }
  }
  const complexd purity = prefactor * sum;
  if (std::abs(purity.imag()) >= 1e-10) {
    throw convergence_failure("Kerr linear-entropy sum left an imaginary residue of " +
                              std::to_string(purity.imag()));
  }
  return 1.0 - purity.real();
}

}  // namespace

double linear_entropy_closed_form(const StateSpec& spec, double tail_tol) {
  spec.validate();
  switch (spec.family) {
    case Family::even_coherent: return ecs_family_entropy(spec, tail_tol);
    case Family::binomial: return bs_family_entropy(spec, tail_tol);
    case Family::kerr: return ks_family_entropy(spec, tail_tol);
  }
  throw invalid_parameter("unknown family");
}

}  // namespace holeburn
