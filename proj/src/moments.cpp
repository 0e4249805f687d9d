#include "holeburn/moments.hpp"

#include <cmath>

#include "holeburn/errors.hpp"
#include "holeburn/special_functions.hpp"

namespace holeburn {

namespace {

constexpr int kSeriesLimit = 100000;
constexpr int kSmallRunTarget = 5;
constexpr double kRelStop = 1e-16;

double parity_factor(int n) { return n % 2 == 0 ? 2.0 : 0.0; }

complexd cpow_int(complexd base, int e) {
  complexd r{1.0, 0.0};
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

// Accumulates series terms with the relative stopping rule.
class Series {
 public:
  // Returns true once converged.
  bool add(complexd term) {
    sum_ += term;
    const double threshold = kRelStop * std::max(std::abs(sum_), 1e-300);
    if (std::abs(term) <= threshold) {
      if (++small_run_ >= kSmallRunTarget) return true;
    } else {
      small_run_ = 0;
    }
    return false;
  }
  complexd value() const { return sum_; }

 private:
  complexd sum_{0.0, 0.0};
  int small_run_ = 0;
};

[[noreturn]] void series_diverged(const char* what) {
  throw convergence_failure(std::string(what) + " series did not converge");
}

// Moments of the Fock state |n0> (alpha = 0 degenerate cases).
complexd fock_state_moment(int n0, int j, int k) {
  if (j != k || k > n0) return {0.0, 0.0};
  double w = 1.0;
  for (int i = n0 - k + 1; i <= n0; ++i) w *= static_cast<double>(i);
  return {w, 0.0};
}

}  // namespace

complexd ecs_family_moment(Engineering engineering, int j, int k, complexd alpha) {
  if (j < 0 || k < 0) throw invalid_parameter("moment orders must be nonnegative");
  const double a2 = std::norm(alpha);

  if (a2 == 0.0) {
    switch (engineering) {
      case Engineering::none: return fock_state_moment(0, j, k);
      case Engineering::vacuum_filtered:
        throw invalid_parameter("vacuum filtration is undefined for a vacuum parent");
      case Engineering::photon_added: return fock_state_moment(1, j, k);
    }
  }

  Series series;
  switch (engineering) {
    case Engineering::none: {
      const double prefactor = std::exp(-a2) / (2.0 * (1.0 + std::exp(-2.0 * a2)));
      // sum_n alpha^n conj(alpha)^{n-k+j} / (n-k)! * eps(n) eps(n-k+j)
      complexd base = cpow_int(alpha, k) * cpow_int(std::conj(alpha), j);
      for (int n = k; n <= k + kSeriesLimit; ++n) {
        const complexd term = base * parity_factor(n) * parity_factor(n - k + j);
        if (series.add(term)) return prefactor * series.value();
        base *= a2 / static_cast<double>(n - k + 1);
      }
      series_diverged("even-coherent moment");
    }
    case Engineering::vacuum_filtered: {
      StateSpec tag;
      tag.family = Family::even_coherent;
      tag.engineering = Engineering::vacuum_filtered;
      tag.alpha_mag = std::abs(alpha);
      const double n2 = derived_normalization(tag);
      const double prefactor = n2 * n2;
      if (k <= j) {
        const int n_start = std::max(k, 1);
        complexd base = cpow_int(alpha, n_start) * cpow_int(std::conj(alpha), n_start - k + j) /
                        factorial(n_start - k);
        for (int n = n_start; n <= n_start + kSeriesLimit; ++n) {
          const complexd term = base * parity_factor(n) * parity_factor(n - k + j);
          if (series.add(term)) return prefactor * series.value();
          base *= a2 / static_cast<double>(n - k + 1);
        }
      } else {
        // Published branch form for k > j: conjugate roles of the two exponents.
        const int n_start = std::max(j, 1);
        complexd base = cpow_int(std::conj(alpha), n_start) * cpow_int(alpha, n_start + k - j) /
                        factorial(n_start - j);
        for (int n = n_start; n <= n_start + kSeriesLimit; ++n) {
          const complexd term = base * parity_factor(n) * parity_factor(n + k - j);
          if (series.add(term)) return prefactor * series.value();
          base *= a2 / static_cast<double>(n - j + 1);
        }
      }
      series_diverged("vacuum-filtered even-coherent moment");
    }
    case Engineering::photon_added: {
      const double a2cosh = std::cosh(a2) + a2 * std::sinh(a2);
      const double prefactor = 1.0 / (4.0 * a2cosh);
      const int n_start = std::max({0, k - 1, k - j});
      complexd base = cpow_int(alpha, n_start) * cpow_int(std::conj(alpha), n_start - k + j) /
                      factorial(n_start + 1 - k);
      for (int n = n_start; n <= n_start + kSeriesLimit; ++n) {
        const double poly = static_cast<double>(n + 1) * static_cast<double>(n - k + j + 1);
        const complexd term = base * poly * parity_factor(n) * parity_factor(n - k + j);
        if (series.add(term)) return prefactor * series.value();
        base *= a2 / static_cast<double>(n + 2 - k);
      }
      series_diverged("photon-added even-coherent moment");
    }
  }
  throw invalid_parameter("unknown engineering");
}

namespace {

// One binomial-family term evaluated in log space:
//   sqrt(p^pe (1-p)^qe / (fa! fb!)) * M! / fc!
// Any negative factorial argument makes the term zero. Requires p in (0,1).
double bs_term(double p, int photon_cap, int pe, int qe, int fa, int fb, int fc, double extra_log = 0.0) {
  if (fa < 0 || fb < 0 || fc < 0 || pe < 0 || qe < 0) return 0.0;
  const double log_term = 0.5 * (pe * std::log(p) + qe * std::log1p(-p) - log_factorial(fa) -
                                 log_factorial(fb)) +
                          log_factorial(photon_cap) - log_factorial(fc) + extra_log;
  return std::exp(log_term);
}

}  // namespace

double bs_family_moment(Engineering engineering, int t, int r, double p, int photon_cap) {
  if (t < 0 || r < 0) throw invalid_parameter("moment orders must be nonnegative");
  if (!(p >= 0.0 && p <= 1.0)) throw invalid_parameter("binomial p must lie in [0, 1]");
  if (photon_cap < 0 || photon_cap > 170) throw invalid_parameter("photon cap out of range");
  const int cap = photon_cap;

  // p = 0 or 1 collapse to Fock states; the published sums are evaluated for
  // interior p where the log-space form is well defined.
  if (p == 0.0 || p == 1.0 || cap == 0) {
    const int parent = p == 1.0 ? cap : 0;
    switch (engineering) {
      case Engineering::none: return fock_state_moment(parent, t, r).real();
      case Engineering::vacuum_filtered:
        if (parent == 0) throw invalid_parameter("vacuum filtration is undefined for a vacuum parent");
        return fock_state_moment(parent, t, r).real();
      case Engineering::photon_added: return fock_state_moment(parent + 1, t, r).real();
    }
  }

  double sum = 0.0;
  switch (engineering) {
    case Engineering::none: {
      for (int n = 0; n <= cap; ++n) {
        sum += bs_term(p, cap, 2 * n - r + t, 2 * (cap - n) + r - t, cap - n, cap - n + r - t, n - r);
      }
      return sum;
    }
    case Engineering::vacuum_filtered: {
      StateSpec tag;
      tag.family = Family::binomial;
      tag.engineering = Engineering::vacuum_filtered;
      tag.p = p;
      tag.photon_cap = cap;
      const double n2 = derived_normalization(tag);
      if (r <= t) {
        for (int n = 1; n <= cap; ++n) {
          sum += bs_term(p, cap, 2 * n - r + t, 2 * (cap - n) + r - t, cap - n, cap - n + r - t, n - r);
        }
      } else {
        for (int n = 1; n <= cap; ++n) {
          sum += bs_term(p, cap, 2 * n + r - t, 2 * (cap - n) - r + t, cap - n, cap - n - r + t, n - t);
        }
      }
      return n2 * n2 * sum;
    }
    case Engineering::photon_added: {
      const double n2 = 1.0 / (1.0 + cap * p);
      for (int n = 0; n <= cap; ++n) {
        if (n + 1 - r < 0 || n - r + t < 0) continue;
        const double poly = static_cast<double>(n + 1) * static_cast<double>(n + 1 - r + t);
        sum += poly * bs_term(p, cap, 2 * n - r + t, 2 * (cap - n) + r - t, cap - n, cap - n + r - t,
                              n + 1 - r);
      }
      return n2 * sum;
    }
  }
  throw invalid_parameter("unknown engineering");
}

complexd ks_family_moment(Engineering engineering, int q, int s, complexd alpha, double chi) {
  if (q < 0 || s < 0) throw invalid_parameter("moment orders must be nonnegative");
  const double a2 = std::norm(alpha);

  if (a2 == 0.0) {
    switch (engineering) {
      case Engineering::none: return fock_state_moment(0, q, s);
      case Engineering::vacuum_filtered:
        throw invalid_parameter("vacuum filtration is undefined for a vacuum parent");
      case Engineering::photon_added: return fock_state_moment(1, q, s);
    }
  }

  const auto kerr_phase = [chi](int raised, int n) {
    // exp(i chi [raised(raised-1) - n(n-1)])
    const double arg =
        chi * (static_cast<double>(raised) * (raised - 1) - static_cast<double>(n) * (n - 1));
    return std::polar(1.0, arg);
  };

  Series series;
  switch (engineering) {
    case Engineering::none: {
      const double prefactor = std::exp(-a2);
      complexd base = cpow_int(alpha, s) * cpow_int(std::conj(alpha), q);
      for (int n = s; n <= s + kSeriesLimit; ++n) {
        const complexd term = base * kerr_phase(n - s + q, n);
        if (series.add(term)) return prefactor * series.value();
        base *= a2 / static_cast<double>(n - s + 1);
      }
      series_diverged("Kerr moment");
    }
    case Engineering::vacuum_filtered: {
      const double prefactor = 1.0 / std::expm1(a2);
      if (s <= q) {
        const int n_start = std::max(s, 1);
        complexd base = cpow_int(alpha, n_start) * cpow_int(std::conj(alpha), n_start - s + q) /
                        factorial(n_start - s);
        for (int n = n_start; n <= n_start + kSeriesLimit; ++n) {
          const complexd term = base * kerr_phase(n - s + q, n);
          if (series.add(term)) return prefactor * series.value();
          base *= a2 / static_cast<double>(n - s + 1);
        }
      } else {
        // Published branch form for s > q, with the conjugated phase.
        const int n_start = std::max(q, 1);
        complexd base = cpow_int(std::conj(alpha), n_start) * cpow_int(alpha, n_start + s - q) /
                        factorial(n_start - q);
        for (int n = n_start; n <= n_start + kSeriesLimit; ++n) {
          const complexd term = base * std::conj(kerr_phase(n + s - q, n));
          if (series.add(term)) return prefactor * series.value();
          base *= a2 / static_cast<double>(n - q + 1);
        }
      }
      series_diverged("vacuum-filtered Kerr moment");
    }
    case Engineering::photon_added: {
      const double prefactor = std::exp(-a2) / (1.0 + a2);
      const int n_start = std::max({0, s - 1, s - q});
      complexd base = cpow_int(alpha, n_start) * cpow_int(std::conj(alpha), n_start - s + q) /
                      factorial(n_start + 1 - s);
      for (int n = n_start; n <= n_start + kSeriesLimit; ++n) {
        const double poly = static_cast<double>(n + 1) * static_cast<double>(n - s + q + 1);
        const complexd term = base * poly * kerr_phase(n - s + q, n);
        if (series.add(term)) return prefactor * series.value();
        base *= a2 / static_cast<double>(n + 2 - s);
      }
      series_diverged("photon-added Kerr moment");
    }
  }
  throw invalid_parameter("unknown engineering");
}

complexd analytic_moment(const StateSpec& spec, int j, int k) {
  spec.validate();
  switch (spec.family) {
    case Family::even_coherent: return ecs_family_moment(spec.engineering, j, k, spec.alpha());
    case Family::binomial: return {bs_family_moment(spec.engineering, j, k, spec.p, spec.photon_cap), 0.0};
    case Family::kerr: return ks_family_moment(spec.engineering, j, k, spec.alpha(), spec.chi);
  }
  throw invalid_parameter("unknown family");
}

MomentTable analytic_moment_table(const StateSpec& spec, int max_j, int max_k) {
  MomentTable table;
  for (int j = 0; j <= max_j; ++j) {
    for (int k = 0; k <= max_k; ++k) {
      table.set(j, k, analytic_moment(spec, j, k), spec.label());
    }
  }
  return table;
}

}  // namespace holeburn
