#include "holeburn/states.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "holeburn/errors.hpp"
#include "holeburn/special_functions.hpp"

namespace holeburn {

namespace {

constexpr int kScanLimit = 100000;
constexpr int kZeroRunLimit = 64;  // consecutive zero weights treated as end of support

// Unnormalized amplitude of the parent state in the prefactor-free
// convention (numerical normalization supplies the rest).
complexd parent_raw_amplitude(const StateSpec& spec, int n) {
  switch (spec.family) {
    case Family::even_coherent: {
      if (n % 2 != 0) return {0.0, 0.0};
      complexd t{1.0, 0.0};
      const complexd a = spec.alpha();
      for (int i = 1; i <= n; ++i) t *= a / std::sqrt(static_cast<double>(i));
      return 2.0 * t;
    }
    case Family::binomial: {
      if (n > spec.photon_cap) return {0.0, 0.0};
      const double w =
          binomial(spec.photon_cap, n) * int_pow(spec.p, n) * int_pow(1.0 - spec.p, spec.photon_cap - n);
      return {std::sqrt(w), 0.0};
    }
    case Family::kerr: {
      complexd t{1.0, 0.0};
      const complexd a = spec.alpha();
      for (int i = 1; i <= n; ++i) t *= a / std::sqrt(static_cast<double>(i));
      const double phase = -spec.chi * static_cast<double>(n) * static_cast<double>(n - 1);
      return t * std::polar(1.0, phase);
    }
  }
  throw invalid_parameter("unknown family");
}

// |c~_n|^2 of the engineered (or parent) weight sequence.
double engineered_weight(const StateSpec& spec, int n) {
  switch (spec.engineering) {
    case Engineering::none:
      return std::norm(parent_raw_amplitude(spec, n));
    case Engineering::vacuum_filtered:
      return n == 0 ? 0.0 : std::norm(parent_raw_amplitude(spec, n));
    case Engineering::photon_added:
      return n == 0 ? 0.0 : static_cast<double>(n) * std::norm(parent_raw_amplitude(spec, n - 1));
  }
  throw invalid_parameter("unknown engineering");
}

struct CutoffResult {
  int cutoff;
  double tail_bound;  // normalized tail mass bound
};

// Scan the weight sequence until the geometric-ratio tail bound certifies
// the requested tolerance.
CutoffResult scan_cutoff(const StateSpec& spec, double tail_tol) {
  std::vector<double> w;
  auto ensure = [&](int idx) {
    while (static_cast<int>(w.size()) <= idx) {
      w.push_back(engineered_weight(spec, static_cast<int>(w.size())));
    }
  };

  double partial = 0.0;
  for (int n = 0; n <= kScanLimit; ++n) {
    ensure(n + kZeroRunLimit);
    partial += w[static_cast<std::size_t>(n)];
    if (partial == 0.0) continue;  // nothing accumulated yet

    // Locate the next two nonzero weights above n.
    int a = -1, b = -1;
    for (int i = n + 1; i <= n + kZeroRunLimit && b < 0; ++i) {
      if (w[static_cast<std::size_t>(i)] > 0.0) {
        if (a < 0) a = i;
        else b = i;
      }
    }
    if (a < 0) return {n, 0.0};  // support exhausted
    if (b < 0) {
      // Single straggler; everything beyond it has underflowed.
      const double bound = w[static_cast<std::size_t>(a)] / partial;
      if (bound < tail_tol) return {n, bound};
      continue;
    }
    const double ratio = w[static_cast<std::size_t>(b)] / w[static_cast<std::size_t>(a)];
    if (ratio < 1.0) {
      const double bound = w[static_cast<std::size_t>(a)] / (1.0 - ratio) / partial;
      if (bound < tail_tol) return {n, bound};
    }
  }
  throw convergence_failure("cutoff search did not certify a tail below tolerance");
}

CutoffResult certified_cutoff(const StateSpec& spec, double tail_tol) {
  spec.validate();
  if (!(tail_tol > 0.0 && tail_tol < 1.0)) {
    throw invalid_parameter("tail tolerance must lie in (0, 1)");
  }
  if (spec.family == Family::binomial) {
    const int extra = spec.engineering == Engineering::photon_added ? 1 : 0;
    return {spec.photon_cap + extra, 0.0};
  }
  if (spec.alpha_mag == 0.0) {
    // Vacuum parent: only |0> (or |1> after photon addition) survives.
    return {spec.engineering == Engineering::photon_added ? 1 : 0, 0.0};
  }
  return scan_cutoff(spec, tail_tol);
}

}  // namespace

const char* family_name(Family f) {
  switch (f) {
    case Family::even_coherent: return "ecs";
    case Family::binomial: return "bs";
    case Family::kerr: return "ks";
  }
  return "?";
}

const char* engineering_name(Engineering e) {
  switch (e) {
    case Engineering::none: return "none";
    case Engineering::vacuum_filtered: return "vf";
    case Engineering::photon_added: return "pa";
  }
  return "?";
}

std::complex<double> StateSpec::alpha() const { return std::polar(alpha_mag, theta); }

void StateSpec::validate() const {
  switch (family) {
    case Family::even_coherent:
    case Family::kerr:
      if (!(alpha_mag >= 0.0) || !std::isfinite(alpha_mag)) {
        throw invalid_parameter("alpha magnitude must be finite and nonnegative");
      }
      if (alpha_mag > 12.0) {
        throw invalid_parameter("alpha magnitude above 12 exceeds the double-precision weight range");
      }
      if (!std::isfinite(theta)) throw invalid_parameter("theta must be finite");
      if (family == Family::kerr && !std::isfinite(chi)) throw invalid_parameter("chi must be finite");
      if (engineering == Engineering::vacuum_filtered && alpha_mag == 0.0) {
        throw invalid_parameter("vacuum filtration is undefined for a vacuum parent");
      }
      break;
    case Family::binomial:
      if (!(p >= 0.0 && p <= 1.0)) throw invalid_parameter("binomial p must lie in [0, 1]");
      if (photon_cap < 0) throw invalid_parameter("photon cap M must be nonnegative");
      if (photon_cap > 170) throw invalid_parameter("photon cap M above factorial range (170)");
      if (engineering == Engineering::vacuum_filtered && (p == 0.0 || photon_cap == 0)) {
        throw invalid_parameter("vacuum filtration is undefined for a vacuum parent");
      }
      break;
  }
}

std::string StateSpec::label() const {
  std::string tag = family_name(family);
  switch (engineering) {
    case Engineering::none: return tag;
    case Engineering::vacuum_filtered: return "vf" + tag;
    case Engineering::photon_added: return "pa" + tag;
  }
  return tag;
}

int choose_cutoff(const StateSpec& spec, double tail_tol) {
  return certified_cutoff(spec, tail_tol).cutoff;
}

FockVector build_parent(const StateSpec& spec, double tail_tol, int pad) {
  if (spec.engineering != Engineering::none) {
    throw invalid_parameter("build_parent requires engineering = none");
  }
  const CutoffResult cut = certified_cutoff(spec, tail_tol);
  const int n_max = cut.cutoff + pad;
  std::vector<complexd> amps(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) amps[static_cast<std::size_t>(n)] = parent_raw_amplitude(spec, n);
  return FockVector(std::move(amps), cut.tail_bound).normalized();
}

FockVector vacuum_filter(const FockVector& v) {
  const double p0 = v.probability(0);
  if (!(p0 < 1.0 - 1e-12)) {
    throw invalid_parameter("vacuum filtration is undefined: state is (numerically) the vacuum");
  }
  const double scale = 1.0 / std::sqrt(1.0 - p0);
  std::vector<complexd> amps(v.amplitudes().begin(), v.amplitudes().end());
  amps[0] = {0.0, 0.0};
  for (std::size_t n = 1; n < amps.size(); ++n) amps[n] *= scale;
  return FockVector(std::move(amps), v.tail_bound() / (1.0 - p0));
}

FockVector photon_add(const FockVector& v) {
  return apply_creation(v).normalized();
}

FockVector build_state(const StateSpec& spec, double tail_tol, int pad) {
  spec.validate();
  if (spec.engineering == Engineering::none) return build_parent(spec, tail_tol, pad);

  // The engineered state's certified cutoff can exceed the parent's (removing
  // vacuum weight or tilting toward higher n raises the relative tail), so
  // the parent is built wide enough for the engineered target plus padding.
  const CutoffResult cut = certified_cutoff(spec, tail_tol);
  StateSpec parent_spec = spec;
  parent_spec.engineering = Engineering::none;
  const int parent_cutoff = certified_cutoff(parent_spec, tail_tol).cutoff;
  const int shift = spec.engineering == Engineering::photon_added ? 1 : 0;
  const int parent_pad = std::max(0, cut.cutoff + pad - shift - parent_cutoff);
  const FockVector parent = build_parent(parent_spec, tail_tol, parent_pad);

  FockVector out = spec.engineering == Engineering::vacuum_filtered ? vacuum_filter(parent)
                                                                    : photon_add(parent);
  return FockVector(std::vector<complexd>(out.amplitudes().begin(), out.amplitudes().end()),
                    cut.tail_bound);
}

FockVector coherent_state(std::complex<double> alpha, double tail_tol, int pad) {
  StateSpec spec;
  spec.family = Family::kerr;
  spec.alpha_mag = std::abs(alpha);
  spec.theta = std::arg(alpha);
  spec.chi = 0.0;
  return build_state(spec, tail_tol, pad);
}

namespace {

void require_engineered(const StateSpec& spec) {
  if (spec.engineering == Engineering::none) {
    throw invalid_parameter("normalization constants are defined for engineered states only");
  }
  spec.validate();
}

}  // namespace

double derived_normalization(const StateSpec& spec) {
  require_engineered(spec);
  const double a2 = spec.alpha_mag * spec.alpha_mag;
  switch (spec.family) {
    case Family::even_coherent:
      if (spec.engineering == Engineering::vacuum_filtered) {
        return 1.0 / std::sqrt(4.0 * (std::cosh(a2) - 1.0));
      }
      return 0.5 / std::sqrt(std::cosh(a2) + a2 * std::sinh(a2));
    case Family::binomial:
      if (spec.engineering == Engineering::vacuum_filtered) {
        return 1.0 / std::sqrt(1.0 - int_pow(1.0 - spec.p, spec.photon_cap));
      }
      return 1.0 / std::sqrt(1.0 + spec.photon_cap * spec.p);
    case Family::kerr:
      if (spec.engineering == Engineering::vacuum_filtered) {
        return 1.0 / std::sqrt(std::expm1(a2));
      }
      return 1.0 / std::sqrt(std::exp(a2) * (1.0 + a2));
  }
  throw invalid_parameter("unknown family");
}

double published_normalization(const StateSpec& spec) {
  require_engineered(spec);
  if (spec.family == Family::even_coherent && spec.engineering == Engineering::vacuum_filtered) {
    const double a2 = spec.alpha_mag * spec.alpha_mag;
    return 1.0 / std::sqrt(4.0 * std::cosh(a2) - 1.0);
  }
  return derived_normalization(spec);
}

double summed_normalization(const StateSpec& spec, double tail_tol) {
  require_engineered(spec);
  const CutoffResult cut = certified_cutoff(spec, tail_tol);
  double sum = 0.0;
  for (int n = 0; n <= cut.cutoff; ++n) sum += engineered_weight(spec, n);
  return 1.0 / std::sqrt(sum);
}

}  // namespace holeburn
