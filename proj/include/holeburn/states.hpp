#pragma once

#include <complex>

#include "holeburn/fock.hpp"

namespace holeburn {

enum class Family { even_coherent, binomial, kerr };
enum class Engineering { none, vacuum_filtered, photon_added };

const char* family_name(Family f);
const char* engineering_name(Engineering e);

/// Parameters selecting one of the nine states: a parent family (even
/// coherent / binomial / Kerr) plus an optional hole-burning step.
struct StateSpec {
  Family family = Family::even_coherent;
  Engineering engineering = Engineering::none;
  double alpha_mag = 0.0;  // |alpha|, even-coherent and Kerr families
  double theta = 0.0;      // arg(alpha), radians
  double p = 0.0;          // binomial success probability
  int photon_cap = 0;      // binomial photon cap M
  double chi = 0.0;        // Kerr phase parameter

  std::complex<double> alpha() const;
  /// Throws invalid_parameter when a family-relevant parameter is out of
  /// range or when vacuum filtration targets a pure vacuum parent.
  void validate() const;
  /// Short lowercase tag, e.g. "vfecs" or "pabs".
  std::string label() const;
};

/// Smallest cutoff N whose certified tail mass (geometric-ratio majorization
/// of the family weight sequence) stays below tail_tol. Finite families
/// return their exact support bound (M, or M+1 after photon addition).
int choose_cutoff(const StateSpec& spec, double tail_tol);

/// Parent-state amplitudes (engineering must be `none`), normalized, built
/// at the certified cutoff plus `pad` extra levels of genuine amplitude.
FockVector build_parent(const StateSpec& spec, double tail_tol = 1e-12, int pad = 0);

/// Removes the vacuum amplitude and rescales by (1 - |c_0|^2)^{-1/2}.
/// Throws invalid_parameter when the input is (numerically) the vacuum.
FockVector vacuum_filter(const FockVector& v);

/// Normalized a^dagger v; the squared norm absorbed by normalization equals
/// <N> + 1.
FockVector photon_add(const FockVector& v);

/// Any of the nine states: dispatches to build_parent / vacuum_filter /
/// photon_add according to spec.engineering.
FockVector build_state(const StateSpec& spec, double tail_tol = 1e-12, int pad = 0);

/// Coherent state |alpha> (Kerr family at chi = 0).
FockVector coherent_state(std::complex<double> alpha, double tail_tol = 1e-12, int pad = 0);

/// Normalization constant implied by direct summation of the engineered
/// state's unnormalized Fock weights (closed form). Defined for the six
/// engineered specs only.
double derived_normalization(const StateSpec& spec);

/// The constant as published for these states. Identical to
/// derived_normalization for all engineered states except the vacuum
/// filtered even coherent state, where the published value is inconsistent
/// with the amplitudes; both are exposed for audit.
double published_normalization(const StateSpec& spec);

/// Normalization constant obtained by numerically summing the unnormalized
/// weight sequence to the certified cutoff.
double summed_normalization(const StateSpec& spec, double tail_tol = 1e-12);

}  // namespace holeburn
