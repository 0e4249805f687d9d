#pragma once

#include <complex>

#include "holeburn/fock.hpp"
#include "holeburn/states.hpp"

namespace holeburn {

/// Closed-form <a^dagger^j a^k> for the even-coherent family, evaluated as a
/// convergent series (terms are summed until five consecutive terms fall
/// below 1e-16 of the running sum). Engineered variants use the
/// amplitude-derived normalization prefactor.
complexd ecs_family_moment(Engineering engineering, int j, int k, complexd alpha);

/// Closed-form <a^dagger^t a^r> for the binomial family (finite sums; index
/// combinations with a negative factorial argument contribute zero).
double bs_family_moment(Engineering engineering, int t, int r, double p, int photon_cap);

/// Closed-form <a^dagger^q a^s> for the Kerr family with the quadratic
/// phase exp(i chi [...]) carried per term.
complexd ks_family_moment(Engineering engineering, int q, int s, complexd alpha, double chi);

/// Dispatch on spec.family.
complexd analytic_moment(const StateSpec& spec, int j, int k);

/// Table of all (j, k) with j <= max_j, k <= max_k filled from the family
/// series; entries are tagged with the state label.
MomentTable analytic_moment_table(const StateSpec& spec, int max_j, int max_k);

}  // namespace holeburn
