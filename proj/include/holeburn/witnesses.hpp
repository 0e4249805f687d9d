#pragma once

#include <string>

#include "holeburn/fock.hpp"

namespace holeburn {

enum class WitnessKind { antibunching, squeezing, sub_poissonian };

/// CLI / report tag: "hoa", "hos", "hosps".
const char* witness_kind_name(WitnessKind k);

struct WitnessReport {
  WitnessKind kind;
  int order;             // xi for antibunching, l otherwise
  double formula_value;  // moment-formula path
  double oracle_value;   // independent oracle path
  bool nonclassical;     // formula_value < 0, exactly
  bool discrepancy;      // |formula - oracle| > 1e-8 max(1, |oracle|)
  std::string note;      // metadata, e.g. the squeezing-formula reading used
};

/// xi-th order antibunching witness
///   A(xi) = Re<a^dagger^{xi+1} a^{xi+1}> - (Re<a^dagger a>)^{xi+1},
/// negative values signal nonclassicality. Both report values carry the same
/// expression (there is no separate oracle route). The diagonal moments must
/// be real to 1e-10.
WitnessReport higher_order_antibunching(const MomentTable& m, int xi);

/// The two candidate readings of the squeezing moment-reduction formula. The
/// published coefficient text is ambiguous; the implementation validates both
/// against the quadrature-moment oracle and keeps whichever matches.
enum class SqueezingReading { plain_factorial, double_factorial_shifted };
const char* squeezing_reading_name(SqueezingReading r);

/// The reading that reproduces quadrature_central_moment_oracle to 1e-8
/// relative on the validation set (vacuum, |1>, |2>, coherent 0.5 and 1.0,
/// even coherent 1.0; l = 2, 4, 6). Validated once and cached; throws
/// convergence_failure when neither reading passes.
SqueezingReading selected_squeezing_reading();

/// <(Delta X)^l> assembled from normally ordered moments under the given
/// reading.
double quadrature_central_moment_formula(const MomentTable& m, int l, SqueezingReading reading);

/// Hong-Mandel l-th order squeezing witness
///   S(l) = (<(Delta X)^l> - (1/2)_{l/2}) / (1/2)_{l/2},
/// formula path from the moment table, oracle path from operator application
/// on v. Requires even l >= 2.
WitnessReport hong_mandel_squeezing(const MomentTable& m, const FockVector& v, int l);

/// l-th central moment of a Poisson distribution with mean lambda, by direct
/// pmf summation to a 1e-15 tail.
double poisson_central_moment(int l, double lambda);

/// l-th order sub-Poissonian photon statistics witness
///   D(l) = sum_u sum_v S2(u,v) C(l,u) (-1)^u A(v) <N>^{l-u}
/// (formula path), against the oracle <(Delta N)^l> - mu_l^Poisson(<N>).
/// Requires l >= 2; odd orders are supported.
WitnessReport sub_poissonian_statistics(const MomentTable& m, const FockVector& v, int l);

}  // namespace holeburn
