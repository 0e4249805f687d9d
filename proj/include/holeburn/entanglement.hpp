#pragma once

#include "holeburn/fock.hpp"
#include "holeburn/states.hpp"

namespace holeburn {

/// Two-mode state on the truncated basis |j, m> with j + m <= cutoff.
class TwoModeVector {
 public:
  TwoModeVector(int cutoff, std::vector<complexd> amplitudes);

  int cutoff() const { return cutoff_; }
  complexd amplitude(int j, int m) const;
  double squared_norm() const;

 private:
  int cutoff_;
  std::vector<complexd> amps_;  // dense (cutoff+1)^2, row-major in j
};

/// Balanced beam splitter acting on v and a vacuum ancilla:
/// d_{j, n-j} = c_n 2^{-n/2} sqrt(C(n, j)). Norm preserving.
TwoModeVector beamsplit_with_vacuum(const FockVector& v);

/// Tr(rho_B^2), the squared Frobenius norm of the Gram matrix of the mode-B
/// conditional vectors.
double reduced_purity(const TwoModeVector& t);

/// Entanglement potential 1 - Tr(rho_B^2) of the balanced beam-splitter
/// output with a vacuum ancilla.
double linear_entropy(const FockVector& v);

/// The same quantity from the per-family closed-form triple sums, truncated
/// at the certified cutoff. Engineered prefactors use amplitude-derived
/// normalizations; for the Kerr family the complex sum's imaginary residue
/// is checked against 1e-10 and discarded.
double linear_entropy_closed_form(const StateSpec& spec, double tail_tol = 1e-12);

}  // namespace holeburn
