#pragma once

#include <complex>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace holeburn {

using complexd = std::complex<double>;

/// Single-mode state on the truncated Fock basis |0..cutoff>.
///
/// Constructed states are normalized and carry a certified upper bound on
/// the probability mass truncated away. Intermediate vectors produced by
/// ladder operators keep their true (non-unit) norm.
class FockVector {
 public:
  explicit FockVector(std::vector<complexd> amplitudes, double tail_bound = 0.0);

  int cutoff() const { return static_cast<int>(amps_.size()) - 1; }
  std::span<const complexd> amplitudes() const { return amps_; }
  /// Amplitude c_n; zero outside [0, cutoff].
  complexd amplitude(int n) const;
  double tail_bound() const { return tail_bound_; }

  double squared_norm() const;
  double norm() const;
  /// Returns this vector scaled to unit norm. Throws invalid_parameter on a
  /// (numerically) zero vector.
  FockVector normalized() const;
  /// |c_n|^2.
  double probability(int n) const;
  /// Copy with the amplitude list zero-extended by `extra` entries.
  FockVector padded(int extra) const;

 private:
  std::vector<complexd> amps_;
  double tail_bound_ = 0.0;
};

/// Basis state |n> embedded at the given cutoff (default: cutoff = n).
FockVector fock_basis_state(int n, int cutoff = -1);

/// a^dagger v: amplitude at n+1 becomes sqrt(n+1) c_n. Output cutoff grows
/// by one; no amplitude is lost. Unnormalized.
FockVector apply_creation(const FockVector& v);

/// a v: amplitude at n-1 becomes sqrt(n) c_n. Unnormalized; annihilating the
/// vacuum yields the zero vector.
FockVector apply_annihilation(const FockVector& v);

/// Maximum j+k accepted by moment_oracle.
inline constexpr int kMaxMomentOrder = 12;

/// <a^dagger^j a^k> by direct summation over the truncated amplitudes:
/// sum_n conj(c_{n-k+j}) c_n sqrt(n!/(n-k)!) sqrt((n-k+j)!/(n-k)!).
/// Requires j + k <= kMaxMomentOrder and a normalized v.
complexd moment_oracle(const FockVector& v, int j, int k);

/// <N> = Re <a^dagger a>.
double mean_photon_number(const FockVector& v);

/// <(X - <X>)^l> for X = (a + a^dagger)/sqrt(2), evaluated by repeatedly
/// applying the shifted quadrature operator (the cutoff is extended by l
/// internally so no support is clipped). Requires even l >= 2.
double quadrature_central_moment_oracle(const FockVector& v, int l);

/// <(N - <N>)^l> = sum_n |c_n|^2 (n - <N>)^l. Requires l >= 1.
double number_central_moment_oracle(const FockVector& v, int l);

/// Cache of <a^dagger^j a^k> values with per-entry provenance.
class MomentTable {
 public:
  struct Entry {
    complexd value;
    std::string source;  // "oracle" or an analytic family tag
  };

  void set(int j, int k, complexd value, std::string source);
  bool contains(int j, int k) const;
  /// Throws invalid_parameter when the entry is missing.
  complexd get(int j, int k) const;
  const std::map<std::pair<int, int>, Entry>& entries() const { return entries_; }

 private:
  std::map<std::pair<int, int>, Entry> entries_;
};

/// Table of all (j, k) with j <= max_j, k <= max_k filled from moment_oracle.
MomentTable oracle_moment_table(const FockVector& v, int max_j, int max_k);

}  // namespace holeburn
