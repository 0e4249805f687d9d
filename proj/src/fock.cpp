#include "holeburn/fock.hpp"

#include <cmath>

#include "holeburn/errors.hpp"
#include "holeburn/special_functions.hpp"

namespace holeburn {

FockVector::FockVector(std::vector<complexd> amplitudes, double tail_bound)
    : amps_(std::move(amplitudes)), tail_bound_(tail_bound) {
  if (amps_.empty()) throw invalid_parameter("FockVector needs at least the vacuum amplitude");
}

complexd FockVector::amplitude(int n) const {
  if (n < 0 || n > cutoff()) return {0.0, 0.0};
  return amps_[static_cast<std::size_t>(n)];
}

double FockVector::squared_norm() const {
  double s = 0.0;
  for (const auto& c : amps_) s += std::norm(c);
  return s;
}

double FockVector::norm() const { return std::sqrt(squared_norm()); }

FockVector FockVector::normalized() const {
  const double n = norm();
  if (!(n > 1e-150)) throw invalid_parameter("cannot normalize a zero vector");
  std::vector<complexd> scaled(amps_);
  for (auto& c : scaled) c /= n;
  return FockVector(std::move(scaled), tail_bound_);
}

double FockVector::probability(int n) const { return std::norm(amplitude(n)); }

FockVector FockVector::padded(int extra) const {
  if (extra < 0) throw invalid_parameter("negative padding");
  std::vector<complexd> amps(amps_);
  amps.resize(amps.size() + static_cast<std::size_t>(extra), complexd{0.0, 0.0});
  return FockVector(std::move(amps), tail_bound_);
}

FockVector fock_basis_state(int n, int cutoff) {
  if (n < 0) throw invalid_parameter("negative Fock index");
  if (cutoff < n) cutoff = n;
  std::vector<complexd> amps(static_cast<std::size_t>(cutoff) + 1, complexd{0.0, 0.0});
  amps[static_cast<std::size_t>(n)] = 1.0;
  return FockVector(std::move(amps), 0.0);
}

FockVector apply_creation(const FockVector& v) {
  const int n_max = v.cutoff();
  std::vector<complexd> out(static_cast<std::size_t>(n_max) + 2, complexd{0.0, 0.0});
  for (int n = 0; n <= n_max; ++n) {
    out[static_cast<std::size_t>(n) + 1] = std::sqrt(static_cast<double>(n + 1)) * v.amplitude(n);
  }
  return FockVector(std::move(out), v.tail_bound());
}

FockVector apply_annihilation(const FockVector& v) {
  const int n_max = v.cutoff();
  std::vector<complexd> out(static_cast<std::size_t>(std::max(n_max, 1)), complexd{0.0, 0.0});
  for (int n = 1; n <= n_max; ++n) {
    out[static_cast<std::size_t>(n) - 1] = std::sqrt(static_cast<double>(n)) * v.amplitude(n);
  }
  return FockVector(std::move(out), v.tail_bound());
}

complexd moment_oracle(const FockVector& v, int j, int k) {
  if (j < 0 || k < 0) throw invalid_parameter("moment orders must be nonnegative");
  if (j + k > kMaxMomentOrder) {
    throw invalid_parameter("moment order " + std::to_string(j + k) + " exceeds the configured maximum " +
                            std::to_string(kMaxMomentOrder));
  }
  const int n_max = v.cutoff();
  complexd sum{0.0, 0.0};
  for (int n = k; n <= n_max; ++n) {
    const int m = n - k + j;
    if (m > n_max) continue;  // truncated away
    const complexd left = v.amplitude(m);
    const complexd right = v.amplitude(n);
    if (left == complexd{0.0, 0.0} || right == complexd{0.0, 0.0}) continue;
    // sqrt(n!/(n-k)!) * sqrt(m!/(n-k)!)
    double weight = 1.0;
    for (int i = n - k + 1; i <= n; ++i) weight *= static_cast<double>(i);
    double weight_left = 1.0;
    for (int i = n - k + 1; i <= m; ++i) weight_left *= static_cast<double>(i);
    sum += std::conj(left) * right * std::sqrt(weight * weight_left);
  }
  return sum;
}

double mean_photon_number(const FockVector& v) { return moment_oracle(v, 1, 1).real(); }

namespace {

// (X w)_n with X = (a + a^dagger)/sqrt(2).
std::vector<complexd> apply_quadrature(const std::vector<complexd>& w) {
  const std::size_t size = w.size();
  std::vector<complexd> out(size, complexd{0.0, 0.0});
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (std::size_t n = 0; n < size; ++n) {
    complexd acc{0.0, 0.0};
    if (n + 1 < size) acc += std::sqrt(static_cast<double>(n + 1)) * w[n + 1];
    if (n >= 1) acc += std::sqrt(static_cast<double>(n)) * w[n - 1];
    out[n] = inv_sqrt2 * acc;
  }
  return out;
}

}  // namespace

double quadrature_central_moment_oracle(const FockVector& v, int l) {
  if (l < 2 || l % 2 != 0) throw invalid_parameter("quadrature central moment requires even l >= 2");
  const FockVector padded = v.padded(l);
  const complexd a_mean = moment_oracle(padded, 0, 1);
  const double x_mean = std::sqrt(2.0) * a_mean.real();

  std::vector<complexd> w(padded.amplitudes().begin(), padded.amplitudes().end());
  for (int step = 0; step < l; ++step) {
    std::vector<complexd> xw = apply_quadrature(w);
    for (std::size_t n = 0; n < w.size(); ++n) xw[n] -= x_mean * w[n];
    w = std::move(xw);
  }
  complexd result{0.0, 0.0};
  for (std::size_t n = 0; n < w.size(); ++n) result += std::conj(padded.amplitude(static_cast<int>(n))) * w[n];
  return result.real();
}

double number_central_moment_oracle(const FockVector& v, int l) {
  if (l < 1) throw invalid_parameter("number central moment requires l >= 1");
  const double n_mean = mean_photon_number(v);
  double sum = 0.0;
  for (int n = 0; n <= v.cutoff(); ++n) {
    const double p = v.probability(n);
    if (p == 0.0) continue;
    sum += p * int_pow(static_cast<double>(n) - n_mean, l);
  }
  return sum;
}

void MomentTable::set(int j, int k, complexd value, std::string source) {
  entries_[{j, k}] = Entry{value, std::move(source)};
}

bool MomentTable::contains(int j, int k) const { return entries_.count({j, k}) > 0; }

complexd MomentTable::get(int j, int k) const {
  const auto it = entries_.find({j, k});
  if (it == entries_.end()) {
    throw invalid_parameter("moment (" + std::to_string(j) + "," + std::to_string(k) + ") missing from table");
  }
  return it->second.value;
}

MomentTable oracle_moment_table(const FockVector& v, int max_j, int max_k) {
  MomentTable table;
  for (int j = 0; j <= max_j; ++j) {
    for (int k = 0; k <= max_k; ++k) {
      if (j + k > kMaxMomentOrder) continue;
      table.set(j, k, moment_oracle(v, j, k), "oracle");
    }
  }
  return table;
}

}  // namespace holeburn
