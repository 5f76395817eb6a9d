#pragma once

#include <cmath>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "evfuse/errors.hpp"
#include "evfuse/mass_function.hpp"
#include "evfuse/weights.hpp"

namespace evfuse {

// Zero coordinates are replaced by this value inside log-based formulas so
// the logarithms stay finite. The inputs themselves are never renormalized;
// the perturbation is below 4e-11 in any resulting divergence.
inline constexpr double kLogEpsilon = 1e-12;

namespace detail {

inline double eps_substituted(double x) { return x == 0.0 ? kLogEpsilon : x; }

// -Σ x·log2(x) over an eps-substituted coordinate vector.
inline double entropy_base2(std::span<const double> values) {
  double h = 0.0;
  for (double v : values) h -= v * std::log2(v);
  return h;
}

// Shared core of the GJS/GBJS entropy form: H(Σ ω_j V_j) − Σ ω_j H(V_j).
// Every vector must already be eps-substituted; the mixture inherits the
// substitution through the weighted sum.
inline double generalized_js(std::span<const std::vector<double>> vectors,
                             std::span<const double> weights) {
  const std::size_t coords = vectors[0].size();
  std::vector<double> mixture(coords, 0.0);
  for (std::size_t j = 0; j < vectors.size(); ++j)
    for (std::size_t i = 0; i < coords; ++i) mixture[i] += weights[j] * vectors[j][i];
  for (double& x : mixture) x = eps_substituted(x);

  double mean_entropy = 0.0;
  for (std::size_t j = 0; j < vectors.size(); ++j)
    mean_entropy += weights[j] * entropy_base2(vectors[j]);
  return entropy_base2(mixture) - mean_entropy;
}

// The expanded logarithmic form of the same divergence:
// Σ_j ω_j Σ_i v_ji · log2(v_ji / Σ_s ω_s v_si).
inline double generalized_js_expanded(std::span<const std::vector<double>> vectors,
                                      std::span<const double> weights) {
  const std::size_t coords = vectors[0].size();
  std::vector<double> mixture(coords, 0.0);
  for (std::size_t j = 0; j < vectors.size(); ++j)
    for (std::size_t i = 0; i < coords; ++i) mixture[i] += weights[j] * vectors[j][i];
  for (double& x : mixture) x = eps_substituted(x);

  double total = 0.0;
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    double inner = 0.0;
    for (std::size_t i = 0; i < coords; ++i)
      inner += vectors[j][i] * std::log2(vectors[j][i] / mixture[i]);
    total += weights[j] * inner;
  }
  return total;
}

// Coordinate set for mass-function divergences: the union of focal elements
// across all BBAs, each proposition (singleton or compound) one coordinate,
// in canonical encoding order.
inline std::vector<Proposition> focal_union(std::span<const MassFunction> ms) {
  std::set<std::uint64_t> bits;
  for (const auto& m : ms)
    for (const auto& f : m.focal_elements()) bits.insert(f.proposition.bits());
  std::vector<Proposition> out;
  out.reserve(bits.size());
  for (auto b : bits) out.emplace_back(b);
  return out;
}

inline std::vector<std::vector<double>> coordinate_vectors(std::span<const MassFunction> ms,
                                                           std::span<const Proposition> coords) {
  std::vector<std::vector<double>> vectors(ms.size());
  for (std::size_t j = 0; j < ms.size(); ++j) {
    vectors[j].reserve(coords.size());
    for (Proposition p : coords) vectors[j].push_back(eps_substituted(ms[j].mass(p)));
  }
  return vectors;
}

inline void check_gbjs_preconditions(std::span<const MassFunction> ms, const WeightVector& w) {
  if (ms.empty()) raise(Errc::empty_evidence_list, "divergence needs at least one BBA");
  for (std::size_t j = 1; j < ms.size(); ++j)
    if (!(ms[j].frame() == ms[0].frame()))
      raise(Errc::frame_mismatch, "BBAs live on different frames");
  if (w.size() != ms.size())
    raise(Errc::length_mismatch, std::to_string(ms.size()) + " BBAs but " +
                                     std::to_string(w.size()) + " weights");
  if (!w.is_normalized())
    raise(Errc::unnormalized_weights,
          "weights sum to " + std::to_string(w.sum()) + ", expected 1");
}

inline void check_gjs_preconditions(std::span<const ProbabilityDistribution> ps,
                                    const WeightVector& w) {
  if (ps.empty()) raise(Errc::empty_evidence_list, "divergence needs at least one distribution");
  for (std::size_t j = 1; j < ps.size(); ++j)
    if (ps[j].size() != ps[0].size())
      raise(Errc::length_mismatch, "distributions have different lengths");
  if (w.size() != ps.size())
    raise(Errc::length_mismatch, std::to_string(ps.size()) + " distributions but " +
                                     std::to_string(w.size()) + " weights");
  if (!w.is_normalized())
    raise(Errc::unnormalized_weights,
          "weights sum to " + std::to_string(w.sum()) + ", expected 1");
}

}  // namespace detail

/// Shannon entropy of a distribution, base 2; in [0, log2 M].
inline double shannon_entropy(const ProbabilityDistribution& p) {
  std::vector<double> v(p.values());
  for (double& x : v) x = detail::eps_substituted(x);
  return detail::entropy_base2(v);
}

/// Shannon entropy of a BBA, base 2, each focal set one coordinate.
inline double shannon_entropy(const MassFunction& m) {
  std::vector<double> v;
  v.reserve(m.focal_count());
  for (const auto& f : m.focal_elements()) v.push_back(detail::eps_substituted(f.mass));
  return detail::entropy_base2(v);
}

/// Generalised Jensen-Shannon divergence among k weighted distributions:
/// H(Σ ω_j P_j) − Σ ω_j H(P_j). Bounded by [0, log2 k].
inline double gjs_divergence(std::span<const ProbabilityDistribution> ps, const WeightVector& w) {
  detail::check_gjs_preconditions(ps, w);
  std::vector<std::vector<double>> vectors(ps.size());
  for (std::size_t j = 0; j < ps.size(); ++j) {
    vectors[j] = ps[j].values();
    for (double& x : vectors[j]) x = detail::eps_substituted(x);
  }
  return detail::generalized_js(vectors, w.values());
}

inline double gjs_divergence(const std::vector<ProbabilityDistribution>& ps, const WeightVector& w) {
  return gjs_divergence(std::span<const ProbabilityDistribution>(ps), w);
}

/// Generalised Belief Jensen-Shannon divergence among k weighted BBAs over a
/// shared frame, computed over the union of their focal elements. Entropy
/// form; agrees with the expanded form within floating-point noise.
inline double gbjs_divergence(std::span<const MassFunction> ms, const WeightVector& w) {
  detail::check_gbjs_preconditions(ms, w);
  const auto coords = detail::focal_union(ms);
  const auto vectors = detail::coordinate_vectors(ms, coords);
  return detail::generalized_js(vectors, w.values());
}

inline double gbjs_divergence(const std::vector<MassFunction>& ms, const WeightVector& w) {
  return gbjs_divergence(std::span<const MassFunction>(ms), w);
}

/// The same divergence via the expanded logarithmic sum. Kept as a public
/// second route; the two formulations agree within 1e-9.
inline double gbjs_divergence_expanded(std::span<const MassFunction> ms, const WeightVector& w) {
  detail::check_gbjs_preconditions(ms, w);
  const auto coords = detail::focal_union(ms);
  const auto vectors = detail::coordinate_vectors(ms, coords);
  return detail::generalized_js_expanded(vectors, w.values());
}

inline double gbjs_divergence_expanded(const std::vector<MassFunction>& ms, const WeightVector& w) {
  return gbjs_divergence_expanded(std::span<const MassFunction>(ms), w);
}

/// Equal-reliability special case: uniform weights 1/k.
inline double gbjs_equal_weights(std::span<const MassFunction> ms) {
  if (ms.empty()) raise(Errc::empty_evidence_list, "divergence needs at least one BBA");
  return gbjs_divergence(ms, WeightVector::uniform(ms.size()));
}

inline double gbjs_equal_weights(const std::vector<MassFunction>& ms) {
  return gbjs_equal_weights(std::span<const MassFunction>(ms));
}

}  // namespace evfuse
