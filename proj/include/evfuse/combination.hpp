#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "evfuse/errors.hpp"
#include "evfuse/mass_function.hpp"

namespace evfuse {

struct CombinationOptions {
  // Conflict threshold: the rule is inapplicable for K >= 1 - total_conflict_tolerance.
  double total_conflict_tolerance = 1e-12;
  // Products below any reporting precision are pruned to keep focal sets sparse.
  double prune_threshold = 1e-15;
};

/// Conflict coefficient K between two BBAs: the total product mass landing on
/// empty intersections. K = 1 means total conflict.
inline double conflict(const MassFunction& m1, const MassFunction& m2) {
  if (!(m1.frame() == m2.frame())) raise(Errc::frame_mismatch, "BBAs live on different frames");
  double k = 0.0;
  for (const auto& b : m1.focal_elements())
    for (const auto& c : m2.focal_elements())
      if (!b.proposition.intersects(c.proposition)) k += b.mass * c.mass;
  return k;
}

/// Dempster's rule of combination (the orthogonal sum):
/// m(A) = (1/(1−K)) · Σ_{B∩C=A} m1(B)·m2(C) for A ≠ ∅.
/// Applicable only while K < 1; near-total conflict is rejected.
///
/// Products are accumulated in a canonical order (sorted by target
/// proposition, then value), so the result is bit-identical under argument
/// swap: the rule is exactly commutative, not just up to rounding.
inline MassFunction dempster_combine(const MassFunction& m1, const MassFunction& m2,
                                     const CombinationOptions& opts = {}) {
  if (!(m1.frame() == m2.frame())) raise(Errc::frame_mismatch, "BBAs live on different frames");

  std::vector<std::pair<std::uint64_t, double>> cells;
  cells.reserve(m1.focal_count() * m2.focal_count());
  for (const auto& b : m1.focal_elements())
    for (const auto& c : m2.focal_elements())
      cells.emplace_back(b.proposition.intersect(c.proposition).bits(), b.mass * c.mass);
  std::sort(cells.begin(), cells.end());

  double k = 0.0;
  std::vector<FocalElement> focal;
  for (std::size_t i = 0; i < cells.size();) {
    const std::uint64_t bits = cells[i].first;
    double sum = 0.0;
    for (; i < cells.size() && cells[i].first == bits; ++i) sum += cells[i].second;
    if (bits == 0)
      k = sum;
    else
      focal.push_back({Proposition(bits), sum});
  }
  if (k >= 1.0 - opts.total_conflict_tolerance)
    raise(Errc::total_conflict,
          "conflict K = " + std::to_string(k) + "; Dempster's rule requires K < 1");

  const double scale = 1.0 / (1.0 - k);
  for (auto& f : focal) f.mass *= scale;
  std::erase_if(focal, [&](const FocalElement& f) { return f.mass < opts.prune_threshold; });
  return detail::build_mass_function(m1.frame(), std::move(focal), {});
}

/// Left fold of Dempster's rule over a nonempty list. A singleton list
/// returns its element unchanged.
inline MassFunction combine_n(std::span<const MassFunction> ms, const CombinationOptions& opts = {}) {
  if (ms.empty()) raise(Errc::empty_evidence_list, "nothing to combine");
  MassFunction acc = ms[0];
  for (std::size_t i = 1; i < ms.size(); ++i) {
    try {
      acc = dempster_combine(acc, ms[i], opts);
    } catch (const Error& e) {
      raise(e.code(), e.detail() + " (combination step " + std::to_string(i) + ")");
    }
  }
  return acc;
}

inline MassFunction combine_n(const std::vector<MassFunction>& ms, const CombinationOptions& opts = {}) {
  return combine_n(std::span<const MassFunction>(ms), opts);
}

}  // namespace evfuse
