#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "evfuse/combination.hpp"
#include "evfuse/divergence.hpp"
#include "evfuse/errors.hpp"
#include "evfuse/mass_function.hpp"
#include "evfuse/weights.hpp"

namespace evfuse {

// Leave-one-out divergences at or below this are treated as fully agreeing
// evidences; the final weights then fall back to uniform.
inline constexpr double kAllZeroSupportThreshold = 1e-12;

/// One body of evidence: a BBA plus optional sensor reliability factors.
/// Sufficiency and importance come as a pair or not at all, uniformly across
/// the sources of one fusion job.
struct EvidenceSource {
  std::string label;
  MassFunction mass;
  std::optional<double> sufficiency;
  std::optional<double> importance;
};

/// Every intermediate product of the fusion pipeline, kept for reporting.
struct FusionReport {
  WeightVector reliability_weights;   // raw ω
  WeightVector normalized_weights;    // ω̄
  std::vector<double> support_degrees;
  WeightVector final_weights;         // normalized supports (or uniform fallback)
  bool uniform_fallback = false;      // true when all supports vanished
  MassFunction wae;                   // weighted average evidence
  std::vector<MassFunction> per_step; // k−1 successive combination results
  MassFunction final_mass;            // == per_step.back()
};

/// Raw reliability weights ω_j = sufficiency_j × importance_j, or the uniform
/// 1/k fallback when no reliability information is supplied.
inline WeightVector reliability_weights(std::span<const EvidenceSource> sources) {
  if (sources.empty()) raise(Errc::empty_evidence_list, "no evidence sources");
  std::size_t with_info = 0;
  for (const auto& s : sources) {
    if (s.sufficiency.has_value() != s.importance.has_value())
      raise(Errc::mixed_reliability_info,
            "source '" + s.label + "' has only one of sufficiency/importance");
    if (s.sufficiency) ++with_info;
  }
  if (with_info != 0 && with_info != sources.size())
    raise(Errc::mixed_reliability_info,
          "reliability factors must be given for all sources or none");

  std::vector<double> w;
  w.reserve(sources.size());
  if (with_info == 0) {
    w.assign(sources.size(), 1.0 / static_cast<double>(sources.size()));
  } else {
    for (const auto& s : sources) {
      if (*s.sufficiency <= 0.0 || *s.importance <= 0.0)
        raise(Errc::nonpositive_reliability,
              "source '" + s.label + "' has nonpositive reliability factors");
      w.push_back(*s.sufficiency * *s.importance);
    }
  }
  return WeightVector(std::move(w));
}

/// ω̄_j = ω_j / Σ_s ω_s.
inline WeightVector normalize_weights(const WeightVector& w) {
  const double sum = w.sum();
  if (sum <= 0.0) raise(Errc::zero_weight_sum, "weights sum to zero");
  std::vector<double> out(w.values());
  for (double& x : out) x /= sum;
  return WeightVector(std::move(out));
}

/// ω̃_i = ω_i / Σ_{s≠j} ω_s for i ≠ j; the weights used when evidence j is
/// excluded. Length k−1, ordered as the remaining evidences.
inline WeightVector leave_one_out_weights(const WeightVector& w, std::size_t excluded) {
  if (excluded >= w.size())
    raise(Errc::index_out_of_range,
          "index " + std::to_string(excluded) + " out of range for k = " + std::to_string(w.size()));
  if (w.size() < 2) raise(Errc::degenerate_exclusion, "cannot exclude from a single evidence");
  double rest = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (i != excluded) rest += w[i];
  if (rest <= 0.0) raise(Errc::degenerate_exclusion, "remaining weights sum to zero");

  std::vector<double> out;
  out.reserve(w.size() - 1);
  for (std::size_t i = 0; i < w.size(); ++i)
    if (i != excluded) out.push_back(w[i] / rest);
  return WeightVector(std::move(out));
}

/// Sup(m_j): the GBJS divergence of all evidences except m_j under the
/// leave-one-out weights. Excluding an outlier leaves agreeing evidences with
/// small divergence, so higher Sup means better-supported evidence.
inline std::vector<double> support_degrees(std::span<const EvidenceSource> sources,
                                           const WeightVector& w) {
  const std::size_t k = sources.size();
  if (k < 3)
    raise(Errc::too_few_evidences,
          "support degrees need k >= 3 evidences, got " + std::to_string(k));
  if (w.size() != k)
    raise(Errc::length_mismatch,
          std::to_string(k) + " sources but " + std::to_string(w.size()) + " weights");

  std::vector<double> sup;
  sup.reserve(k);
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<MassFunction> rest;
    rest.reserve(k - 1);
    for (std::size_t i = 0; i < k; ++i)
      if (i != j) rest.push_back(sources[i].mass);
    sup.push_back(gbjs_divergence(rest, leave_one_out_weights(w, j)));
  }
  return sup;
}

/// S̃up_j = Sup(m_j) / Σ_s Sup(m_s). Rejects fully agreeing evidences (all
/// supports vanish) so the caller can fall back to uniform weights. Negative
/// floating-point noise in the supports is clamped to zero.
inline WeightVector final_weights(std::span<const double> sup) {
  if (sup.empty()) raise(Errc::empty_evidence_list, "no support degrees");
  bool any = false;
  double sum = 0.0;
  std::vector<double> clamped;
  clamped.reserve(sup.size());
  for (double s : sup) {
    const double c = s > 0.0 ? s : 0.0;
    clamped.push_back(c);
    sum += c;
    if (s > kAllZeroSupportThreshold) any = true;
  }
  if (!any)
    raise(Errc::all_zero_support, "all leave-one-out divergences vanish (agreeing evidences)");
  for (double& c : clamped) c /= sum;
  return WeightVector(std::move(clamped));
}

inline WeightVector final_weights(const std::vector<double>& sup) {
  return final_weights(std::span<const double>(sup));
}

/// WAE(A) = Σ_j S̃up_j · m_j(A), per proposition in the union of focal sets.
inline MassFunction weighted_average_evidence(std::span<const EvidenceSource> sources,
                                              const WeightVector& fw) {
  if (sources.empty()) raise(Errc::empty_evidence_list, "no evidence sources");
  if (fw.size() != sources.size())
    raise(Errc::length_mismatch, std::to_string(sources.size()) + " sources but " +
                                     std::to_string(fw.size()) + " weights");
  if (!fw.is_normalized())
    raise(Errc::unnormalized_weights, "weights sum to " + std::to_string(fw.sum()));
  const Frame& frame = sources[0].mass.frame();
  for (const auto& s : sources)
    if (!(s.mass.frame() == frame)) raise(Errc::frame_mismatch, "sources live on different frames");

  std::map<std::uint64_t, double> acc;
  for (std::size_t j = 0; j < sources.size(); ++j)
    for (const auto& f : sources[j].mass.focal_elements())
      acc[f.proposition.bits()] += fw[j] * f.mass;

  std::vector<FocalElement> focal;
  focal.reserve(acc.size());
  for (const auto& [bits, m] : acc) focal.push_back({Proposition(bits), m});
  return detail::build_mass_function(frame, std::move(focal), {});
}

namespace detail {

template <typename Fn>
auto fusion_stage(const char* stage, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    raise(e.code(), e.detail() + " (stage: " + stage + ")");
  }
}

}  // namespace detail

/// The full pipeline: reliability weights → normalization → leave-one-out
/// support degrees → final weights → weighted average evidence → Dempster
/// combination of the WAE with itself k−1 times. Needs k >= 3; with k = 2 the
/// leave-one-out divergence is identically zero and carries no signal.
inline FusionReport fuse(std::span<const EvidenceSource> sources,
                         const CombinationOptions& combo_opts = {}) {
  const std::size_t k = sources.size();
  if (k < 3)
    raise(Errc::too_few_evidences, "fusion needs k >= 3 evidences, got " + std::to_string(k));

  WeightVector raw = detail::fusion_stage("reliability-weights",
                                          [&] { return reliability_weights(sources); });
  WeightVector normalized =
      detail::fusion_stage("normalize-weights", [&] { return normalize_weights(raw); });
  std::vector<double> sup =
      detail::fusion_stage("support-degrees", [&] { return support_degrees(sources, normalized); });

  bool uniform_fallback = false;
  WeightVector fw = [&] {
    try {
      return final_weights(sup);
    } catch (const Error& e) {
      if (e.code() != Errc::all_zero_support) raise(e.code(), e.detail() + " (stage: final-weights)");
      uniform_fallback = true;  // agreeing evidences: any weighting gives the same WAE
      return WeightVector::uniform(k);
    }
  }();

  MassFunction wae = detail::fusion_stage(
      "weighted-average-evidence", [&] { return weighted_average_evidence(sources, fw); });

  std::vector<MassFunction> per_step;
  per_step.reserve(k - 1);
  detail::fusion_stage("combination", [&] {
    MassFunction acc = wae;
    for (std::size_t i = 1; i < k; ++i) {
      acc = dempster_combine(acc, wae, combo_opts);
      per_step.push_back(acc);
    }
    return 0;
  });

  MassFunction final_mass = per_step.back();
  return FusionReport{std::move(raw),       std::move(normalized), std::move(sup),
                      std::move(fw),        uniform_fallback,      std::move(wae),
                      std::move(per_step),  std::move(final_mass)};
}

inline FusionReport fuse(const std::vector<EvidenceSource>& sources,
                         const CombinationOptions& combo_opts = {}) {
  return fuse(std::span<const EvidenceSource>(sources), combo_opts);
}

/// The diagnosed target: the singleton proposition with the largest final
/// mass (ties broken by canonical encoding order). Empty when no singleton is
/// focal.
inline std::optional<Proposition> diagnose(const MassFunction& m) {
  std::optional<Proposition> best;
  double best_mass = -1.0;
  for (const auto& f : m.focal_elements()) {
    if (!f.proposition.is_singleton()) continue;
    if (f.mass > best_mass) {
      best = f.proposition;
      best_mass = f.mass;
    }
  }
  return best;
}

}  // namespace evfuse
