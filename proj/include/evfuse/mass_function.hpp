#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "evfuse/errors.hpp"
#include "evfuse/frame.hpp"

namespace evfuse {

struct MassFunctionOptions {
  // Validation tolerance on the mass sum. Deliberately loose by default to
  // admit published data rounded to four decimals.
  double sum_tolerance = 1e-3;
  // Opt-in strict renormalization; raw masses are kept verbatim otherwise.
  bool renormalize = false;
};

struct FocalElement {
  Proposition proposition;
  double mass;
};

class MassFunction;

namespace detail {
inline MassFunction build_mass_function(Frame frame, std::vector<FocalElement> focal,
                                        const MassFunctionOptions& opts);
}

/// A basic belief assignment: masses in [0,1] over nonempty propositions of
/// one frame, summing to 1 within tolerance. m(∅) = 0 by construction and
/// unlisted propositions have mass exactly 0. Immutable once built; focal
/// elements are kept sorted in canonical encoding order.
class MassFunction {
 public:
  const Frame& frame() const { return frame_; }
  const std::vector<FocalElement>& focal_elements() const { return focal_; }
  std::size_t focal_count() const { return focal_.size(); }

  /// Mass of a proposition; 0 unless focal.
  double mass(Proposition a) const {
    auto it = std::lower_bound(focal_.begin(), focal_.end(), a,
                               [](const FocalElement& f, Proposition p) { return f.proposition < p; });
    return (it != focal_.end() && it->proposition == a) ? it->mass : 0.0;
  }

  double mass(std::initializer_list<const char*> labels) const {
    return mass(frame_.proposition(labels));
  }

  bool is_vacuous() const {
    return focal_.size() == 1 && focal_[0].proposition == frame_.full();
  }

  friend MassFunction detail::build_mass_function(Frame frame, std::vector<FocalElement> focal,
                                                  const MassFunctionOptions& opts);

 private:
  MassFunction(Frame frame, std::vector<FocalElement> focal)
      : frame_(std::move(frame)), focal_(std::move(focal)) {}

  Frame frame_;
  std::vector<FocalElement> focal_;  // sorted by proposition bits, all masses > 0
};

namespace detail {

inline MassFunction build_mass_function(Frame frame, std::vector<FocalElement> focal,
                                        const MassFunctionOptions& opts) {
  for (auto& [prop, m] : focal) {
    if (prop.is_empty()) raise(Errc::empty_focal_element, "the empty set cannot carry mass");
    if (!frame.holds(prop))
      raise(Errc::unknown_element, "proposition uses elements outside the frame");
    if (!std::isfinite(m)) raise(Errc::negative_mass, "mass must be finite");
    if (m < 0.0) raise(Errc::negative_mass, "mass " + std::to_string(m) + " is negative");
  }
  std::sort(focal.begin(), focal.end(),
            [](const auto& a, const auto& b) { return a.proposition < b.proposition; });
  for (std::size_t i = 1; i < focal.size(); ++i)
    if (focal[i].proposition == focal[i - 1].proposition)
      raise(Errc::duplicate_focal_element,
            "proposition " + frame.format(focal[i].proposition) + " listed twice");

  double sum = 0.0;
  for (const auto& f : focal) sum += f.mass;
  if (std::abs(sum - 1.0) > opts.sum_tolerance)
    raise(Errc::sum_out_of_tolerance,
          "masses sum to " + std::to_string(sum) + ", expected 1 within " +
              std::to_string(opts.sum_tolerance));
  if (opts.renormalize && sum > 0.0)
    for (auto& f : focal) f.mass /= sum;

  // zero-mass entries are not focal; drop them so iteration sees focal sets only
  std::erase_if(focal, [](const auto& f) { return f.mass == 0.0; });
  return MassFunction(std::move(frame), std::move(focal));
}

}  // namespace detail

/// Validates and builds a BBA from (proposition, mass) entries.
inline MassFunction make_mass_function(const Frame& frame,
                                       std::span<const std::pair<Proposition, double>> entries,
                                       const MassFunctionOptions& opts = {}) {
  std::vector<FocalElement> focal;
  focal.reserve(entries.size());
  for (const auto& [prop, m] : entries) focal.push_back({prop, m});
  return detail::build_mass_function(frame, std::move(focal), opts);
}

inline MassFunction make_mass_function(const Frame& frame,
                                       std::initializer_list<std::pair<Proposition, double>> entries,
                                       const MassFunctionOptions& opts = {}) {
  return make_mass_function(frame, std::span<const std::pair<Proposition, double>>(entries), opts);
}

/// Label-list convenience: {{{"F1","F2"}, 0.1553}, ...}.
inline MassFunction make_mass_function(
    const Frame& frame, const std::vector<std::pair<std::vector<std::string>, double>>& entries,
    const MassFunctionOptions& opts = {}) {
  std::vector<FocalElement> focal;
  focal.reserve(entries.size());
  for (const auto& [labels, m] : entries)
    focal.push_back({frame.proposition(std::span<const std::string>(labels)), m});
  return detail::build_mass_function(frame, std::move(focal), opts);
}

/// Total ignorance: full mass on the whole frame.
inline MassFunction vacuous_mass_function(const Frame& frame) {
  return make_mass_function(frame, {{frame.full(), 1.0}});
}

/// Bel(A): total mass committed to subsets of A.
inline double belief(const MassFunction& m, Proposition a) {
  if (!m.frame().holds(a)) raise(Errc::unknown_element, "proposition outside the frame");
  double sum = 0.0;
  for (const auto& f : m.focal_elements())
    if (a.contains(f.proposition)) sum += f.mass;
  return sum;
}

/// Pl(A): total mass not contradicting A. Equals 1 − Bel(complement of A).
inline double plausibility(const MassFunction& m, Proposition a) {
  if (!m.frame().holds(a)) raise(Errc::unknown_element, "proposition outside the frame");
  double sum = 0.0;
  for (const auto& f : m.focal_elements())
    if (a.intersects(f.proposition)) sum += f.mass;
  return sum;
}

}  // namespace evfuse
