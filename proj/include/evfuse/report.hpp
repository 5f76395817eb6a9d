#pragma once

#include <algorithm>
#include <cstdio>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "evfuse/fusion.hpp"
#include "evfuse/mass_function.hpp"

namespace evfuse {

namespace detail {

inline std::string fixed(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
  return buf;
}

inline std::string weights_line(std::span<const double> values, int precision) {
  std::string out;
  for (double v : values) {
    if (!out.empty()) out += "  ";
    out += fixed(v, precision);
  }
  return out;
}

inline nlohmann::json mass_to_json(const MassFunction& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& f : m.focal_elements())
    rows.push_back({{"proposition", m.frame().labels_of(f.proposition)}, {"mass", f.mass}});
  return rows;
}

}  // namespace detail

/// One BBA as an aligned text table.
inline std::string format_mass_table(const MassFunction& m, int precision, const std::string& indent) {
  std::size_t width = 0;
  for (const auto& f : m.focal_elements())
    width = std::max(width, m.frame().format(f.proposition).size());
  std::string out;
  for (const auto& f : m.focal_elements()) {
    std::string label = m.frame().format(f.proposition);
    label.resize(width, ' ');
    out += indent + label + "  " + detail::fixed(f.mass, precision) + "\n";
  }
  return out;
}

/// The full fusion report as deterministic plain text.
inline std::string render_report_text(std::span<const EvidenceSource> sources,
                                      const FusionReport& report, int precision = 4) {
  const Frame& frame = report.final_mass.frame();
  std::string out = "Evidence fusion report\n";
  out += "  frame: " + frame.format(frame.full()) + "\n";
  out += "  sources:";
  for (const auto& s : sources) out += " " + s.label;
  out += "\n\n";
  out += "  reliability weights (raw):        " +
         detail::weights_line(report.reliability_weights.values(), precision) + "\n";
  out += "  reliability weights (normalized): " +
         detail::weights_line(report.normalized_weights.values(), precision) + "\n";
  out += "  support degrees:                  " +
         detail::weights_line(report.support_degrees, precision) + "\n";
  out += "  final weights:                    " +
         detail::weights_line(report.final_weights.values(), precision);
  if (report.uniform_fallback) out += "  (uniform fallback: evidences agree)";
  out += "\n\n";
  out += "  weighted average evidence:\n" + format_mass_table(report.wae, precision, "    ");
  out += "\n  combination steps:\n";
  for (std::size_t i = 0; i < report.per_step.size(); ++i) {
    out += "    step " + std::to_string(i + 1) + ":\n";
    out += format_mass_table(report.per_step[i], precision, "      ");
  }
  out += "\n  final:\n" + format_mass_table(report.final_mass, precision, "    ");
  const auto target = diagnose(report.final_mass);
  out += "\n  diagnosis: " +
         (target ? frame.format(*target) : std::string("(no singleton support)")) + "\n";
  return out;
}

/// Machine-readable rendering. Numbers stay at full precision so the report
/// round-trips every pipeline product.
inline nlohmann::json report_to_json(std::span<const EvidenceSource> sources,
                                     const FusionReport& report) {
  const Frame& frame = report.final_mass.frame();
  nlohmann::json j;
  j["frame"] = frame.elements();
  nlohmann::json labels = nlohmann::json::array();
  for (const auto& s : sources) labels.push_back(s.label);
  j["sources"] = std::move(labels);
  j["reliability_weights"] = report.reliability_weights.values();
  j["normalized_weights"] = report.normalized_weights.values();
  j["support_degrees"] = report.support_degrees;
  j["final_weights"] = report.final_weights.values();
  j["uniform_fallback"] = report.uniform_fallback;
  j["wae"] = detail::mass_to_json(report.wae);
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& step : report.per_step) steps.push_back(detail::mass_to_json(step));
  j["steps"] = std::move(steps);
  j["final"] = detail::mass_to_json(report.final_mass);
  const auto target = diagnose(report.final_mass);
  if (target)
    j["diagnosis"] = frame.labels_of(*target);
  else
    j["diagnosis"] = nullptr;
  return j;
}

}  // namespace evfuse
