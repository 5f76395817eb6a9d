#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "evfuse/errors.hpp"
#include "evfuse/fusion.hpp"
#include "evfuse/mass_function.hpp"

namespace evfuse {

/// Parsed form of an evidence file, structurally validated but not yet bound
/// to frame/mass-function semantics. Propositions are arrays of frame labels,
/// never positional indices.
struct EvidenceDocument {
  struct Assignment {
    std::vector<std::string> proposition;
    double mass = 0.0;
    friend bool operator==(const Assignment&, const Assignment&) = default;
  };
  struct Source {
    std::string label;
    std::optional<double> sufficiency;
    std::optional<double> importance;
    std::vector<Assignment> assignments;
    friend bool operator==(const Source&, const Source&) = default;
  };

  std::vector<std::string> frame;
  std::vector<Source> sources;
  friend bool operator==(const EvidenceDocument&, const EvidenceDocument&) = default;
};

namespace detail {

inline void require_keys(const nlohmann::json& obj, std::initializer_list<const char*> allowed,
                         const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed)
      if (key == a) ok = true;
    if (!ok) raise(Errc::schema_error, where + ": unknown field '" + key + "'");
  }
}

inline const nlohmann::json& require_field(const nlohmann::json& obj, const char* key,
                                           const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) raise(Errc::schema_error, where + ": missing field '" + key + "'");
  return *it;
}

inline double require_number(const nlohmann::json& v, const std::string& where) {
  if (!v.is_number()) raise(Errc::schema_error, where + ": expected a number");
  return v.get<double>();
}

inline std::string require_string(const nlohmann::json& v, const std::string& where) {
  if (!v.is_string()) raise(Errc::schema_error, where + ": expected a string");
  return v.get<std::string>();
}

inline std::vector<std::string> require_string_array(const nlohmann::json& v,
                                                     const std::string& where) {
  if (!v.is_array()) raise(Errc::schema_error, where + ": expected an array of strings");
  std::vector<std::string> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(require_string(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace detail

/// Parses an evidence document from JSON text. Unknown fields are rejected;
/// structural problems report the offending path.
inline EvidenceDocument parse_evidence(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    raise(Errc::syntax_error, e.what());
  }
  if (!doc.is_object()) raise(Errc::schema_error, "top level: expected an object");
  detail::require_keys(doc, {"frame", "sources"}, "top level");

  EvidenceDocument out;
  out.frame = detail::require_string_array(detail::require_field(doc, "frame", "top level"), "frame");

  const auto& sources = detail::require_field(doc, "sources", "top level");
  if (!sources.is_array()) raise(Errc::schema_error, "sources: expected an array");
  for (std::size_t s = 0; s < sources.size(); ++s) {
    const std::string where = "sources[" + std::to_string(s) + "]";
    const auto& src = sources[s];
    if (!src.is_object()) raise(Errc::schema_error, where + ": expected an object");
    detail::require_keys(src, {"label", "sufficiency", "importance", "assignments"}, where);

    EvidenceDocument::Source parsed;
    parsed.label = detail::require_string(detail::require_field(src, "label", where), where + ".label");
    if (auto it = src.find("sufficiency"); it != src.end())
      parsed.sufficiency = detail::require_number(*it, where + ".sufficiency");
    if (auto it = src.find("importance"); it != src.end())
      parsed.importance = detail::require_number(*it, where + ".importance");

    const auto& assignments = detail::require_field(src, "assignments", where);
    if (!assignments.is_array()) raise(Errc::schema_error, where + ".assignments: expected an array");
    for (std::size_t a = 0; a < assignments.size(); ++a) {
      const std::string awhere = where + ".assignments[" + std::to_string(a) + "]";
      const auto& entry = assignments[a];
      if (!entry.is_object()) raise(Errc::schema_error, awhere + ": expected an object");
      detail::require_keys(entry, {"proposition", "mass"}, awhere);
      EvidenceDocument::Assignment assign;
      assign.proposition = detail::require_string_array(
          detail::require_field(entry, "proposition", awhere), awhere + ".proposition");
      assign.mass =
          detail::require_number(detail::require_field(entry, "mass", awhere), awhere + ".mass");
      parsed.assignments.push_back(std::move(assign));
    }
    out.sources.push_back(std::move(parsed));
  }
  return out;
}

inline std::string serialize_evidence(const EvidenceDocument& doc, int indent = 2) {
  nlohmann::json j;
  j["frame"] = doc.frame;
  j["sources"] = nlohmann::json::array();
  for (const auto& s : doc.sources) {
    nlohmann::json src;
    src["label"] = s.label;
    if (s.sufficiency) src["sufficiency"] = *s.sufficiency;
    if (s.importance) src["importance"] = *s.importance;
    src["assignments"] = nlohmann::json::array();
    for (const auto& a : s.assignments)
      src["assignments"].push_back({{"proposition", a.proposition}, {"mass", a.mass}});
    j["sources"].push_back(std::move(src));
  }
  return j.dump(indent) + "\n";
}

/// Binds a parsed document to the core types. Construction failures keep their
/// core error code, with the document location prefixed for context.
inline std::pair<Frame, std::vector<EvidenceSource>> bind_evidence(
    const EvidenceDocument& doc, const MassFunctionOptions& opts = {}) {
  auto bind = [](const std::string& where, auto&& fn) {
    try {
      return fn();
    } catch (const Error& e) {
      raise(e.code(), "validation at " + where + ": " + e.detail());
    }
  };

  Frame frame = bind("frame", [&] { return Frame(doc.frame); });
  std::vector<EvidenceSource> sources;
  sources.reserve(doc.sources.size());
  for (std::size_t s = 0; s < doc.sources.size(); ++s) {
    const auto& src = doc.sources[s];
    const std::string where = "sources[" + std::to_string(s) + "]";
    MassFunction mass = bind(where, [&] {
      std::vector<std::pair<std::vector<std::string>, double>> entries;
      entries.reserve(src.assignments.size());
      for (const auto& a : src.assignments) entries.emplace_back(a.proposition, a.mass);
      return make_mass_function(frame, entries, opts);
    });
    sources.push_back({src.label, std::move(mass), src.sufficiency, src.importance});
  }
  return {std::move(frame), std::move(sources)};
}

}  // namespace evfuse
