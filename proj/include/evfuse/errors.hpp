#pragma once

#include <stdexcept>
#include <string>

namespace evfuse {

// Stable error codes. The CLI maps these directly to process exit codes,
// so values are part of the tool contract and must not be reordered.
enum class Errc : int {
  // frame / proposition / mass construction
  invalid_frame = 10,
  unknown_element = 11,
  empty_focal_element = 12,
  negative_mass = 13,
  sum_out_of_tolerance = 14,
  duplicate_focal_element = 15,
  // combination
  frame_mismatch = 20,
  total_conflict = 21,
  // distributions / weights / divergence
  invalid_distribution = 30,
  negative_weight = 31,
  unnormalized_weights = 32,
  length_mismatch = 33,
  empty_evidence_list = 34,
  // fusion pipeline
  mixed_reliability_info = 40,
  nonpositive_reliability = 41,
  zero_weight_sum = 42,
  index_out_of_range = 43,
  degenerate_exclusion = 44,
  too_few_evidences = 45,
  all_zero_support = 46,
  // io
  syntax_error = 50,
  schema_error = 51,
  validation_error = 52,
  io_error = 53,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::invalid_frame: return "InvalidFrame";
    case Errc::unknown_element: return "UnknownElement";
    case Errc::empty_focal_element: return "EmptyFocalElement";
    case Errc::negative_mass: return "NegativeMass";
    case Errc::sum_out_of_tolerance: return "SumOutOfTolerance";
    case Errc::duplicate_focal_element: return "DuplicateFocalElement";
    case Errc::frame_mismatch: return "FrameMismatch";
    case Errc::total_conflict: return "TotalConflict";
    case Errc::invalid_distribution: return "InvalidDistribution";
    case Errc::negative_weight: return "NegativeWeight";
    case Errc::unnormalized_weights: return "UnnormalizedWeights";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::empty_evidence_list: return "EmptyEvidenceList";
    case Errc::mixed_reliability_info: return "MixedReliabilityInfo";
    case Errc::nonpositive_reliability: return "NonpositiveReliability";
    case Errc::zero_weight_sum: return "ZeroWeightSum";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::degenerate_exclusion: return "DegenerateExclusion";
    case Errc::too_few_evidences: return "TooFewEvidences";
    case Errc::all_zero_support: return "AllZeroSupport";
    case Errc::syntax_error: return "SyntaxError";
    case Errc::schema_error: return "SchemaError";
    case Errc::validation_error: return "ValidationError";
    case Errc::io_error: return "IoError";
  }
  return "UnknownError";
}

/// Exception carrying a stable error code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
        code_(code),
        detail_(detail) {}

  Errc code() const noexcept { return code_; }
  int exit_code() const noexcept { return static_cast<int>(code_); }
  const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace evfuse
