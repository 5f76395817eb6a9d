#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "evfuse/errors.hpp"

namespace evfuse {

class Frame;

/// A subset of a frame's elements, encoded as a bitmask over the frame's
/// fixed element order. Equality is set equality; the encoding makes set
/// algebra exact and gives every proposition one canonical representation.
/// Empty propositions arise from intersections; they are never focal.
class Proposition {
 public:
  constexpr Proposition() = default;
  constexpr explicit Proposition(std::uint64_t bits) : bits_(bits) {}

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool is_empty() const { return bits_ == 0; }
  constexpr int cardinality() const { return std::popcount(bits_); }
  constexpr bool is_singleton() const { return cardinality() == 1; }

  constexpr bool contains(Proposition other) const { return (other.bits_ & ~bits_) == 0; }
  constexpr bool intersects(Proposition other) const { return (bits_ & other.bits_) != 0; }
  constexpr Proposition intersect(Proposition other) const { return Proposition(bits_ & other.bits_); }
  constexpr Proposition unite(Proposition other) const { return Proposition(bits_ | other.bits_); }

  friend constexpr bool operator==(Proposition, Proposition) = default;
  // canonical iteration order everywhere: ascending bitmask
  friend constexpr auto operator<=>(Proposition a, Proposition b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

/// Ordered set of mutually exclusive hypothesis labels. The element order is
/// fixed at construction and defines the proposition encoding, so two frames
/// are interchangeable only if their label sequences are identical.
class Frame {
 public:
  // Capped at 63 elements so any proposition fits one 64-bit mask.
  static constexpr std::size_t kMaxElements = 63;

  explicit Frame(std::vector<std::string> elements) : elements_(std::move(elements)) {
    if (elements_.empty()) raise(Errc::invalid_frame, "frame needs at least one element");
    if (elements_.size() > kMaxElements)
      raise(Errc::invalid_frame,
            "frame has " + std::to_string(elements_.size()) + " elements, cap is " +
                std::to_string(kMaxElements));
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      if (elements_[i].empty()) raise(Errc::invalid_frame, "empty element label");
      for (std::size_t j = i + 1; j < elements_.size(); ++j)
        if (elements_[i] == elements_[j])
          raise(Errc::invalid_frame, "duplicate element label '" + elements_[i] + "'");
    }
  }

  Frame(std::initializer_list<const char*> elements)
      : Frame(std::vector<std::string>(elements.begin(), elements.end())) {}

  std::size_t size() const { return elements_.size(); }
  const std::vector<std::string>& elements() const { return elements_; }

  std::uint64_t universe_bits() const {
    return elements_.size() == 64 ? ~0ull : (1ull << elements_.size()) - 1;
  }

  std::size_t index_of(const std::string& label) const {
    auto it = std::find(elements_.begin(), elements_.end(), label);
    if (it == elements_.end())
      raise(Errc::unknown_element, "'" + label + "' is not a frame element");
    return static_cast<std::size_t>(it - elements_.begin());
  }

  /// Builds the proposition for a set of labels; order and repeats are
  /// irrelevant (set semantics).
  Proposition proposition(std::span<const std::string> labels) const {
    std::uint64_t bits = 0;
    for (const auto& label : labels) bits |= 1ull << index_of(label);
    return Proposition(bits);
  }
  Proposition proposition(std::initializer_list<const char*> labels) const {
    std::vector<std::string> v(labels.begin(), labels.end());
    return proposition(std::span<const std::string>(v));
  }

  Proposition singleton(const std::string& label) const {
    return Proposition(1ull << index_of(label));
  }

  /// The whole frame; carries full mass in the vacuous BBA.
  Proposition full() const { return Proposition(universe_bits()); }

  Proposition complement(Proposition a) const { return Proposition(~a.bits() & universe_bits()); }

  bool holds(Proposition a) const { return (a.bits() & ~universe_bits()) == 0; }

  /// Labels of a proposition's members, in frame order.
  std::vector<std::string> labels_of(Proposition a) const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < elements_.size(); ++i)
      if (a.bits() & (1ull << i)) out.push_back(elements_[i]);
    return out;
  }

  /// Compact "{F1,F2}" rendering for reports and diagnostics.
  std::string format(Proposition a) const {
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      if (!(a.bits() & (1ull << i))) continue;
      if (!first) out += ",";
      out += elements_[i];
      first = false;
    }
    out += "}";
    return out;
  }

  friend bool operator==(const Frame& a, const Frame& b) { return a.elements_ == b.elements_; }

 private:
  std::vector<std::string> elements_;
};

}  // namespace evfuse
