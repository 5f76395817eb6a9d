#pragma once

#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "evfuse/errors.hpp"

namespace evfuse {

// Normalized weight vectors must sum to 1 within this tolerance.
inline constexpr double kWeightSumTolerance = 1e-12;

/// Nonnegative reals attached one-per-evidence. Raw weights carry any
/// positive scale; divergence operations require the normalized form.
class WeightVector {
 public:
  explicit WeightVector(std::vector<double> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) raise(Errc::length_mismatch, "weight vector needs at least one entry");
    for (double w : weights_) {
      if (!std::isfinite(w)) raise(Errc::negative_weight, "weight must be finite");
      if (w < 0.0) raise(Errc::negative_weight, "weight " + std::to_string(w) + " is negative");
    }
  }

  WeightVector(std::initializer_list<double> weights)
      : WeightVector(std::vector<double>(weights)) {}

  static WeightVector uniform(std::size_t k) {
    if (k == 0) raise(Errc::length_mismatch, "weight vector needs at least one entry");
    return WeightVector(std::vector<double>(k, 1.0 / static_cast<double>(k)));
  }

  std::size_t size() const { return weights_.size(); }
  double operator[](std::size_t i) const { return weights_[i]; }
  const std::vector<double>& values() const { return weights_; }

  double sum() const { return std::accumulate(weights_.begin(), weights_.end(), 0.0); }
  bool is_normalized() const { return std::abs(sum() - 1.0) <= kWeightSumTolerance; }

 private:
  std::vector<double> weights_;
};

/// A discrete probability distribution over M outcomes.
class ProbabilityDistribution {
 public:
  explicit ProbabilityDistribution(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) raise(Errc::invalid_distribution, "distribution needs at least one outcome");
    double sum = 0.0;
    for (double v : values_) {
      if (!std::isfinite(v) || v < 0.0)
        raise(Errc::invalid_distribution, "probabilities must be finite and nonnegative");
      sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-9)
      raise(Errc::invalid_distribution,
            "probabilities sum to " + std::to_string(sum) + ", expected 1");
  }

  ProbabilityDistribution(std::initializer_list<double> values)
      : ProbabilityDistribution(std::vector<double>(values)) {}

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  const std::vector<double>& values() const { return values_; }

 private:
  std::vector<double> values_;
};

}  // namespace evfuse
