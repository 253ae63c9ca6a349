#include "feddelavg/dataset.hpp"

#include <cmath>

namespace feddelavg {

Dataset::Dataset(Eigen::MatrixXd features, Eigen::VectorXd labels, int classes)
    : features_(std::move(features)), labels_(std::move(labels)), classes_(classes) {
  if (features_.rows() == 0) {
    throw ConfigError("dataset must contain at least one point");
  }
  if (features_.rows() != labels_.size()) {
    throw ConfigError("feature/label count mismatch: " +
                      std::to_string(features_.rows()) + " vs " +
                      std::to_string(labels_.size()));
  }
  if (!features_.allFinite()) {
    throw ConfigError("dataset features contain non-finite values");
  }
  if (classes_ > 0) {
    for (Eigen::Index p = 0; p < labels_.size(); ++p) {
      const double y = labels_(p);
      if (y != std::floor(y) || y < 0.0 || y >= static_cast<double>(classes_)) {
        throw ConfigError("class label out of range [0, " +
                          std::to_string(classes_) + ") at point " +
                          std::to_string(p));
      }
    }
  }
}

Dataset Dataset::select(const std::vector<std::size_t>& idx) const {
  Eigen::MatrixXd f(static_cast<Eigen::Index>(idx.size()), features_.cols());
  Eigen::VectorXd l(static_cast<Eigen::Index>(idx.size()));
  for (std::size_t r = 0; r < idx.size(); ++r) {
    f.row(static_cast<Eigen::Index>(r)) = features_.row(static_cast<Eigen::Index>(idx[r]));
    l(static_cast<Eigen::Index>(r)) = labels_(static_cast<Eigen::Index>(idx[r]));
  }
  return Dataset(std::move(f), std::move(l), classes_);
}

Eigen::VectorXd dataset_weights(const std::vector<Dataset>& datasets) {
  Eigen::VectorXd w(static_cast<Eigen::Index>(datasets.size()));
  double total = 0.0;
  for (std::size_t i = 0; i < datasets.size(); ++i) {
    w(static_cast<Eigen::Index>(i)) = static_cast<double>(datasets[i].size());
    total += static_cast<double>(datasets[i].size());
  }
  return w / total;
}

void check_weights(const Eigen::VectorXd& weights, std::size_t expected_count) {
  if (static_cast<std::size_t>(weights.size()) != expected_count) {
    throw ConfigError("expected " + std::to_string(expected_count) +
                      " device weights, got " + std::to_string(weights.size()));
  }
  if (std::abs(weights.sum() - 1.0) > 1e-12) {
    throw InvariantError("device weights must sum to 1 (got " +
                         std::to_string(weights.sum()) + ")");
  }
}

}  // namespace feddelavg
