#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <vector>

#include "feddelavg/errors.hpp"

namespace feddelavg {

// Model parameters: an (s x m) matrix for multinomial models, (1 x m) for
// regression. Norms are always taken over the flattened entries (Frobenius).
using ModelParams = Eigen::MatrixXd;

struct DataPoint {
  Eigen::VectorXd features;
  double label = 0.0;  // class index for classification, real target otherwise
};

// Feature matrix plus labels. Row p of `features` is the p-th point.
class Dataset {
 public:
  Dataset() = default;
  Dataset(Eigen::MatrixXd features, Eigen::VectorXd labels, int classes);

  std::size_t size() const { return static_cast<std::size_t>(features_.rows()); }
  int dim() const { return static_cast<int>(features_.cols()); }
  int classes() const { return classes_; }
  bool is_classification() const { return classes_ > 0; }

  const Eigen::MatrixXd& features() const { return features_; }
  const Eigen::VectorXd& labels() const { return labels_; }

  DataPoint point(std::size_t i) const {
    return DataPoint{features_.row(static_cast<Eigen::Index>(i)).transpose(),
                     labels_(static_cast<Eigen::Index>(i))};
  }

  // Subset by row indices, preserving order.
  Dataset select(const std::vector<std::size_t>& idx) const;

 private:
  Eigen::MatrixXd features_;  // (n x m)
  Eigen::VectorXd labels_;    // (n)
  int classes_ = 0;           // 0 for regression data
};

// Normalized device weights rho_i = D_i / sum_j D_j.
Eigen::VectorXd dataset_weights(const std::vector<Dataset>& datasets);

// Throws InvariantError unless the weights sum to 1 within 1e-12.
void check_weights(const Eigen::VectorXd& weights, std::size_t expected_count);

}  // namespace feddelavg
