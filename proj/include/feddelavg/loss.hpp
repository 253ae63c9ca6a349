#pragma once

#include <vector>

#include "feddelavg/dataset.hpp"

namespace feddelavg {

enum class LossKind {
  SquaredError,             // f(x,y;w) = 1/2 (y - w^T x)^2, params (1 x m)
  MultinomialCrossEntropy,  // f(x,y;W) = -log softmax_y(W x), params (s x m)
};

struct LossModel {
  LossKind kind = LossKind::MultinomialCrossEntropy;
};

// Expected parameter shape for a model on a dataset.
int param_rows(const LossModel& model, const Dataset& data);

// Zero-initialized parameters of the right shape.
ModelParams zero_params(const LossModel& model, const Dataset& data);

// Per-point loss f(x, y; w).
double loss_point(const LossModel& model, const DataPoint& point,
                  const ModelParams& params);

// Local objective: mean per-point loss over the dataset.
double local_loss(const LossModel& model, const Dataset& data,
                  const ModelParams& params);

// Exact gradient of local_loss, same shape as params.
ModelParams grad_local(const LossModel& model, const Dataset& data,
                       const ModelParams& params);

// Global objective: weighted sum of local losses, device order fixed.
double global_loss(const std::vector<LossModel>& models,
                   const std::vector<Dataset>& datasets,
                   const Eigen::VectorXd& weights, const ModelParams& params);

// Gradient of global_loss.
ModelParams grad_global(const std::vector<LossModel>& models,
                        const std::vector<Dataset>& datasets,
                        const Eigen::VectorXd& weights,
                        const ModelParams& params);

}  // namespace feddelavg
