#pragma once

#include <cstddef>
#include <vector>

#include "feddelavg/loss.hpp"

namespace feddelavg {

// One gradient descent step: params - eta * gradient.
ModelParams gd_step(const ModelParams& params, const ModelParams& gradient,
                    double eta);

struct ReferenceOptimum {
  ModelParams params;
  double final_grad_norm = 0.0;  // quality certificate
  double final_loss = 0.0;
  std::size_t steps_run = 0;
};

// Long-horizon centralized gradient descent on the global loss, used as the
// stand-in for the true minimizer. Throws NumericalError if the loss increases
// for 10 consecutive steps (step size violates eta < 2/beta).
ReferenceOptimum compute_reference_optimum(const std::vector<LossModel>& models,
                                           const std::vector<Dataset>& datasets,
                                           const Eigen::VectorXd& weights,
                                           const ModelParams& init, double eta,
                                           std::size_t steps);

}  // namespace feddelavg
