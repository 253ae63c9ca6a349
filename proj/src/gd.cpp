#include "feddelavg/gd.hpp"

#include <string>

namespace feddelavg {

ModelParams gd_step(const ModelParams& params, const ModelParams& gradient,
                    double eta) {
  if (eta <= 0.0) {
    throw ConfigError("learning rate must be positive");
  }
  return params - eta * gradient;
}

ReferenceOptimum compute_reference_optimum(const std::vector<LossModel>& models,
                                           const std::vector<Dataset>& datasets,
                                           const Eigen::VectorXd& weights,
                                           const ModelParams& init, double eta,
                                           std::size_t steps) {
  ModelParams w = init;
  double prev_loss = global_loss(models, datasets, weights, w);
  int rising = 0;
  for (std::size_t t = 0; t < steps; ++t) {
    w = gd_step(w, grad_global(models, datasets, weights, w), eta);
    if (!w.allFinite()) {
      throw NumericalError("centralized descent produced non-finite parameters at step " +
                           std::to_string(t + 1) +
                           "; learning rate violates eta < 2/beta");
    }
    const double loss = global_loss(models, datasets, weights, w);
    rising = loss > prev_loss ? rising + 1 : 0;
    if (rising >= 10) {
      throw NumericalError("centralized descent increased the loss for 10 consecutive "
                           "steps (last step " + std::to_string(t + 1) +
                           "); learning rate violates eta < 2/beta");
    }
    prev_loss = loss;
  }
  ReferenceOptimum out;
  out.final_grad_norm = grad_global(models, datasets, weights, w).norm();
  out.final_loss = prev_loss;
  out.params = std::move(w);
  out.steps_run = steps;
  return out;
}

}  // namespace feddelavg
