#pragma once

#include <vector>

#include "feddelavg/loss.hpp"

namespace feddelavg {

enum class Provenance { Unset, Supplied, Estimated };

const char* provenance_name(Provenance p);

// Regularity constants of the learning problem. L and beta are the Lipschitz
// and smoothness constants of the local objectives, delta_i the per-device
// gradient dissimilarity, delta its weighted average. omega inverts the worst
// squared distance from a period start to the reference optimum and
// phi = omega * (1 - beta * eta / 2).
struct ProblemConstants {
  double lipschitz = 0.0;           // L
  double smoothness = 0.0;          // beta
  Eigen::VectorXd dissimilarity_i;  // delta_i
  double dissimilarity = 0.0;       // delta = sum_i rho_i delta_i
  double omega = 0.0;
  double phi = 0.0;

  Provenance lipschitz_src = Provenance::Unset;
  Provenance smoothness_src = Provenance::Unset;
  Provenance dissimilarity_src = Provenance::Unset;
  Provenance omega_src = Provenance::Unset;

  void validate() const;
};

// Empirical constants over a probe set: L as the largest local gradient norm,
// beta as the largest pairwise gradient-difference ratio, delta_i as the
// largest local/global gradient gap. omega and phi are left unset; call
// compute_phi once period starts and a reference optimum are available.
// Requires at least two distinct probes.
ProblemConstants estimate_constants(const std::vector<LossModel>& models,
                                    const std::vector<Dataset>& datasets,
                                    const Eigen::VectorXd& weights,
                                    const std::vector<ModelParams>& probe_params,
                                    double eta);

// omega = 1 / max_k ||period_starts[k] - w_star||^2 and phi = omega (1 - beta eta / 2).
void compute_phi(ProblemConstants& constants,
                 const std::vector<ModelParams>& period_starts,
                 const ModelParams& w_star, double eta);

}  // namespace feddelavg
