#include "feddelavg/constants.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace feddelavg {

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Unset: return "unset";
    case Provenance::Supplied: return "supplied";
    case Provenance::Estimated: return "estimated";
  }
  return "unset";
}

void ProblemConstants::validate() const {
  if (lipschitz < 0.0 || smoothness < 0.0) {
    throw InvariantError("L and beta must be non-negative");
  }
  for (Eigen::Index i = 0; i < dissimilarity_i.size(); ++i) {
    const double d = dissimilarity_i(i);
    if (d < 0.0 || d > 2.0 * lipschitz * (1.0 + 1e-12) + 1e-15) {
      throw InvariantError("dissimilarity delta_" + std::to_string(i) +
                           " outside [0, 2L]");
    }
  }
}

ProblemConstants estimate_constants(const std::vector<LossModel>& models,
                                    const std::vector<Dataset>& datasets,
                                    const Eigen::VectorXd& weights,
                                    const std::vector<ModelParams>& probe_params,
                                    double eta) {
  (void)eta;  // phi is deferred to compute_phi
  check_weights(weights, datasets.size());
  if (probe_params.size() < 2) {
    throw ConfigError("constant estimation requires at least 2 probe points");
  }
  const std::size_t devices = datasets.size();
  const std::size_t probes = probe_params.size();

  // Per-probe local gradients, reused for every estimate below.
  std::vector<std::vector<ModelParams>> grads(probes);
  std::vector<ModelParams> global_grads(probes);
  for (std::size_t p = 0; p < probes; ++p) {
    grads[p].reserve(devices);
    ModelParams g = ModelParams::Zero(probe_params[p].rows(), probe_params[p].cols());
    for (std::size_t i = 0; i < devices; ++i) {
      grads[p].push_back(grad_local(models[i], datasets[i], probe_params[p]));
      g += weights(static_cast<Eigen::Index>(i)) * grads[p][i];
    }
    global_grads[p] = std::move(g);
  }

  ProblemConstants c;
  c.dissimilarity_i = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(devices));

  for (std::size_t p = 0; p < probes; ++p) {
    for (std::size_t i = 0; i < devices; ++i) {
      c.lipschitz = std::max(c.lipschitz, grads[p][i].norm());
      const double gap = (grads[p][i] - global_grads[p]).norm();
      auto& di = c.dissimilarity_i(static_cast<Eigen::Index>(i));
      di = std::max(di, gap);
    }
  }

  bool distinct_pair = false;
  for (std::size_t p = 0; p < probes; ++p) {
    for (std::size_t q = p + 1; q < probes; ++q) {
      const double dist = (probe_params[p] - probe_params[q]).norm();
      if (dist <= 0.0) continue;
      distinct_pair = true;
      for (std::size_t i = 0; i < devices; ++i) {
        const double ratio = (grads[p][i] - grads[q][i]).norm() / dist;
        c.smoothness = std::max(c.smoothness, ratio);
      }
    }
  }
  if (!distinct_pair) {
    throw ConfigError("constant estimation requires at least 2 distinct probe points");
  }

  c.dissimilarity = weights.dot(c.dissimilarity_i);
  c.lipschitz_src = Provenance::Estimated;
  c.smoothness_src = Provenance::Estimated;
  c.dissimilarity_src = Provenance::Estimated;
  c.validate();
  return c;
}

void compute_phi(ProblemConstants& constants,
                 const std::vector<ModelParams>& period_starts,
                 const ModelParams& w_star, double eta) {
  if (period_starts.empty()) {
    throw ConfigError("compute_phi needs at least one period start");
  }
  double worst = 0.0;
  for (const auto& start : period_starts) {
    worst = std::max(worst, (start - w_star).squaredNorm());
  }
  constants.omega = worst > 0.0 ? 1.0 / worst : std::numeric_limits<double>::infinity();
  constants.phi = constants.omega * (1.0 - constants.smoothness * eta / 2.0);
  constants.omega_src = Provenance::Estimated;
}

}  // namespace feddelavg
