#include "feddelavg/fed_sim.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "feddelavg/log.hpp"

namespace feddelavg {

void SimConfig::validate() const {
  if (devices < 1) throw ConfigError("device count must be >= 1");
  if (tau < 1) throw ConfigError("aggregation period tau must be >= 1");
  if (delay < 0 || delay > tau) {
    throw ConfigError("delay must satisfy 0 <= delay <= tau (got delay=" +
                      std::to_string(delay) + ", tau=" + std::to_string(tau) + ")");
  }
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw ConfigError("alpha must lie in [0, 1]");
  }
  if (!(eta > 0.0)) throw ConfigError("eta must be positive");
  if (periods < 1) throw ConfigError("period count K must be >= 1");
  if (init.size() == 0) throw ConfigError("initial parameters are empty");
  if (!init.allFinite()) throw ConfigError("initial parameters are non-finite");
}

std::vector<int> Timeline::sync_times() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(periods));
  for (int k = 0; k < periods; ++k) out.push_back(k * tau);
  return out;
}

std::vector<int> Timeline::send_times() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(periods));
  for (int k = 0; k < periods; ++k) out.push_back(k * tau - delay);
  return out;
}

ModelParams Trajectory::global_at(int t, const Eigen::VectorXd& weights) const {
  std::vector<ModelParams> states;
  states.reserve(device_history.size());
  for (const auto& hist : device_history) {
    states.push_back(hist[static_cast<std::size_t>(t - t_min)]);
  }
  return aggregate(states, weights);
}

ModelParams local_update(const ModelParams& state, const LossModel& model,
                         const Dataset& data, double eta) {
  return gd_step(state, grad_local(model, data, state), eta);
}

ModelParams sync_update(const ModelParams& state,
                        const ModelParams& delayed_global,
                        const LossModel& model, const Dataset& data, double eta,
                        double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw ConfigError("alpha must lie in [0, 1]");
  }
  return alpha * delayed_global + (1.0 - alpha) * local_update(state, model, data, eta);
}

ModelParams aggregate(const std::vector<ModelParams>& device_params,
                      const Eigen::VectorXd& weights) {
  check_weights(weights, device_params.size());
  ModelParams out = ModelParams::Zero(device_params.front().rows(),
                                      device_params.front().cols());
  for (std::size_t i = 0; i < device_params.size(); ++i) {
    if (device_params[i].rows() != out.rows() || device_params[i].cols() != out.cols()) {
      throw ConfigError("device parameter shapes differ in aggregate");
    }
    out += weights(static_cast<Eigen::Index>(i)) * device_params[i];
  }
  return out;
}

std::size_t select_final(const std::vector<Snapshot>& snapshots) {
  if (snapshots.empty()) {
    throw std::logic_error("select_final called with no snapshots");
  }
  std::size_t best = 0;
  for (std::size_t k = 1; k < snapshots.size(); ++k) {
    if (snapshots[k].global_loss < snapshots[best].global_loss) best = k;
  }
  return best;
}

namespace {

double max_param_norm(const std::vector<ModelParams>& states) {
  double m = 0.0;
  for (const auto& s : states) m = std::max(m, s.norm());
  return m;
}

Snapshot make_snapshot(int k, int t, ModelParams params,
                       const std::vector<ModelParams>& device_states,
                       const std::vector<LossModel>& models,
                       const std::vector<Dataset>& datasets,
                       const Eigen::VectorXd& weights) {
  Snapshot s;
  s.k = k;
  s.t = t;
  s.global_loss = global_loss(models, datasets, weights, params);
  double surrogate = 0.0;
  for (std::size_t i = 0; i < datasets.size(); ++i) {
    surrogate += weights(static_cast<Eigen::Index>(i)) *
                 local_loss(models[i], datasets[i], device_states[i]);
  }
  s.surrogate_loss = surrogate;
  s.params = std::move(params);
  return s;
}

}  // namespace

Trajectory run(const SimConfig& cfg, const std::vector<LossModel>& models,
               const std::vector<Dataset>& datasets,
               const Eigen::VectorXd& weights,
               const ProblemConstants* constants) {
  cfg.validate();
  if (models.size() != static_cast<std::size_t>(cfg.devices) ||
      datasets.size() != static_cast<std::size_t>(cfg.devices)) {
    throw ConfigError("expected one model and dataset per device");
  }
  check_weights(weights, datasets.size());
  if (constants != nullptr && constants->smoothness > 0.0 &&
      cfg.eta >= 2.0 / constants->smoothness) {
    log::warn("eta = " + std::to_string(cfg.eta) +
              " violates eta < 2/beta = " +
              std::to_string(2.0 / constants->smoothness) +
              "; convergence bounds do not apply");
  }

  const Timeline tl(cfg);
  const std::size_t n = datasets.size();

  Trajectory traj;
  traj.t_min = tl.t_min();
  traj.t_max = tl.t_max();
  traj.device_history.assign(n, {});
  for (auto& hist : traj.device_history) {
    hist.reserve(static_cast<std::size_t>(traj.t_max - traj.t_min + 1));
    hist.push_back(cfg.init);
  }
  traj.snapshots.reserve(static_cast<std::size_t>(cfg.periods));

  std::vector<ModelParams> current(n, cfg.init);
  std::vector<ModelParams> pending(static_cast<std::size_t>(cfg.periods));

  // k = 0 sends at t_min; with delay = 0 this doubles as the k = 0 sync,
  // which degenerates to the shared initialization.
  pending[0] = cfg.init;
  traj.snapshots.push_back(
      make_snapshot(0, tl.t_min(), cfg.init, current, models, datasets, weights));

  std::vector<ModelParams> next(n);
  for (int t = tl.t_min() + 1; t <= tl.t_max(); ++t) {
    if (tl.is_sync_time(t)) {
      const int k = t / cfg.tau;
      if (cfg.delay == 0) {
        // Post-step values are aggregated on the spot: the snapshot of send
        // time k*tau equals their average regardless of alpha. The surrogate
        // loss is taken over the values the devices send, i.e. pre-sync.
        for (std::size_t i = 0; i < n; ++i) {
          next[i] = local_update(current[i], models[i], datasets[i], cfg.eta);
        }
        const ModelParams snap = aggregate(next, weights);
        traj.snapshots.push_back(
            make_snapshot(k, t, snap, next, models, datasets, weights));
        for (std::size_t i = 0; i < n; ++i) {
          next[i] = cfg.alpha * snap + (1.0 - cfg.alpha) * next[i];
        }
      } else {
        const ModelParams& snap = pending[static_cast<std::size_t>(k)];
        for (std::size_t i = 0; i < n; ++i) {
          next[i] = sync_update(current[i], snap, models[i], datasets[i],
                                cfg.eta, cfg.alpha);
        }
      }
      traj.applied_sync_times.push_back(t);
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        next[i] = local_update(current[i], models[i], datasets[i], cfg.eta);
      }
    }

    for (std::size_t i = 0; i < n; ++i) {
      if (!next[i].allFinite()) {
        throw NumericalError("simulation diverged at step t=" + std::to_string(t) +
                             " (device " + std::to_string(i) +
                             ", max parameter norm " +
                             std::to_string(max_param_norm(next)) + ")");
      }
      current[i] = next[i];
      traj.device_history[i].push_back(current[i]);
    }

    // Capture the send-time aggregate feeding the sync at t + delay.
    if (cfg.delay >= 1 && (t + cfg.delay) % cfg.tau == 0) {
      const int k = (t + cfg.delay) / cfg.tau;
      if (k >= 1 && k < cfg.periods) {
        ModelParams snap = aggregate(current, weights);
        pending[static_cast<std::size_t>(k)] = snap;
        traj.snapshots.push_back(make_snapshot(k, t, std::move(snap), current,
                                               models, datasets, weights));
      }
    }
  }

  traj.selected_k = static_cast<int>(select_final(traj.snapshots));
  return traj;
}

ModelParams delayed_snapshot(const Trajectory& traj,
                             const std::vector<LossModel>& models,
                             const std::vector<Dataset>& datasets,
                             const Eigen::VectorXd& weights,
                             const SimConfig& cfg, int k) {
  if (k < 0) throw std::logic_error("snapshot period index must be >= 0");
  const Timeline tl(cfg);
  const int send_t = tl.send_time(k);
  if (send_t < tl.t_min()) {
    throw std::logic_error("snapshot requested before the start of time (t=" +
                           std::to_string(send_t) + ")");
  }
  if (k == 0) return traj.device_at(0, tl.t_min());
  if (cfg.delay >= 1) return traj.global_at(send_t, weights);
  std::vector<ModelParams> post(datasets.size());
  for (std::size_t i = 0; i < datasets.size(); ++i) {
    post[i] = local_update(traj.device_at(static_cast<int>(i), send_t - 1),
                           models[i], datasets[i], cfg.eta);
  }
  return aggregate(post, weights);
}

AuxTrajectory aux_trajectory(const Trajectory& traj,
                             const std::vector<LossModel>& models,
                             const std::vector<Dataset>& datasets,
                             const Eigen::VectorXd& weights, const SimConfig& cfg) {
  AuxTrajectory aux;
  aux.tau = cfg.tau;
  aux.delay = cfg.delay;
  aux.periods.resize(traj.snapshots.size());
  for (std::size_t k = 0; k < traj.snapshots.size(); ++k) {
    auto& period = aux.periods[k];
    period.reserve(static_cast<std::size_t>(cfg.tau) + 1);
    period.push_back(traj.snapshots[k].params);
    for (int step = 0; step < cfg.tau; ++step) {
      period.push_back(gd_step(
          period.back(), grad_global(models, datasets, weights, period.back()),
          cfg.eta));
    }
  }
  return aux;
}

}  // namespace feddelavg
