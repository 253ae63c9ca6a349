#pragma once

#include <cstdint>
#include <vector>

#include "feddelavg/constants.hpp"
#include "feddelavg/gd.hpp"
#include "feddelavg/loss.hpp"

namespace feddelavg {

// Full protocol parameterization. The horizon is T = periods * tau steps,
// running over the discrete clock t in [-delay, T - delay].
struct SimConfig {
  int devices = 1;       // N
  int tau = 1;           // local steps between aggregations
  int delay = 0;         // Delta, integer steps in [0, tau]
  double alpha = 1.0;    // synchronization weight in [0, 1]
  double eta = 0.01;     // learning rate
  int periods = 1;       // K
  ModelParams init;      // shared initialization w(-delay)
  std::uint64_t seed = 0;

  int horizon() const { return periods * tau; }  // T
  void validate() const;
};

// Clock bookkeeping for one configuration. Period k covers
// (k*tau - delay, (k+1)*tau - delay]; device models are sent at k*tau - delay
// and the synchronized result lands at k*tau.
struct Timeline {
  int tau = 1;
  int delay = 0;
  int periods = 1;

  Timeline() = default;
  explicit Timeline(const SimConfig& cfg)
      : tau(cfg.tau), delay(cfg.delay), periods(cfg.periods) {}

  int t_min() const { return -delay; }
  int t_max() const { return periods * tau - delay; }

  // True when t = k*tau for some period k; at delay 0 the k = 0 sync
  // coincides with the initialization instant and no update runs there.
  bool is_sync_time(int t) const {
    return t >= 0 && t % tau == 0 && t / tau < periods;
  }
  // Send time whose snapshot is consumed by the sync at sync_k * tau.
  int send_time(int sync_k) const { return sync_k * tau - delay; }

  std::vector<int> sync_times() const;
  std::vector<int> send_times() const;
};

struct Snapshot {
  int k = 0;
  int t = 0;                    // k*tau - delay
  ModelParams params;           // w(k*tau - delay)
  double global_loss = 0.0;     // F at the averaged parameters
  double surrogate_loss = 0.0;  // sum_i rho_i F_i(w_i), what devices report
};

// Complete execution record: every device state at every clock tick, the K
// global snapshots, and the selected model.
class Trajectory {
 public:
  int t_min = 0;
  int t_max = 0;
  std::vector<std::vector<ModelParams>> device_history;  // [device][t - t_min]
  std::vector<Snapshot> snapshots;                       // k = 0 .. K-1
  std::vector<int> applied_sync_times;  // times where the mixing update ran
  int selected_k = 0;

  const ModelParams& device_at(int device, int t) const {
    return device_history[static_cast<std::size_t>(device)]
                         [static_cast<std::size_t>(t - t_min)];
  }
  ModelParams global_at(int t, const Eigen::VectorXd& weights) const;
  const ModelParams& selected_params() const {
    return snapshots[static_cast<std::size_t>(selected_k)].params;
  }
  int steps_per_device() const { return t_max - t_min; }
};

// One local full-batch step, Eq. (8)-style.
ModelParams local_update(const ModelParams& state, const LossModel& model,
                         const Dataset& data, double eta);

// Synchronization update: alpha * delayed_global + (1-alpha) * post-step local.
ModelParams sync_update(const ModelParams& state,
                        const ModelParams& delayed_global,
                        const LossModel& model, const Dataset& data, double eta,
                        double alpha);

// Entrywise weighted average of device parameters.
ModelParams aggregate(const std::vector<ModelParams>& device_params,
                      const Eigen::VectorXd& weights);

// Index of the snapshot with minimal global loss; ties break to the
// smallest k.
std::size_t select_final(const std::vector<Snapshot>& snapshots);

// Executes the full delayed-averaging protocol. If `constants` is provided
// and eta >= 2/beta, a warning is logged (the bound precondition fails) but
// the run proceeds.
Trajectory run(const SimConfig& cfg, const std::vector<LossModel>& models,
               const std::vector<Dataset>& datasets,
               const Eigen::VectorXd& weights,
               const ProblemConstants* constants = nullptr);

// Recomputes the delayed global model consumed by the sync of period k. For
// delay >= 1 this is the aggregate of device states at k*tau - delay; at
// delay 0 it is the aggregate of the post-step pre-sync values, which makes
// alpha = 1 coincide with plain federated averaging.
ModelParams delayed_snapshot(const Trajectory& traj,
                             const std::vector<LossModel>& models,
                             const std::vector<Dataset>& datasets,
                             const Eigen::VectorXd& weights,
                             const SimConfig& cfg, int k);

// Per-period centralized descent comparators c_k(t), seeded at each snapshot.
class AuxTrajectory {
 public:
  int tau = 0;
  int delay = 0;
  std::vector<std::vector<ModelParams>> periods;  // [k][t - (k*tau - delay)]

  // c_k(t) for t in [k*tau - delay, (k+1)*tau - delay].
  const ModelParams& at(int k, int t) const {
    return periods[static_cast<std::size_t>(k)]
                  [static_cast<std::size_t>(t - (k * tau - delay))];
  }
};

AuxTrajectory aux_trajectory(const Trajectory& traj,
                             const std::vector<LossModel>& models,
                             const std::vector<Dataset>& datasets,
                             const Eigen::VectorXd& weights, const SimConfig& cfg);

}  // namespace feddelavg
