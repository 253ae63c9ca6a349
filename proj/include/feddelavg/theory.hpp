#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "feddelavg/fed_sim.hpp"

namespace feddelavg {

// Everything the bound formulas consume. `phi` comes from compute_phi and is
// required only by the gap bounds; the divergence formulas need eta < 2/beta.
struct BoundParams {
  double lipschitz = 0.0;      // L
  double smoothness = 0.0;     // beta
  double dissimilarity = 0.0;  // delta
  double eta = 0.0;
  int tau = 1;
  int delay = 0;  // Delta
  double alpha = 1.0;
  int periods = 1;  // K
  double phi = 0.0;

  int horizon() const { return periods * tau; }  // T
  void validate() const;                         // throws ConfigError
};

// h(x) = (delta/beta) [(1+eta beta)^x - 1] - eta delta x; zero when beta = 0.
double h(int x, const BoundParams& p);

// eps^(k) = [1 - (1-alpha)^k] 2 eta L (tau/alpha - delay). Throws for
// alpha = 0, where the bound diverges without aggregation.
double epsilon_k(int k, const BoundParams& p);

// Per-period divergence bound psi(alpha, k); defined for k >= 0 with
// eps^(0) = 0.
double psi(double alpha, int k, const BoundParams& p);

// Psi(alpha) = sum_{k=1..K} psi(alpha, k), in closed form.
double Psi(double alpha, const BoundParams& p);

// psi(alpha, k) as k -> infinity.
double psi_inf(double alpha, const BoundParams& p);

// Right-hand side of the optimality-gap bound:
//   1/(2 eta phi T) + sqrt(1/(4 eta^2 phi^2 T^2) + L Psi/(eta phi T)) + L psi(alpha, K).
double theorem1_bound(const BoundParams& p);

// Same expression with Psi and psi(alpha, K) supplied by the caller, so the
// dependence on T alone can be examined.
double gap_bound_from_psi(const BoundParams& p, double psi_total, double psi_terminal);

// Asymptotic gap bound sqrt(L/(eta phi tau)) sqrt(psi_inf) + L psi_inf.
double asymptotic_gap(double alpha, const BoundParams& p);

struct DeltaThreshold {
  double value = 0.0;
  bool defined = false;  // false at delay 0: alpha = 1 is already optimal
};

// Dissimilarity level above which psi_inf is non-increasing in alpha and
// alpha = 1 is optimal. May be negative; at delay 0 returns a -inf sentinel.
DeltaThreshold delta_threshold(const BoundParams& p);

// Closed-form minimizer of psi_inf over (0, 1], clamped; total by
// construction (returns 1 whenever the formula leaves the interval or its
// denominator is non-positive).
double optimal_alpha(const BoundParams& p);

// All bound quantities for one configuration.
struct BoundReport {
  std::vector<double> epsilon_by_k;  // k = 0 .. K
  std::vector<double> psi_by_k;      // k = 1 .. K
  double psi_total = 0.0;            // Psi(alpha)
  double h_tau = 0.0;
  double h_tau_minus_delta = 0.0;
  double gap_bound = 0.0;       // NaN when phi is unavailable
  double psi_limit = 0.0;       // psi(alpha, inf)
  double asymptotic_gap = 0.0;  // NaN when phi is unavailable
  double optimal_alpha = 1.0;
  double delta_threshold = 0.0;
  bool delta_threshold_defined = false;
  bool monotone_in_alpha = false;  // psi_inf non-decreasing at alpha = 1
};

BoundReport make_bound_report(const BoundParams& p);

// One line of the empirical verification table.
struct CheckRow {
  std::string check;
  int k = 0;  // period or sample index; -1 for whole-run rows
  double measured = 0.0;
  double bound = 0.0;
  double slack = 0.0;  // bound - measured
  bool pass = false;
};

// Per-period centralized optimality gaps F(c_k(t)) - F(w*).
struct GapSeries {
  std::vector<std::vector<double>> per_period;  // [k][t - (k tau - delay)]
  double terminal_gap = 0.0;                    // F(w^K) - F(w*)
};

struct VerificationReport {
  std::vector<CheckRow> rows;
  ProblemConstants constants;  // with omega and phi filled in
  GapSeries gaps;
  double measured_gap = 0.0;
  double gap_bound = 0.0;
  bool all_pass() const;
};

struct VerifyInputs {
  const Trajectory& traj;
  const AuxTrajectory& aux;
  const ProblemConstants& constants;
  const ReferenceOptimum& reference;
  const std::vector<LossModel>& models;
  const std::vector<Dataset>& datasets;
  const Eigen::VectorXd& weights;
  const SimConfig& cfg;
  const std::vector<ModelParams>& probes;  // probe set used for estimation
  std::uint64_t sample_seed = 0;
};

// Measures every lemma/proposition inequality against one completed run and
// evaluates the optimality-gap bound with phi taken from the run itself.
// Requires alpha > 0 and eta < 2/beta for the estimated beta.
VerificationReport verify_bounds(const VerifyInputs& in);

}  // namespace feddelavg
