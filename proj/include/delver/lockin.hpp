#ifndef DELVER_LOCKIN_HPP
#define DELVER_LOCKIN_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "delver/errors.hpp"

namespace delver {

/// Adoption-dependent utility of a shared technology path. Per-user quality
/// holds a plateau until adoption crosses the critical threshold and then
/// decays exponentially, while coordination returns keep growing linearly —
/// the wedge that makes individually rational adoption collectively costly.
struct LockInParams {
  double base_quality = 1.0;        // q0 > 0, plateau quality
  double process_cost = 1.0;        // C_A > 0
  double coordination_gain = 0.001; // r >= 0, return per co-adopter
  double critical_threshold = 1000.0;  // adoption level where quality starts decaying
  double decay_rate = 0.001;        // lambda > 0
  double switch_cost = 0.5;         // cost of leaving the path
  double externality_weight = 2.0;  // welfare penalty per unit error propagation
  /// Utility of the outside option; defaults to the pristine solo path
  /// base_quality / process_cost when unset.
  std::optional<double> alt_utility;

  void validate() const;
  double alternative_utility() const {
    return alt_utility ? *alt_utility : base_quality / process_cost;
  }
};

/// Realized per-user output quality at adoption level n (>= 0).
double quality(double n, const LockInParams& p);

/// Individual adoption utility: quality(n)/C_A + r*n.
double utility(double n, const LockInParams& p);

/// Constant-quality comparator with the same coordination term: q0/C_A + r*n.
double arthur_baseline(double n, const LockInParams& p);

/// Per-capita collective welfare: utility minus the externality of degraded
/// quality, externality_weight * (1 - quality(n)/q0).
double collective_welfare(double n, const LockInParams& p);

struct AdoptionPoint {
  double adoption = 0.0;
  double welfare = 0.0;
};

struct LockInReport {
  bool flagged = false;
  std::size_t onset_index = 0;   // first index where both conditions hold
  std::size_t peak_index = 0;    // argmax of welfare over the trajectory
  double peak_welfare = 0.0;
  double final_welfare = 0.0;
  double decline_fraction = 0.0; // (peak - final) / |peak|
};

/// Lock-in holds at a step when (a) staying on the path individually beats
/// switching out net of switch_cost, while (b) collective welfare has been
/// strictly declining across the trailing window.
LockInReport detect_lockin(const std::vector<AdoptionPoint>& trajectory, const LockInParams& p,
                           int decline_window = 10);

}  // namespace delver

#endif
