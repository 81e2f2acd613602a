#ifndef DELVER_POPULATION_HPP
#define DELVER_POPULATION_HPP

#include <array>
#include <vector>

#include "delver/games.hpp"
#include "delver/strategy.hpp"

namespace delver {

// ---------------------------------------------------------------------------
// Distributions and macro projection
// ---------------------------------------------------------------------------

/// Point on a probability simplex; used both over the three regimes
/// (macro reporting) and over a game's action set (dynamics). The two bases
/// are never mixed inside one computation.
class Distribution {
 public:
  explicit Distribution(std::vector<double> weights);

  /// Clamp negatives to zero and rescale so the weights sum to one.
  static Distribution normalized(std::vector<double> weights);
  static Distribution uniform(int n);
  static Distribution vertex(int k, int n);

  const std::vector<double>& weights() const { return weights_; }
  double operator[](std::size_t i) const { return weights_[i]; }
  std::size_t size() const { return weights_.size(); }

 private:
  std::vector<double> weights_;
};

/// Aggregate system indicators, all in [0,1].
struct MacroState {
  double mean_output_quality = 0.0;
  double error_propagation_rate = 0.0;
  double epistemic_capacity = 0.0;

  void validate() const;
};

/// Per-regime macro coefficients, indexed by Regime in canonical order.
using RegimeCoeffs = std::array<MacroState, kRegimeCount>;

RegimeCoeffs default_regime_coeffs();

/// Principle-one projection: the macro state is the pi-weighted mix of the
/// per-regime coefficient vectors.
MacroState aggregate_macro(const Distribution& pi, const RegimeCoeffs& coeffs);

// ---------------------------------------------------------------------------
// Replicator and imitation dynamics
// ---------------------------------------------------------------------------

/// Expected payoff of each action against the population mix.
std::vector<double> fitness(const SymmetricGame& g, const Distribution& pi);

/// One explicit-Euler replicator step: each action's share grows in
/// proportion to its payoff advantage over the population average, then the
/// result is clamped and renormalized. dt must be > 0.
Distribution replicator_step(const Distribution& pi, const SymmetricGame& g, double dt);

struct TrajectoryPoint {
  int step;
  Distribution pi;
};

/// Iterate replicator_step, recording every `thin` steps (step 0 and the
/// final step always included).
std::vector<TrajectoryPoint> integrate_replicator(const Distribution& pi0,
                                                  const SymmetricGame& g, double dt, int steps,
                                                  int thin = 1);

/// One synchronous round of pairwise proportional imitation: every agent is
/// considered with probability `rate`, compares its expected payoff against
/// the empirical mix with a uniformly drawn role model's, and copies the
/// role model with probability proportional to the positive payoff gap
/// (normalized by the game's payoff range). Reads the pre-round state only.
std::vector<int> imitation_step(const std::vector<int>& actions, const SymmetricGame& g,
                                double rate, RngStream& rng);

/// Candidate rest points of the replicator field: simplex vertices, grid
/// points where the field norm is below tol, and (for 2-action games)
/// interior indifference points refined by bisection along grid edges.
std::vector<Distribution> find_rest_points(const SymmetricGame& g, int grid_density,
                                           double field_tol = 1e-9);

}  // namespace delver

#endif
