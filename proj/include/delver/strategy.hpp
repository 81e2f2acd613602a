#ifndef DELVER_STRATEGY_HPP
#define DELVER_STRATEGY_HPP

#include <array>
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "delver/errors.hpp"
#include "delver/rng.hpp"

namespace delver {

// ---------------------------------------------------------------------------
// Strategies and regimes
// ---------------------------------------------------------------------------

/// The five interaction policies, ordered along the delegation axis:
/// Alpha (reflective augmentation) invests the most independent scrutiny,
/// Delta (instrumental delegation) the least. The enum value is the ordinal
/// rank on that ladder.
enum class Strategy : int {
  Alpha = 0,    // reflective augmentation: reconstruct and endorse before adopting
  Gamma = 1,    // collaborative synthesis: iterative co-creation
  Beta = 2,     // supervisory verification: audit before use
  Epsilon = 3,  // selective offloading: route effort by stakes
  Delta = 4,    // instrumental delegation: default acceptance
};

inline constexpr int kStrategyCount = 5;
inline constexpr std::array<Strategy, kStrategyCount> kStrategyLadder = {
    Strategy::Alpha, Strategy::Gamma, Strategy::Beta, Strategy::Epsilon, Strategy::Delta};

inline int ordinal(Strategy s) { return static_cast<int>(s); }

/// One ordinal step along the ladder, saturating at both ends.
/// direction < 0 moves toward Alpha (more verification), > 0 toward Delta.
inline Strategy step_strategy(Strategy s, int direction) {
  int o = ordinal(s) + (direction > 0 ? 1 : direction < 0 ? -1 : 0);
  if (o < 0) o = 0;
  if (o > kStrategyCount - 1) o = kStrategyCount - 1;
  return static_cast<Strategy>(o);
}

const char* strategy_name(Strategy s);
Strategy strategy_from_name(const std::string& name);

/// Metastable individual end-states.
enum class Regime : int {
  AdaptiveRecalibration = 0,
  ThroughputLockIn = 1,
  MixedAssurance = 2,
};

inline constexpr int kRegimeCount = 3;

const char* regime_name(Regime r);

/// Which regime a strategy is evidence for when it dominates a trajectory
/// window: verification-side strategies indicate mixed assurance, the
/// mid-ladder routing strategies indicate adaptive recalibration, and full
/// delegation indicates throughput lock-in.
inline Regime regime_of(Strategy s) {
  switch (s) {
    case Strategy::Alpha:
    case Strategy::Beta:
      return Regime::MixedAssurance;
    case Strategy::Gamma:
    case Strategy::Epsilon:
      return Regime::AdaptiveRecalibration;
    case Strategy::Delta:
    default:
      return Regime::ThroughputLockIn;
  }
}

// ---------------------------------------------------------------------------
// Signals, outcomes, user types
// ---------------------------------------------------------------------------

/// AI reliability state drawn by the environment each episode.
enum class ReliabilityState { Reliable, ErrorProne };

/// Per-episode feedback triple, each component normalized to [0,1].
struct SignalVector {
  double trust = 0.5;
  double error_salience = 0.0;
  double burden = 0.0;

  void validate() const;
};

/// Consequence vector of one episode: output quality, effort spent,
/// epistemic gain. Dimensions are fixed at three for a whole run.
struct OutcomeVector {
  double quality = 0.0;      // in [0,1]
  double effort_cost = 0.0;  // >= 0
  double epistemic_gain = 0.0;  // in [0,1]

  void validate() const;
};

enum class UserTypeKind { Reflective, Throughput, Assurance };

const char* user_type_name(UserTypeKind k);
UserTypeKind user_type_from_name(const std::string& name);

/// Per-type transition thresholds. The _hi value arms a signal, the _lo
/// value disarms it (Schmitt-trigger hysteresis), so brief dips inside the
/// band do not reset a persistence streak.
struct SignalThresholds {
  double trust_hi = 0.65, trust_lo = 0.25;
  double error_hi = 0.55, error_lo = 0.25;
  double burden_hi = 0.45, burden_lo = 0.20;

  void validate() const;
};

/// User disposition: how strongly each signal weighs on the user, how many
/// consecutive episodes a condition must persist before a strategy move, and
/// the type's thresholds.
struct UserType {
  UserTypeKind kind = UserTypeKind::Reflective;
  double weight_trust = 1.0 / 3;
  double weight_error = 1.0 / 3;
  double weight_burden = 1.0 / 3;
  int persistence_m = 3;
  SignalThresholds thresholds;

  void validate() const;
};

/// Type-weighted view of a signal: clamp01(3 * w * z) per component, so a
/// uniformly-weighted type sees the raw signal and a specialized type
/// amplifies what it cares about.
SignalVector weighted_signal(const SignalVector& z, const UserType& omega);

// ---------------------------------------------------------------------------
// Interaction history
// ---------------------------------------------------------------------------

struct HistoryRecord {
  Strategy strategy = Strategy::Gamma;
  SignalVector signal;
  OutcomeVector outcome;
};

/// Bounded window of per-episode records plus an exponentially weighted
/// signal summary (retention lambda in (0,1]).
class InteractionHistory {
 public:
  InteractionHistory() = default;
  InteractionHistory(int capacity, double ewma_decay, SignalVector initial = {});

  void push(const HistoryRecord& rec);

  int capacity() const { return capacity_; }
  double ewma_decay() const { return decay_; }
  const SignalVector& ewma() const { return ewma_; }
  const std::deque<HistoryRecord>& records() const { return window_; }
  std::size_t size() const { return window_.size(); }

 private:
  int capacity_ = 16;
  double decay_ = 0.9;
  SignalVector ewma_;
  std::deque<HistoryRecord> window_;
};

// ---------------------------------------------------------------------------
// Outcome table and signal dynamics
// ---------------------------------------------------------------------------

/// Distribution for one (strategy, reliability) cell: component means plus
/// uniform noise half-widths. Draws are clamped back into the outcome ranges.
struct OutcomeCell {
  std::array<double, 3> mean = {0.5, 0.5, 0.5};
  std::array<double, 3> noise = {0.05, 0.05, 0.05};
};

/// The 5x2 outcome correspondence. Cells may be left unset by a custom
/// configuration; sampling an unset cell is a configuration error.
class OutcomeTable {
 public:
  static OutcomeTable defaults();

  void set(Strategy s, ReliabilityState theta, const OutcomeCell& cell);
  const OutcomeCell& at(Strategy s, ReliabilityState theta) const;
  bool has(Strategy s, ReliabilityState theta) const;
  void validate() const;

 private:
  std::array<std::array<std::optional<OutcomeCell>, 2>, kStrategyCount> cells_;
};

/// Parameters of the outcome -> signal bridge.
struct SignalParams {
  double learning_rate = 0.3;  // convex update rate eta, in [0,1]
  double effort_norm = 1.0;    // effort scale mapping cost onto [0,1] burden
  // Probability that an episode's error is actually noticed, per strategy
  // (ladder order). Deep verification notices almost everything, blind
  // delegation almost nothing.
  std::array<double, kStrategyCount> detection_prob = {0.95, 0.70, 0.90, 0.60, 0.10};

  void validate() const;
};

OutcomeVector sample_outcome(Strategy s, ReliabilityState theta,
                             const OutcomeTable& table, RngStream& rng);

/// Convex per-component update of the running signal: trust chases output
/// quality, error salience chases 1 when an error-prone episode was noticed
/// (0 otherwise), burden chases the normalized effort cost.
SignalVector signal_from_outcome(const OutcomeVector& outcome, ReliabilityState theta,
                                 bool error_detected, const SignalVector& prev,
                                 const SignalParams& params);

// ---------------------------------------------------------------------------
// Transitions
// ---------------------------------------------------------------------------

struct TransitionConfig {
  double temperature = 0.1;         // softmax temperature for the stochastic rule
  bool allow_toward_alpha = true;   // candidate masks for the stochastic rule
  bool allow_toward_delta = true;
};

/// Deterministic threshold rule. Evaluates the type-weighted signal over the
/// history window plus the current signal; a sustained error streak moves one
/// step toward Alpha, otherwise a sustained high-trust + high-burden streak
/// moves one step toward Delta; anything else keeps the current strategy.
/// Streaks use the type's hi/lo hysteresis bands and must reach
/// persistence_m consecutive episodes.
Strategy transition_deterministic(Strategy s, const SignalVector& z,
                                  const InteractionHistory& h, const UserType& omega);

/// Candidate strategies with their scores, ordered by ordinal rank. Scores
/// combine a signal-affinity term with a +1 bonus on the deterministic
/// rule's target when one of its threshold conditions fired, which makes the
/// zero-temperature argmax coincide with the deterministic rule.
struct ScoredCandidate {
  Strategy strategy;
  double score;
};
std::vector<ScoredCandidate> transition_scores(Strategy s, const SignalVector& z,
                                               const InteractionHistory& h,
                                               const UserType& omega,
                                               const TransitionConfig& cfg);

/// Softmax sample over transition_scores at cfg.temperature (> 0).
Strategy transition_stochastic(Strategy s, const SignalVector& z,
                               const InteractionHistory& h, const UserType& omega,
                               const TransitionConfig& cfg, RngStream& rng);

// ---------------------------------------------------------------------------
// Metastability detection
// ---------------------------------------------------------------------------

/// Shannon entropy (bits) of the strategy occupancy distribution.
double occupancy_entropy_bits(std::span<const Strategy> window);

/// Classify the trailing window of a trajectory: if its strategy-occupancy
/// entropy is below the threshold, the modal strategy's regime is returned
/// (ties broken toward Alpha); otherwise nothing. The trajectory must be at
/// least window_w long; window_w must be >= 2.
std::optional<Regime> detect_metastable(std::span<const Strategy> trajectory, int window_w,
                                        double entropy_threshold_bits = 1.0);

}  // namespace delver

#endif
