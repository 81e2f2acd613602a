#include "delver/strategy.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace delver {

namespace {

constexpr const char* kStrategyNames[kStrategyCount] = {"alpha", "gamma", "beta", "epsilon",
                                                        "delta"};
constexpr const char* kRegimeNames[kRegimeCount] = {"adaptive_recalibration", "throughput_lock_in",
                                                    "mixed_assurance"};
constexpr const char* kUserTypeNames[3] = {"reflective", "throughput", "assurance"};

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

void check_unit(double x, const char* what) {
  if (!std::isfinite(x) || x < 0.0 || x > 1.0) {
    throw DomainError(std::string(what) + " must be in [0,1]");
  }
}

}  // namespace

const char* strategy_name(Strategy s) { return kStrategyNames[ordinal(s)]; }

Strategy strategy_from_name(const std::string& name) {
  for (int i = 0; i < kStrategyCount; ++i) {
    if (name == kStrategyNames[i]) return static_cast<Strategy>(i);
  }
  throw ConfigError("unknown strategy name: " + name);
}

const char* regime_name(Regime r) { return kRegimeNames[static_cast<int>(r)]; }

const char* user_type_name(UserTypeKind k) { return kUserTypeNames[static_cast<int>(k)]; }

UserTypeKind user_type_from_name(const std::string& name) {
  for (int i = 0; i < 3; ++i) {
    if (name == kUserTypeNames[i]) return static_cast<UserTypeKind>(i);
  }
  throw ConfigError("unknown user type: " + name);
}

void SignalVector::validate() const {
  check_unit(trust, "signal trust");
  check_unit(error_salience, "signal error_salience");
  check_unit(burden, "signal burden");
}

void OutcomeVector::validate() const {
  check_unit(quality, "outcome quality");
  check_unit(epistemic_gain, "outcome epistemic_gain");
  if (!std::isfinite(effort_cost) || effort_cost < 0.0) {
    throw DomainError("outcome effort_cost must be finite and >= 0");
  }
}

void SignalThresholds::validate() const {
  const struct {
    double hi, lo;
    const char* name;
  } bands[] = {{trust_hi, trust_lo, "trust"}, {error_hi, error_lo, "error"},
               {burden_hi, burden_lo, "burden"}};
  for (const auto& b : bands) {
    check_unit(b.hi, (std::string(b.name) + " hi threshold").c_str());
    check_unit(b.lo, (std::string(b.name) + " lo threshold").c_str());
    if (b.lo > b.hi) {
      throw DomainError(std::string(b.name) + " lo threshold exceeds hi threshold");
    }
  }
}

void UserType::validate() const {
  if (weight_trust < 0 || weight_error < 0 || weight_burden < 0) {
    throw DomainError("user type weights must be >= 0");
  }
  const double sum = weight_trust + weight_error + weight_burden;
  if (std::abs(sum - 1.0) > 1e-12) {
    throw DomainError("user type weights must sum to 1");
  }
  if (persistence_m < 1) {
    throw DomainError("persistence_m must be >= 1");
  }
  thresholds.validate();
}

SignalVector weighted_signal(const SignalVector& z, const UserType& omega) {
  SignalVector w;
  w.trust = clamp01(3.0 * omega.weight_trust * z.trust);
  w.error_salience = clamp01(3.0 * omega.weight_error * z.error_salience);
  w.burden = clamp01(3.0 * omega.weight_burden * z.burden);
  return w;
}

InteractionHistory::InteractionHistory(int capacity, double ewma_decay, SignalVector initial)
    : capacity_(capacity), decay_(ewma_decay), ewma_(initial) {
  if (capacity_ < 1) throw DomainError("history capacity must be >= 1");
  if (!(decay_ > 0.0) || decay_ > 1.0) throw DomainError("history decay must be in (0,1]");
}

void InteractionHistory::push(const HistoryRecord& rec) {
  window_.push_back(rec);
  if (static_cast<int>(window_.size()) > capacity_) window_.pop_front();
  const double keep = decay_;
  ewma_.trust = keep * ewma_.trust + (1.0 - keep) * rec.signal.trust;
  ewma_.error_salience = keep * ewma_.error_salience + (1.0 - keep) * rec.signal.error_salience;
  ewma_.burden = keep * ewma_.burden + (1.0 - keep) * rec.signal.burden;
}

OutcomeTable OutcomeTable::defaults() {
  OutcomeTable t;
  const auto cell = [](double q, double e, double g) {
    OutcomeCell c;
    c.mean = {q, e, g};
    return c;
  };
  // Reliable AI: quality varies little across strategies, effort and
  // epistemic gain fall as delegation rises.
  t.set(Strategy::Alpha, ReliabilityState::Reliable, cell(0.90, 0.80, 0.90));
  t.set(Strategy::Gamma, ReliabilityState::Reliable, cell(0.85, 0.60, 0.75));
  t.set(Strategy::Beta, ReliabilityState::Reliable, cell(0.88, 0.55, 0.60));
  t.set(Strategy::Epsilon, ReliabilityState::Reliable, cell(0.82, 0.35, 0.45));
  t.set(Strategy::Delta, ReliabilityState::Reliable, cell(0.80, 0.10, 0.15));
  // Error-prone AI: verification-heavy strategies absorb errors at extra
  // cost, delegation passes them through.
  t.set(Strategy::Alpha, ReliabilityState::ErrorProne, cell(0.85, 0.90, 0.85));
  t.set(Strategy::Gamma, ReliabilityState::ErrorProne, cell(0.65, 0.70, 0.60));
  t.set(Strategy::Beta, ReliabilityState::ErrorProne, cell(0.75, 0.70, 0.50));
  t.set(Strategy::Epsilon, ReliabilityState::ErrorProne, cell(0.55, 0.45, 0.30));
  t.set(Strategy::Delta, ReliabilityState::ErrorProne, cell(0.30, 0.05, 0.00));
  return t;
}

void OutcomeTable::set(Strategy s, ReliabilityState theta, const OutcomeCell& cell) {
  cells_[ordinal(s)][theta == ReliabilityState::ErrorProne ? 1 : 0] = cell;
}

bool OutcomeTable::has(Strategy s, ReliabilityState theta) const {
  return cells_[ordinal(s)][theta == ReliabilityState::ErrorProne ? 1 : 0].has_value();
}

const OutcomeCell& OutcomeTable::at(Strategy s, ReliabilityState theta) const {
  const auto& cell = cells_[ordinal(s)][theta == ReliabilityState::ErrorProne ? 1 : 0];
  if (!cell) {
    throw ConfigError(std::string("outcome table missing cell (") + strategy_name(s) + ", " +
                      (theta == ReliabilityState::ErrorProne ? "error_prone" : "reliable") + ")");
  }
  return *cell;
}

void OutcomeTable::validate() const {
  for (Strategy s : kStrategyLadder) {
    for (auto theta : {ReliabilityState::Reliable, ReliabilityState::ErrorProne}) {
      if (!has(s, theta)) continue;
      const OutcomeCell& c = at(s, theta);
      check_unit(c.mean[0], "outcome mean quality");
      check_unit(c.mean[2], "outcome mean epistemic_gain");
      if (!std::isfinite(c.mean[1]) || c.mean[1] < 0) {
        throw DomainError("outcome mean effort_cost must be >= 0");
      }
      for (double n : c.noise) {
        if (!std::isfinite(n) || n < 0) throw DomainError("outcome noise width must be >= 0");
      }
    }
  }
}

void SignalParams::validate() const {
  check_unit(learning_rate, "learning_rate");
  if (!(effort_norm > 0)) throw DomainError("effort_norm must be > 0");
  for (double p : detection_prob) check_unit(p, "detection probability");
}

OutcomeVector sample_outcome(Strategy s, ReliabilityState theta, const OutcomeTable& table,
                             RngStream& rng) {
  const OutcomeCell& cell = table.at(s, theta);
  OutcomeVector out;
  const double q = cell.mean[0] + cell.noise[0] * rng.next_symmetric();
  const double e = cell.mean[1] + cell.noise[1] * rng.next_symmetric();
  const double g = cell.mean[2] + cell.noise[2] * rng.next_symmetric();
  out.quality = clamp01(q);
  out.effort_cost = std::max(0.0, e);
  out.epistemic_gain = clamp01(g);
  return out;
}

SignalVector signal_from_outcome(const OutcomeVector& outcome, ReliabilityState theta,
                                 bool error_detected, const SignalVector& prev,
                                 const SignalParams& params) {
  prev.validate();
  outcome.validate();
  const double eta = params.learning_rate;
  const double error_target =
      (theta == ReliabilityState::ErrorProne && error_detected) ? 1.0 : 0.0;
  const double burden_target = clamp01(outcome.effort_cost / params.effort_norm);
  SignalVector next;
  next.trust = prev.trust + eta * (outcome.quality - prev.trust);
  next.error_salience = prev.error_salience + eta * (error_target - prev.error_salience);
  next.burden = prev.burden + eta * (burden_target - prev.burden);
  return next;
}

namespace {

// Trailing streak length of a Schmitt-triggered condition over a per-episode
// value sequence: the condition arms when the value exceeds hi, disarms when
// it drops below lo, and holds in between.
int trailing_armed_streak(std::span<const double> xs, double hi, double lo) {
  bool armed = false;
  int streak = 0;
  for (double x : xs) {
    if (x > hi) {
      armed = true;
    } else if (x < lo) {
      armed = false;
    }
    streak = armed ? streak + 1 : 0;
  }
  return streak;
}

struct StreakState {
  int error = 0;
  int trust = 0;
  int burden = 0;
};

// Weighted per-episode signal sequences (window + current) and their streaks.
StreakState compute_streaks(const SignalVector& z, const InteractionHistory& h,
                            const UserType& omega) {
  std::vector<double> trust, error, burden;
  trust.reserve(h.size() + 1);
  error.reserve(h.size() + 1);
  burden.reserve(h.size() + 1);
  for (const HistoryRecord& rec : h.records()) {
    const SignalVector w = weighted_signal(rec.signal, omega);
    trust.push_back(w.trust);
    error.push_back(w.error_salience);
    burden.push_back(w.burden);
  }
  const SignalVector w = weighted_signal(z, omega);
  trust.push_back(w.trust);
  error.push_back(w.error_salience);
  burden.push_back(w.burden);

  const SignalThresholds& th = omega.thresholds;
  StreakState st;
  st.error = trailing_armed_streak(error, th.error_hi, th.error_lo);
  st.trust = trailing_armed_streak(trust, th.trust_hi, th.trust_lo);
  st.burden = trailing_armed_streak(burden, th.burden_hi, th.burden_lo);
  return st;
}

// Direction the deterministic rule fires in: -1 toward Alpha, +1 toward
// Delta, 0 when no condition has persisted long enough. Sustained error
// salience outranks delegation pressure.
int fired_direction(const SignalVector& z, const InteractionHistory& h, const UserType& omega) {
  const StreakState st = compute_streaks(z, h, omega);
  const int m = omega.persistence_m;
  if (st.error >= m) return -1;
  if (st.trust >= m && st.burden >= m) return +1;
  return 0;
}

}  // namespace

Strategy transition_deterministic(Strategy s, const SignalVector& z, const InteractionHistory& h,
                                  const UserType& omega) {
  z.validate();
  omega.validate();
  return step_strategy(s, fired_direction(z, h, omega));
}

std::vector<ScoredCandidate> transition_scores(Strategy s, const SignalVector& z,
                                               const InteractionHistory& h, const UserType& omega,
                                               const TransitionConfig& cfg) {
  z.validate();
  omega.validate();

  const SignalVector w = weighted_signal(z, omega);
  // Signed delegation pressure: positive when trust and burden invite more
  // delegation, negative when error salience dominates.
  const double pressure = 0.5 * (w.trust + w.burden) - w.error_salience;
  const int fired_dir = fired_direction(z, h, omega);
  const bool fired = fired_dir != 0;
  // At a saturated ladder end the fired move resolves to staying put, and
  // the bonus lands there, keeping the argmax consistent with the
  // deterministic rule.
  const Strategy target = step_strategy(s, fired_dir);

  std::vector<ScoredCandidate> out;
  for (int dir = -1; dir <= 1; ++dir) {
    if (dir == -1 && (!cfg.allow_toward_alpha || ordinal(s) == 0)) continue;
    if (dir == +1 && (!cfg.allow_toward_delta || ordinal(s) == kStrategyCount - 1)) continue;
    const Strategy cand = step_strategy(s, dir);
    double affinity = (dir == 0) ? 0.25 * (1.0 - std::abs(pressure))
                                 : 0.25 * (1.0 + dir * pressure);
    double score = affinity + ((fired && cand == target) ? 1.0 : 0.0);
    out.push_back({cand, score});
  }
  return out;
}

Strategy transition_stochastic(Strategy s, const SignalVector& z, const InteractionHistory& h,
                               const UserType& omega, const TransitionConfig& cfg,
                               RngStream& rng) {
  if (!(cfg.temperature > 0.0)) {
    throw DomainError("transition temperature must be > 0");
  }
  const auto scored = transition_scores(s, z, h, omega, cfg);
  double max_score = scored.front().score;
  for (const auto& c : scored) max_score = std::max(max_score, c.score);

  std::vector<double> weights(scored.size());
  double total = 0.0;
  for (std::size_t i = 0; i < scored.size(); ++i) {
    weights[i] = std::exp((scored[i].score - max_score) / cfg.temperature);
    total += weights[i];
  }
  const double u = rng.next_unit() * total;
  double acc = 0.0;
  for (std::size_t i = 0; i < scored.size(); ++i) {
    acc += weights[i];
    if (u < acc) return scored[i].strategy;
  }
  return scored.back().strategy;
}

double occupancy_entropy_bits(std::span<const Strategy> window) {
  std::array<int, kStrategyCount> counts = {};
  for (Strategy s : window) counts[ordinal(s)]++;
  const double n = static_cast<double>(window.size());
  double h = 0.0;
  for (int c : counts) {
    if (c == 0) continue;
    const double p = c / n;
    h -= p * std::log2(p);
  }
  return h;
}

std::optional<Regime> detect_metastable(std::span<const Strategy> trajectory, int window_w,
                                        double entropy_threshold_bits) {
  if (window_w < 2) throw DomainError("metastability window must be >= 2");
  if (trajectory.size() < static_cast<std::size_t>(window_w)) {
    throw InsufficientDataError("trajectory shorter than the metastability window");
  }
  const auto window = trajectory.subspan(trajectory.size() - window_w);
  if (occupancy_entropy_bits(window) >= entropy_threshold_bits) return std::nullopt;

  std::array<int, kStrategyCount> counts = {};
  for (Strategy s : window) counts[ordinal(s)]++;
  int best = 0;
  for (int i = 1; i < kStrategyCount; ++i) {
    if (counts[i] > counts[best]) best = i;  // ties resolve toward Alpha
  }
  return regime_of(static_cast<Strategy>(best));
}

}  // namespace delver
