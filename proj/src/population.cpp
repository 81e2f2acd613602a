#include "delver/population.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace delver {

Distribution::Distribution(std::vector<double> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw DomainError("distribution must be nonempty");
  double sum = 0.0;
  for (double w : weights_) {
    if (!std::isfinite(w) || w < 0.0) throw DomainError("distribution weights must be >= 0");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw DomainError("distribution weights must sum to 1 within 1e-12");
  }
}

Distribution Distribution::normalized(std::vector<double> weights) {
  double sum = 0.0;
  for (double& w : weights) {
    if (!std::isfinite(w)) throw DomainError("distribution weights must be finite");
    if (w < 0.0) w = 0.0;
    sum += w;
  }
  if (sum <= 0.0) throw DomainError("cannot normalize an all-zero weight vector");
  for (double& w : weights) w /= sum;
  return Distribution(std::move(weights));
}

Distribution Distribution::uniform(int n) {
  if (n < 1) throw DomainError("distribution must be nonempty");
  return Distribution(std::vector<double>(n, 1.0 / n));
}

Distribution Distribution::vertex(int k, int n) {
  if (k < 0 || k >= n) throw DomainError("vertex index out of range");
  std::vector<double> w(n, 0.0);
  w[k] = 1.0;
  return Distribution(std::move(w));
}

void MacroState::validate() const {
  for (double v : {mean_output_quality, error_propagation_rate, epistemic_capacity}) {
    if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
      throw DomainError("macro state components must be in [0,1]");
    }
  }
}

RegimeCoeffs default_regime_coeffs() {
  RegimeCoeffs c;
  c[static_cast<int>(Regime::AdaptiveRecalibration)] = {0.85, 0.10, 0.85};
  c[static_cast<int>(Regime::ThroughputLockIn)] = {0.55, 0.75, 0.20};
  c[static_cast<int>(Regime::MixedAssurance)] = {0.80, 0.20, 0.65};
  return c;
}

MacroState aggregate_macro(const Distribution& pi, const RegimeCoeffs& coeffs) {
  if (pi.size() != kRegimeCount) {
    throw DomainError("macro aggregation expects a distribution over the three regimes");
  }
  MacroState out{0.0, 0.0, 0.0};
  for (int k = 0; k < kRegimeCount; ++k) {
    out.mean_output_quality += pi[k] * coeffs[k].mean_output_quality;
    out.error_propagation_rate += pi[k] * coeffs[k].error_propagation_rate;
    out.epistemic_capacity += pi[k] * coeffs[k].epistemic_capacity;
  }
  return out;
}

std::vector<double> fitness(const SymmetricGame& g, const Distribution& pi) {
  if (pi.size() != static_cast<std::size_t>(g.actions())) {
    throw DomainError("distribution size does not match the game's action count");
  }
  std::vector<double> f(g.actions(), 0.0);
  for (int a = 0; a < g.actions(); ++a) {
    for (int b = 0; b < g.actions(); ++b) f[a] += pi[b] * g.payoff(a, b);
  }
  return f;
}

Distribution replicator_step(const Distribution& pi, const SymmetricGame& g, double dt) {
  if (!(dt > 0.0)) throw DomainError("replicator step size must be > 0");
  const std::vector<double> f = fitness(g, pi);
  double mean = 0.0;
  for (std::size_t k = 0; k < pi.size(); ++k) mean += pi[k] * f[k];
  std::vector<double> next(pi.size());
  for (std::size_t k = 0; k < pi.size(); ++k) {
    next[k] = pi[k] + dt * pi[k] * (f[k] - mean);
  }
  return Distribution::normalized(std::move(next));
}

std::vector<TrajectoryPoint> integrate_replicator(const Distribution& pi0,
                                                  const SymmetricGame& g, double dt, int steps,
                                                  int thin) {
  if (steps < 1) throw DomainError("integration needs steps >= 1");
  if (thin < 1) throw DomainError("thinning interval must be >= 1");
  std::vector<TrajectoryPoint> out;
  out.push_back({0, pi0});
  Distribution pi = pi0;
  for (int t = 1; t <= steps; ++t) {
    pi = replicator_step(pi, g, dt);
    if (t % thin == 0 || t == steps) out.push_back({t, pi});
  }
  return out;
}

std::vector<int> imitation_step(const std::vector<int>& actions, const SymmetricGame& g,
                                double rate, RngStream& rng) {
  if (actions.empty()) throw DomainError("imitation needs a nonempty population");
  if (!(rate > 0.0) || rate > 1.0) throw DomainError("imitation rate must be in (0,1]");
  const int n = static_cast<int>(actions.size());

  // Empirical mix and per-action expected payoffs against it.
  std::vector<double> counts(g.actions(), 0.0);
  for (int a : actions) {
    if (a < 0 || a >= g.actions()) throw DomainError("action index out of range");
    counts[a] += 1.0;
  }
  for (double& c : counts) c /= n;
  const std::vector<double> f = fitness(g, Distribution::normalized(counts));
  const double range = g.max_payoff() - g.min_payoff();

  std::vector<int> next = actions;
  for (int i = 0; i < n; ++i) {
    if (rate < 1.0 && !rng.next_bernoulli(rate)) continue;
    const int j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
    if (actions[j] == actions[i]) continue;
    const double gap = f[actions[j]] - f[actions[i]];
    if (gap <= 0.0 || range <= 0.0) continue;
    if (rng.next_bernoulli(std::min(1.0, gap / range))) next[i] = actions[j];
  }
  return next;
}

namespace {

// Replicator vector field at pi.
std::vector<double> field(const SymmetricGame& g, const Distribution& pi) {
  const std::vector<double> f = fitness(g, pi);
  double mean = 0.0;
  for (std::size_t k = 0; k < pi.size(); ++k) mean += pi[k] * f[k];
  std::vector<double> v(pi.size());
  for (std::size_t k = 0; k < pi.size(); ++k) v[k] = pi[k] * (f[k] - mean);
  return v;
}

double field_norm(const SymmetricGame& g, const Distribution& pi) {
  double norm = 0.0;
  for (double v : field(g, pi)) norm = std::max(norm, std::abs(v));
  return norm;
}

bool near(const Distribution& a, const Distribution& b, double tol) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > tol) return false;
  }
  return true;
}

void push_unique(std::vector<Distribution>& points, const Distribution& p) {
  for (const Distribution& q : points) {
    if (near(p, q, 1e-6)) return;
  }
  points.push_back(p);
}

}  // namespace

std::vector<Distribution> find_rest_points(const SymmetricGame& g, int grid_density,
                                           double field_tol) {
  if (grid_density < 2) throw DomainError("rest-point grid density must be >= 2");
  std::vector<Distribution> points;
  for (int k = 0; k < g.actions(); ++k) push_unique(points, Distribution::vertex(k, g.actions()));

  if (g.actions() == 2) {
    // Interior rest points are the indifference roots of the fitness gap.
    const auto gap = [&](double p0) {
      const Distribution pi(std::vector<double>{p0, 1.0 - p0});
      const std::vector<double> f = fitness(g, pi);
      return f[0] - f[1];
    };
    double prev_p = 0.0;
    double prev_gap = gap(prev_p);
    for (int i = 1; i < grid_density; ++i) {
      const double p = static_cast<double>(i) / (grid_density - 1);
      const double gp = gap(p);
      const Distribution grid_point(std::vector<double>{p, 1.0 - p});
      if (field_norm(g, grid_point) < field_tol) push_unique(points, grid_point);
      if ((prev_gap < 0.0 && gp > 0.0) || (prev_gap > 0.0 && gp < 0.0)) {
        double lo = prev_p, hi = p, glo = prev_gap;
        for (int it = 0; it < 80; ++it) {
          const double mid = 0.5 * (lo + hi);
          const double gm = gap(mid);
          if ((glo < 0.0) == (gm < 0.0)) {
            lo = mid;
            glo = gm;
          } else {
            hi = mid;
          }
        }
        const double root = 0.5 * (lo + hi);
        if (root > 0.0 && root < 1.0) {
          push_unique(points, Distribution(std::vector<double>{root, 1.0 - root}));
        }
      }
      prev_p = p;
      prev_gap = gp;
    }
    return points;
  }

  // k >= 3: report grid points with a near-zero field.
  std::vector<MixedAction> grid;
  MixedAction current(g.actions(), 0.0);
  const std::function<void(int, int)> recurse = [&](int index, int remaining) {
    if (index == g.actions() - 1) {
      current[index] = static_cast<double>(remaining) / (grid_density - 1);
      grid.push_back(current);
      return;
    }
    for (int take = 0; take <= remaining; ++take) {
      current[index] = static_cast<double>(take) / (grid_density - 1);
      recurse(index + 1, remaining - take);
    }
  };
  recurse(0, grid_density - 1);
  for (const MixedAction& w : grid) {
    const Distribution pi = Distribution::normalized(w);
    if (field_norm(g, pi) < field_tol) push_unique(points, pi);
  }
  return points;
}

}  // namespace delver
