#include "delver/games.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "delver/population.hpp"

namespace delver {

void PdMatrix::validate() const {
  for (double v : {temptation, reward, punishment, sucker}) {
    if (!std::isfinite(v)) throw DomainError("PD payoffs must be finite");
  }
  if (!(temptation > reward && reward > punishment && punishment > sucker)) {
    throw DomainError("PD payoffs must satisfy T > R > P > S");
  }
}

void CoordinationMatrix::validate() const {
  for (double v : {match_high, match_low, high_vs_low, low_vs_high}) {
    if (!std::isfinite(v)) throw DomainError("coordination payoffs must be finite");
  }
  if (!(match_high > match_low && match_high > low_vs_high && match_low > high_vs_low)) {
    throw DomainError("coordination payoffs must satisfy A > B, A > D, B > C");
  }
}

SymmetricGame::SymmetricGame(int actions, std::vector<double> payoffs_row_major)
    : actions_(actions), payoffs_(std::move(payoffs_row_major)) {
  if (actions_ < 2) throw DomainError("a symmetric game needs at least 2 actions");
  if (payoffs_.size() != static_cast<std::size_t>(actions_) * actions_) {
    throw DomainError("payoff matrix size does not match action count");
  }
  for (double v : payoffs_) {
    if (!std::isfinite(v)) throw DomainError("payoff entries must be finite");
  }
}

double SymmetricGame::min_payoff() const {
  return *std::min_element(payoffs_.begin(), payoffs_.end());
}

double SymmetricGame::max_payoff() const {
  return *std::max_element(payoffs_.begin(), payoffs_.end());
}

SymmetricGame to_symmetric_game(const PdMatrix& m) {
  m.validate();
  return SymmetricGame(2, {m.reward, m.sucker, m.temptation, m.punishment});
}

SymmetricGame to_symmetric_game(const CoordinationMatrix& m) {
  m.validate();
  return SymmetricGame(2, {m.match_high, m.high_vs_low, m.low_vs_high, m.match_low});
}

std::pair<double, double> pd_payoff(PdAction a1, PdAction a2, const PdMatrix& m) {
  m.validate();
  const bool c1 = (a1 == PdAction::Cooperate);
  const bool c2 = (a2 == PdAction::Cooperate);
  if (c1 && c2) return {m.reward, m.reward};
  if (c1 && !c2) return {m.sucker, m.temptation};
  if (!c1 && c2) return {m.temptation, m.sucker};
  return {m.punishment, m.punishment};
}

std::pair<double, double> coordination_payoff(CoordAction a1, CoordAction a2,
                                              const CoordinationMatrix& m) {
  m.validate();
  const bool h1 = (a1 == CoordAction::High);
  const bool h2 = (a2 == CoordAction::High);
  if (h1 && h2) return {m.match_high, m.match_high};
  if (!h1 && !h2) return {m.match_low, m.match_low};
  if (h1) return {m.high_vs_low, m.low_vs_high};
  return {m.low_vs_high, m.high_vs_low};
}

void NPlayerPdParams::validate() const {
  if (n < 2) throw DomainError("n-player PD needs n >= 2");
  if (!(benefit_b > 0) || !(cost_c > 0)) throw DomainError("b and c must be > 0");
  if (!(benefit_b > cost_c && cost_c > benefit_b / n)) {
    throw DomainError("n-player PD requires b > c > b/n");
  }
}

std::vector<double> n_player_pd_payoffs(const std::vector<bool>& cooperates,
                                        const NPlayerPdParams& p) {
  p.validate();
  if (cooperates.size() != static_cast<std::size_t>(p.n)) {
    throw DomainError("action profile length does not match player count");
  }
  int cooperators = 0;
  for (bool c : cooperates) cooperators += c ? 1 : 0;
  const double shared = p.benefit_b * cooperators / p.n;
  std::vector<double> payoffs(cooperates.size());
  for (std::size_t i = 0; i < cooperates.size(); ++i) {
    payoffs[i] = shared - (cooperates[i] ? p.cost_c : 0.0);
  }
  return payoffs;
}

void require_on_simplex(const MixedAction& x, int actions, double tol) {
  if (x.size() != static_cast<std::size_t>(actions)) {
    throw DomainError("mixed action length does not match the game's action count");
  }
  double sum = 0.0;
  for (double w : x) {
    if (!std::isfinite(w) || w < -tol) throw DomainError("mixed action has negative weight");
    sum += w;
  }
  if (std::abs(sum - 1.0) > std::max(tol, 1e-12)) {
    throw DomainError("mixed action weights do not sum to 1");
  }
}

double expected_payoff(const MixedAction& x, const MixedAction& y, const SymmetricGame& g) {
  double total = 0.0;
  for (int a = 0; a < g.actions(); ++a) {
    if (x[a] == 0.0) continue;
    double row = 0.0;
    for (int b = 0; b < g.actions(); ++b) row += y[b] * g.payoff(a, b);
    total += x[a] * row;
  }
  return total;
}

namespace {

MixedAction vertex(int k, int actions) {
  MixedAction v(actions, 0.0);
  v[k] = 1.0;
  return v;
}

double pure_vs_mix(int a, const MixedAction& y, const SymmetricGame& g) {
  double total = 0.0;
  for (int b = 0; b < g.actions(); ++b) total += y[b] * g.payoff(a, b);
  return total;
}

// Recursive simplex grid with `density` points per axis.
void simplex_grid(int actions, int density, MixedAction& current, int index, int remaining,
                  std::vector<MixedAction>& out) {
  if (index == actions - 1) {
    current[index] = static_cast<double>(remaining) / (density - 1);
    out.push_back(current);
    return;
  }
  for (int take = 0; take <= remaining; ++take) {
    current[index] = static_cast<double>(take) / (density - 1);
    simplex_grid(actions, density, current, index + 1, remaining - take, out);
  }
}

std::vector<MixedAction> mutant_set(const SymmetricGame& g, int density) {
  std::vector<MixedAction> mutants;
  for (int k = 0; k < g.actions(); ++k) mutants.push_back(vertex(k, g.actions()));
  if (density >= 2) {
    MixedAction current(g.actions(), 0.0);
    simplex_grid(g.actions(), density, current, 0, density - 1, mutants);
  }
  return mutants;
}

bool same_mix(const MixedAction& a, const MixedAction& b, double tol) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > tol) return false;
  }
  return true;
}

}  // namespace

bool is_nash(const MixedAction& x, const MixedAction& y, const SymmetricGame& g, double tol) {
  require_on_simplex(x, g.actions(), tol);
  require_on_simplex(y, g.actions(), tol);
  const double u1 = expected_payoff(x, y, g);
  const double u2 = expected_payoff(y, x, g);
  for (int a = 0; a < g.actions(); ++a) {
    if (pure_vs_mix(a, y, g) > u1 + tol) return false;
    if (pure_vs_mix(a, x, g) > u2 + tol) return false;
  }
  return true;
}

bool is_ess(const MixedAction& candidate, const SymmetricGame& g, const EssOptions& opt) {
  require_on_simplex(candidate, g.actions(), opt.tol);
  const double self_payoff = expected_payoff(candidate, candidate, g);
  for (const MixedAction& mutant : mutant_set(g, opt.mutant_grid)) {
    if (same_mix(mutant, candidate, 1e-9)) continue;
    const double mutant_vs_incumbent = expected_payoff(mutant, candidate, g);
    if (self_payoff > mutant_vs_incumbent + opt.tol) continue;  // strictly repelled
    if (std::abs(self_payoff - mutant_vs_incumbent) <= opt.tol) {
      // First condition ties: the incumbent must beat the mutant in the
      // mutant's own environment.
      const double incumbent_vs_mutant = expected_payoff(candidate, mutant, g);
      const double mutant_vs_mutant = expected_payoff(mutant, mutant, g);
      if (incumbent_vs_mutant > mutant_vs_mutant + opt.tol) continue;
    }
    return false;
  }
  return true;
}

bool ess_invasion_oracle(const MixedAction& candidate, const MixedAction& mutant,
                         const SymmetricGame& g, int pop_n, double invader_frac, int steps,
                         RngStream& rng) {
  require_on_simplex(candidate, g.actions(), 1e-9);
  require_on_simplex(mutant, g.actions(), 1e-9);
  if (pop_n < 100) throw DomainError("invasion oracle needs pop_n >= 100");
  if (!(invader_frac > 0.0 && invader_frac < 0.5)) {
    throw DomainError("invader_frac must be in (0, 0.5)");
  }
  if (steps < 1) throw DomainError("invasion oracle needs steps >= 1");
  if (same_mix(candidate, mutant, 1e-12)) return true;  // shares cannot diverge

  // Induced 2x2 type game between the two mixed strategies.
  const MixedAction& c = candidate;
  const MixedAction& m = mutant;
  SymmetricGame type_game(2, {expected_payoff(c, c, g), expected_payoff(c, m, g),
                              expected_payoff(m, c, g), expected_payoff(m, m, g)});

  const int invaders = std::max(1, static_cast<int>(std::lround(invader_frac * pop_n)));
  std::vector<int> agents(pop_n, 0);
  for (int i = 0; i < invaders; ++i) agents[i] = 1;

  for (int step = 0; step < steps; ++step) {
    agents = imitation_step(agents, type_game, 1.0, rng);
  }
  int final_invaders = 0;
  for (int a : agents) final_invaders += a;
  return final_invaders < invaders;
}

}  // namespace delver
