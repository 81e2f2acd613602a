#ifndef DELVER_GAMES_HPP
#define DELVER_GAMES_HPP

#include <utility>
#include <vector>

#include "delver/errors.hpp"
#include "delver/rng.hpp"

namespace delver {

// ---------------------------------------------------------------------------
// Normal-form game kernels
// ---------------------------------------------------------------------------

enum class PdAction { Cooperate, Defect };
enum class CoordAction { High, Low };

/// Prisoner's dilemma payoffs. Must satisfy T > R > P > S strictly.
struct PdMatrix {
  double temptation = 5.0;  // T: defect against a cooperator
  double reward = 3.0;      // R: mutual cooperation
  double punishment = 1.0;  // P: mutual defection
  double sucker = 0.0;      // S: cooperate against a defector

  void validate() const;
};

/// Two-norm coordination payoffs. Must satisfy A > B, A > D, B > C strictly
/// (matching beats mismatching).
struct CoordinationMatrix {
  double match_high = 4.0;     // A: both adopt the high-integrity norm
  double match_low = 2.0;      // B: both adopt the low norm
  double high_vs_low = 0.0;    // C: high norm against a low-norm partner
  double low_vs_high = 1.0;    // D: low norm against a high-norm partner

  void validate() const;
};

/// Generic symmetric k-action game; payoff(a, b) is the row player's payoff
/// for playing a against b.
class SymmetricGame {
 public:
  SymmetricGame(int actions, std::vector<double> payoffs_row_major);

  int actions() const { return actions_; }
  double payoff(int own, int opponent) const { return payoffs_[own * actions_ + opponent]; }
  double min_payoff() const;
  double max_payoff() const;

 private:
  int actions_;
  std::vector<double> payoffs_;
};

/// 2x2 game with action 0 = Cooperate, 1 = Defect.
SymmetricGame to_symmetric_game(const PdMatrix& m);
/// 2x2 game with action 0 = High, 1 = Low.
SymmetricGame to_symmetric_game(const CoordinationMatrix& m);

std::pair<double, double> pd_payoff(PdAction a1, PdAction a2, const PdMatrix& m);
std::pair<double, double> coordination_payoff(CoordAction a1, CoordAction a2,
                                              const CoordinationMatrix& m);

/// Linear public-goods dilemma: each cooperator pays cost_c and contributes
/// benefit_b shared equally by all n players. b > c > b/n keeps the dilemma
/// (cooperation collectively optimal, defection individually dominant).
struct NPlayerPdParams {
  int n = 4;
  double benefit_b = 2.0;
  double cost_c = 1.0;

  void validate() const;
};

/// Per-player payoffs for a full action profile (true = cooperate).
std::vector<double> n_player_pd_payoffs(const std::vector<bool>& cooperates,
                                        const NPlayerPdParams& p);

// ---------------------------------------------------------------------------
// Mixed strategies and equilibrium predicates
// ---------------------------------------------------------------------------

using MixedAction = std::vector<double>;

/// Throws DomainError unless x is a distribution over the game's actions
/// within tol.
void require_on_simplex(const MixedAction& x, int actions, double tol);

/// Expected payoff of mixed action x against mixed action y.
double expected_payoff(const MixedAction& x, const MixedAction& y, const SymmetricGame& g);

/// Symmetric-profile Nash check: no pure deviation may improve either
/// player's expected payoff by more than tol.
bool is_nash(const MixedAction& x, const MixedAction& y, const SymmetricGame& g,
             double tol = 1e-9);

struct EssOptions {
  double tol = 1e-9;
  int mutant_grid = 101;  // mixed-mutant grid points per axis (2-action games)
};

/// Evolutionary stability: candidate c resists every vertex and grid mutant
/// m != c, i.e. E(c,c) > E(m,c) + tol, or the payoffs tie within tol and
/// E(c,m) > E(m,m) + tol.
bool is_ess(const MixedAction& candidate, const SymmetricGame& g, const EssOptions& opt = {});

/// Finite-population invasion experiment: seed a (1 - invader_frac,
/// invader_frac) mix of candidate and mutant players and run pairwise
/// proportional imitation on the induced 2x2 type game. Returns true when
/// the mutant share ends below its initial share (or the two strategies are
/// identical, in which case shares cannot diverge).
bool ess_invasion_oracle(const MixedAction& candidate, const MixedAction& mutant,
                         const SymmetricGame& g, int pop_n, double invader_frac, int steps,
                         RngStream& rng);

}  // namespace delver

#endif
