#ifndef DELVER_INSTITUTIONS_HPP
#define DELVER_INSTITUTIONS_HPP

#include <optional>

#include "delver/games.hpp"
#include "delver/network.hpp"
#include "delver/population.hpp"
#include "delver/strategy.hpp"

namespace delver {

/// Exogenous institutional environment: disclosure and provenance rules,
/// audit pressure, and an optional workflow mandate (a minimum verification
/// level on the strategy ladder). A default-constructed value is the null
/// institution and leaves games, agents, and macro projections unchanged.
struct InstitutionalEnvironment {
  bool disclosure_required = false;
  bool provenance_required = false;
  double audit_probability = 0.0;
  double penalty_defect = 0.0;
  double reward_cooperate = 0.0;
  std::optional<Strategy> mandate;  // agents beyond this ordinal are violators

  // Tuning knobs, documented configuration rather than structural fields.
  double provenance_compliance = 0.8;   // effective provenance strength when required
  double error_salience_bump = 0.3;     // added to a sanctioned agent's error signal
  double alignment_strength = 0.25;     // epistemic gain from observed norm compliance

  void validate() const;
  bool is_null() const;
  double provenance_strength() const {
    return provenance_required ? provenance_compliance : 0.0;
  }
};

/// Symmetric game with a designated defect action.
struct CdGame {
  SymmetricGame game;
  int defect_action = 1;
};

/// Expected-value payoff restructuring: every defect-row payoff drops by
/// audit_probability * penalty_defect and every cooperate-row payoff rises
/// by reward_cooperate. The result may well violate the original game's
/// ordinal structure.
CdGame apply_institution(const CdGame& g, const InstitutionalEnvironment& inst);

struct AuditResult {
  AgentState agent;        // post-audit state (error salience bumped if sanctioned)
  bool audited = false;
  bool sanctioned = false;
  double amount = 0.0;
};

/// With probability audit_probability the agent is audited; an audited agent
/// whose strategy sits beyond the mandate floor (toward Delta) is sanctioned
/// by penalty_defect and has its error salience bumped.
AuditResult audit_and_sanction(const AgentState& agent, const InstitutionalEnvironment& inst,
                               RngStream& rng);

/// Principle-three projection: the principle-one macro state composed with
/// institutional modifiers. Provenance scales error propagation down by its
/// strength; a disclosure rule raises epistemic capacity in proportion to
/// mean observed norm compliance on the graph. Components stay in [0,1].
MacroState institutional_macro(const Distribution& pi, const RegimeCoeffs& coeffs,
                               const InteractionGraph& graph,
                               const std::vector<AgentState>& agents,
                               const SignalingParams& signaling,
                               const InstitutionalEnvironment& inst);

/// Penalty/reward level above which cooperation becomes strictly dominant in
/// a PD: audit_probability * penalty + reward > max(T - R, P - S).
double dominance_flip_threshold(const PdMatrix& m);

}  // namespace delver

#endif
