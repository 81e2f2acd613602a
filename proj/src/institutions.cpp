#include "delver/institutions.hpp"

#include <algorithm>
#include <cmath>

namespace delver {

void InstitutionalEnvironment::validate() const {
  if (audit_probability < 0.0 || audit_probability > 1.0) {
    throw DomainError("audit_probability must be in [0,1]");
  }
  if (!std::isfinite(penalty_defect) || penalty_defect < 0.0) {
    throw DomainError("penalty_defect must be finite and >= 0");
  }
  if (!std::isfinite(reward_cooperate) || reward_cooperate < 0.0) {
    throw DomainError("reward_cooperate must be finite and >= 0");
  }
  if (provenance_compliance < 0.0 || provenance_compliance > 1.0) {
    throw DomainError("provenance_compliance must be in [0,1]");
  }
  if (error_salience_bump < 0.0 || error_salience_bump > 1.0) {
    throw DomainError("error_salience_bump must be in [0,1]");
  }
  if (alignment_strength < 0.0 || alignment_strength > 1.0) {
    throw DomainError("alignment_strength must be in [0,1]");
  }
}

bool InstitutionalEnvironment::is_null() const {
  return !disclosure_required && !provenance_required &&
         audit_probability * penalty_defect == 0.0 && reward_cooperate == 0.0 && !mandate;
}

CdGame apply_institution(const CdGame& g, const InstitutionalEnvironment& inst) {
  inst.validate();
  if (g.defect_action < 0 || g.defect_action >= g.game.actions()) {
    throw DomainError("defect action index out of range");
  }
  const double expected_penalty = inst.audit_probability * inst.penalty_defect;
  std::vector<double> payoffs;
  payoffs.reserve(static_cast<std::size_t>(g.game.actions()) * g.game.actions());
  for (int a = 0; a < g.game.actions(); ++a) {
    const double shift = (a == g.defect_action) ? -expected_penalty : inst.reward_cooperate;
    for (int b = 0; b < g.game.actions(); ++b) payoffs.push_back(g.game.payoff(a, b) + shift);
  }
  return CdGame{SymmetricGame(g.game.actions(), std::move(payoffs)), g.defect_action};
}

AuditResult audit_and_sanction(const AgentState& agent, const InstitutionalEnvironment& inst,
                               RngStream& rng) {
  inst.validate();
  AuditResult result;
  result.agent = agent;
  result.audited = rng.next_bernoulli(inst.audit_probability);
  if (!result.audited || !inst.mandate) return result;
  if (ordinal(agent.strategy) <= ordinal(*inst.mandate)) return result;  // compliant

  result.sanctioned = true;
  result.amount = inst.penalty_defect;
  result.agent.signal.error_salience =
      std::min(1.0, result.agent.signal.error_salience + inst.error_salience_bump);
  return result;
}

MacroState institutional_macro(const Distribution& pi, const RegimeCoeffs& coeffs,
                               const InteractionGraph& graph,
                               const std::vector<AgentState>& agents,
                               const SignalingParams& signaling,
                               const InstitutionalEnvironment& inst) {
  inst.validate();
  MacroState omega = aggregate_macro(pi, coeffs);
  omega.error_propagation_rate *= (1.0 - inst.provenance_strength());

  if (inst.disclosure_required) {
    // Compliance estimate: mean of disclosure rate and verification norm
    // strength over nodes with neighbors.
    double compliance = 0.0;
    int informative = 0;
    for (int i = 0; i < graph.node_count(); ++i) {
      const NormState norm = measure_local_norm(i, graph, agents, signaling);
      if (!norm.informative) continue;
      compliance += 0.5 * (norm.disclosure_rate + norm.verification_norm_strength);
      ++informative;
    }
    if (informative > 0) {
      omega.epistemic_capacity += inst.alignment_strength * (compliance / informative);
    }
  }

  omega.mean_output_quality = std::clamp(omega.mean_output_quality, 0.0, 1.0);
  omega.error_propagation_rate = std::clamp(omega.error_propagation_rate, 0.0, 1.0);
  omega.epistemic_capacity = std::clamp(omega.epistemic_capacity, 0.0, 1.0);
  return omega;
}

double dominance_flip_threshold(const PdMatrix& m) {
  m.validate();
  return std::max(m.temptation - m.reward, m.punishment - m.sucker);
}

}  // namespace delver
