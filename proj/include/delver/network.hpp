#ifndef DELVER_NETWORK_HPP
#define DELVER_NETWORK_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "delver/strategy.hpp"

namespace delver {

// ---------------------------------------------------------------------------
// Interaction graph
// ---------------------------------------------------------------------------

/// Weighted directed observation graph. An edge (i, j, w) means agent i
/// observes agent j's signals with weight w, i.e. j is in N(i). No
/// self-loops; weights are finite and >= 0.
class InteractionGraph {
 public:
  struct Edge {
    int to;
    double weight;
  };

  explicit InteractionGraph(int node_count);

  static InteractionGraph complete(int n, double weight = 1.0);
  /// Ring lattice: each node observes its k nearest neighbors on each side.
  static InteractionGraph ring(int n, int k, double weight = 1.0);
  /// Ring lattice with each undirected edge rewired to a random partner with
  /// probability rewire_p (small-world construction).
  static InteractionGraph watts_strogatz(int n, int k, double rewire_p, RngStream& rng,
                                         double weight = 1.0);
  /// Parse "i j w" triples (zero-indexed, one per line, '#' comments allowed).
  static InteractionGraph from_edge_list(std::istream& in);
  static InteractionGraph load_edge_list(const std::string& path);

  void add_edge(int from, int to, double weight);
  /// Rescale every node's outgoing weights to sum to 1 (isolated nodes are
  /// left untouched).
  void normalize_weights();
  /// Set all edge weights to a constant (0 turns influence off entirely).
  void scale_weights(double factor);

  int node_count() const { return static_cast<int>(adjacency_.size()); }
  const std::vector<Edge>& neighbors(int i) const;

 private:
  std::vector<std::vector<Edge>> adjacency_;
};

// ---------------------------------------------------------------------------
// Agents and norms
// ---------------------------------------------------------------------------

/// Communicated posture about one's own AI use.
enum class Disclosure { Disclose, Conceal, Misdirect };

const char* disclosure_name(Disclosure d);
Disclosure disclosure_from_name(const std::string& name);

/// Full per-agent state carried through a simulation.
struct AgentState {
  int id = 0;
  Strategy strategy = Strategy::Gamma;
  UserType user_type;
  InteractionHistory history;
  Disclosure disclosure = Disclosure::Disclose;
  /// Quality of the agent's last visible product, in [0,1].
  double observable_output = 0.5;
  /// Posture transmitted when disclosure == Misdirect.
  Strategy claimed_strategy = Strategy::Alpha;
  /// Running feedback signal driving this agent's transitions.
  SignalVector signal;
};

/// Local norm summary of a neighborhood.
struct NormState {
  Strategy modal_strategy = Strategy::Beta;
  double disclosure_rate = 0.0;
  double verification_norm_strength = 0.0;
  /// False for isolated nodes, whose norm is a flagged neutral placeholder.
  bool informative = true;
};

/// Parameters of the neighbor signal psi.
struct SignalingParams {
  /// Delegation valence per strategy (ladder order): negative strategies
  /// transmit verification pressure, positive ones delegation attractiveness.
  std::array<double, kStrategyCount> valence = {-1.0, -0.25, -0.5, 0.5, 1.0};
  /// Weight of a misdirecting agent's claimed posture.
  double misdirect_discount = 0.5;

  void validate() const;
};

/// psi in [-1, 1]: what one agent's visible behavior broadcasts to its
/// observers. Disclosing agents transmit their strategy's valence scaled by
/// the quality of their visible output; concealment transmits nothing;
/// misdirection transmits the claimed posture at a configured discount.
double neighbor_signal(const AgentState& agent, const SignalingParams& params);

/// Weighted sum of neighbor_signal over N(i); zero for isolated nodes.
double influence_sum(int i, const InteractionGraph& graph, const std::vector<AgentState>& agents,
                     const SignalingParams& params);

/// Apply the social correction to an individually chosen candidate: strong
/// positive influence shifts one step toward Delta, strong negative one step
/// toward Alpha, saturating at the ladder ends.
Strategy apply_social_correction(Strategy candidate, double influence,
                                 double influence_threshold);

/// Principle-two transition: the individual deterministic rule composed with
/// the social correction. With all edge weights zero this equals
/// transition_deterministic exactly.
Strategy network_transition(int i, const std::vector<AgentState>& agents,
                            const InteractionGraph& graph, const SignalingParams& params,
                            double influence_threshold);

/// Modal strategy (ties toward Alpha), disclosure rate, and weighted share
/// of verification-side signal mass across N(i). Isolated nodes get a
/// flagged neutral norm.
NormState measure_local_norm(int i, const InteractionGraph& graph,
                             const std::vector<AgentState>& agents,
                             const SignalingParams& params);

// ---------------------------------------------------------------------------
// Threshold cascades
// ---------------------------------------------------------------------------

/// Per-node adoption thresholds, as a required count or fraction of active
/// neighbors.
struct ThresholdProfile {
  enum class Mode { Count, Fraction };
  std::vector<double> k_values;
  Mode mode = Mode::Count;

  void validate(int node_count) const;
};

/// Synchronous-round threshold cascade. Round 0 is the seed set; each later
/// round adds every node whose active-neighbor count (or fraction) meets its
/// threshold. Adoption is monotone and the cascade stops at a fixed point.
/// Returns the cumulative adopter set after each round (round 0 included).
std::vector<std::vector<int>> threshold_cascade(const InteractionGraph& graph,
                                                const ThresholdProfile& profile,
                                                const std::vector<int>& seeds);

}  // namespace delver

#endif
