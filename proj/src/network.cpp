#include "delver/network.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace delver {

InteractionGraph::InteractionGraph(int node_count) {
  if (node_count < 1) throw DomainError("graph needs at least one node");
  adjacency_.resize(node_count);
}

InteractionGraph InteractionGraph::complete(int n, double weight) {
  InteractionGraph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) g.add_edge(i, j, weight);
    }
  }
  return g;
}

InteractionGraph InteractionGraph::ring(int n, int k, double weight) {
  if (k < 1) throw DomainError("ring lattice needs k >= 1");
  if (2 * k >= n) throw DomainError("ring lattice needs n > 2k");
  InteractionGraph g(n);
  for (int i = 0; i < n; ++i) {
    for (int d = 1; d <= k; ++d) {
      g.add_edge(i, (i + d) % n, weight);
      g.add_edge(i, (i - d + n) % n, weight);
    }
  }
  return g;
}

InteractionGraph InteractionGraph::watts_strogatz(int n, int k, double rewire_p, RngStream& rng,
                                                  double weight) {
  if (k < 1) throw DomainError("ring lattice needs k >= 1");
  if (2 * k >= n) throw DomainError("ring lattice needs n > 2k");
  if (rewire_p < 0.0 || rewire_p > 1.0) throw DomainError("rewire probability must be in [0,1]");

  // Undirected edge set, then both directions materialized at the end.
  std::set<std::pair<int, int>> edges;
  const auto canon = [](int a, int b) { return a < b ? std::make_pair(a, b) : std::make_pair(b, a); };
  for (int i = 0; i < n; ++i) {
    for (int d = 1; d <= k; ++d) edges.insert(canon(i, (i + d) % n));
  }
  // Rewire the lattice edges in a fixed scan order for reproducibility.
  for (int i = 0; i < n; ++i) {
    for (int d = 1; d <= k; ++d) {
      const auto e = canon(i, (i + d) % n);
      if (!edges.count(e)) continue;  // already rewired away
      if (!rng.next_bernoulli(rewire_p)) continue;
      // Draw a replacement endpoint avoiding self-loops and duplicates.
      for (int attempt = 0; attempt < 64; ++attempt) {
        const int j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
        if (j == i || edges.count(canon(i, j))) continue;
        edges.erase(e);
        edges.insert(canon(i, j));
        break;
      }
    }
  }
  InteractionGraph g(n);
  for (const auto& [a, b] : edges) {
    g.add_edge(a, b, weight);
    g.add_edge(b, a, weight);
  }
  return g;
}

InteractionGraph InteractionGraph::from_edge_list(std::istream& in) {
  std::vector<std::array<double, 3>> triples;
  int max_node = 0;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    long long i, j;
    double w;
    if (!(ss >> i)) continue;  // blank line
    if (!(ss >> j >> w)) {
      throw ConfigError("edge list line " + std::to_string(line_no) + ": expected 'i j w'");
    }
    if (i < 0 || j < 0) {
      throw ConfigError("edge list line " + std::to_string(line_no) + ": negative node id");
    }
    triples.push_back({static_cast<double>(i), static_cast<double>(j), w});
    max_node = std::max(max_node, static_cast<int>(std::max(i, j)));
  }
  InteractionGraph g(max_node + 1);
  for (const auto& t : triples) {
    g.add_edge(static_cast<int>(t[0]), static_cast<int>(t[1]), t[2]);
  }
  return g;
}

InteractionGraph InteractionGraph::load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open edge list file: " + path);
  return from_edge_list(in);
}

void InteractionGraph::add_edge(int from, int to, double weight) {
  if (from < 0 || from >= node_count() || to < 0 || to >= node_count()) {
    throw DomainError("edge endpoint out of range");
  }
  if (from == to) throw DomainError("self-loops are not allowed");
  if (!std::isfinite(weight) || weight < 0.0) {
    throw DomainError("edge weights must be finite and >= 0");
  }
  adjacency_[from].push_back({to, weight});
}

void InteractionGraph::normalize_weights() {
  for (auto& edges : adjacency_) {
    double sum = 0.0;
    for (const Edge& e : edges) sum += e.weight;
    if (sum <= 0.0) continue;
    for (Edge& e : edges) e.weight /= sum;
  }
}

void InteractionGraph::scale_weights(double factor) {
  if (!std::isfinite(factor) || factor < 0.0) throw DomainError("weight factor must be >= 0");
  for (auto& edges : adjacency_) {
    for (Edge& e : edges) e.weight *= factor;
  }
}

const std::vector<InteractionGraph::Edge>& InteractionGraph::neighbors(int i) const {
  if (i < 0 || i >= node_count()) throw DomainError("unknown node id " + std::to_string(i));
  return adjacency_[i];
}

namespace {
constexpr const char* kDisclosureNames[3] = {"disclose", "conceal", "misdirect"};
}

const char* disclosure_name(Disclosure d) { return kDisclosureNames[static_cast<int>(d)]; }

Disclosure disclosure_from_name(const std::string& name) {
  for (int i = 0; i < 3; ++i) {
    if (name == kDisclosureNames[i]) return static_cast<Disclosure>(i);
  }
  throw ConfigError("unknown disclosure behavior: " + name);
}

void SignalingParams::validate() const {
  for (double v : valence) {
    if (!std::isfinite(v) || v < -1.0 || v > 1.0) {
      throw DomainError("signal valence must be in [-1,1]");
    }
  }
  if (misdirect_discount < 0.0 || misdirect_discount > 1.0) {
    throw DomainError("misdirect discount must be in [0,1]");
  }
}

double neighbor_signal(const AgentState& agent, const SignalingParams& params) {
  switch (agent.disclosure) {
    case Disclosure::Conceal:
      return 0.0;
    case Disclosure::Misdirect:
      return params.misdirect_discount * params.valence[ordinal(agent.claimed_strategy)] *
             agent.observable_output;
    case Disclosure::Disclose:
    default:
      return params.valence[ordinal(agent.strategy)] * agent.observable_output;
  }
}

double influence_sum(int i, const InteractionGraph& graph, const std::vector<AgentState>& agents,
                     const SignalingParams& params) {
  double total = 0.0;
  for (const auto& edge : graph.neighbors(i)) {
    if (edge.to < 0 || edge.to >= static_cast<int>(agents.size())) {
      throw DomainError("graph references agent id " + std::to_string(edge.to) +
                        " outside the population");
    }
    total += edge.weight * neighbor_signal(agents[edge.to], params);
  }
  return total;
}

Strategy apply_social_correction(Strategy candidate, double influence,
                                 double influence_threshold) {
  if (!(influence_threshold > 0.0)) throw DomainError("influence threshold must be > 0");
  if (influence > influence_threshold) return step_strategy(candidate, +1);
  if (influence < -influence_threshold) return step_strategy(candidate, -1);
  return candidate;
}

Strategy network_transition(int i, const std::vector<AgentState>& agents,
                            const InteractionGraph& graph, const SignalingParams& params,
                            double influence_threshold) {
  const AgentState& self = agents.at(i);
  const Strategy candidate = transition_deterministic(self.strategy, self.signal, self.history,
                                                      self.user_type);
  const double influence = influence_sum(i, graph, agents, params);
  return apply_social_correction(candidate, influence, influence_threshold);
}

NormState measure_local_norm(int i, const InteractionGraph& graph,
                             const std::vector<AgentState>& agents,
                             const SignalingParams& params) {
  const auto& edges = graph.neighbors(i);
  NormState norm;
  if (edges.empty()) {
    norm.informative = false;
    return norm;
  }
  std::array<int, kStrategyCount> counts = {};
  int disclosing = 0;
  double negative_mass = 0.0;
  double total_mass = 0.0;
  for (const auto& edge : edges) {
    const AgentState& peer = agents.at(edge.to);
    counts[ordinal(peer.strategy)]++;
    if (peer.disclosure == Disclosure::Disclose) disclosing++;
    const double psi = neighbor_signal(peer, params);
    negative_mass += edge.weight * std::max(0.0, -psi);
    total_mass += edge.weight * std::abs(psi);
  }
  int best = 0;
  for (int k = 1; k < kStrategyCount; ++k) {
    if (counts[k] > counts[best]) best = k;  // ties resolve toward Alpha
  }
  norm.modal_strategy = static_cast<Strategy>(best);
  norm.disclosure_rate = static_cast<double>(disclosing) / edges.size();
  norm.verification_norm_strength = total_mass > 0.0 ? negative_mass / total_mass : 0.0;
  return norm;
}

void ThresholdProfile::validate(int node_count) const {
  if (k_values.size() != static_cast<std::size_t>(node_count)) {
    throw DomainError("threshold profile needs one k-value per node");
  }
  for (double k : k_values) {
    if (!std::isfinite(k) || k < 0.0) throw DomainError("k-values must be finite and >= 0");
  }
}

std::vector<std::vector<int>> threshold_cascade(const InteractionGraph& graph,
                                                const ThresholdProfile& profile,
                                                const std::vector<int>& seeds) {
  const int n = graph.node_count();
  profile.validate(n);
  std::vector<bool> adopted(n, false);
  for (int s : seeds) {
    if (s < 0 || s >= n) throw DomainError("seed node out of range");
    adopted[s] = true;
  }

  const auto snapshot = [&]() {
    std::vector<int> out;
    for (int i = 0; i < n; ++i) {
      if (adopted[i]) out.push_back(i);
    }
    return out;
  };

  std::vector<std::vector<int>> rounds;
  rounds.push_back(snapshot());
  while (true) {
    std::vector<int> newly;
    for (int i = 0; i < n; ++i) {
      if (adopted[i]) continue;
      int active = 0;
      const auto& edges = graph.neighbors(i);
      for (const auto& e : edges) active += adopted[e.to] ? 1 : 0;
      const double level = profile.mode == ThresholdProfile::Mode::Fraction
                               ? (edges.empty() ? 0.0 : static_cast<double>(active) / edges.size())
                               : static_cast<double>(active);
      if (level >= profile.k_values[i]) newly.push_back(i);
    }
    if (newly.empty()) break;
    for (int i : newly) adopted[i] = true;
    rounds.push_back(snapshot());
  }
  return rounds;
}

}  // namespace delver
