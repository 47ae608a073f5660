#pragma once

#include <optional>
#include <vector>

#include "polarcog/cotree.hpp"
#include "polarcog/ext_nat.hpp"
#include "polarcog/graph.hpp"

namespace polarcog {

/// Per-node facts about the cograph realized by a cotree node.
struct NodeSummary {
    bool is_clique = false;
    bool is_edgeless = false;
    ExtNat mp;  // parts as a complete multipartite graph; infinity if not complete multipartite
    bool is_split = false;
    ExtNat g;  // least s for which the node's graph is (s,1)-polar; infinity if none
};

/// Bottom-up summaries, indexed like t.nodes(). Throws InvalidInput on a malformed tree.
std::vector<NodeSummary> summarize(const Cotree& t);

/// An (s,1)-polar partition: A is complete multipartite with the listed parts, B is a clique.
/// Empty parts are omitted.
struct PolarPartition {
    std::vector<VertexSet> a_parts;
    VertexSet b;

    friend bool operator==(const PolarPartition&, const PolarPartition&) = default;
};

/// Minimum s such that g is (s,1)-polar (infinity if none). Throws NotCograph with a P4 witness.
ExtNat monopolar_index(const Graph& g);

bool is_s1_polar(const Graph& g, int s);

/// Replays the minimizing choices of the summaries. The result has monopolar_index(g) parts in A.
/// Throws NotPolar when g is not (s,1)-polar.
PolarPartition extract_s1_partition(const Graph& g, int s);

/// (1,k)-polarity, by complement duality with (k,1)-polarity.
bool is_1k_polar(const Graph& g, int k);

/// Independent checker: parts are independent and pairwise complete, B is a clique, the sets
/// partition V(g), and A has at most s nonempty parts.
bool is_valid_s1_partition(const Graph& g, const PolarPartition& p, int s);

/// General (s,k) witness: s independent A-parts (pairwise complete) and k B-cliques
/// (pairwise anticomplete). Empty sets are omitted.
struct SkPartition {
    std::vector<VertexSet> a_parts;
    std::vector<VertexSet> b_cliques;

    /// Valid only when at most one B-clique is present.
    PolarPartition as_s1() const;
};

inline constexpr int kBruteForceMaxOrder = 12;

/// Exhaustive search over vertex assignments, vertices in ascending order and labels
/// (A-parts first, then B-cliques) in ascending order; returns the first witness found.
/// Throws LimitExceeded above kBruteForceMaxOrder vertices.
std::optional<SkPartition> brute_force_sk(const Graph& g, int s, int k);

bool is_valid_sk_partition(const Graph& g, const SkPartition& p, int s, int k);

}  // namespace polarcog
