#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "polarcog/graph.hpp"
#include "polarcog/polarity.hpp"

namespace polarcog {

enum class ObstructionKind {
    Essential,               // one of the four obstructions for every s >= 2 (index 1..4)
    TwoCliques,              // 2K_{s+1}
    CliquePlusJoin,          // K2 + (co(K2) * K_s)
    VertexPlusJoin,          // K1 + (C4 * K_{s-1})
    ComplementOfComposition  // complement of a disjoint union of connected pieces
};

/// A connected minimal (1,level)-obstruction that is (1,level+1)-polar; `which` indexes
/// connected_pieces(level).
struct Piece {
    int level = 0;
    int which = 0;
    friend auto operator<=>(const Piece&, const Piece&) = default;
};

/// Symbolic build recipe for a member of the obstruction family. Text form uses `+` for
/// disjoint union, `*` for join, `co(..)` for complement and `nX` for n copies.
struct ObstructionExpr {
    ObstructionKind kind = ObstructionKind::Essential;
    int param = 1;              // essential index, or s for the parameterized families
    std::vector<Piece> pieces;  // ComplementOfComposition only, sorted

    std::string to_string() const;
    Graph build() const;
    friend bool operator==(const ObstructionExpr&, const ObstructionExpr&) = default;
};

/// K1+2K2, co(K2)+C4, 2P3, K1+(co(P3)*co(K2)).
std::array<Graph, 4> essential_obstructions();

Graph two_cliques(int s);         // 2K_{s+1}
Graph clique_plus_join(int s);    // K2 + (co(K2) * K_s), s >= 1
Graph vertex_plus_join(int s);    // K1 + (C4 * K_{s-1}), s >= 1

/// Connected minimal (1,k)-polar obstructions that are (1,k+1)-polar:
/// k=0 -> [K2]; k=1 -> [C4]; k>=2 -> complements of [2K_{k+1}, K2+(co(K2)*K_k), K1+(C4*K_{k-1})].
std::vector<Graph> connected_pieces(int k);
Graph piece_graph(Piece p);
std::string piece_to_string(Piece p);

inline constexpr int kMaxFamilyParameter = 20;

/// All multisets {k_1..k_t}, t >= 2, with sum(k_i + 1) = s + 1. Each multiset is listed
/// ascending; the list is ordered lexicographically by the descending form of the multiset.
/// Throws InvalidInput for s < 2.
std::vector<std::vector<int>> decompositions(int s);

struct FamilyMember {
    ObstructionExpr expr;
    Graph graph;
    std::string canonical;
};

/// Every cograph minimal (s,1)-polar obstruction, pairwise non-isomorphic. For s = 0 and s = 1
/// the known small lists {2K1} and {2K2, C4} are returned.
std::vector<FamilyMember> family(int s);

/// Not (s,1)-polar while every one-vertex-deleted subgraph is. Throws NotCograph.
bool verify_minimal_obstruction(const Graph& g, int s);

/// Yes-certificate (a partition) or no-certificate (a vertex set inducing a minimal obstruction).
struct Certificate {
    enum class Verdict { Polar, Obstruction };
    Verdict verdict = Verdict::Polar;
    PolarPartition partition;  // Polar only
    VertexSet obstruction;     // Obstruction only
    std::string canonical;     // Obstruction only: canonical key of the induced obstruction
};

/// Throws NotCograph. Obstruction sets are found by deleting, in ascending order, every vertex
/// whose removal keeps the graph non-(s,1)-polar.
Certificate find_certificate(const Graph& g, int s);

/// Independent re-check of a certificate against g.
bool certificate_is_valid(const Graph& g, const Certificate& c, int s);

}  // namespace polarcog
