#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace polarcog {

using Vertex = int;
using Mask = std::uint64_t;

/// Hard cap on the vertex count of any Graph (one machine word per adjacency row).
inline constexpr int kMaxVertices = 64;

constexpr Mask bit(Vertex v) { return Mask{1} << v; }
constexpr Mask low_bits(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

/// Subset of the vertices 0..n-1 of some host graph.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(Mask bits) : bits_(bits) {}
    VertexSet(std::initializer_list<Vertex> vs);
    static VertexSet from(std::span<const Vertex> vs);

    Mask bits() const { return bits_; }
    int size() const { return std::popcount(bits_); }
    bool empty() const { return bits_ == 0; }
    bool contains(Vertex v) const { return v >= 0 && v < 64 && (bits_ >> v & 1U); }
    void insert(Vertex v) { bits_ |= bit(v); }
    void erase(Vertex v) { bits_ &= ~bit(v); }

    /// Members in ascending order.
    std::vector<Vertex> members() const;

    friend bool operator==(VertexSet, VertexSet) = default;

private:
    Mask bits_ = 0;
};

using Edge = std::pair<Vertex, Vertex>;

/// Finite simple graph on vertices 0..n-1. Immutable once built.
class Graph {
public:
    Graph() = default;

    /// Throws InvalidInput on self-loops or out-of-range endpoints, LimitExceeded if n > kMaxVertices.
    static Graph from_edges(int n, std::span<const Edge> edges);
    static Graph from_edges(int n, std::initializer_list<Edge> edges);
    /// Rows must be symmetric and irreflexive; validated.
    static Graph from_rows(std::vector<Mask> rows);

    static Graph empty(int n);     // edgeless graph, written \bar K_n
    static Graph complete(int n);  // K_n
    static Graph path(int n);      // P_n labelled 0-1-...-(n-1)
    static Graph cycle(int n);     // C_n, n >= 3

    int order() const { return static_cast<int>(adj_.size()); }
    int edge_count() const;
    Mask all() const { return low_bits(order()); }
    Mask neighbors(Vertex v) const { return adj_[v]; }
    bool adjacent(Vertex u, Vertex v) const { return (adj_[u] >> v & 1U) != 0; }
    int degree(Vertex v) const { return std::popcount(adj_[v]); }
    std::span<const Mask> rows() const { return adj_; }
    std::vector<Edge> edges() const;

    bool is_clique(Mask s) const;
    bool is_independent(Mask s) const;
    /// Connected components of g[s], each as a mask, ordered by least vertex.
    std::vector<Mask> components(Mask s) const;
    std::vector<Mask> components() const { return components(all()); }
    bool is_connected() const { return order() > 0 && components().size() == 1; }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    explicit Graph(std::vector<Mask> rows) : adj_(std::move(rows)) {}
    std::vector<Mask> adj_;
};

Graph complement(const Graph& g);

/// Vertex-disjoint copies, renumbered blockwise in list order. Throws InvalidInput on an empty list.
Graph disjoint_union(std::span<const Graph> parts);
Graph disjoint_union(std::initializer_list<Graph> parts);

/// Disjoint union plus every edge between distinct blocks.
Graph join_graphs(std::span<const Graph> parts);
Graph join_graphs(std::initializer_list<Graph> parts);

/// n disjoint copies of g.
Graph copies(int n, const Graph& g);

/// Subgraph induced by s, relabelled 0..|s|-1 in ascending order. Throws InvalidInput if s leaves the range.
Graph induced(const Graph& g, VertexSet s);

/// g - v.
Graph delete_vertex(const Graph& g, Vertex v);

/// Injective map phi (indexed by pattern vertex) with host[phi(u)phi(v)] an edge iff pattern[uv] is.
/// The lexicographically least such map is returned.
std::optional<std::vector<Vertex>> find_induced_embedding(const Graph& host, const Graph& pattern);

inline bool contains_induced(const Graph& host, const Graph& pattern) {
    return find_induced_embedding(host, pattern).has_value();
}

}  // namespace polarcog
