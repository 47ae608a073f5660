#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "polarcog/errors.hpp"
#include "polarcog/graph.hpp"

namespace polarcog {

enum class NodeKind { Leaf, Union, Join };

struct CotreeNode {
    NodeKind kind = NodeKind::Leaf;
    Vertex vertex = -1;         // leaves only
    std::vector<int> children;  // indices into the owning tree; always smaller than this node's index
};

/// Rooted union/join decomposition tree. Nodes are stored in post-order, so a
/// forward sweep over node indices visits every child before its parent.
class Cotree {
public:
    /// Unchecked construction; call validate() (realize does) before trusting it.
    Cotree(std::vector<CotreeNode> nodes, int root);

    static Cotree leaf(Vertex v = 0);
    /// Internal node over the given subtrees. Same-kind children are flattened into the new node.
    static Cotree combine(NodeKind kind, const std::vector<Cotree>& children);

    /// Reads "." / "U(c1,...,ck)" / "J(c1,...,ck)". Leaves are numbered in left-to-right order.
    static Cotree parse(std::string_view text);

    const CotreeNode& node(int i) const { return nodes_[i]; }
    const std::vector<CotreeNode>& nodes() const { return nodes_; }
    int root() const { return root_; }
    int leaf_count() const;

    /// Throws InvalidInput unless every internal node has >= 2 children, child indices precede
    /// their parent, and the leaf ids are exactly 0..leaf_count()-1.
    void validate() const;
    /// True when no union node has a union child and no join node has a join child.
    bool is_alternating() const;

    /// Leaf-id masks per node.
    std::vector<Mask> leaf_masks() const;

    /// Serialization with children in stored order.
    std::string to_string() const;

private:
    std::vector<CotreeNode> nodes_;
    int root_ = 0;
};

using CotreeResult = std::variant<Cotree, P4Witness>;

/// Cotree of g, leaves labelled by g's vertices, or a P4 witness (lexicographically least
/// vertex quadruple inducing P4) when g is not a cograph. Throws InvalidInput on the empty graph.
CotreeResult build_cotree(const Graph& g);

/// Like build_cotree, but throws NotCograph instead of returning a witness.
Cotree cotree_of(const Graph& g);

bool is_cograph(const Graph& g);

/// True if the four listed vertices induce exactly the path a-b-c-d.
bool is_p4_witness(const Graph& g, const P4Witness& w);

/// Graph with an edge between two leaves iff their lowest common ancestor is a join node.
Graph realize(const Cotree& t);

/// Isomorphism-invariant key: two cographs are isomorphic iff their keys are equal. The key is
/// itself a valid serialization (children flattened and sorted).
std::string canonical_key(const Cotree& t);
std::string canonical_key(const Graph& cograph);

inline constexpr int kMaxEnumerationOrder = 10;

/// One canonical cotree per isomorphism class of cographs on n vertices, in a fixed order.
/// Throws InvalidInput for n < 1 and LimitExceeded above kMaxEnumerationOrder.
std::vector<Cotree> enumerate_cographs(int n);

}  // namespace polarcog
