#include "polarcog/polarity.hpp"

#include <string>
#include <utility>

namespace polarcog {

namespace {

bool all_of_children(const Cotree& t, int i, const std::vector<NodeSummary>& sum, bool NodeSummary::*flag) {
    for (int c : t.node(i).children)
        if (!(sum[c].*flag)) return false;
    return true;
}

}  // namespace

std::vector<NodeSummary> summarize(const Cotree& t) {
    t.validate();
    std::vector<NodeSummary> sum(t.nodes().size());
    for (std::size_t i = 0; i < t.nodes().size(); ++i) {
        const CotreeNode& node = t.node(static_cast<int>(i));
        NodeSummary& s = sum[i];
        if (node.kind == NodeKind::Leaf) {
            s = {true, true, ExtNat(1), true, ExtNat(0)};
            continue;
        }
        const int idx = static_cast<int>(i);
        if (node.kind == NodeKind::Join) {
            s.is_clique = all_of_children(t, idx, sum, &NodeSummary::is_clique);
            s.is_edgeless = false;
            s.mp = 0;
            s.g = 0;
            int non_clique = 0;
            bool non_clique_split = true;
            for (int c : node.children) {
                s.mp += sum[c].mp;
                s.g += sum[c].g;
                if (!sum[c].is_clique) {
                    ++non_clique;
                    non_clique_split = sum[c].is_split;
                }
            }
            s.is_split = non_clique == 0 || (non_clique == 1 && non_clique_split);
            continue;
        }
        // Union: B lies inside one component, and A is either edgeless (a split partition) or
        // connected, in which case A and B are whole components and there are exactly two.
        s.is_clique = false;
        int non_edgeless = 0;
        bool non_edgeless_split = true;
        for (int c : node.children) {
            if (!sum[c].is_edgeless) {
                ++non_edgeless;
                non_edgeless_split = sum[c].is_split;
            }
        }
        s.is_edgeless = non_edgeless == 0;
        s.mp = s.is_edgeless ? ExtNat(1) : ExtNat::infinity();
        s.is_split = non_edgeless == 0 || (non_edgeless == 1 && non_edgeless_split);
        s.g = s.is_split ? ExtNat(1) : ExtNat::infinity();
        if (node.children.size() == 2) {
            const int c0 = node.children[0];
            const int c1 = node.children[1];
            if (sum[c1].is_clique) s.g = min(s.g, sum[c0].mp);
            if (sum[c0].is_clique) s.g = min(s.g, sum[c1].mp);
        }
    }
    return sum;
}

ExtNat monopolar_index(const Graph& g) {
    const Cotree t = cotree_of(g);
    return summarize(t)[t.root()].g;
}

bool is_s1_polar(const Graph& g, int s) {
    if (s < 0) throw InvalidInput("s must be non-negative");
    return monopolar_index(g) <= ExtNat(static_cast<std::uint32_t>(s));
}

bool is_1k_polar(const Graph& g, int k) { return is_s1_polar(complement(g), k); }

namespace {

class PartitionBuilder {
public:
    PartitionBuilder(const Cotree& t, const std::vector<NodeSummary>& sum)
        : t_(t), sum_(sum), masks_(t.leaf_masks()) {}

    void optimal(int i) {
        const CotreeNode& node = t_.node(i);
        if (node.kind == NodeKind::Leaf) {
            out_.b.insert(node.vertex);
            return;
        }
        if (node.kind == NodeKind::Join) {
            for (int c : node.children) optimal(c);
            return;
        }
        // Union: candidates in fixed order, first strict minimum wins.
        const NodeSummary& s = sum_[i];
        if (s.is_split && s.g == ExtNat(1)) {
            auto [clique, rest] = split(i);
            out_.b = VertexSet(out_.b.bits() | clique);
            if (rest) out_.a_parts.emplace_back(rest);
            return;
        }
        const int c0 = node.children[0];
        const int c1 = node.children[1];
        if (sum_[c1].is_clique && sum_[c0].mp == s.g) {
            multipartite(c0);
            out_.b = VertexSet(out_.b.bits() | masks_[c1]);
        } else {
            multipartite(c1);
            out_.b = VertexSet(out_.b.bits() | masks_[c0]);
        }
    }

    PolarPartition take() { return std::move(out_); }

private:
    void multipartite(int i) {
        const CotreeNode& node = t_.node(i);
        if (node.kind == NodeKind::Join) {
            for (int c : node.children) multipartite(c);
        } else {
            out_.a_parts.emplace_back(masks_[i]);  // leaf or edgeless union: one part
        }
    }

    // (clique, independent rest) for a split node.
    std::pair<Mask, Mask> split(int i) const {
        const CotreeNode& node = t_.node(i);
        if (node.kind == NodeKind::Leaf) return {masks_[i], 0};
        if (node.kind == NodeKind::Join) {
            Mask clique = 0;
            Mask rest = 0;
            for (int c : node.children) {
                if (sum_[c].is_clique) {
                    clique |= masks_[c];
                } else {
                    auto [k, r] = split(c);
                    clique |= k;
                    rest |= r;
                }
            }
            return {clique, rest};
        }
        for (int c : node.children)
            if (!sum_[c].is_edgeless) {
                auto [k, r] = split(c);
                return {k, masks_[i] & ~k};
            }
        // Edgeless: keep the least vertex of the first child in B.
        const Mask first = masks_[node.children.front()] & -masks_[node.children.front()];
        return {first, masks_[i] & ~first};
    }

    const Cotree& t_;
    const std::vector<NodeSummary>& sum_;
    std::vector<Mask> masks_;
    PolarPartition out_;
};

}  // namespace

PolarPartition extract_s1_partition(const Graph& g, int s) {
    if (s < 0) throw InvalidInput("s must be non-negative");
    const Cotree t = cotree_of(g);
    const std::vector<NodeSummary> sum = summarize(t);
    const ExtNat best = sum[t.root()].g;
    if (best > ExtNat(static_cast<std::uint32_t>(s)))
        throw NotPolar("graph is not (" + std::to_string(s) + ",1)-polar (least s is " + best.to_string() +
                       "); use find_certificate for an obstruction");
    PartitionBuilder builder(t, sum);
    builder.optimal(t.root());
    return builder.take();
}

bool is_valid_s1_partition(const Graph& g, const PolarPartition& p, int s) {
    Mask covered = p.b.bits();
    int nonempty = 0;
    for (std::size_t i = 0; i < p.a_parts.size(); ++i) {
        const Mask part = p.a_parts[i].bits();
        if (part == 0) continue;
        ++nonempty;
        if (covered & part) return false;
        covered |= part;
        if (!g.is_independent(part)) return false;
        for (std::size_t j = 0; j < i; ++j)
            for (Mask m = part; m != 0; m &= m - 1)
                if ((g.neighbors(std::countr_zero(m)) & p.a_parts[j].bits()) != p.a_parts[j].bits()) return false;
    }
    return covered == g.all() && g.is_clique(p.b.bits()) && nonempty <= s;
}

PolarPartition SkPartition::as_s1() const {
    if (b_cliques.size() > 1) throw InvalidInput("partition has more than one B-clique");
    return {a_parts, b_cliques.empty() ? VertexSet() : b_cliques.front()};
}

bool is_valid_sk_partition(const Graph& g, const SkPartition& p, int s, int k) {
    if (static_cast<int>(p.a_parts.size()) > s || static_cast<int>(p.b_cliques.size()) > k) return false;
    Mask covered = 0;
    for (std::size_t i = 0; i < p.a_parts.size(); ++i) {
        const Mask part = p.a_parts[i].bits();
        if ((covered & part) || !g.is_independent(part)) return false;
        covered |= part;
        for (std::size_t j = 0; j < i; ++j)
            for (Mask m = part; m != 0; m &= m - 1)
                if ((g.neighbors(std::countr_zero(m)) & p.a_parts[j].bits()) != p.a_parts[j].bits()) return false;
    }
    for (std::size_t i = 0; i < p.b_cliques.size(); ++i) {
        const Mask clique = p.b_cliques[i].bits();
        if ((covered & clique) || !g.is_clique(clique)) return false;
        covered |= clique;
        for (std::size_t j = 0; j < i; ++j)
            for (Mask m = clique; m != 0; m &= m - 1)
                if (g.neighbors(std::countr_zero(m)) & p.b_cliques[j].bits()) return false;
    }
    return covered == g.all();
}

}  // namespace polarcog
