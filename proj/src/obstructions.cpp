#include "polarcog/obstructions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "polarcog/cotree.hpp"

namespace polarcog {

namespace {

void require_parameter(int s, int lo) {
    if (s < lo) throw InvalidInput("parameter must be at least " + std::to_string(lo));
    if (s > kMaxFamilyParameter)
        throw LimitExceeded("parameter is capped at " + std::to_string(kMaxFamilyParameter));
}

std::string clique_name(int r) { return "K" + std::to_string(r); }

}  // namespace

std::array<Graph, 4> essential_obstructions() {
    const Graph k1 = Graph::complete(1);
    const Graph k2 = Graph::complete(2);
    return {
        disjoint_union({k1, k2, k2}),
        disjoint_union({Graph::empty(2), Graph::cycle(4)}),
        copies(2, Graph::path(3)),
        disjoint_union({k1, join_graphs({complement(Graph::path(3)), Graph::empty(2)})}),
    };
}

Graph two_cliques(int s) { return copies(2, Graph::complete(s + 1)); }

Graph clique_plus_join(int s) {
    return disjoint_union({Graph::complete(2), join_graphs({Graph::empty(2), Graph::complete(s)})});
}

Graph vertex_plus_join(int s) {
    return disjoint_union({Graph::complete(1), join_graphs({Graph::cycle(4), Graph::complete(s - 1)})});
}

std::vector<Graph> connected_pieces(int k) {
    if (k < 0) throw InvalidInput("level must be non-negative");
    if (k == 0) return {Graph::complete(2)};
    if (k == 1) return {Graph::cycle(4)};
    return {complement(two_cliques(k)), complement(clique_plus_join(k)), complement(vertex_plus_join(k))};
}

Graph piece_graph(Piece p) {
    std::vector<Graph> ps = connected_pieces(p.level);
    if (p.which < 0 || p.which >= static_cast<int>(ps.size())) throw InvalidInput("no such piece at this level");
    return ps[p.which];
}

std::string piece_to_string(Piece p) {
    const int k = p.level;
    if (k == 0) return "K2";
    if (k == 1) return "C4";
    switch (p.which) {
        case 0: return "co(2" + clique_name(k + 1) + ")";
        case 1: return "co(K2+(co(K2)*" + clique_name(k) + "))";
        default: return "co(K1+(C4*" + clique_name(k - 1) + "))";
    }
}

std::string ObstructionExpr::to_string() const {
    static const char* const kEssentialNames[] = {"K1+2K2", "co(K2)+C4", "2P3", "K1+(co(P3)*co(K2))"};
    switch (kind) {
        case ObstructionKind::Essential: return kEssentialNames[param - 1];
        case ObstructionKind::TwoCliques: return "2" + clique_name(param + 1);
        case ObstructionKind::CliquePlusJoin: return "K2+(co(K2)*" + clique_name(param) + ")";
        case ObstructionKind::VertexPlusJoin: return "K1+(C4*" + clique_name(param - 1) + ")";
        case ObstructionKind::ComplementOfComposition: {
            std::string out = "co(";
            for (std::size_t i = 0; i < pieces.size(); ++i) {
                if (i) out += '+';
                out += piece_to_string(pieces[i]);
            }
            return out + ")";
        }
    }
    throw std::logic_error("unknown obstruction kind");
}

Graph ObstructionExpr::build() const {
    switch (kind) {
        case ObstructionKind::Essential:
            if (param < 1 || param > 4) throw InvalidInput("essential obstruction index must be 1..4");
            return essential_obstructions()[param - 1];
        case ObstructionKind::TwoCliques: return two_cliques(param);
        case ObstructionKind::CliquePlusJoin: return clique_plus_join(param);
        case ObstructionKind::VertexPlusJoin: return vertex_plus_join(param);
        case ObstructionKind::ComplementOfComposition: {
            if (pieces.size() < 2) throw InvalidInput("a composition needs at least two pieces");
            std::vector<Graph> parts;
            for (Piece p : pieces) parts.push_back(piece_graph(p));
            return complement(disjoint_union(parts));
        }
    }
    throw std::logic_error("unknown obstruction kind");
}

namespace {

// Partitions of `remaining` into parts <= cap, as descending lists, lexicographically ascending.
void partitions_desc(int remaining, int cap, std::vector<int>& current, std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (int part = 1; part <= std::min(cap, remaining); ++part) {
        current.push_back(part);
        partitions_desc(remaining - part, part, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> decompositions(int s) {
    if (s < 2) throw InvalidInput("decompositions need s >= 2");
    if (s > 40) throw LimitExceeded("decompositions are capped at s = 40");
    std::vector<std::vector<int>> weights;
    std::vector<int> current;
    // Largest part at most s keeps at least two parts.
    for (int first = 1; first <= s; ++first) {
        current = {first};
        partitions_desc(s + 1 - first, first, current, weights);
    }
    std::vector<std::vector<int>> out;
    out.reserve(weights.size());
    for (const auto& w : weights) {
        std::vector<int> levels;
        for (auto it = w.rbegin(); it != w.rend(); ++it) levels.push_back(*it - 1);
        out.push_back(std::move(levels));
    }
    return out;
}

std::vector<FamilyMember> family(int s) {
    require_parameter(s, 0);
    std::vector<ObstructionExpr> exprs;
    if (s == 0) {
        exprs.push_back({ObstructionKind::TwoCliques, 0, {}});
    } else if (s == 1) {
        exprs.push_back({ObstructionKind::TwoCliques, 1, {}});
        exprs.push_back({ObstructionKind::ComplementOfComposition, 1, {{0, 0}, {0, 0}}});
    } else {
        for (int i = 1; i <= 4; ++i) exprs.push_back({ObstructionKind::Essential, i, {}});
        exprs.push_back({ObstructionKind::TwoCliques, s, {}});
        exprs.push_back({ObstructionKind::CliquePlusJoin, s, {}});
        exprs.push_back({ObstructionKind::VertexPlusJoin, s, {}});
        for (const std::vector<int>& levels : decompositions(s)) {
            // Cartesian product: one piece per level; duplicates are removed by canonical key.
            std::vector<int> choice(levels.size(), 0);
            while (true) {
                ObstructionExpr e{ObstructionKind::ComplementOfComposition, s, {}};
                for (std::size_t i = 0; i < levels.size(); ++i) e.pieces.push_back({levels[i], choice[i]});
                std::sort(e.pieces.begin(), e.pieces.end());
                exprs.push_back(std::move(e));
                std::size_t i = 0;
                for (; i < levels.size(); ++i) {
                    const int options = levels[i] >= 2 ? 3 : 1;
                    if (++choice[i] < options) break;
                    choice[i] = 0;
                }
                if (i == levels.size()) break;
            }
        }
    }
    std::vector<FamilyMember> out;
    std::set<std::string> seen;
    for (ObstructionExpr& e : exprs) {
        Graph g = e.build();
        std::string key = canonical_key(g);
        if (!seen.insert(key).second) continue;
        out.push_back({std::move(e), std::move(g), std::move(key)});
    }
    return out;
}

bool verify_minimal_obstruction(const Graph& g, int s) {
    if (is_s1_polar(g, s)) return false;
    for (Vertex v = 0; v < g.order(); ++v)
        if (!is_s1_polar(delete_vertex(g, v), s)) return false;
    return true;
}

Certificate find_certificate(const Graph& g, int s) {
    Certificate c;
    if (is_s1_polar(g, s)) {
        c.verdict = Certificate::Verdict::Polar;
        c.partition = extract_s1_partition(g, s);
        return c;
    }
    // Polarity is hereditary, so a vertex that cannot be deleted now never becomes deletable
    // later; one ascending pass gives the same set as restarting after every deletion.
    Mask keep = g.all();
    for (Vertex v = 0; v < g.order(); ++v) {
        const Mask without = keep & ~bit(v);
        if (!is_s1_polar(induced(g, VertexSet(without)), s)) keep = without;
    }
    const Graph h = induced(g, VertexSet(keep));
    if (!verify_minimal_obstruction(h, s)) throw std::logic_error("greedy reduction did not reach a minimal obstruction");
    c.verdict = Certificate::Verdict::Obstruction;
    c.obstruction = VertexSet(keep);
    c.canonical = canonical_key(h);
    return c;
}

bool certificate_is_valid(const Graph& g, const Certificate& c, int s) {
    if (c.verdict == Certificate::Verdict::Polar) return is_valid_s1_partition(g, c.partition, s);
    if (c.obstruction.empty() || (c.obstruction.bits() & ~g.all())) return false;
    const Graph h = induced(g, c.obstruction);
    return verify_minimal_obstruction(h, s) && canonical_key(h) == c.canonical;
}

}  // namespace polarcog
