#include "polarcog/graph.hpp"

#include <string>

#include "polarcog/errors.hpp"

namespace polarcog {

VertexSet::VertexSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) {
        if (v < 0 || v >= kMaxVertices) throw InvalidInput("vertex " + std::to_string(v) + " out of range");
        insert(v);
    }
}

VertexSet VertexSet::from(std::span<const Vertex> vs) {
    VertexSet s;
    for (Vertex v : vs) {
        if (v < 0 || v >= kMaxVertices) throw InvalidInput("vertex " + std::to_string(v) + " out of range");
        s.insert(v);
    }
    return s;
}

std::vector<Vertex> VertexSet::members() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for (Mask m = bits_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
}

namespace {

void check_order(int n) {
    if (n < 0) throw InvalidInput("negative vertex count");
    if (n > kMaxVertices)
        throw LimitExceeded("graph order " + std::to_string(n) + " exceeds " + std::to_string(kMaxVertices));
}

}  // namespace

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    check_order(n);
    std::vector<Mask> rows(n, 0);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InvalidInput("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
        rows[u] |= bit(v);
        rows[v] |= bit(u);
    }
    return Graph(std::move(rows));
}

Graph Graph::from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph Graph::from_rows(std::vector<Mask> rows) {
    const int n = static_cast<int>(rows.size());
    check_order(n);
    for (int u = 0; u < n; ++u) {
        if (rows[u] & ~low_bits(n)) throw InvalidInput("adjacency row " + std::to_string(u) + " out of range");
        if (rows[u] & bit(u)) throw InvalidInput("self-loop at vertex " + std::to_string(u));
        for (Mask m = rows[u]; m != 0; m &= m - 1) {
            const int v = std::countr_zero(m);
            if (!(rows[v] & bit(u))) throw InvalidInput("adjacency is not symmetric");
        }
    }
    return Graph(std::move(rows));
}

Graph Graph::empty(int n) {
    check_order(n);
    return Graph(std::vector<Mask>(n, 0));
}

Graph Graph::complete(int n) {
    check_order(n);
    std::vector<Mask> rows(n);
    for (int v = 0; v < n; ++v) rows[v] = low_bits(n) & ~bit(v);
    return Graph(std::move(rows));
}

Graph Graph::path(int n) {
    std::vector<Edge> es;
    for (int v = 0; v + 1 < n; ++v) es.emplace_back(v, v + 1);
    return from_edges(n, es);
}

Graph Graph::cycle(int n) {
    if (n < 3) throw InvalidInput("cycle needs at least 3 vertices");
    std::vector<Edge> es;
    for (int v = 0; v < n; ++v) es.emplace_back(v, (v + 1) % n);
    return from_edges(n, es);
}

int Graph::edge_count() const {
    int twice = 0;
    for (Mask r : adj_) twice += std::popcount(r);
    return twice / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < order(); ++u)
        for (Mask m = adj_[u] & ~low_bits(u + 1); m != 0; m &= m - 1) out.emplace_back(u, std::countr_zero(m));
    return out;
}

bool Graph::is_clique(Mask s) const {
    for (Mask m = s; m != 0; m &= m - 1) {
        const int v = std::countr_zero(m);
        if ((adj_[v] & s) != (s & ~bit(v))) return false;
    }
    return true;
}

bool Graph::is_independent(Mask s) const {
    for (Mask m = s; m != 0; m &= m - 1)
        if (adj_[std::countr_zero(m)] & s) return false;
    return true;
}

std::vector<Mask> Graph::components(Mask s) const {
    std::vector<Mask> out;
    Mask left = s;
    while (left != 0) {
        Mask comp = left & -left;
        Mask frontier = comp;
        while (frontier != 0) {
            Mask next = 0;
            for (Mask m = frontier; m != 0; m &= m - 1) next |= adj_[std::countr_zero(m)];
            next &= s & ~comp;
            comp |= next;
            frontier = next;
        }
        out.push_back(comp);
        left &= ~comp;
    }
    return out;
}

Graph complement(const Graph& g) {
    std::vector<Mask> rows(g.order());
    for (int v = 0; v < g.order(); ++v) rows[v] = g.all() & ~g.neighbors(v) & ~bit(v);
    return Graph::from_rows(std::move(rows));
}

namespace {

Graph combine(std::span<const Graph> parts, bool join) {
    if (parts.empty()) throw InvalidInput(join ? "join of an empty list" : "disjoint union of an empty list");
    int n = 0;
    for (const Graph& p : parts) n += p.order();
    check_order(n);
    std::vector<Mask> rows(n, 0);
    const Mask everything = low_bits(n);
    int offset = 0;
    for (const Graph& p : parts) {
        const Mask block = p.all() << offset;
        for (int v = 0; v < p.order(); ++v) {
            rows[offset + v] = p.neighbors(v) << offset;
            if (join) rows[offset + v] |= everything & ~block;
        }
        offset += p.order();
    }
    return Graph::from_rows(std::move(rows));
}

}  // namespace

Graph disjoint_union(std::span<const Graph> parts) { return combine(parts, false); }
Graph disjoint_union(std::initializer_list<Graph> parts) {
    return combine(std::span<const Graph>(parts.begin(), parts.size()), false);
}
Graph join_graphs(std::span<const Graph> parts) { return combine(parts, true); }
Graph join_graphs(std::initializer_list<Graph> parts) {
    return combine(std::span<const Graph>(parts.begin(), parts.size()), true);
}

Graph copies(int n, const Graph& g) {
    if (n < 1) throw InvalidInput("copies needs n >= 1");
    return disjoint_union(std::vector<Graph>(n, g));
}

Graph induced(const Graph& g, VertexSet s) {
    if (s.bits() & ~g.all()) throw InvalidInput("vertex set exceeds the graph's vertex range");
    const std::vector<Vertex> keep = s.members();
    std::vector<Mask> rows(keep.size(), 0);
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = 0; j < keep.size(); ++j)
            if (g.adjacent(keep[i], keep[j])) rows[i] |= bit(static_cast<int>(j));
    return Graph::from_rows(std::move(rows));
}

Graph delete_vertex(const Graph& g, Vertex v) {
    if (v < 0 || v >= g.order()) throw InvalidInput("vertex " + std::to_string(v) + " out of range");
    return induced(g, VertexSet(g.all() & ~bit(v)));
}

namespace {

struct EmbeddingSearch {
    const Graph& host;
    const Graph& pattern;
    std::vector<Mask> degree_ok;  // per pattern vertex: host vertices passing degree pruning
    std::vector<Vertex> phi;

    bool extend(int i, Mask used) {
        if (i == pattern.order()) return true;
        Mask cand = degree_ok[i] & ~used;
        for (int j = 0; j < i && cand != 0; ++j)
            cand &= pattern.adjacent(i, j) ? host.neighbors(phi[j]) : ~host.neighbors(phi[j]);
        for (; cand != 0; cand &= cand - 1) {
            const Vertex h = std::countr_zero(cand);
            phi[i] = h;
            if (extend(i + 1, used | bit(h))) return true;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<Vertex>> find_induced_embedding(const Graph& host, const Graph& pattern) {
    const int hn = host.order();
    const int pn = pattern.order();
    if (pn > hn) return std::nullopt;
    EmbeddingSearch search{host, pattern, std::vector<Mask>(pn, 0), std::vector<Vertex>(pn, -1)};
    for (int p = 0; p < pn; ++p) {
        const int pd = pattern.degree(p);
        const int pcd = pn - 1 - pd;
        for (int h = 0; h < hn; ++h) {
            const int hd = host.degree(h);
            if (hd >= pd && hn - 1 - hd >= pcd) search.degree_ok[p] |= bit(h);
        }
    }
    if (!search.extend(0, 0)) return std::nullopt;
    return search.phi;
}

}  // namespace polarcog
