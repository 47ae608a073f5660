#include "polarcog/cotree.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace polarcog {

namespace {

char kind_letter(NodeKind k) { return k == NodeKind::Union ? 'U' : 'J'; }

// Copies the subtree of src rooted at i into out (post-order), shifting leaf ids by offset.
int copy_subtree(const Cotree& src, int i, int offset, std::vector<CotreeNode>& out) {
    const CotreeNode& n = src.node(i);
    if (n.kind == NodeKind::Leaf) {
        out.push_back({NodeKind::Leaf, n.vertex + offset, {}});
        return static_cast<int>(out.size()) - 1;
    }
    CotreeNode copy{n.kind, -1, {}};
    for (int c : n.children) copy.children.push_back(copy_subtree(src, c, offset, out));
    out.push_back(std::move(copy));
    return static_cast<int>(out.size()) - 1;
}

}  // namespace

Cotree::Cotree(std::vector<CotreeNode> nodes, int root) : nodes_(std::move(nodes)), root_(root) {}

Cotree Cotree::leaf(Vertex v) { return Cotree({CotreeNode{NodeKind::Leaf, v, {}}}, 0); }

Cotree Cotree::combine(NodeKind kind, const std::vector<Cotree>& children) {
    if (kind == NodeKind::Leaf) throw InvalidInput("combine needs an internal node kind");
    if (children.size() < 2) throw InvalidInput("internal cotree nodes need at least two children");
    std::vector<CotreeNode> out;
    CotreeNode top{kind, -1, {}};
    int offset = 0;
    for (const Cotree& c : children) {
        const CotreeNode& r = c.node(c.root());
        if (r.kind == kind) {
            for (int gc : r.children) top.children.push_back(copy_subtree(c, gc, offset, out));
        } else {
            top.children.push_back(copy_subtree(c, c.root(), offset, out));
        }
        offset += c.leaf_count();
    }
    out.push_back(std::move(top));
    const int root = static_cast<int>(out.size()) - 1;
    return Cotree(std::move(out), root);
}

int Cotree::leaf_count() const {
    int count = 0;
    std::vector<int> stack{root_};
    while (!stack.empty()) {
        const int i = stack.back();
        stack.pop_back();
        if (nodes_[i].kind == NodeKind::Leaf) ++count;
        for (int c : nodes_[i].children) stack.push_back(c);
    }
    return count;
}

void Cotree::validate() const {
    const int total = static_cast<int>(nodes_.size());
    if (root_ < 0 || root_ >= total) throw InvalidInput("cotree root index out of range");
    std::vector<bool> seen(total, false);
    std::vector<int> leaf_ids;
    std::vector<int> stack{root_};
    seen[root_] = true;
    while (!stack.empty()) {
        const int i = stack.back();
        stack.pop_back();
        const CotreeNode& n = nodes_[i];
        if (n.kind == NodeKind::Leaf) {
            if (!n.children.empty()) throw InvalidInput("cotree leaf with children");
            leaf_ids.push_back(n.vertex);
            continue;
        }
        if (n.children.size() < 2) throw InvalidInput("internal cotree node with fewer than two children");
        for (int c : n.children) {
            if (c < 0 || c >= i) throw InvalidInput("cotree child index must precede its parent");
            if (seen[c]) throw InvalidInput("cotree node shared between parents");
            seen[c] = true;
            stack.push_back(c);
        }
    }
    std::sort(leaf_ids.begin(), leaf_ids.end());
    if (static_cast<int>(leaf_ids.size()) > kMaxVertices) throw LimitExceeded("cotree has too many leaves");
    for (int k = 0; k < static_cast<int>(leaf_ids.size()); ++k)
        if (leaf_ids[k] != k) throw InvalidInput("cotree leaf ids must be exactly 0..n-1");
}

bool Cotree::is_alternating() const {
    for (const CotreeNode& n : nodes_)
        for (int c : n.children)
            if (n.kind != NodeKind::Leaf && nodes_[c].kind == n.kind) return false;
    return true;
}

std::vector<Mask> Cotree::leaf_masks() const {
    std::vector<Mask> masks(nodes_.size(), 0);
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        const CotreeNode& n = nodes_[i];
        if (n.kind == NodeKind::Leaf) {
            masks[i] = bit(n.vertex);
        } else {
            for (int c : n.children) masks[i] |= masks[c];
        }
    }
    return masks;
}

namespace {

void serialize(const Cotree& t, int i, std::string& out) {
    const CotreeNode& n = t.node(i);
    if (n.kind == NodeKind::Leaf) {
        out += '.';
        return;
    }
    out += kind_letter(n.kind);
    out += '(';
    for (std::size_t k = 0; k < n.children.size(); ++k) {
        if (k) out += ',';
        serialize(t, n.children[k], out);
    }
    out += ')';
}

struct TreeParser {
    std::string_view text;
    std::size_t pos = 0;
    int next_leaf = 0;
    std::vector<CotreeNode> nodes;

    int parse_node() {
        if (pos >= text.size()) throw ParseError("unexpected end of cotree text", pos);
        const char c = text[pos];
        if (c == '.') {
            ++pos;
            nodes.push_back({NodeKind::Leaf, next_leaf++, {}});
            return static_cast<int>(nodes.size()) - 1;
        }
        if (c != 'U' && c != 'J') throw ParseError(std::string("unexpected character '") + c + "'", pos);
        ++pos;
        expect('(');
        CotreeNode node{c == 'U' ? NodeKind::Union : NodeKind::Join, -1, {}};
        node.children.push_back(parse_node());
        while (pos < text.size() && text[pos] == ',') {
            ++pos;
            node.children.push_back(parse_node());
        }
        expect(')');
        if (node.children.size() < 2) throw ParseError("internal node needs at least two children", pos - 1);
        nodes.push_back(std::move(node));
        return static_cast<int>(nodes.size()) - 1;
    }

    void expect(char c) {
        if (pos >= text.size() || text[pos] != c) throw ParseError(std::string("expected '") + c + "'", pos);
        ++pos;
    }
};

}  // namespace

std::string Cotree::to_string() const {
    std::string out;
    serialize(*this, root_, out);
    return out;
}

Cotree Cotree::parse(std::string_view text) {
    TreeParser p{text, 0, 0, {}};
    const int root = p.parse_node();
    if (p.pos != text.size()) throw ParseError("trailing characters after cotree", p.pos);
    if (p.next_leaf > kMaxVertices) throw LimitExceeded("cotree has too many leaves");
    return Cotree(std::move(p.nodes), root);
}

bool is_p4_witness(const Graph& g, const P4Witness& w) {
    const auto& p = w.path;
    for (int i = 0; i < 4; ++i) {
        if (p[i] < 0 || p[i] >= g.order()) return false;
        for (int j = i + 1; j < 4; ++j) {
            if (p[i] == p[j]) return false;
            if (g.adjacent(p[i], p[j]) != (j == i + 1)) return false;
        }
    }
    return true;
}

namespace {

std::optional<P4Witness> least_p4(const Graph& g) {
    const int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    const Mask q = bit(a) | bit(b) | bit(c) | bit(d);
                    const int quad[4] = {a, b, c, d};
                    int deg[4];
                    int ones = 0;
                    int twos = 0;
                    for (int i = 0; i < 4; ++i) {
                        deg[i] = std::popcount(g.neighbors(quad[i]) & q);
                        ones += deg[i] == 1;
                        twos += deg[i] == 2;
                    }
                    if (ones != 2 || twos != 2) continue;
                    // Degree sequence 1,1,2,2 on four vertices forces an induced P4.
                    int start = -1;
                    for (int i = 0; i < 4; ++i)
                        if (deg[i] == 1) {
                            start = quad[i];
                            break;
                        }
                    P4Witness w;
                    w.path[0] = start;
                    Mask used = bit(start);
                    for (int k = 1; k < 4; ++k) {
                        const Mask next = g.neighbors(w.path[k - 1]) & q & ~used;
                        w.path[k] = std::countr_zero(next);
                        used |= next & -next;
                    }
                    return w;
                }
    return std::nullopt;
}

struct CotreeBuilder {
    const Graph& g;
    const Graph co;
    std::vector<CotreeNode> nodes;

    // Returns the node index, or nullopt if g[s] is connected and co-connected with |s| > 1.
    std::optional<int> build(Mask s) {
        if (std::popcount(s) == 1) {
            nodes.push_back({NodeKind::Leaf, std::countr_zero(s), {}});
            return static_cast<int>(nodes.size()) - 1;
        }
        NodeKind kind = NodeKind::Union;
        std::vector<Mask> parts = g.components(s);
        if (parts.size() == 1) {
            kind = NodeKind::Join;
            parts = co.components(s);
            if (parts.size() == 1) return std::nullopt;
        }
        CotreeNode node{kind, -1, {}};
        for (Mask part : parts) {
            auto child = build(part);
            if (!child) return std::nullopt;
            node.children.push_back(*child);
        }
        nodes.push_back(std::move(node));
        return static_cast<int>(nodes.size()) - 1;
    }
};

}  // namespace

CotreeResult build_cotree(const Graph& g) {
    if (g.order() == 0) throw InvalidInput("cotree of the empty graph");
    CotreeBuilder b{g, complement(g), {}};
    if (auto root = b.build(g.all())) return Cotree(std::move(b.nodes), *root);
    auto w = least_p4(g);
    // A connected, co-connected graph on two or more vertices always contains P4.
    return *w;
}

Cotree cotree_of(const Graph& g) {
    CotreeResult r = build_cotree(g);
    if (auto* w = std::get_if<P4Witness>(&r)) throw NotCograph(*w);
    return std::get<Cotree>(std::move(r));
}

bool is_cograph(const Graph& g) { return g.order() == 0 || std::holds_alternative<Cotree>(build_cotree(g)); }

Graph realize(const Cotree& t) {
    t.validate();
    const int n = t.leaf_count();
    const std::vector<Mask> masks = t.leaf_masks();
    std::vector<Mask> rows(n, 0);
    for (const CotreeNode& node : t.nodes()) {
        if (node.kind != NodeKind::Join) continue;
        Mask whole = 0;
        for (int c : node.children) whole |= masks[c];
        for (int c : node.children)
            for (Mask m = masks[c]; m != 0; m &= m - 1) rows[std::countr_zero(m)] |= whole & ~masks[c];
    }
    return Graph::from_rows(std::move(rows));
}

namespace {

std::string key_of(const Cotree& t, int i) {
    const CotreeNode& n = t.node(i);
    if (n.kind == NodeKind::Leaf) return ".";
    std::vector<std::string> keys;
    std::vector<int> stack(n.children.rbegin(), n.children.rend());
    while (!stack.empty()) {
        const int c = stack.back();
        stack.pop_back();
        const CotreeNode& cn = t.node(c);
        if (cn.kind == n.kind) {
            stack.insert(stack.end(), cn.children.rbegin(), cn.children.rend());
        } else {
            keys.push_back(key_of(t, c));
        }
    }
    std::sort(keys.begin(), keys.end());
    std::string out(1, kind_letter(n.kind));
    out += '(';
    for (std::size_t k = 0; k < keys.size(); ++k) {
        if (k) out += ',';
        out += keys[k];
    }
    out += ')';
    return out;
}

}  // namespace

std::string canonical_key(const Cotree& t) { return key_of(t, t.root()); }

std::string canonical_key(const Graph& cograph) { return canonical_key(cotree_of(cograph)); }

namespace {

// Canonical keys of all unlabeled cotrees with the given leaf count, indexed by [size][kind],
// where kind 0 = union root and 1 = join root. Size 1 holds only the leaf (under both kinds).
class CanonicalTable {
public:
    explicit CanonicalTable(int n_max) : table_(n_max + 1) {
        table_[1][0] = {"."};
        table_[1][1] = {"."};
        for (int n = 2; n <= n_max; ++n)
            for (int kind = 0; kind < 2; ++kind) table_[n][kind] = generate(n, kind);
    }

    const std::vector<std::string>& trees(int n, int kind) const { return table_[n][kind]; }

private:
    using Pool = std::vector<std::pair<int, const std::string*>>;  // (size, key)

    std::vector<std::string> generate(int n, int kind) {
        // Children of a kind-rooted node are leaves or trees rooted in the other kind.
        Pool pool;
        for (int m = 1; m < n; ++m)
            for (const std::string& key : table_[m][1 - kind]) pool.emplace_back(m, &key);
        std::vector<std::string> out;
        std::vector<const std::string*> chosen;
        choose(pool, static_cast<int>(pool.size()) - 1, n, kind, chosen, out);
        return out;
    }

    // Picks children with non-increasing pool index, so each multiset is produced once.
    void choose(const Pool& pool, int max_index, int remaining, int kind, std::vector<const std::string*>& chosen,
                std::vector<std::string>& out) {
        if (remaining == 0) {
            if (chosen.size() < 2) return;
            std::vector<std::string> keys;
            for (const std::string* k : chosen) keys.push_back(*k);
            std::sort(keys.begin(), keys.end());
            std::string s(1, kind == 0 ? 'U' : 'J');
            s += '(';
            for (std::size_t i = 0; i < keys.size(); ++i) {
                if (i) s += ',';
                s += keys[i];
            }
            s += ')';
            out.push_back(std::move(s));
            return;
        }
        for (int i = max_index; i >= 0; --i) {
            if (pool[i].first > remaining) continue;
            chosen.push_back(pool[i].second);
            choose(pool, i, remaining - pool[i].first, kind, chosen, out);
            chosen.pop_back();
        }
    }

    std::vector<std::array<std::vector<std::string>, 2>> table_;
};

}  // namespace

std::vector<Cotree> enumerate_cographs(int n) {
    if (n < 1) throw InvalidInput("enumeration needs n >= 1");
    if (n > kMaxEnumerationOrder)
        throw LimitExceeded("enumeration is capped at n = " + std::to_string(kMaxEnumerationOrder));
    const CanonicalTable table(n);
    std::vector<Cotree> out;
    if (n == 1) {
        out.push_back(Cotree::leaf());
        return out;
    }
    for (int kind = 0; kind < 2; ++kind)
        for (const std::string& key : table.trees(n, kind)) out.push_back(Cotree::parse(key));
    return out;
}

}  // namespace polarcog
