#include <string>

#include "polarcog/polarity.hpp"

namespace polarcog {

namespace {

// Depth-first assignment of vertices 0..n-1 to labels. A vertex may open at most one new
// A-part or B-clique (the lowest unused one), so each set partition is visited once.
class SkSearch {
public:
    SkSearch(const Graph& g, int s, int k) : g_(g), a_(s, 0), b_(k, 0) {}

    bool run(Vertex v) {
        if (v == g_.order()) return true;
        const Mask nb = g_.neighbors(v);
        for (int i = 0; i < static_cast<int>(a_.size()); ++i) {
            if (a_[i] == 0 && i > 0 && a_[i - 1] == 0) break;
            bool ok = (nb & a_[i]) == 0;
            for (int j = 0; ok && j < static_cast<int>(a_.size()); ++j)
                if (j != i && (nb & a_[j]) != a_[j]) ok = false;
            if (!ok) continue;
            a_[i] |= bit(v);
            if (run(v + 1)) return true;
            a_[i] &= ~bit(v);
        }
        for (int i = 0; i < static_cast<int>(b_.size()); ++i) {
            if (b_[i] == 0 && i > 0 && b_[i - 1] == 0) break;
            bool ok = (nb & b_[i]) == b_[i];
            for (int j = 0; ok && j < static_cast<int>(b_.size()); ++j)
                if (j != i && (nb & b_[j]) != 0) ok = false;
            if (!ok) continue;
            b_[i] |= bit(v);
            if (run(v + 1)) return true;
            b_[i] &= ~bit(v);
        }
        return false;
    }

    SkPartition result() const {
        SkPartition p;
        for (Mask m : a_)
            if (m) p.a_parts.emplace_back(m);
        for (Mask m : b_)
            if (m) p.b_cliques.emplace_back(m);
        return p;
    }

private:
    const Graph& g_;
    std::vector<Mask> a_;
    std::vector<Mask> b_;
};

}  // namespace

std::optional<SkPartition> brute_force_sk(const Graph& g, int s, int k) {
    if (s < 0 || k < 0) throw InvalidInput("s and k must be non-negative");
    if (g.order() > kBruteForceMaxOrder)
        throw LimitExceeded("brute force is capped at " + std::to_string(kBruteForceMaxOrder) + " vertices");
    SkSearch search(g, s, k);
    if (!search.run(0)) return std::nullopt;
    return search.result();
}

}  // namespace polarcog
