#include "polarcog/sweeps.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <string>

#include "polarcog/cotree.hpp"
#include "polarcog/errors.hpp"
#include "polarcog/obstructions.hpp"
#include "polarcog/polarity.hpp"

namespace polarcog {

namespace {

// Evaluates fn(i) for every index, in parallel when requested. Each call writes only slot i.
template <typename T, typename Fn>
std::vector<T> map_indices(std::size_t count, Execution exec, Fn fn) {
    std::vector<T> out(count);
    const long n = static_cast<long>(count);
    if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 4)
        for (long i = 0; i < n; ++i) out[i] = fn(i);
    } else {
        for (long i = 0; i < n; ++i) out[i] = fn(i);
    }
    return out;
}

}  // namespace

std::vector<Graph> cographs_up_to(int n_max) {
    std::vector<Graph> out;
    for (int n = 1; n <= n_max; ++n)
        for (const Cotree& t : enumerate_cographs(n)) out.push_back(realize(t));
    return out;
}

CompletenessReport completeness_check(int s, int n_max, Execution exec) {
    if (s != 2 && s != 3) throw LimitExceeded("completeness_check supports s in {2,3}");
    if (n_max < 1) throw InvalidInput("completeness_check needs n_max >= 1");
    if (n_max > 8) throw LimitExceeded("completeness_check is capped at n_max = 8");
    const std::vector<FamilyMember> fam = family(s);
    const std::vector<Graph> graphs = cographs_up_to(n_max);

    // -2: polar; -1: violation; otherwise index of the first member that embeds.
    const auto hits = map_indices<int>(graphs.size(), exec, [&](long i) {
        const Graph& g = graphs[i];
        if (is_s1_polar(g, s)) return -2;
        for (std::size_t m = 0; m < fam.size(); ++m)
            if (fam[m].graph.order() <= g.order() && contains_induced(g, fam[m].graph)) return static_cast<int>(m);
        return -1;
    });

    CompletenessReport r;
    r.s = s;
    r.n_max = n_max;
    r.fired.assign(fam.size(), 0);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        ++r.checked;
        if (hits[i] == -2) continue;
        ++r.non_polar;
        if (hits[i] == -1) {
            r.violations.push_back(canonical_key(graphs[i]));
        } else {
            ++r.fired[hits[i]];
        }
    }
    std::sort(r.violations.begin(), r.violations.end());
    return r;
}

EssentialReport essential_sweep(int n_max, Execution exec) {
    if (n_max < 1) throw InvalidInput("essential_sweep needs n_max >= 1");
    if (n_max > kMaxEnumerationOrder) throw LimitExceeded("essential_sweep is capped by cograph enumeration");
    const std::array<Graph, 4> essentials = essential_obstructions();
    const std::vector<Graph> graphs = cographs_up_to(n_max);

    // 0: consistent and finite; 1: consistent and infinite; 2: violation.
    const auto codes = map_indices<int>(graphs.size(), exec, [&](long i) {
        const Graph& g = graphs[i];
        const bool finite = monopolar_index(g).is_finite();
        const bool free = std::none_of(essentials.begin(), essentials.end(),
                                       [&](const Graph& e) { return contains_induced(g, e); });
        if (finite != free) return 2;
        return finite ? 0 : 1;
    });

    EssentialReport r;
    r.n_max = n_max;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        ++r.checked;
        if (codes[i] == 0) ++r.finite;
        if (codes[i] == 2) r.violations.push_back(canonical_key(graphs[i]));
    }
    std::sort(r.violations.begin(), r.violations.end());
    return r;
}

OracleReport oracle_sweep(int n_max, int s_max, Execution exec) {
    if (n_max < 1 || s_max < 0) throw InvalidInput("oracle_sweep needs n_max >= 1 and s_max >= 0");
    if (n_max > 8) throw LimitExceeded("oracle_sweep is capped at n_max = 8");
    if (s_max > 63) throw LimitExceeded("oracle_sweep is capped at s_max = 63");
    const std::vector<Graph> graphs = cographs_up_to(n_max);

    // Bit s set when the two routes disagree at s.
    const auto masks = map_indices<unsigned long>(graphs.size(), exec, [&](long i) {
        const Graph& g = graphs[i];
        unsigned long bad = 0;
        for (int s = 0; s <= s_max; ++s) {
            const bool fast = is_s1_polar(g, s);
            const std::optional<SkPartition> slow = brute_force_sk(g, s, 1);
            if (fast != slow.has_value()) bad |= 1UL << s;
        }
        return bad;
    });

    OracleReport r;
    r.n_max = n_max;
    r.s_max = s_max;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        for (int s = 0; s <= s_max; ++s) {
            ++r.comparisons;
            if (masks[i] >> s & 1UL) {
                r.disagreements.push_back(canonical_key(graphs[i]) + " s=" + std::to_string(s));
            } else {
                ++r.agreements;
            }
        }
    }
    std::sort(r.disagreements.begin(), r.disagreements.end());
    return r;
}

}  // namespace polarcog
