#pragma once

#include <string>
#include <vector>

#include "polarcog/graph.hpp"

namespace polarcog {

/// Exhaustive checks over all cographs up to a given order. Every sweep has a serial reference
/// and an OpenMP version; both produce identical reports (findings sorted by canonical key).
enum class Execution { Serial, Parallel };

/// All cographs on 1..n_max vertices, realized, grouped by order.
std::vector<Graph> cographs_up_to(int n_max);

struct CompletenessReport {
    int s = 0;
    int n_max = 0;
    long checked = 0;
    long non_polar = 0;
    std::vector<long> fired;              // per family(s) member: non-polar inputs whose first hit it was
    std::vector<std::string> violations;  // canonical keys of non-polar inputs with no member embedded

    friend bool operator==(const CompletenessReport&, const CompletenessReport&) = default;
};

/// Every non-(s,1)-polar cograph with at most n_max vertices contains some member of family(s).
/// Members are tried in family order and only those no larger than the input.
/// Requires s in {2,3} and 1 <= n_max <= 8.
CompletenessReport completeness_check(int s, int n_max, Execution exec = Execution::Parallel);

struct EssentialReport {
    int n_max = 0;
    long checked = 0;
    long finite = 0;
    std::vector<std::string> violations;

    friend bool operator==(const EssentialReport&, const EssentialReport&) = default;
};

/// monopolar_index finite <=> no essential obstruction embeds, over cographs up to n_max (<= 10).
EssentialReport essential_sweep(int n_max, Execution exec = Execution::Parallel);

struct OracleReport {
    int n_max = 0;
    int s_max = 0;
    long comparisons = 0;
    long agreements = 0;
    std::vector<std::string> disagreements;  // "<canonical key> s=<s>"

    friend bool operator==(const OracleReport&, const OracleReport&) = default;
};

/// is_s1_polar agrees with brute_force_sk(g, s, 1) for every cograph up to n_max (<= 8) and s <= s_max.
OracleReport oracle_sweep(int n_max, int s_max, Execution exec = Execution::Parallel);

}  // namespace polarcog
