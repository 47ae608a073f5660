#include "polarcog/counting.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "polarcog/errors.hpp"
#include "polarcog/obstructions.hpp"

namespace polarcog {

BigNat partition_count(int n) {
    if (n < 0) throw InvalidInput("partition_count needs n >= 0");
    std::vector<BigNat> p(n + 1);
    p[0] = 1;
    for (int i = 1; i <= n; ++i) {
        BigNat plus = 0;
        BigNat minus = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            if (g1 > i) break;
            const int g2 = k * (3 * k + 1) / 2;
            BigNat term = p[i - g1];
            if (g2 <= i) term += p[i - g2];
            (k % 2 == 1 ? plus : minus) += term;
        }
        p[i] = plus - minus;
    }
    return p[n];
}

BigNat d_count(int s) {
    if (s < 0) throw InvalidInput("d_count needs s >= 0");
    return partition_count(s + 1) - 1;
}

namespace {

int piece_types(int weight) { return weight <= 2 ? 1 : 3; }

}  // namespace

BigNat disconnected_count(int s) {
    if (s < 2) throw InvalidInput("disconnected_count needs s >= 2");
    if (s > kMaxDisconnectedCountParameter) throw LimitExceeded("disconnected_count parameter too large");
    const int total = s + 1;
    // ways[w] = multisets of pieces with total weight w; each piece type is one unbounded coin.
    std::vector<BigNat> ways(total + 1);
    ways[0] = 1;
    for (int w = 1; w <= total; ++w)
        for (int type = 0; type < piece_types(w); ++type)
            for (int x = w; x <= total; ++x) ways[x] += ways[x - w];
    return ways[total] - piece_types(total);
}

BigNat total_obstruction_count(int s) {
    if (s < 0) throw InvalidInput("total_obstruction_count needs s >= 0");
    if (s == 0) return 1;
    if (s == 1) return 2;
    return 7 + disconnected_count(s);
}

CountReport bounds_report(int s) {
    if (s < 2) throw InvalidInput("bounds_report needs s >= 2");
    if (s > kMaxBoundsParameter)
        throw LimitExceeded("bounds_report is capped at s = " + std::to_string(kMaxBoundsParameter));
    CountReport r;
    r.s = s;
    r.d = d_count(s);
    r.n_disc = disconnected_count(s);
    for (const std::vector<int>& levels : decompositions(s)) {
        const auto big = std::count_if(levels.begin(), levels.end(), [](int k) { return k >= 2; });
        r.m = std::max(r.m, static_cast<int>(big));
    }
    r.bound_3m = boost::multiprecision::pow(BigNat(3), static_cast<unsigned>(r.m)) * r.d;
    r.bound_3s2 = std::pow(3.0, s / 2.0) * r.d.convert_to<double>();
    r.lower_ok = r.d <= r.n_disc;
    r.upper_ok = r.n_disc <= r.bound_3m;
    r.strict_ok = r.d > 0 && 2 * r.m < s;
    return r;
}

double hardy_ramanujan_estimate(int n) {
    if (n < 1) throw InvalidInput("hardy_ramanujan_estimate needs n >= 1");
    const double x = static_cast<double>(n);
    return std::exp(std::numbers::pi * std::sqrt(2.0 * x / 3.0)) / (4.0 * x * std::sqrt(3.0));
}

}  // namespace polarcog
