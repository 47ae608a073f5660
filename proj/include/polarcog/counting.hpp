#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace polarcog {

using BigNat = boost::multiprecision::cpp_int;

/// p(n) via Euler's pentagonal-number recurrence; p(0) = 1.
BigNat partition_count(int n);

/// D(s) = p(s+1) - 1: decompositions of s with at least two levels.
BigNat d_count(int s);

inline constexpr int kMaxDisconnectedCountParameter = 1000;

/// Number of disconnected cograph minimal (1,s)-polar obstructions: multisets of at least two
/// pieces with total weight s+1, where weights 1 and 2 offer one piece each and every larger
/// weight offers three. Throws InvalidInput for s < 2.
BigNat disconnected_count(int s);

/// Number of cograph minimal (s,1)-polar obstructions: 1 for s = 0, 2 for s = 1, and
/// 7 + disconnected_count(s) otherwise (four essentials plus three parameterized families).
BigNat total_obstruction_count(int s);

inline constexpr int kMaxBoundsParameter = 40;

struct CountReport {
    int s = 0;
    BigNat d;
    BigNat n_disc;
    int m = 0;         // most levels >= 2 in any decomposition of s
    BigNat bound_3m;   // 3^m * D(s)
    double bound_3s2;  // 3^(s/2) * D(s), floating point
    bool lower_ok = false;   // D <= n_disc
    bool upper_ok = false;   // n_disc <= 3^m * D
    bool strict_ok = false;  // 3^m * D < 3^(s/2) * D, decided exactly as 2m < s
};

CountReport bounds_report(int s);

/// (1 / (4 n sqrt 3)) * exp(pi * sqrt(2n/3)).
double hardy_ramanujan_estimate(int n);

}  // namespace polarcog
