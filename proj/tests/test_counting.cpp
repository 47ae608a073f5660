#include <doctest.h>

#include <cmath>
#include <limits>

#include "oracles.hpp"
#include "polarcog/counting.hpp"
#include "polarcog/obstructions.hpp"

using namespace polarcog;

namespace {

BigNat from_u128(unsigned __int128 x) {
    BigNat r = static_cast<std::uint64_t>(x >> 64);
    r <<= 64;
    r += static_cast<std::uint64_t>(x);
    return r;
}

}  // namespace

TEST_CASE("partition_count") {
    CHECK(partition_count(0) == 1);
    for (int n = 1; n <= 6; ++n) CHECK(partition_count(n) == oracle::list_partitions(n).size());
    CHECK(partition_count(1) == 1);
    CHECK(partition_count(4) == 5);
    CHECK(partition_count(5) == 7);
    CHECK(partition_count(100) == 190569292);
    for (int n = 0; n <= 400; n += 7) CHECK(partition_count(n) == from_u128(oracle::partition_count_table(n)));
    CHECK_THROWS_AS(partition_count(-1), InvalidInput);
}

TEST_CASE("d_count") {
    CHECK(d_count(2) == 2);
    CHECK(d_count(3) == 4);
    for (int s = 2; s <= 20; ++s) CHECK(d_count(s) == decompositions(s).size());
}

TEST_CASE("disconnected_count") {
    CHECK(disconnected_count(2) == 2);
    CHECK(disconnected_count(3) == 6);
    CHECK(disconnected_count(4) == 12);
    CHECK_THROWS_AS(disconnected_count(1), InvalidInput);
    // Generator with canonical-key deduplication: 7 disconnected members plus the connected ones.
    for (int s = 2; s <= 10; ++s) {
        long connected = 0;
        for (const FamilyMember& m : family(s)) connected += m.graph.is_connected();
        CHECK(disconnected_count(s) == connected);
    }
    // Exact values at large s stay exact and grow.
    BigNat prev = 0;
    for (int s = 2; s <= 200; s += 9) {
        const BigNat n = disconnected_count(s);
        CHECK(n > prev);
        prev = n;
    }
    CHECK(disconnected_count(200) > BigNat(std::numeric_limits<std::uint64_t>::max()));
}

TEST_CASE("total obstruction counts") {
    CHECK(total_obstruction_count(0) == 1);
    CHECK(total_obstruction_count(1) == 2);
    CHECK(total_obstruction_count(2) == 9);
    CHECK(total_obstruction_count(3) == 13);
}

TEST_CASE("bounds_report") {
    const CountReport r3 = bounds_report(3);
    CHECK(r3.d == 4);
    CHECK(r3.n_disc == 6);
    CHECK(r3.m == 1);
    CHECK(r3.bound_3m == 12);

    // No decomposition of 2 has a level of 2 or more, so m = 0 and 3^m * D = D.
    const CountReport r2 = bounds_report(2);
    CHECK(r2.d == 2);
    CHECK(r2.n_disc == 2);
    CHECK(r2.m == 0);
    CHECK(r2.bound_3m == 2);
    CHECK(r2.bound_3s2 == doctest::Approx(6.0));

    for (int s = 2; s <= 20; ++s) {
        const CountReport r = bounds_report(s);
        INFO("s = " << s);
        CHECK(r.lower_ok);
        CHECK(r.upper_ok);
        CHECK(r.strict_ok);
        CHECK(r.m == (s == 2 ? 0 : (s + 1) / 3));
    }
    CHECK_THROWS_AS(bounds_report(1), InvalidInput);
    CHECK_THROWS_AS(bounds_report(kMaxBoundsParameter + 1), LimitExceeded);
}

TEST_CASE("Hardy-Ramanujan estimate") {
    const double est100 = hardy_ramanujan_estimate(100);
    CHECK(est100 == doctest::Approx(1.99e8).epsilon(0.01));
    CHECK(std::abs(est100 / partition_count(100).convert_to<double>() - 1.0) <= 0.05);

    double prev_gap = 1.0;
    for (int n : {50, 100, 200, 400}) {
        const double ratio = partition_count(n).convert_to<double>() / hardy_ramanujan_estimate(n);
        const double gap = std::abs(ratio - 1.0);
        CHECK(gap < prev_gap);
        prev_gap = gap;
    }
    CHECK(hardy_ramanujan_estimate(1) == doctest::Approx(1.88).epsilon(0.01));
}
