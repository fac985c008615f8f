#include <doctest.h>

#include <random>
#include <stdexcept>

#include "powsum/oracle.hpp"

using powsum::Integer;
using powsum::Rational;
namespace oracle = powsum::oracle;

TEST_CASE("brute sums") {
    CHECK(oracle::brute_sum(3, 4) == 100);
    CHECK(oracle::brute_sum(5, 0) == 0);
    CHECK(oracle::brute_sum(1, 100) == 5050);
    CHECK(oracle::brute_sum(0, 7) == 7);
    CHECK_THROWS_AS(oracle::brute_sum(-1, 3), std::invalid_argument);
    CHECK_THROWS_AS(oracle::brute_sum(2, -1), std::invalid_argument);
}

TEST_CASE("parallel brute sum equals the serial reference") {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<int> m_dist(0, 9);
    std::uniform_int_distribution<long> n_dist(0, 5000);
    for (int i = 0; i < 25; ++i) {
        const int m = m_dist(rng);
        const long n = n_dist(rng);
        CHECK(oracle::brute_sum_parallel(m, n) == oracle::brute_sum(m, n));
    }
}

TEST_CASE("interpolated rows") {
    const auto r0 = oracle::coeffs(0);
    CHECK(r0.row.a(1) == Rational(1));

    const auto r1 = oracle::coeffs(1);
    CHECK(r1.row.a(1) == Rational(1, 2));
    CHECK(r1.row.a(2) == Rational(1, 2));

    const auto r4 = oracle::coeffs(4);
    CHECK(r4.row.a(5) == Rational(1, 5));
    CHECK(r4.row.a(4) == Rational(1, 2));
    CHECK(r4.row.a(3) == Rational(1, 3));
    CHECK(r4.row.a(2) == Rational(0));
    CHECK(r4.row.a(1) == Rational(-1, 30));
    CHECK(r4.sample_nodes.size() == 5);
    CHECK(r4.verify_node == 6);
}

TEST_CASE("rows reproduce brute sums beyond the fitted nodes") {
    for (int m = 0; m <= 9; ++m) {
        const auto row = oracle::coeffs(m);
        const auto poly = row.row.to_poly();
        for (long n = m + 3; n <= m + 6; ++n) {
            CHECK(poly.eval(Rational(Integer(n))) == Rational(oracle::brute_sum(m, n)));
        }
    }
}

TEST_CASE("reference d values") {
    CHECK(oracle::d(-1) == Rational(1));
    CHECK(oracle::d(0) == Rational(1));
    CHECK(oracle::d(1) == Rational(1, 2));
    CHECK(oracle::d(2) == Rational(0));
    CHECK(oracle::d(3) == Rational(-1, 6));
    CHECK_THROWS_AS(oracle::d(-2), std::invalid_argument);
}

TEST_CASE("parallel row construction equals serial") {
    const auto serial = oracle::rows(12, false);
    const auto parallel = oracle::rows(12, true);
    REQUIRE(serial.size() == parallel.size());
    for (size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].row == parallel[i].row);
        CHECK(serial[i].sample_nodes == parallel[i].sample_nodes);
    }
}
