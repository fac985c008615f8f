#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "powsum/polynomial.hpp"

using powsum::PowerSumPoly;
using powsum::Rational;

TEST_CASE("evaluation of small power-sum polynomials") {
    const PowerSumPoly s0(0, {Rational(0), Rational(1)});
    CHECK(s0.eval(Rational(7)) == Rational(7));

    const PowerSumPoly s1(1, {Rational(0), Rational(1, 2), Rational(1, 2)});
    CHECK(s1.eval(Rational(4)) == Rational(10));

    const PowerSumPoly s2(2, {Rational(0), Rational(1, 6), Rational(1, 2), Rational(1, 3)});
    CHECK(s2.eval(Rational(-1)) == Rational(0));
    CHECK(s2.eval(Rational(1, 2)) == Rational(1, 6) * Rational(1, 2) + Rational(1, 2) * Rational(1, 4) +
                                         Rational(1, 3) * Rational(1, 8));
}

TEST_CASE("construction enforces the shape invariants") {
    CHECK_THROWS_AS(PowerSumPoly(1, {Rational(0), Rational(1)}), std::invalid_argument);
    CHECK_THROWS_AS(PowerSumPoly(0, {Rational(1), Rational(1)}), std::invalid_argument);
    CHECK_THROWS_AS(PowerSumPoly(0, {Rational(0), Rational(-1)}), std::invalid_argument);
    CHECK_THROWS_AS(PowerSumPoly(0, {Rational(0), Rational(0)}), std::invalid_argument);
    const PowerSumPoly p(0, {Rational(0), Rational(1)});
    CHECK_THROWS_AS(p.coefficient(2), std::invalid_argument);
}

TEST_CASE("evaluation is linear in the coefficients") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> coef(-50, 50);
    std::uniform_int_distribution<long> den(1, 20);
    std::uniform_int_distribution<long> lead(1, 30);
    std::uniform_int_distribution<int> ord(0, 6);
    std::uniform_int_distribution<long> arg(-10, 10);
    for (int i = 0; i < 200; ++i) {
        const int order = ord(rng);
        std::vector<Rational> a(static_cast<size_t>(order) + 2);
        std::vector<Rational> b(a.size());
        std::vector<Rational> sum(a.size());
        for (size_t e = 1; e < a.size(); ++e) {
            const bool leading = e + 1 == a.size();
            a[e] = leading ? Rational(lead(rng), den(rng)) : Rational(coef(rng), den(rng));
            b[e] = leading ? Rational(lead(rng), den(rng)) : Rational(coef(rng), den(rng));
            sum[e] = a[e] + b[e];
        }
        const Rational n(arg(rng), den(rng));
        const PowerSumPoly pa(order, a), pb(order, b), ps(order, sum);
        CHECK(ps.eval(n) == pa.eval(n) + pb.eval(n));
    }
}
