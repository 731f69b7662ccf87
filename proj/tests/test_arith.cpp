#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "hecke/arith.hpp"

using namespace hecke;
using namespace hecke::arith;

TEST_CASE("factorization basics") {
    CHECK(factor(1).factors.empty());
    auto f12 = factor(12);
    REQUIRE(f12.factors.size() == 2);
    CHECK(f12.factors[0] == std::pair<int64_t, int>{2, 2});
    CHECK(f12.factors[1] == std::pair<int64_t, int>{3, 1});
    auto f97 = factor(97);
    REQUIRE(f97.factors.size() == 1);
    CHECK(f97.factors[0] == std::pair<int64_t, int>{97, 1});
    CHECK_THROWS_AS(factor(0), std::invalid_argument);
    // reconstruction and primality of listed primes
    for (int64_t n : {2, 36, 97, 360360, 9999991}) {
        int64_t prod = 1;
        for (auto& [p, e] : factor(n).factors) {
            CHECK(is_prime(p));
            for (int i = 0; i < e; i++) prod *= p;
        }
        CHECK(prod == n);
    }
}

TEST_CASE("multiplicative function values") {
    CHECK(psi(1) == 1);
    CHECK(psi(12) == 24);
    CHECK(psi(97) == 98);  // p + 1 at a prime
    CHECK(d(12) == 6);
    CHECK(sigma(12) == 28);
    CHECK(d3(4) == 6);  // ordered triples with product p^2: (e+1)(e+2)/2
    CHECK(d3(12) == 18);
    CHECK(mu(1) == 1);
    CHECK(mu(12) == 0);
    CHECK(mu(30) == -1);
    CHECK(vp(48, 2) == 4);
    CHECK(divisors(12) == std::vector<int64_t>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("multiplicativity on random coprime pairs") {
    std::mt19937_64 rng(7);
    int checked = 0;
    while (checked < 200) {
        int64_t a = 1 + (int64_t)(rng() % 1000), b = 1 + (int64_t)(rng() % 1000);
        if (std::gcd(a, b) != 1) continue;
        CHECK(psi(a * b) == psi(a) * psi(b));
        CHECK(phi(a * b) == phi(a) * phi(b));
        CHECK(d(a * b) == d(a) * d(b));
        CHECK(sigma(a * b) == sigma(a) * sigma(b));
        CHECK(d3(a * b) == d3(a) * d3(b));
        checked++;
    }
}

TEST_CASE("moebius sum and psi/phi inequalities") {
    for (int64_t n = 1; n <= 10000; n++) {
        int64_t s = 0;
        for (int64_t dd : divisors(n)) s += mu(dd);
        CHECK(s == (n == 1 ? 1 : 0));
    }
    for (int64_t n = 1; n <= 3000; n++) {
        CHECK(psi(n) * phi(n) <= bigint(n) * n);
        CHECK(psi(n) >= n);
    }
}

TEST_CASE("d3 agrees with direct triple enumeration") {
    for (int64_t n = 1; n <= 60; n++) {
        int64_t count = 0;
        for (int64_t a : divisors(n))
            for (int64_t b : divisors(n / a))
                count += ((n / a) % b == 0) ? 1 : 0;
        CHECK(d3(n) == count);
    }
}

TEST_CASE("modular helpers") {
    CHECK(mod_pow(3, 100, 101) == 1);  // Fermat
    CHECK(mod_inverse(3, 10) == 7);
    CHECK_THROWS_AS(mod_inverse(2, 10), std::domain_error);
    auto sm = smooth_numbers({2, 3}, 20);
    CHECK(sm == std::vector<int64_t>{1, 2, 3, 4, 6, 8, 9, 12, 16, 18});
}
