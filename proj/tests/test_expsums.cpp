#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numeric>

#include "hecke/arith.hpp"
#include "hecke/characters.hpp"
#include "hecke/expsums.hpp"

using namespace hecke;
using namespace hecke::expsums;
using chars::all_characters;
using chars::CharacterGroup;

TEST_CASE("classical sums: hand-derived values") {
    // (1,1,2): single unit d=1, e((1+1)/2) = 1
    CHECK(std::abs(kloosterman(1, 1, 2) - cplx(1, 0)) < 1e-12);
    // (1,1,3): e(2/3) + e(1/3) = 2 cos(2 pi / 3) = -1
    CHECK(std::abs(kloosterman(1, 1, 3) - cplx(-1, 0)) < 1e-12);
    // (0,0,c) = phi(c)
    for (int64_t c : {1, 2, 6, 12, 36, 97})
        CHECK(std::abs(kloosterman(0, 0, c) - cplx((double)arith::phi_i64(c), 0)) < 1e-9);
    // S(a,b,1) = 1 by the empty-modulus convention
    CHECK(kloosterman(5, 7, 1) == cplx(1, 0));
}

TEST_CASE("twisted sums: values and conventions") {
    auto g1 = CharacterGroup::make(1);
    CHECK(std::abs(twisted_kloosterman(g1->trivial(), 1, 1, 3) - cplx(-1, 0)) < 1e-12);
    auto g4 = CharacterGroup::make(4);
    auto odd = g4->character(1);
    // odd character mod 4 at (1,1,4): the d=1 and d=3 terms cancel
    CHECK(std::abs(twisted_kloosterman(odd, 1, 1, 4)) < 1e-12);
    CHECK(std::abs(twisted_kloosterman_primitive(odd, 1, 1, 4)) < 1e-12);
    CHECK_THROWS_AS(twisted_kloosterman(odd, 1, 1, 6), std::invalid_argument);
}

TEST_CASE("fast engine against the direct reference") {
    double worst = 0.0;
    for (int64_t N : {1, 4, 5, 9, 12, 16}) {
        for (auto& chi : all_characters(N)) {
            for (int64_t c = N; c <= 3 * N * N + 40; c += N) {
                for (int64_t a : {0, 1, 5}) {
                    int64_t b = arith::mod_reduce(7 * a + 3, c);
                    worst = std::max(worst, std::abs(twisted_kloosterman(chi, a, b, c) -
                                                     twisted_kloosterman_direct(chi, a, b, c)));
                }
            }
        }
    }
    CHECK(worst < 1e-9);
}

TEST_CASE("kloosterman sums are real and symmetric") {
    for (int64_t c = 1; c <= 50; c++)
        for (int64_t a = 0; a <= 6; a++)
            for (int64_t b = 0; b <= 6; b++) {
                cplx s = kloosterman(a, b, c);
                CHECK(std::abs(s.imag()) < 1e-9);
                CHECK(std::abs(s - kloosterman(b, a, c)) < 1e-9);
            }
}

TEST_CASE("weil bound: examples and grid") {
    // classical (1,1,3): d(3) = 2, conductors 1
    CHECK(weil_bound_classical(1, 1, 3) == doctest::Approx(2.0 * std::sqrt(3.0)));
    // (0,0,c): gcd term is c
    for (int64_t c : {4, 9, 30})
        CHECK(weil_bound_classical(0, 0, c) == doctest::Approx((double)arith::d(c) * c));
    // conductor-4 character at c=4: 3 * 2 * 4^{1/4} * 2^{1/4}
    auto g4 = CharacterGroup::make(4);
    CHECK(weil_bound(g4->character(1), 1, 1, 4) ==
          doctest::Approx(3.0 * 2.0 * std::pow(4.0, 0.25) * std::pow(2.0, 0.25)));
    for (int64_t c = 1; c <= 40; c++)
        for (auto& chi : all_characters(c))
            for (int64_t a = 0; a <= c; a += 3)
                for (int64_t b = 0; b <= c; b += 2)
                    CHECK(std::abs(twisted_kloosterman(chi, a, b, c)) <=
                          weil_bound(chi, a, b, c) + 1e-9);
}

TEST_CASE("T' sums: pinned examples") {
    // W=1: reduces to the untwisted sum for any N
    for (int64_t N : {1, 2, 6}) {
        TWQuery q{1, N, 1, 1, 1, 12, 0};
        CHECK(std::abs(t_prime_sum(q, TWMode::Brute) - kloosterman(1, 1, 12)) < 1e-10);
    }
    // N=2, W=2, c=2, a=b=d=1: the only character is trivial with F=1, S(1,1,2)=1
    TWQuery q2{2, 2, 1, 1, 1, 2, 0};
    CHECK(std::abs(t_prime_sum(q2, TWMode::Brute) - cplx(1, 0)) < 1e-12);
    CHECK(std::abs(t_prime_sum(q2, TWMode::Closed) - cplx(1, 0)) < 1e-12);
    // precondition failures are loud
    TWQuery bad{3, 2, 1, 1, 1, 6, 0};  // 3 does not divide 2^2
    CHECK_THROWS_AS(t_prime_sum(bad, TWMode::Brute), std::invalid_argument);
    TWQuery bad2{2, 2, 1, 1, 2, 2, 0};  // (b, W) != 1
    CHECK_THROWS_AS(t_prime_sum(bad2, TWMode::Brute), std::invalid_argument);
    TWQuery nonpp{6, 6, 1, 1, 1, 6, 0};  // closed mode needs a prime power
    CHECK_THROWS_AS(t_prime_sum(nonpp, TWMode::Closed), std::invalid_argument);
    CHECK(std::abs(t_prime_factored(nonpp) - t_prime_sum(nonpp, TWMode::Brute)) < 1e-10);
}

TEST_CASE("parity-restricted sums") {
    // N=2: no odd characters, so the kappa-odd sum vanishes
    TWQuery q{2, 2, 1, 1, 1, 2, 1};
    CHECK(std::abs(t_sum(q)) == 0.0);
    q.kappa = 0;
    CHECK(std::abs(t_sum(q) - cplx(1, 0)) < 1e-12);
    // half-sum formula against the parity-filtered definition on a small grid
    double worst = 0.0;
    for (int64_t N : {4, 8, 12}) {
        for (int64_t W : arith::divisors(N * N)) {
            if (W > 24) continue;
            for (int64_t c = W; c <= 48; c += W) {
                for (int kappa : {0, 1}) {
                    for (int64_t d : {(int64_t)1, N - 1}) {
                        if (std::gcd(d, N) != 1) continue;
                        TWQuery qq{W, N, d, 5, 1, c, kappa};
                        worst = std::max(worst, std::abs(t_sum(qq) - t_sum_halfsum(qq, TWMode::Brute)));
                        worst = std::max(worst, std::abs(t_sum(qq) - t_sum_halfsum(qq, TWMode::Closed)));
                    }
                }
            }
        }
    }
    CHECK(worst < 1e-9);
}

TEST_CASE("tsum bound values") {
    CHECK(tsum_bound(2, 1, 1, 2) == doctest::Approx(3.0));       // psi(2), c2 = 1
    CHECK(tsum_bound(2, 1, 1, 6) == doctest::Approx(3.0 * 2.0 * std::sqrt(3.0)));
    CHECK(tsum_bound(4, 1, 1, 4) == doctest::Approx(6.0));       // psi(4)
    CHECK_THROWS_AS(tsum_bound(4, 1, 1, 6), std::invalid_argument);
}

TEST_CASE("character count helper") {
    for (int64_t N : {1, 2, 6, 12, 24})
        for (int64_t W : arith::divisors(N * N)) {
            int64_t direct = 0;
            for (auto& chi : all_characters(N))
                if (W % chi.conductor() == 0) direct++;
            CHECK(tw_character_count(N, W) == direct);
        }
}
