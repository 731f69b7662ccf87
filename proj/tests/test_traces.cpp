#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hecke/arith.hpp"
#include "hecke/characters.hpp"
#include "hecke/modforms.hpp"
#include "hecke/traces.hpp"

using namespace hecke;
using namespace hecke::traces;
using chars::CharacterGroup;

TEST_CASE("main term: squares only, pinned values") {
    auto triv1 = CharacterGroup::make(1)->trivial();
    CHECK(*main_term_mt1_exact(12, 1, triv1, 2) == Rational(0));
    CHECK(*main_term_mt1_exact(12, 1, triv1, 1, true) == Rational(11, 12));
    auto triv5 = CharacterGroup::make(5)->trivial();
    // (1/12) * 1 * 4^0 * psi(5) = 1/2
    CHECK(*main_term_mt1_exact(2, 5, triv5, 4) == Rational(1, 2));
    CHECK_THROWS_AS(main_term_mt1(12, 5, triv5, 5), std::invalid_argument);  // (N,m) != 1
    CHECK_THROWS_AS(main_term_mt1(3, 1, triv1, 1), std::domain_error);       // parity
}

TEST_CASE("error envelopes") {
    auto triv5 = CharacterGroup::make(5)->trivial();
    auto env1 = error_envelopes(2, 5, triv5, 1);
    // (kappa-1)/12 psi(5) d(1) = 6/12
    CHECK(env1.trivial_bound == doctest::Approx(0.5));
    // the pure-power envelope is monotone in m; the divisor-function factors in
    // the other two oscillate, so only their m-power floors grow
    double prev = 0.0;
    for (int64_t m = 1; m <= 40; m++) {
        auto e = error_envelopes(2, 5, triv5, m);
        CHECK(e.petersson >= prev);
        prev = e.petersson;
        CHECK(e.trivial_bound >= 0.5 * std::sqrt((double)m));  // d(m) >= 1 floor
        CHECK(e.eichler_selberg > 0);
    }
    // crossover predicate: m far below N^{8/13} is out of the petersson regime
    auto low = error_envelopes(2, 1000, CharacterGroup::make(1000)->trivial(), 1);
    CHECK_FALSE(low.petersson_regime);
    // near m = N the divisor-sum term of the middle envelope dominates its level part
    for (int64_t N : {51, 100, 301}) {
        int64_t m = N + 1;  // keep (N, m) irrelevant here, envelopes need no coprimality
        double maxpsi = 1.0;
        for (int64_t fsq = 1; fsq * fsq < 4 * m; fsq++)
            maxpsi = std::max(maxpsi, (double)arith::psi_i64(fsq));
        CHECK(to_double(arith::sigma(m)) * maxpsi >
              (double)arith::d(m) * std::sqrt((double)N));
    }
}

TEST_CASE("exact traces from the oracle") {
    // weight 12, level 1: the trace is tau(m)
    auto& f = modforms::oracle_form(modforms::Form::Delta, 128);
    for (int64_t m : {1, 2, 3, 10, 31}) {
        auto tr = exact_trace_small(12, 1, m);
        REQUIRE(tr);
        CHECK(tr->unnormalized == f.a(m));
    }
    // weight 2 level 11: dim 1, trace of T_1 is 1
    auto t11 = exact_trace_small(2, 11, 1);
    REQUIRE(t11);
    CHECK(t11->unnormalized == 1);
    // zero spaces
    for (int64_t m : {1, 2, 7}) {
        auto z = exact_trace_small(4, 1, m);
        REQUIRE(z);
        CHECK(z->unnormalized == 0);
    }
    // unsupported space reports absence rather than guessing
    CHECK_FALSE(exact_trace_small(24, 1, 2));
    CHECK_THROWS_AS(exact_trace_small(2, 11, 11), std::invalid_argument);
    // normalized value
    auto tr2 = exact_trace_small(12, 1, 2);
    CHECK(tr2->normalized() == doctest::Approx(-24.0 / std::pow(2.0, 5.5)));
}

TEST_CASE("level-11 point-count shortcuts") {
    CHECK(x0_exact_11(2) == 5);
    CHECK(x0_exact_11(3) == 5);
    CHECK(x0_exact_11(5) == 5);  // a_5 = 1
    CHECK_THROWS_AS(x0_exact_11(11), std::invalid_argument);
    CHECK_THROWS_AS(x0_exact_11(4), std::invalid_argument);
}

TEST_CASE("modular-curve predictor") {
    auto pr = x0_predict(11, 3, 1);
    CHECK(pr.q == 3);
    CHECK(pr.main == doctest::Approx(3.0));  // v odd: no secondary term
    auto pr2 = x0_predict(11, 3, 2);
    CHECK(pr2.q == 9);
    CHECK(pr2.main == doctest::Approx(9.0 + 2.0 * 12.0 / 12.0));  // (p-1) psi(11)/12
    CHECK(pr2.envelope > 0.0);
    CHECK_THROWS_AS(x0_predict(11, 11, 1), std::invalid_argument);
    CHECK_THROWS_AS(x0_predict(11, 4, 1), std::invalid_argument);
}

TEST_CASE("MT2 pinned examples") {
    // m = 1, d = 1, kappa even: both indicators fire iff N <= 2
    CHECK(main_term_mt2(4, 1, 1, 1, 1) == Rational(3, 24) * Rational(2));
    CHECK(main_term_mt2(4, 2, 2, 1, 1) ==
          Rational(3, 24) * Rational(arith::phi(2)) * Rational(arith::psi(4)) * 2);
    CHECK(main_term_mt2(4, 5, 5, 1, 1) ==
          Rational(3, 24) * Rational(arith::phi(5)) * Rational(arith::psi(25)));
    CHECK(main_term_mt2(4, 1, 5, 1, 2) == Rational(0));  // non-square m
    CHECK_THROWS_AS(main_term_mt2(4, 3, 5, 1, 1), std::invalid_argument);  // M does not divide N
}
