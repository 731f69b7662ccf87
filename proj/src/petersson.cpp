#include "hecke/petersson.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "hecke/analytic.hpp"
#include "hecke/arith.hpp"
#include "hecke/config.hpp"
#include "hecke/expsums.hpp"
#include "hecke/parallel.hpp"

namespace hecke::petersson {

using arith::divisors;
using arith::factor;

static Rational a_ogg_raw(int64_t p, int64_t M, const DirichletCharacter& chi) {
    // "chi is a character mod M/p" means cond(chi) | M/p
    if ((M / p) % chi.conductor() == 0) {
        if (M % (p * p) == 0) return Rational(0);
        return Rational(1, bigint(p));
    }
    return Rational(1);
}

Rational a_ogg(int64_t p, int64_t N, const DirichletCharacter& chi) {
    if (N % p != 0 || !arith::is_prime(p))
        throw std::invalid_argument("a_ogg: p must be a prime dividing N");
    if (N % chi.conductor() != 0)
        throw std::invalid_argument("a_ogg: conductor must divide N");
    return a_ogg_raw(p, N, chi);
}

Rational f_factor(int64_t M, const DirichletCharacter& chi) {
    Rational out(1);
    for (auto& [p, e] : factor(M).factors) {
        int cp = chi.cond_p(p);
        if (e == 1 && cp == 1) out *= Rational(bigint(p + 1), bigint(p));
        if (e >= 2 && cp == e) out *= Rational(bigint(p), bigint(p - 1));
    }
    return out;
}

Rational r_factor(int64_t M, int64_t L, const DirichletCharacter& chi) {
    Rational out(1, bigint(L));
    for (auto& [p, e] : factor(L).factors) {
        if (e >= 2 && M % p != 0)
            out *= Rational(bigint(p) * p, bigint(p) * p - 1);
        if (M % p == 0)
            out /= Rational(1) - a_ogg_raw(p, M, chi) / p;
    }
    return out;
}

bool verify_psi_identity(int64_t N, const DirichletCharacter& chi) {
    int64_t cond = chi.conductor();
    Rational lhs = N % cond == 0 ? Rational(arith::psi(N)) : Rational(0);
    Rational rhs(0);
    for (int64_t M : divisors(N)) {
        if (M % cond != 0) continue;
        Rational term = Rational(bigint(M)) * f_factor(M, chi);
        for (auto& [p, e] : factor(M).factors)
            if (e >= 2) term *= Rational(bigint(p) * p - 1, bigint(p) * p);
        rhs += term;
    }
    return lhs == rhs;
}

static int64_t ipow(int64_t p, int e) {
    int64_t out = 1;
    for (int i = 0; i < e; i++) out *= p;
    return out;
}

bool r_composition_unchecked(int64_t p, int a, int b, int g, const DirichletCharacter& chi) {
    Rational lhs = r_factor(ipow(p, b), ipow(p, a), chi) * r_factor(ipow(p, g), ipow(p, b - g), chi);
    Rational rhs = r_factor(ipow(p, g), ipow(p, a + b - g), chi);
    return lhs == rhs;
}

bool verify_r_composition(int64_t p, int a, int b, int g, const DirichletCharacter& chi) {
    if (a < 0 || b < 0 || g < 0 || g > b)
        throw std::domain_error("r_composition: need a,b >= 0 and 0 <= g <= b");
    if (chi.cond_p(p) > b - 1)
        throw std::domain_error("r_composition: need cond_p(chi) <= b-1");
    return r_composition_unchecked(p, a, b, g, chi);
}

bool verify_inversion_helper(int64_t N, int64_t W, int64_t Q, int64_t L,
                             const DirichletCharacter& chi) {
    int64_t M = W * Q;
    if (L * M != N) throw std::invalid_argument("inversion_helper: need N = L*M");
    if (W % chi.conductor() != 0) return true;  // both sides vanish with the indicator
    return r_factor(M, L, chi) * r_factor(W, Q, chi) == r_factor(W, L * Q, chi);
}

bool verify_weight_identity(int64_t L, int64_t M, const DirichletCharacter& chi) {
    int64_t N = L * M;
    if (M % chi.conductor() != 0)
        throw std::domain_error("weight_identity: requires cond(chi) | M");
    Rational lhs = Rational(arith::psi(N), bigint(M));
    for (auto& [p, e] : factor(N).factors) {
        lhs *= Rational(bigint(p - 1), bigint(p));
        lhs /= Rational(1) - a_ogg_raw(p, N, chi) / p;
    }
    lhs *= r_factor(M, L, chi);
    Rational rhs = f_factor(M, chi);
    for (auto& [p, e] : factor(M).factors)
        if (e >= 2) rhs *= Rational(bigint(p) * p - 1, bigint(p) * p);
    return lhs == rhs;
}

// ---------------------------------------------------------------------------
// Petersson evaluations

static cplx i_pow_minus(int kappa) {
    switch (((kappa % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, -1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, 1.0};
    }
}

static int64_t default_cutoff(int64_t N, int64_t m, int64_t n) {
    double x = 32.0 * M_PI * std::sqrt((double)m * (double)n);
    int64_t C = std::max<int64_t>(1000 * N, (int64_t)std::ceil(x));
    return (C + N - 1) / N * N;
}

DeltaValue delta_geometric(int kappa, int64_t N, const DirichletCharacter& chi, int64_t m,
                           int64_t n, int64_t C) {
    if (kappa < 2) throw std::invalid_argument("delta: weight must be >= 2");
    if (m < 1 || n < 1) throw std::invalid_argument("delta: m,n must be >= 1");
    if (chi.modulus() != N) throw std::invalid_argument("delta: chi must be a character mod N");
    int want = (kappa % 2 == 0) ? 1 : -1;
    if (chi.parity() != want)
        throw std::domain_error("delta: parity mismatch, the space is zero and the "
                                "geometric identity is not asserted");
    if (C == 0) C = config().trunc_C ? config().trunc_C : default_cutoff(N, m, n);
    C = C / N * N;
    double x = 4.0 * M_PI * std::sqrt((double)m * (double)n);
    if (kappa == 2 && (double)C < 2.0 * x)
        throw std::invalid_argument("delta: kappa=2 needs C >= 8 pi sqrt(mn) for a certified tail");

    expsums::KloostermanEngine eng(&chi);
    int64_t terms = C / N;
    const int64_t BS = 2048;
    int64_t nblocks = (terms + BS - 1) / BS;
    std::vector<cplx> partial(nblocks, cplx(0, 0));
    for_indices(nblocks, [&](int64_t bi) {
        cplx s(0, 0);
        int64_t lo = bi * BS, hi = std::min(terms, lo + BS);
        for (int64_t idx = lo; idx < hi; idx++) {
            int64_t c = N * (idx + 1);
            double bj = analytic::bessel_j(kappa - 1, x / (double)c);
            if (bj != 0.0) s += eng.sum(m, n, c) * (bj / (double)c);
        }
        partial[bi] = s;
    });
    cplx S(0, 0);
    for (auto& pb : partial) S += pb;

    DeltaValue out;
    out.value = (m == n ? cplx(1.0, 0.0) : cplx(0.0, 0.0)) + 2.0 * M_PI * i_pow_minus(kappa) * S;
    analytic::TailBoundInput ti;
    ti.kappa = kappa;
    ti.N = N;
    ti.m = m;
    ti.n = n;
    ti.C = C;
    ti.cond = chi.conductor();
    ti.cond_star = chi.squarefree_conductor();
    out.tail_bound = 2.0 * M_PI * analytic::petersson_tail_bound(ti);
    out.truncation_c = C;
    return out;
}

// H(Y) dominates sum_{k <= Y} d(k)/sqrt(k); the max with e makes H(Y0 s) grow at
// most like sqrt(s)(1 + log s) relative to H(Y0)
static double head_env(double Y) {
    Y = std::max(Y, M_E);
    return 2.0 * std::sqrt(Y) * (std::log(Y) + 1.0);
}

static double tail_raw_at(int kappa, int64_t M, double x) {
    int64_t C0 = std::max<int64_t>(M, (int64_t)std::ceil(2.0 * x));
    return analytic::tail_series_raw(kappa, M, x, (C0 + M - 1) / M * M);
}

double series_growth_envelope(int kappa, int64_t M, int64_t m, int64_t n, int64_t cond,
                              int64_t cond_star) {
    double x1 = 4.0 * M_PI * std::sqrt((double)m * (double)n);
    double condf = std::pow((double)cond, 0.25) * std::pow((double)cond_star, 0.25);
    double G = std::sqrt((double)m);  // (m, n s^2) <= m uniformly in s
    double head = (double)arith::d(M) / std::sqrt((double)M) * head_env(2.0 * x1 / (double)M);
    // below the switch point 2x = M the small-argument tail still grows like
    // x^{kappa-1}; taking the max of base and switch restores the envelope there
    double x_switch = std::max(x1, (double)M / 2.0);
    double tail = std::max(tail_raw_at(kappa, M, x1), tail_raw_at(kappa, M, x_switch));
    return condf * G * (head + tail);
}

double rankin_smooth_tail(const std::vector<int64_t>& primes, int64_t T) {
    if (primes.empty()) return 0.0;
    double prod = 1.0;
    for (auto p : primes) prod /= 1.0 - std::pow((double)p, -0.25);
    return 3.34 * std::pow((double)T, -1.0 / 8.0) * prod;
}

struct LevelWeight {
    int64_t L;
    int64_t M;
    Rational weight;
};

static DeltaValue newform_assembly(int kappa, int64_t N, const DirichletCharacter& chi, int64_t m,
                                   int64_t n, const std::vector<LevelWeight>& weights,
                                   const StarOptions& opts) {
    if (std::gcd(m * n, N) != 1)
        throw std::invalid_argument("newform average: requires (mn, N) = 1");
    DeltaValue out;
    out.truncation_c = 0;
    int64_t ell_max_seen = 1;
    for (auto& lw : weights) {
        if (lw.weight == Rational(0)) continue;
        if (lw.M % chi.conductor() != 0) continue;  // summand is 0: chi is not a character mod M
        auto chiM = chi.restrict_to(lw.M);
        double w = to_double(lw.weight);
        // primes of L that stay coprime to M
        std::vector<int64_t> ell_primes;
        for (auto& [p, e] : factor(lw.L).factors)
            if (lw.M % p != 0) ell_primes.push_back(p);
        auto ells = arith::smooth_numbers(ell_primes, opts.L_max);
        int64_t cond = chiM.conductor(), cond_star = chiM.squarefree_conductor();
        for (int64_t ell : ells) {
            int64_t nn = n * ell * ell;
            int64_t C = (ell == 1 && lw.M == N) ? opts.C_main : opts.C_sub;
            if (C == 0) C = default_cutoff(lw.M, m, nn);
            // keep clear of the Bessel transition and the kappa=2 threshold
            int64_t floorC =
                (int64_t)std::ceil(16.0 * M_PI * std::sqrt((double)m * (double)nn)) + lw.M;
            C = std::max(C, (floorC + lw.M - 1) / lw.M * lw.M);
            auto dv = delta_geometric(kappa, lw.M, chiM, m, nn, C);
            cplx coeff = std::conj(chiM.eval(ell)) / (double)ell;
            out.value += w * coeff * dv.value;
            out.tail_bound += std::abs(w) / (double)ell * dv.tail_bound;
            out.truncation_c = std::max(out.truncation_c, dv.truncation_c);
            ell_max_seen = std::max(ell_max_seen, ell);
        }
        // remainder over ell | L^inf beyond L_max: the c-series at n ell^2 sits below
        // E sqrt(ell)(1+log ell); Rankin closes the smooth sum
        if (!ell_primes.empty()) {
            double E = series_growth_envelope(kappa, lw.M, m, n, cond, cond_star);
            double rem = 2.0 * M_PI * E * rankin_smooth_tail(ell_primes, opts.L_max);
            out.tail_bound += std::abs(w) * rem;
        }
    }
    out.ell_truncation = ell_max_seen;
    return out;
}

DeltaValue delta_star(int kappa, int64_t N, const DirichletCharacter& chi, int64_t m, int64_t n,
                      const StarOptions& opts) {
    if (chi.modulus() != N) throw std::invalid_argument("delta_star: chi must be mod N");
    std::vector<LevelWeight> weights;
    for (int64_t L : divisors(N)) {
        int muL = arith::mu(L);
        if (muL == 0) continue;
        int64_t M = N / L;
        weights.push_back({L, M, Rational(muL) * r_factor(M, L, chi)});
    }
    return newform_assembly(kappa, N, chi, m, n, weights, opts);
}

DeltaValue harmonic_average(int kappa, int64_t N, const DirichletCharacter& chi, int64_t m,
                            int64_t n, const StarOptions& opts) {
    if (chi.modulus() != N) throw std::invalid_argument("harmonic_average: chi must be mod N");
    std::vector<LevelWeight> weights;
    Rational psiN(arith::psi(N));
    for (int64_t L : divisors(N)) {
        int muL = arith::mu(L);
        if (muL == 0) continue;
        int64_t M = N / L;
        Rational w = Rational(muL) * Rational(bigint(M)) * f_factor(M, chi) / psiN;
        for (auto& [p, e] : factor(M).factors)
            if (e >= 2) w *= Rational(bigint(p) * p - 1, bigint(p) * p);
        weights.push_back({L, M, w});
    }
    return newform_assembly(kappa, N, chi, m, n, weights, opts);
}

double ils_majorant(int64_t m, int64_t n, int64_t W, int kappa, int64_t cond, int64_t cond_star) {
    double condf = std::pow((double)cond, 0.25) * std::pow((double)cond_star, 0.25);
    int64_t g3 = arith::gcd3(m, n, W);
    int64_t g = std::gcd(m, n);
    double mn = (double)m * (double)n;
    return condf * std::sqrt((double)g3) * (double)arith::d3(g) * (double)arith::d(W) /
           ((double)W * std::pow((double)kappa, 5.0 / 6.0)) *
           std::sqrt(mn / (std::sqrt(mn) + (double)kappa * (double)W)) * std::log(2.0 * mn);
}

BResult off_diagonal_B(double Y, int64_t m, int64_t W, int64_t N, const DirichletCharacter& chi,
                       int64_t Q, int kappa, int64_t C) {
    if (W < 1 || Q < 1 || N < 1 || N % (W * Q) != 0)
        throw std::invalid_argument("off_diagonal_B: need W*Q | N");
    if (W % chi.conductor() != 0)
        throw std::invalid_argument("off_diagonal_B: need cond(chi) | W");
    BResult out;
    if (Y < 1.0) return out;
    int64_t M = W * Q;
    if (C == 0) C = default_cutoff(W, m, (int64_t)(Y * Y) + 1);
    C = std::max<int64_t>(C / W * W, W);
    expsums::KloostermanEngine eng(&chi);
    std::vector<int64_t> q_primes;
    for (auto& [p, e] : factor(Q).factors)
        if (W % p != 0) q_primes.push_back(p);
    auto qs = arith::smooth_numbers(q_primes, (int64_t)1 << 20);
    int64_t cond = chi.conductor(), cond_star = chi.squarefree_conductor();
    for (int64_t ell = 1; (double)ell <= Y; ell++) {
        if (std::gcd(ell, M) != 1) continue;
        for (int64_t q : qs) {
            int64_t ql = q * ell;
            double maj = ils_majorant(m, ql * ql, W, kappa, cond, cond_star) / (double)ql;
            if (maj < 1e-16 * (1.0 + std::abs(out.value))) {
                if (q > 1) break;  // deeper q only shrink
                continue;
            }
            out.ils_majorant += maj;
            double x = 4.0 * M_PI * (double)ql * std::sqrt((double)m);
            cplx series(0, 0);
            for (int64_t c = W; c <= C; c += W) {
                double bj = analytic::bessel_j(kappa - 1, x / (double)c);
                if (bj != 0.0) series += eng.sum(m, ql * ql, c) * (bj / (double)c);
            }
            out.value += std::conj(chi.prim_eval(ql)) / (double)ql * series;
            out.terms++;
        }
    }
    return out;
}

} // namespace hecke::petersson
