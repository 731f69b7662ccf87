#include "hecke/analytic.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "hecke/arith.hpp"
#include "hecke/config.hpp"

namespace hecke::analytic {

/*
 * Bessel J strategy: the ascending series is used wherever it is free of
 * cancellation (x <= 2 sqrt(k+1)) or where the cancellation costs at most
 * ~e^12 of the 64-bit long double mantissa (x <= 12).  Everywhere else a
 * backward (Miller) recurrence normalized by J_0 + 2 J_2 + 2 J_4 + ... = 1
 * is used.  Long double throughout buys the spare digits.
 */

static long double bessel_series(int k, long double x) {
    if (x == 0.0L) return k == 0 ? 1.0L : 0.0L;
    long double t0 = expl(k * logl(x / 2) - lgammal((long double)k + 1));
    long double sum = t0, term = t0;
    long double q = x * x / 4;
    for (int j = 1; j < 4000; j++) {
        term *= -q / ((long double)j * (j + k));
        sum += term;
        if (fabsl(term) < 1e-25L * fabsl(sum) + 1e-320L) break;
    }
    return sum;
}

static long double bessel_miller(int k, long double x) {
    int start = (int)std::ceil(std::max((double)k, (double)x) + 20.0 +
                               12.0 * std::cbrt(std::max((double)x, 1.0)));
    if (start % 2) start++;
    long double fjp1 = 0.0L;
    long double fj = 1e-300L;  // seed at order `start`
    long double target = (k == start) ? fj : 0.0L;
    long double norm = (start % 2 == 0) ? 2.0L * fj : 0.0L;  // J_0 + 2 sum_{i>=1} J_{2i} = 1
    for (int j = start; j >= 1; j--) {
        long double fjm1 = (2.0L * j / x) * fj - fjp1;
        fjp1 = fj;
        fj = fjm1;  // now holds order j-1
        if (j - 1 == k) target = fj;
        if ((j - 1) % 2 == 0) norm += (j == 1) ? fj : 2.0L * fj;
        if (fabsl(fj) > 1e280L) {
            fj *= 1e-280L;
            fjp1 *= 1e-280L;
            target *= 1e-280L;
            norm *= 1e-280L;
        }
    }
    return target / norm;
}

double bessel_j(int k, double x) {
    if (k < 0 || k > 200) throw std::invalid_argument("bessel_j: order must be in [0,200]");
    if (!(x >= 0.0) || x > 1e5) throw std::invalid_argument("bessel_j: argument must be in [0,1e5]");
    if (x == 0.0) return k == 0 ? 1.0 : 0.0;
    if (x <= 12.0 || (double)x * x <= 4.0 * (k + 1))
        return (double)bessel_series(k, (long double)x);
    return (double)bessel_miller(k, (long double)x);
}

double chebyshev_u(int j, double x) {
    if (j < 0 || j > 64) throw std::invalid_argument("chebyshev_u: order must be in [0,64]");
    double um = 1.0, uc = 2.0 * x;
    if (j == 0) return um;
    if (j == 1) return uc;
    for (int i = 2; i <= j; i++) {
        double un = 2.0 * x * uc - um;
        um = uc;
        uc = un;
    }
    return uc;
}

double c_kappa(int kappa) {
    if (kappa < 2) throw std::invalid_argument("c_kappa: weight must be >= 2");
    return std::exp(std::lgamma((double)kappa - 1) - (kappa - 1) * std::log(4.0 * M_PI));
}

// sum_{k > K} d(k) k^{-s} <= K^{1-s} [ 1 + (log K + 1)/(s-1) + zeta_ub(s) (1/K + 1/(s-1)) ],
// obtained from d(k) = sum_{ab=k} 1 and the integral test; zeta_ub(s) = 1 + 1/(s-1).
static double divisor_tail(double K, double s) {
    if (K < 1.0) K = 1.0;
    double zeta_ub = 1.0 + 1.0 / (s - 1.0);
    double bracket = 1.0 + (std::log(K) + 1.0) / (s - 1.0) + zeta_ub * (1.0 / K + 1.0 / (s - 1.0));
    return std::pow(K, 1.0 - s) * bracket;
}

// variant using d(k) <= k^{1.066/ln ln k} for k >= K; larger exponent slack, sharper constants
static double divisor_tail_heuristic(double K, double s) {
    if (K < 16.0) K = 16.0;
    double delta = 1.066 / std::log(std::log(K));
    if (s - delta <= 1.0) return INFINITY;
    return std::pow(K, 1.0 - s + delta) / (s - delta - 1.0);
}

double tail_series_raw(int kappa, std::int64_t N, double x, std::int64_t C) {
    if (kappa < 2 || N < 1 || C < N || !(x > 0.0))
        throw std::invalid_argument("tail_series_raw: bad parameters");
    double s = kappa - 0.5;
    double K = (double)C / (double)N;
    double tail = config().certified_divisor_bound ? divisor_tail(K, s)
                                                   : divisor_tail_heuristic(K, s);
    double lg = (kappa - 1) * std::log(x / 2.0) - std::lgamma((double)kappa);
    return (double)arith::d(N) * std::pow((double)N, 0.5 - kappa) * std::exp(lg) * tail;
}

double petersson_tail_bound(const TailBoundInput& in) {
    if (in.kappa < 2) throw std::invalid_argument("tail bound: weight must be >= 2");
    if (in.m < 1 || in.n < 1 || in.N < 1) throw std::invalid_argument("tail bound: bad parameters");
    if (in.C < in.N) throw std::invalid_argument("tail bound: C must be >= N");
    double x = 4.0 * M_PI * std::sqrt((double)in.m * (double)in.n);
    if (in.kappa == 2 && (double)in.C < 2.0 * x)
        throw std::invalid_argument("tail bound: kappa=2 requires C >= 8 pi sqrt(mn)");
    // per-term majorant: d(c) (m,n,c)^{1/2} c^{1/2} cond^{1/4} cond*^{1/4} / c
    //                    * (x/(2c))^{kappa-1} / Gamma(kappa)
    double pref = std::sqrt((double)std::gcd(in.m, in.n)) * std::pow((double)in.cond, 0.25) *
                  std::pow((double)in.cond_star, 0.25);
    return pref * tail_series_raw(in.kappa, in.N, x, in.C);
}

double full_series_bound(int kappa, std::int64_t N, std::int64_t m, std::int64_t n,
                         std::int64_t cond, std::int64_t cond_star) {
    double x = 4.0 * M_PI * std::sqrt((double)m * (double)n);
    double condf = std::pow((double)cond, 0.25) * std::pow((double)cond_star, 0.25);
    double G = std::sqrt((double)std::gcd(m, n));
    // c <= x: |J| <= 1, terms <= d(c) G c^{-1/2} condf
    double head = 0.0;
    for (std::int64_t c = N; (double)c <= x; c += N)
        head += (double)arith::d(c) / std::sqrt((double)c);
    head *= G * condf;
    // c > max(x, N): small-argument regime
    TailBoundInput ti;
    ti.kappa = kappa;
    ti.N = N;
    ti.m = m;
    ti.n = n;
    ti.cond = cond;
    ti.cond_star = cond_star;
    std::int64_t C0 = std::max<std::int64_t>(N, (std::int64_t)std::ceil(2.0 * x));
    ti.C = (C0 + N - 1) / N * N;  // round up to a multiple of N
    // extend head to cover (x, C0]
    for (std::int64_t c = N; c <= ti.C; c += N)
        if ((double)c > x) head += G * condf * (double)arith::d(c) / std::sqrt((double)c);
    return head + petersson_tail_bound(ti);
}

} // namespace hecke::analytic
