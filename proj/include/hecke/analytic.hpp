#ifndef HECKE_ANALYTIC_HPP
#define HECKE_ANALYTIC_HPP

#include <cstdint>

namespace hecke::analytic {

// J_k(x) for integer k in [0, 200], x in [0, 1e5].
// Relative accuracy ~1e-10 down to magnitude 1e-280, absolute ~1e-290 below that.
double bessel_j(int k, double x);

// Chebyshev U_j by the three-term recurrence, j <= 64.
double chebyshev_u(int j, double x);

// Gamma(kappa-1) / (4 pi)^(kappa-1), evaluated in log space.
double c_kappa(int kappa);

struct TailBoundInput {
    int kappa = 2;            // weight, >= 2
    std::int64_t N = 1;       // level; the sum runs over c == 0 mod N
    std::int64_t m = 1;
    std::int64_t n = 1;
    std::int64_t C = 1;       // truncation point, >= N
    std::int64_t cond = 1;       // conductor of the twist
    std::int64_t cond_star = 1;  // its squarefree part
};

// Certified upper bound for | sum_{c > C, N | c} S_chi(m,n,c)/c * J_{kappa-1}(4 pi sqrt(mn)/c) |.
// Majorizes each term by the Weil bound times the small-argument Bessel bound
// (x/2)^{kappa-1}/Gamma(kappa) and closes the divisor-weighted series by an
// integral estimate.  Monotone decreasing in C.  For kappa = 2 the input must
// satisfy C >= 8 pi sqrt(mn).  The non-certified divisor-bound variant
// (config.certified_divisor_bound = false) uses d(n) <= n^{1.066/ln ln n}.
double petersson_tail_bound(const TailBoundInput& in);

// Certified upper bound for | sum_{c >= lo, N | c} S/c * J | over the whole series,
// splitting at the Bessel transition point x = 4 pi sqrt(mn).  Used to cap the
// ell-sums of the newform formula.
double full_series_bound(int kappa, std::int64_t N, std::int64_t m, std::int64_t n,
                         std::int64_t cond, std::int64_t cond_star);

// raw small-argument tail: certified bracket for
// sum_{c > C, N|c} d(c) c^{1/2-kappa} * (x/2)^{kappa-1} / Gamma(kappa),
// without gcd/conductor prefactors; requires C >= N
double tail_series_raw(int kappa, std::int64_t N, double x, std::int64_t C);

} // namespace hecke::analytic

#endif
