#ifndef HECKE_PETERSSON_HPP
#define HECKE_PETERSSON_HPP

#include <optional>

#include "hecke/characters.hpp"
#include "hecke/types.hpp"

namespace hecke::petersson {

using chars::DirichletCharacter;

// Local factor a_{N,chi}(p) at p | N: 1 if chi is not a character mod N/p,
// 1/p if it is and p^2 does not divide N, 0 otherwise.
Rational a_ogg(int64_t p, int64_t N, const DirichletCharacter& chi);

// F(M,chi) = prod_{p || M, cond_p = 1} (1 + 1/p) * prod_{p^a || M, a>=2, cond_p = a} (1 - 1/p)^{-1}
Rational f_factor(int64_t M, const DirichletCharacter& chi);

// R(M,L,chi) = (1/L) prod_{p^2|L, p∤M} (1 - 1/p^2)^{-1} prod_{p|(M,L)} (1 - a_{M,chi}(p)/p)^{-1}
Rational r_factor(int64_t M, int64_t L, const DirichletCharacter& chi);

// psi(N) [cond|N] = sum_{LM=N} M F(M,chi) [cond|M] prod_{p^2|M} (1 - 1/p^2), exact
bool verify_psi_identity(int64_t N, const DirichletCharacter& chi);

// R(p^b,p^a) R(p^g,p^{b-g}) = R(p^g,p^{a+b-g}); hypotheses a,b >= 0, 0 <= g <= b,
// cond_p(chi) <= b-1.  Violated hypotheses throw; the unchecked variant reports
// whether the equality happens to hold anyway.
bool verify_r_composition(int64_t p, int a, int b, int g, const DirichletCharacter& chi);
bool r_composition_unchecked(int64_t p, int a, int b, int g, const DirichletCharacter& chi);

// with N = LM and M = WQ:  R(M,L) R(W,Q) [cond|W] = R(W,LQ) [cond|W], exact
bool verify_inversion_helper(int64_t N, int64_t W, int64_t Q, int64_t L,
                             const DirichletCharacter& chi);

// psi(LM)/M prod_{p|LM} (1-1/p)(1-a_{LM,chi}(p)/p)^{-1} R(M,L,chi)
//   = prod_{p^2|M} (1-1/p^2) F(M,chi),  requires cond(chi) | M
bool verify_weight_identity(int64_t L, int64_t M, const DirichletCharacter& chi);

struct DeltaValue {
    cplx value{0.0, 0.0};
    double tail_bound = 0.0;  // certified bound on |true value - value|
    int64_t truncation_c = 0;
    std::optional<int64_t> ell_truncation;
};

// Geometric side of the Petersson formula:
// delta(m,n) + 2 pi i^{-kappa} sum_{N | c <= C} S_chi(m,n,c)/c J_{kappa-1}(4 pi sqrt(mn)/c).
// chi must have modulus N and parity (-1)^kappa.  C = 0 picks the default
// max(1000 N, 32 pi sqrt(mn)).  kappa = 2 requires C >= 8 pi sqrt(mn).
DeltaValue delta_geometric(int kappa, int64_t N, const DirichletCharacter& chi, int64_t m,
                           int64_t n, int64_t C = 0);

struct StarOptions {
    int64_t C_main = 0;   // c-cutoff for the level-N evaluations (0 = default policy)
    int64_t C_sub = 0;    // c-cutoff for the lower-level evaluations
    int64_t L_max = 1000; // largest ell evaluated; the rest is folded into the tail bound
};

// Newform average Delta*_{kappa,N,chi}(m,n) assembled from the full-level formula:
// sum_{LM=N} mu(L) R(M,L,chi) sum_{ell | L^inf, (ell,M)=1} conj(chi)(ell)/ell
//   * Delta_{kappa,M,chi}(m, n ell^2).
// Summands with cond(chi) not dividing M are 0 by definition.  Requires (mn,N)=1.
DeltaValue delta_star(int kappa, int64_t N, const DirichletCharacter& chi, int64_t m, int64_t n,
                      const StarOptions& opts = {});

// Harmonic average A^h[conj(lambda(m)) lambda(n)] =
// (1/psi(N)) sum_{LM=N} mu(L) M F(M,chi) prod_{p^2|M}(1-1/p^2) sum_ell ...
DeltaValue harmonic_average(int kappa, int64_t N, const DirichletCharacter& chi, int64_t m,
                            int64_t n, const StarOptions& opts = {});

struct BResult {
    cplx value{0.0, 0.0};
    double ils_majorant = 0.0;  // termwise majorant with constant 1
    int64_t terms = 0;
};

// Off-diagonal block B(Y,m,W): double sum over ell <= Y coprime to W*Q and
// q | Q^inf coprime to W of conj(chi)(q ell)/(q ell) times the c-series of
// twisted Kloosterman sums weighted by J_{kappa-1}(4 pi q ell sqrt(m)/c), c == 0 mod W, c <= C.
BResult off_diagonal_B(double Y, int64_t m, int64_t W, int64_t N, const DirichletCharacter& chi,
                       int64_t Q, int kappa, int64_t C);

// termwise majorant for the c-series (constant 1): cond^{1/4} cond*^{1/4}
// (m,n,W)^{1/2} d3((m,n)) d(W) / (W kappa^{5/6}) * (mn/(sqrt(mn)+kappa W))^{1/2} log(2mn)
double ils_majorant(int64_t m, int64_t n, int64_t W, int kappa, int64_t cond, int64_t cond_star);

// certified growth envelope E with
//   sum_{c == 0 mod M} |S_chi(m, n s^2, c)|/c |J_{kappa-1}(4 pi s sqrt(mn)/c)|
//     <= E * sqrt(s) (1 + log s)   for every integer s >= 1;
// built from the head/tail split at the Bessel transition, taking the worse of
// the base point and the regime switch so the envelope holds on both sides
double series_growth_envelope(int kappa, int64_t M, int64_t m, int64_t n, int64_t cond,
                              int64_t cond_star);

// certified bound for sum over S-smooth ell > T of ell^{-1/2} (1 + log ell)
// via (1 + log ell) <= 3.34 ell^{1/8} and Rankin with exponent 1/4
double rankin_smooth_tail(const std::vector<int64_t>& primes, int64_t T);

} // namespace hecke::petersson

#endif
