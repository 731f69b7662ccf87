#ifndef HECKE_TRACES_HPP
#define HECKE_TRACES_HPP

#include <optional>

#include "hecke/characters.hpp"
#include "hecke/types.hpp"

namespace hecke::traces {

using chars::DirichletCharacter;

// Main term ((kappa-1)/12) chi(sqrt(m)) m^{kappa/2-1} psi(N); zero unless m is a
// perfect square.  Requires parity(chi) = (-1)^kappa and (N, m) = 1.
// normalized = true divides by m^{(kappa-1)/2} (the T'_m normalization).
cplx main_term_mt1(int kappa, int64_t N, const DirichletCharacter& chi, int64_t m,
                   bool normalized = false);

// exact value when chi(sqrt m) is 0 or +-1 (always for trivial or quadratic chi);
// unnormalized only (the normalization m^{(kappa-1)/2} is irrational for non-squares
// but m is a square here, so the normalized value stays rational)
std::optional<Rational> main_term_mt1_exact(int kappa, int64_t N, const DirichletCharacter& chi,
                                            int64_t m, bool normalized = false);

// The three error envelopes, all with implied constant 1 and epsilon = 0.05.
// These are shapes for regime exploration, not certified bounds (the underlying
// asymptotic constants are ineffective).
struct Envelopes {
    double trivial_bound = 0.0;   // (kappa-1)/12 psi(N) d(m) m^{(kappa-1)/2}
    double eichler_selberg = 0.0; // (sigma(m) max_{f^2<4m} psi(f) + d(m) N^{1/2}) m^{(kappa-1)/2} d(N)
    double petersson = 0.0;       // N^{10/11} m^{(kappa-1)/2 + 1/44} kappa^{61/66} cond^{1/44} cond*^{1/44} (Nmk)^eps
    bool petersson_regime = false; // N^{8/13+eps} <= m <= N^{4-eps}
};
Envelopes error_envelopes(int kappa, int64_t N, const DirichletCharacter& chi, int64_t m);

// ((kappa-1)/24) m^{kappa/2-1} phi(N) psi(NM) (delta_N(sqrt(m) d, 1) + (-1)^kappa delta_N(sqrt(m) d, -1)),
// exact; requires M | N, (N, m) = 1; zero unless m is a perfect square
Rational main_term_mt2(int kappa, int64_t M, int64_t N, int64_t d, int64_t m);

// Exact trace of T'_m via the divisor-weighted newform sum, for the shipped spaces.
// The unnormalized sum d(L)-weighted over a_f(m) is an exact integer; the
// normalized trace is that integer divided by m^{(kappa-1)/2}.
struct ExactTrace {
    bigint unnormalized;
    int kappa = 0;
    int64_t m = 1;
    double normalized() const;
};
std::optional<ExactTrace> exact_trace_small(int kappa, int64_t N, int64_t m);

struct X0Prediction {
    int64_t q = 0;
    double main = 0.0;      // q + (p-1) psi(N)/12 [v even]
    double envelope = 0.0;  // min of three shapes times sqrt(q); constant 1, ineffective
};
// point-count predictor for the modular curve of level N over F_{p^v}; requires p prime, p coprime to N
X0Prediction x0_predict(int64_t N, int64_t p, int v);

// exact |X_0(11)(F_p)| = p + 1 - a_p from the level-11 oracle; p != 11
int64_t x0_exact_11(int64_t p);

} // namespace hecke::traces

#endif
