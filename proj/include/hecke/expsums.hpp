#ifndef HECKE_EXPSUMS_HPP
#define HECKE_EXPSUMS_HPP

#include <optional>
#include <vector>
#include "hecke/characters.hpp"
#include "hecke/types.hpp"

namespace hecke::expsums {

using chars::DirichletCharacter;

struct KloostermanQuery {
    int64_t a = 0, b = 0;
    int64_t c = 1;
    std::optional<DirichletCharacter> chi;  // modulus must divide c when present
};

// S(a,b,c) = sum over units d mod c of e((ad + a^{-1}... ) -- classical sum; S(a,b,1) = 1.
cplx kloosterman(int64_t a, int64_t b, int64_t c);

// S_chi(a,b,c) over units x mod c of chi(x) e((ax + b xbar)/c).
// Requires modulus(chi) | c.  Fast path: CRT factorization + generator walks.
cplx twisted_kloosterman(const DirichletCharacter& chi, int64_t a, int64_t b, int64_t c);

// Same sum but chi is evaluated through the primitive character inducing it;
// only conductor(chi) | c is required.  This is the evaluation the
// character-averaged sums below need when the modulus does not divide c.
cplx twisted_kloosterman_primitive(const DirichletCharacter& chi, int64_t a, int64_t b, int64_t c);

// Reference implementation (per-unit modular inverses); test oracle.
cplx twisted_kloosterman_direct(const DirichletCharacter& chi, int64_t a, int64_t b, int64_t c);

// d(c) (a,b,c)^{1/2} c^{1/2} cond^{1/4} cond*^{1/4}
double weil_bound(const DirichletCharacter& chi, int64_t a, int64_t b, int64_t c);
double weil_bound_classical(int64_t a, int64_t b, int64_t c);

// Reusable engine: builds the local tables for one character once, then
// evaluates S_chi(a,b,c) for many c.  chi = nullptr means untwisted.
class KloostermanEngine {
  public:
    explicit KloostermanEngine(const DirichletCharacter* chi);
    cplx sum(int64_t a, int64_t b, int64_t c) const;  // requires cond | c
    int64_t conductor() const { return cond_; }

  private:
    int64_t cond_ = 1;
    std::vector<std::pair<int64_t, int64_t>> local_mods_;     // (p, p^f) parts of the conductor
    std::vector<std::vector<cplx>> local_tables_;             // chi_p values mod p^f
    cplx local_sum(int64_t p, int64_t pe, int64_t a, int64_t b, size_t chi_slot) const;
};

// Character-averaged sums over eps mod N with cond(eps) | W.
struct TWQuery {
    int64_t W = 1, N = 1;  // W | N^2
    int64_t d = 1;         // (d, N) = 1
    int64_t a = 0, b = 1;  // (b, W) = 1
    int64_t c = 1;         // W | c, c >= 1
    int kappa = 0;         // parity selector, used by t_sum
};

enum class TWMode { Brute, Closed };

// T'_W(a,b,c) = sum over eps mod N, cond(eps)|W of eps(d) conj(eps)(b) F(W,eps) S_eps(a,b,c).
// Brute sums characters directly; Closed requires c and W powers of one prime and
// evaluates the incomplete-Kloosterman case formulas.
cplx t_prime_sum(const TWQuery& q, TWMode mode);

// general c: factor c and multiply the local closed forms with twisted arguments
cplx t_prime_factored(const TWQuery& q);

// T_W: same sum restricted to eps(-1) = (-1)^kappa.  Definition (brute force).
cplx t_sum(const TWQuery& q);

// (1/2) [ T'(a,b,c;d) + (-1)^kappa T'(-a,-b,c;-d) ]; must agree with t_sum
cplx t_sum_halfsum(const TWQuery& q, TWMode mode);

// psi(c1) d(c2) (a,b,c2)^{1/2} c2^{1/2}, with c1 the W-smooth part of c
double tsum_bound(int64_t W, int64_t a, int64_t b, int64_t c);

// number of characters mod N with conductor dividing W (term-count bookkeeping for tolerances)
int64_t tw_character_count(int64_t N, int64_t W);

} // namespace hecke::expsums

#endif
