#ifndef HECKE_CENSUS_HPP
#define HECKE_CENSUS_HPP

#include <vector>

#include "hecke/types.hpp"

namespace hecke::census {

// One F_q-isomorphism class of elliptic curves y^2 = x^3 + ax + b (char > 3).
struct CurveRecord {
    int64_t q = 0;
    int64_t a = 0, b = 0;  // lexicographically least orbit representative
    int64_t t = 0;         // trace of Frobenius, q + 1 - #E(F_q)
    int aut = 2;           // #{u in F_q^* : u^4 a = a, u^6 b = b}
    int64_t n1 = 1, n2 = 1;  // invariant factors of E(F_q), n2 | n1, n2 | q-1
};

// one record per isomorphism class; q prime in [5, census_q_cap]; cached
const std::vector<CurveRecord>& census_of(int64_t q);

// 1 + sum_x (1 + quadratic_character(x^3 + ax + b)); requires nonsingular curve
int64_t count_points(int64_t q, int64_t a, int64_t b);

// (n1, n2) with n1 the group exponent and n2 = #E / n1
std::pair<int64_t, int64_t> group_structure(int64_t q, int64_t a, int64_t b);

// number of points P with ell * P = O (brute force over all points)
int64_t torsion_count(int64_t q, int64_t a, int64_t b, int64_t ell);

// Z/a1 x Z/a2 embeds into the point group iff a1 | n1 and a2 | n2
bool phi_A(int64_t a1, int64_t a2, const CurveRecord& rec);

struct MomentResult {
    int64_t q = 0;
    int j = 0;
    int64_t n1 = 1, n2 = 1;
    Rational expectation_exact{0};  // meaningful for j = 0 (U_0 = 1)
    double expectation = 0.0;
    Rational v_main{0};
    double deviation = 0.0;  // |expectation - v_main [j=0]|
};

// E_q(U_j(t/2 sqrt q) Phi_A) = (1/q) sum_{A embeds} U_j(t/2 sqrt q)/|Aut|
MomentResult moment(int64_t q, int j, int64_t a1, int64_t a2);

// (n1/(psi(n1) phi(n1) n2^2)) prod_{l | n1/(q-1,n1)} (1 + l^{-1-2 v_l((q-1,n1)/n2)})
Rational v_main(int64_t n1, int64_t n2, int64_t q);

// direct double-loop count for a long Weierstrass model (any p >= 2), plus infinity
int64_t long_weierstrass_count(int64_t p, int64_t a1, int64_t a2, int64_t a3, int64_t a4,
                               int64_t a6);

// #E(F_{p^2}) for a short Weierstrass curve over F_p via explicit quadratic extension
int64_t count_points_ext2(int64_t p, int64_t a, int64_t b);

} // namespace hecke::census

#endif
