#ifndef HECKE_MODFORMS_HPP
#define HECKE_MODFORMS_HPP

#include <map>
#include <vector>

#include "hecke/types.hpp"

namespace hecke::modforms {

// Exact integer q-expansion of a cusp form, coefficients a(1..precision).
struct QExpansion {
    int64_t level = 1;
    int weight = 0;
    int precision = 0;
    std::vector<bigint> a;  // a[n]; a[0] unused

    const bigint& coeff(int64_t n) const;
};

// Integer power series c[0..prec] (Eisenstein series and products).
struct IntSeries {
    int prec = 0;
    int weight = 0;
    std::vector<bigint> c;
};

// q^{sum d r / 24} prod_{(d,r)} prod_n (1 - q^{dn})^r, exact integers.
// Requires sum d*r divisible by 24 and sum r even; level = lcm of the divisors.
QExpansion eta_product(const std::vector<std::pair<int, int>>& factors, int precision);

// E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n for k in {4, 6, 8, 10, 14} (integer coefficients)
IntSeries eisenstein(int k, int precision);

// f * E, weight adds
QExpansion multiply(const QExpansion& f, const IntSeries& E);

// T_m f with a_{T_m f}(n) = sum_{d | (m,n), (d,level)=1} d^{weight-1} a_f(mn/d^2);
// output precision floor(P/m)
QExpansion hecke_apply(int64_t m, const QExpansion& f);

// A Hecke newform with exact coefficients; eigenvalues extend multiplicatively,
// so a(n) is available whenever every prime factor of n is <= precision.
class NewformData {
  public:
    NewformData(QExpansion q);
    int64_t level() const { return q_.level; }
    int weight() const { return q_.weight; }
    int precision() const { return q_.precision; }
    const QExpansion& expansion() const { return q_; }

    bigint a(int64_t n) const;     // exact, via Hecke multiplicativity
    double lambda(int64_t n) const;  // a(n) / n^{(weight-1)/2}
    Rational lambda_sq_exact(int64_t ell) const;  // lambda(ell^2) = a(ell^2)/ell^{weight-1}

    // Deligne bound a(p)^2 <= 4 p^{weight-1} checked exactly for all stored primes
    bool deligne_ok() const;

  private:
    QExpansion q_;
};

// shipped oracle eigenforms: the one-dimensional level-1 spaces and level 11 weight 2
enum class Form { Delta, E4Delta, E6Delta, E8Delta, E10Delta, E14Delta, Level11 };

const NewformData& oracle_form(Form f, int min_precision);

// the unique oracle form of the given space, if shipped (excluding zero spaces)
const NewformData* oracle_by_space(int kappa, int64_t N, int min_precision = 256);
bool space_is_zero(int kappa, int64_t N);  // true for the shipped dimension-0 spaces

// rho_f(n) = sum_{n = m^2 ell} conj(eps)(ell) lambda_f(ell^2) for (n, level) = 1, else 0
Rational rho_exact(const NewformData& f, int64_t n);
std::vector<Rational> rho_coeffs(const NewformData& f, int64_t X);
Rational omega_exact(const NewformData& f, int64_t x);  // sum_{n<=x} rho(n)/n
double omega_partial(const NewformData& f, int64_t x);  // double path for large x

// inversion: conj(eps)(n) lambda_f(n^2) = sum_{m^2 ell = n} mu(m) rho_f(ell), exact
bool rho_inversion_roundtrip(const NewformData& f, int64_t n_max);

struct NormResult {
    double norm = 0.0;        // <f,f> over Gamma_0(level)
    double error_bar = 0.0;   // heuristic, from the two truncation lengths
    double L_ad2 = 0.0;       // naive adjoint-square value at 1 used for the norm
    double omega_X = 0.0;
    double omega_2X = 0.0;
    int64_t X = 0;
};

// <f,f> = Vol X_0(N) Gamma(k) L(1,Ad^2 f) / (zeta^{(N)}(2) (4 pi)^k), where the
// prime-to-N part of L(1,Ad^2 f) is the partial sum omega(2X) and the p | N local
// factors are (1 - 1/p)(1 - a_{N,eps}(p)/p)^{-1}.  Error bar is the heuristic
// ratio-of-truncations gap; not a certified bound.
NormResult petersson_norm(const NewformData& f, int64_t X);

// ---------------------------------------------------------------------------
// local xi machinery for the oldclass basis

struct LocalData {
    int64_t p = 2;
    cplx lambda_p{0.0, 0.0};  // lambda_f(p)
    cplx eps_p{1.0, 0.0};     // nebentype at p (0 when p divides the level M)
    int eps0_M = 1;           // trivial character mod M at p
};

struct XiTable {
    LocalData d;
    cplx xi(int nu, int j) const;  // xi_{p^nu}(p^j); zero outside the five patterns
    double r_f() const;            // 1 - |lambda_p|^2 / (p (1 + eps0/p)^2)
};

// multiplicative lambda built from per-prime Hecke recurrences
class LambdaProvider {
  public:
    // p -> (lambda_p, chi(p)); primes absent from the map get lambda from `fallback`
    LambdaProvider(std::map<int64_t, std::pair<cplx, cplx>> local, std::uint64_t fallback_seed);
    cplx operator()(int64_t n) const;
    cplx prime_power(int64_t p, int e) const;

  private:
    std::map<int64_t, std::pair<cplx, cplx>> local_;
    std::uint64_t seed_;
};

enum class VMode { Definition, Closed };

// V_{p^alpha}(m,n,f) = sum_{d | p^alpha} Xi_d(m,n,f); Definition computes the raw
// convolution, Closed evaluates the two case formulas (requires p not dividing (m,n)).
cplx v_palpha(int64_t m, int64_t n, int alpha, const XiTable& xi, const LambdaProvider& lam,
              VMode mode);

// a_{f^{(g)}}(n) = sum_{d | (g,n)} xi_g(d) d^{weight/2} a_f(n/d), xi jointly multiplicative
cplx oldform_coeff(const NewformData& f, const std::map<int64_t, XiTable>& xi, int64_t g,
                   int64_t n);

struct RfIdentityReport {
    double resid_rank1 = 0.0;  // 1 + |xi_p(1)|^2 - r^{-1}
    double resid_rank2 = 0.0;  // 1 + |xi_p(1)|^2 + |xi_{p^2}(1)|^2 - r^{-1}(1-eps0/p^2)^{-1}
    double resid_series = 0.0; // sum_a conj(eps)(p^a) lambda(p^{2a}) p^{-a} - ((1+1/p) r)^{-1}
    double series_tail = 0.0;  // geometric bound on the dropped part of the series
    bool ok(double tol) const;
};

// requires |lambda_p|^2 = conj(eps_p) lambda_p^2 when p does not divide the level
RfIdentityReport r_f_identities(const XiTable& xi, const LambdaProvider& lam);

} // namespace hecke::modforms

#endif
