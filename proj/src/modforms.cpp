#include "hecke/modforms.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "hecke/arith.hpp"

namespace hecke::modforms {

using i128 = __int128;

const bigint& QExpansion::coeff(int64_t n) const {
    if (n < 1 || n > precision) throw std::out_of_range("QExpansion: coefficient out of range");
    return a[n];
}

// ---------------------------------------------------------------------------
// eta products

// prod_n (1 - q^{dn}) as sparse (exponent, coefficient) pairs, exponents <= cap
static std::vector<std::pair<int64_t, int64_t>> pentagonal(int64_t d, int64_t cap) {
    std::vector<std::pair<int64_t, int64_t>> out{{0, 1}};
    for (int64_t k = 1;; k++) {
        int64_t e1 = d * k * (3 * k - 1) / 2;
        int64_t e2 = d * k * (3 * k + 1) / 2;
        int64_t s = (k % 2) ? -1 : 1;
        if (e1 > cap) break;
        out.push_back({e1, s});
        if (e2 <= cap) out.push_back({e2, s});
    }
    return out;
}

// prod_n (1 - q^{dn})^3 = sum_k (-1)^k (2k+1) q^{d k(k+1)/2}
static std::vector<std::pair<int64_t, int64_t>> jacobi_cubed(int64_t d, int64_t cap) {
    std::vector<std::pair<int64_t, int64_t>> out;
    for (int64_t k = 0;; k++) {
        int64_t e = d * k * (k + 1) / 2;
        if (e > cap) break;
        out.push_back({e, (k % 2) ? -(2 * k + 1) : (2 * k + 1)});
    }
    return out;
}

static std::vector<int64_t> sparse_square_i64(const std::vector<std::pair<int64_t, int64_t>>& s,
                                              int64_t cap) {
    std::vector<int64_t> out(cap + 1, 0);
    for (size_t i = 0; i < s.size(); i++)
        for (size_t j = 0; j < s.size(); j++) {
            int64_t e = s[i].first + s[j].first;
            if (e > cap) break;
            out[e] += s[i].second * s[j].second;
        }
    return out;
}

static std::vector<int64_t> dense_square_i64(const std::vector<int64_t>& A, int64_t cap) {
    std::vector<int64_t> out(cap + 1, 0);
    for (int64_t n = 0; n <= cap; n++) {
        i128 acc = 0;
        for (int64_t i = 0; i <= n; i++)
            if (A[i]) acc += (i128)A[i] * A[n - i];
        if (acc > (i128)INT64_MAX || acc < -(i128)INT64_MAX)
            throw std::overflow_error("eta fast path: coefficient exceeds 64 bits");
        out[n] = (int64_t)acc;
    }
    return out;
}

static std::vector<bigint> dense_square_to_big(const std::vector<int64_t>& A, int64_t cap) {
    std::vector<bigint> out(cap + 1);
    for (int64_t n = 0; n <= cap; n++) {
        i128 acc = 0;
        for (int64_t i = 0; i <= n; i++)
            if (A[i]) acc += (i128)A[i] * A[n - i];
        out[n] = bigint(acc);
    }
    return out;
}

static std::vector<bigint> dense_mul_big(const std::vector<bigint>& A, const std::vector<bigint>& B,
                                         int64_t cap) {
    std::vector<bigint> out(cap + 1);
    for (int64_t i = 0; i <= cap && i < (int64_t)A.size(); i++) {
        if (A[i].is_zero()) continue;
        int64_t jmax = std::min<int64_t>(cap - i, (int64_t)B.size() - 1);
        for (int64_t j = 0; j <= jmax; j++) {
            if (B[j].is_zero()) continue;
            out[i + j] += A[i] * B[j];
        }
    }
    return out;
}

static std::vector<bigint> sparse_to_big(const std::vector<std::pair<int64_t, int64_t>>& s,
                                         int64_t cap) {
    std::vector<bigint> out(cap + 1);
    for (auto& [e, c] : s)
        if (e <= cap) out[e] += c;
    return out;
}

static std::vector<bigint> dense_pow_big(std::vector<bigint> base, int e, int64_t cap) {
    std::vector<bigint> out(cap + 1);
    out[0] = 1;
    while (e > 0) {
        if (e & 1) out = dense_mul_big(out, base, cap);
        e >>= 1;
        if (e) base = dense_mul_big(base, base, cap);
    }
    return out;
}

QExpansion eta_product(const std::vector<std::pair<int, int>>& factors, int precision) {
    if (precision < 2) throw std::invalid_argument("eta_product: precision too small");
    int64_t weight24 = 0;
    int rsum = 0;
    int64_t level = 1;
    for (auto& [d, r] : factors) {
        if (d < 1 || r < 1) throw std::invalid_argument("eta_product: need d, r >= 1");
        weight24 += (int64_t)d * r;
        rsum += r;
        level = std::lcm(level, (int64_t)d);
    }
    if (weight24 % 24 != 0)
        throw std::invalid_argument("eta_product: sum d*r must be divisible by 24");
    if (rsum % 2 != 0) throw std::invalid_argument("eta_product: sum r must be even");
    int64_t offset = weight24 / 24;
    if (offset >= precision) throw std::invalid_argument("eta_product: precision below leading term");
    int64_t cap = precision - offset;

    std::vector<bigint> dense;
    if (factors.size() == 1 && factors[0].first == 1 && factors[0].second == 24 && precision <= 100000) {
        // discriminant-form fast path: ((eta^3)^2)^2)^2 with 64/128-bit lanes
        auto j3 = jacobi_cubed(1, cap);
        auto eta6 = sparse_square_i64(j3, cap);
        auto eta12 = dense_square_i64(eta6, cap);
        dense = dense_square_to_big(eta12, cap);
    } else {
        dense.assign(cap + 1, bigint(0));
        dense[0] = 1;
        for (auto& [d, r] : factors) {
            int rr = r;
            if (rr % 3 == 0) {
                auto base = sparse_to_big(jacobi_cubed(d, cap), cap);
                dense = dense_mul_big(dense, dense_pow_big(std::move(base), rr / 3, cap), cap);
            } else {
                auto base = sparse_to_big(pentagonal(d, cap), cap);
                dense = dense_mul_big(dense, dense_pow_big(std::move(base), rr, cap), cap);
            }
        }
    }

    QExpansion out;
    out.level = level;
    out.weight = rsum / 2;
    out.precision = precision;
    out.a.assign(precision + 1, bigint(0));
    for (int64_t j = 0; j <= cap && offset + j <= precision; j++) out.a[offset + j] = dense[j];
    return out;
}

IntSeries eisenstein(int k, int precision) {
    static const std::map<int, int64_t> coef{{4, 240}, {6, -504}, {8, 480}, {10, -264}, {14, -24}};
    auto it = coef.find(k);
    if (it == coef.end()) throw std::invalid_argument("eisenstein: k must be one of 4,6,8,10,14");
    IntSeries out;
    out.prec = precision;
    out.weight = k;
    out.c.assign(precision + 1, bigint(0));
    out.c[0] = 1;
    std::vector<bigint> sig(precision + 1);
    for (int64_t d = 1; d <= precision; d++) {
        bigint pk = bigint_pow(bigint(d), k - 1);
        for (int64_t n = d; n <= precision; n += d) sig[n] += pk;
    }
    for (int64_t n = 1; n <= precision; n++) out.c[n] = it->second * sig[n];
    return out;
}

QExpansion multiply(const QExpansion& f, const IntSeries& E) {
    QExpansion out;
    out.level = f.level;
    out.weight = f.weight + E.weight;
    out.precision = std::min<int64_t>(f.precision, E.prec);
    out.a.assign(out.precision + 1, bigint(0));
    for (int64_t i = 1; i <= out.precision; i++) {
        if (f.a[i].is_zero()) continue;
        for (int64_t j = 0; i + j <= out.precision; j++) {
            if (E.c[j].is_zero()) continue;
            out.a[i + j] += f.a[i] * E.c[j];
        }
    }
    return out;
}

QExpansion hecke_apply(int64_t m, const QExpansion& f) {
    if (m < 1) throw std::invalid_argument("hecke_apply: m must be >= 1");
    QExpansion out;
    out.level = f.level;
    out.weight = f.weight;
    out.precision = f.precision / m;
    if (out.precision < 1) throw std::invalid_argument("hecke_apply: precision exhausted");
    out.a.assign(out.precision + 1, bigint(0));
    for (int64_t n = 1; n <= out.precision; n++) {
        bigint acc(0);
        for (int64_t dd : arith::divisors(std::gcd(m, n))) {
            if (std::gcd(dd, f.level) != 1) continue;
            acc += bigint_pow(bigint(dd), f.weight - 1) * f.a[m / dd * (n / dd)];
        }
        out.a[n] = acc;
    }
    return out;
}

// ---------------------------------------------------------------------------
// newforms

NewformData::NewformData(QExpansion q) : q_(std::move(q)) {
    if (q_.precision < 2 || q_.a.size() != (size_t)q_.precision + 1)
        throw std::invalid_argument("NewformData: malformed expansion");
    if (q_.a[1] != 1) throw std::invalid_argument("NewformData: not normalized (a(1) != 1)");
}

bigint NewformData::a(int64_t n) const {
    if (n < 1) throw std::invalid_argument("a(n): n must be >= 1");
    if (n <= q_.precision) return q_.a[n];
    bigint out(1);
    for (auto& [p, e] : arith::factor(n).factors) {
        if (p > q_.precision)
            throw std::out_of_range("a(n): prime beyond stored precision");
        bigint am(q_.a[p]), prev(1);  // a(p^1), a(p^0)
        bigint chi_pk = (q_.level % p == 0) ? bigint(0) : bigint_pow(bigint(p), q_.weight - 1);
        for (int j = 2; j <= e; j++) {
            bigint next = q_.a[p] * am - chi_pk * prev;
            prev = am;
            am = next;
        }
        out *= (e == 0) ? bigint(1) : am;
    }
    return out;
}

double NewformData::lambda(int64_t n) const {
    double out = 1.0;
    for (auto& [p, e] : arith::factor(n).factors) {
        if (p > q_.precision) throw std::out_of_range("lambda: prime beyond stored precision");
        double lp = to_double(q_.a[p]) / std::pow((double)p, (q_.weight - 1) / 2.0);
        double am = lp, prev = 1.0;
        double chi = (q_.level % p == 0) ? 0.0 : 1.0;
        for (int j = 2; j <= e; j++) {
            double next = lp * am - chi * prev;
            prev = am;
            am = next;
        }
        out *= am;
    }
    return out;
}

Rational NewformData::lambda_sq_exact(int64_t ell) const {
    return Rational(a(ell * ell), bigint_pow(bigint(ell), q_.weight - 1));
}

bool NewformData::deligne_ok() const {
    for (int64_t p = 2; p <= q_.precision; p++) {
        if (!arith::is_prime(p)) continue;
        if (q_.a[p] * q_.a[p] > 4 * bigint_pow(bigint(p), q_.weight - 1)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// oracle registry

static QExpansion build_form(Form f, int P) {
    switch (f) {
        case Form::Delta: return eta_product({{1, 24}}, P);
        case Form::Level11: return eta_product({{1, 2}, {11, 2}}, P);
        case Form::E4Delta: return multiply(eta_product({{1, 24}}, P), eisenstein(4, P));
        case Form::E6Delta: return multiply(eta_product({{1, 24}}, P), eisenstein(6, P));
        case Form::E8Delta: return multiply(eta_product({{1, 24}}, P), eisenstein(8, P));
        case Form::E10Delta: return multiply(eta_product({{1, 24}}, P), eisenstein(10, P));
        case Form::E14Delta: return multiply(eta_product({{1, 24}}, P), eisenstein(14, P));
    }
    throw std::logic_error("build_form: unknown form");
}

const NewformData& oracle_form(Form f, int min_precision) {
    static std::map<Form, NewformData> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    if (min_precision < 64) min_precision = 64;
    auto it = cache.find(f);
    if (it == cache.end() || it->second.precision() < min_precision) {
        NewformData nd(build_form(f, min_precision));
        if (it == cache.end())
            it = cache.emplace(f, std::move(nd)).first;
        else
            it->second = std::move(nd);
    }
    return it->second;
}

const NewformData* oracle_by_space(int kappa, int64_t N, int min_precision) {
    struct Entry { int k; int64_t n; Form f; };
    static const Entry table[] = {
        {12, 1, Form::Delta},   {16, 1, Form::E4Delta}, {18, 1, Form::E6Delta},
        {20, 1, Form::E8Delta}, {22, 1, Form::E10Delta}, {26, 1, Form::E14Delta},
        {2, 11, Form::Level11},
    };
    for (auto& e : table)
        if (e.k == kappa && e.n == N) return &oracle_form(e.f, min_precision);
    return nullptr;
}

bool space_is_zero(int kappa, int64_t N) {
    if (N == 1)
        return kappa < 12 || kappa == 14;  // even weights below 16 except 12
    if (kappa == 2) {
        static const int64_t genus0[] = {2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 16, 18, 25};
        for (auto n : genus0)
            if (n == N) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// adjoint-square series

Rational rho_exact(const NewformData& f, int64_t n) {
    if (std::gcd(n, f.level()) != 1) return Rational(0);
    Rational acc(0);
    for (int64_t m = 1; m * m <= n; m++) {
        if (n % (m * m)) continue;
        acc += f.lambda_sq_exact(n / (m * m));
    }
    return acc;
}

std::vector<Rational> rho_coeffs(const NewformData& f, int64_t X) {
    std::vector<Rational> out;
    out.reserve(X + 1);
    out.push_back(Rational(0));
    for (int64_t n = 1; n <= X; n++) out.push_back(rho_exact(f, n));
    return out;
}

Rational omega_exact(const NewformData& f, int64_t x) {
    Rational acc(0);
    for (int64_t n = 1; n <= x; n++) acc += rho_exact(f, n) / n;
    return acc;
}

bool rho_inversion_roundtrip(const NewformData& f, int64_t n_max) {
    for (int64_t n = 1; n <= n_max; n++) {
        Rational lhs = std::gcd(n, f.level()) == 1
                           ? Rational(f.a(n * n), bigint_pow(bigint(n), f.weight() - 1))
                           : Rational(0);
        Rational rhs(0);
        for (int64_t m = 1; m * m <= n; m++) {
            if (n % (m * m)) continue;
            rhs += arith::mu(m) * rho_exact(f, n / (m * m));
        }
        if (lhs != rhs) return false;
    }
    return true;
}

// lambda(ell^2) for all ell <= X via a smallest-prime-factor sieve
static std::vector<double> lambda_sq_table(const NewformData& f, int64_t X) {
    std::vector<int32_t> spf(X + 1, 0);
    for (int64_t i = 2; i <= X; i++)
        if (!spf[i])
            for (int64_t j = i; j <= X; j += i)
                if (!spf[j]) spf[j] = (int32_t)i;
    std::map<int64_t, std::vector<double>> powers;  // p -> lambda(p^{2e}), index e
    auto lam_sq_pp = [&](int64_t p, int e) {
        auto& v = powers[p];
        if ((int)v.size() <= e) {
            double lp = to_double(f.a(p)) / std::pow((double)p, (f.weight() - 1) / 2.0);
            double chi = (f.level() % p == 0) ? 0.0 : 1.0;
            std::vector<double> lam(2 * e + 1);
            lam[0] = 1.0;
            if (2 * e >= 1) lam[1] = lp;
            for (int j = 2; j <= 2 * e; j++) lam[j] = lp * lam[j - 1] - chi * lam[j - 2];
            v.clear();
            for (int j = 0; j <= e; j++) v.push_back(lam[2 * j]);
        }
        return v[e];
    };
    std::vector<double> out(X + 1, 0.0);
    out[1] = 1.0;
    for (int64_t n = 2; n <= X; n++) {
        int64_t p = spf[n], m = n;
        int e = 0;
        while (m % p == 0) { m /= p; e++; }
        out[n] = out[m] * lam_sq_pp(p, e);
    }
    return out;
}

double omega_partial(const NewformData& f, int64_t x) {
    auto lam2 = lambda_sq_table(f, x);
    int64_t N = f.level();
    std::vector<double> prefix(x + 1, 0.0);
    for (int64_t l = 1; l <= x; l++)
        prefix[l] = prefix[l - 1] + (std::gcd(l, N) == 1 ? lam2[l] / (double)l : 0.0);
    double acc = 0.0;
    for (int64_t k = 1; k * k <= x; k++)
        if (std::gcd(k, N) == 1) acc += prefix[x / (k * k)] / ((double)k * k);
    return acc;
}

NormResult petersson_norm(const NewformData& f, int64_t X) {
    if (X < 16) throw std::invalid_argument("petersson_norm: X too small");
    int64_t N = f.level();
    int kappa = f.weight();
    auto lam2 = lambda_sq_table(f, 2 * X);
    std::vector<double> prefix(2 * X + 1, 0.0);
    for (int64_t l = 1; l <= 2 * X; l++)
        prefix[l] = prefix[l - 1] + (std::gcd(l, N) == 1 ? lam2[l] / (double)l : 0.0);
    auto omega_at = [&](int64_t x) {
        double acc = 0.0;
        for (int64_t k = 1; k * k <= x; k++)
            if (std::gcd(k, N) == 1) acc += prefix[x / (k * k)] / ((double)k * k);
        return acc;
    };
    NormResult out;
    out.X = X;
    out.omega_X = omega_at(X);
    out.omega_2X = omega_at(2 * X);

    double L_N = 1.0;
    for (auto& [p, e] : arith::factor(N).factors) {
        double a_ogg = (e == 1) ? 1.0 / (double)p : 0.0;  // trivial nebentype
        L_N *= (1.0 - 1.0 / (double)p) / (1.0 - a_ogg / (double)p);
    }
    double zetaN2 = M_PI * M_PI / 6.0;
    for (auto& [p, e] : arith::factor(N).factors) zetaN2 *= 1.0 - 1.0 / ((double)p * p);
    double vol = M_PI / 3.0 * to_double(arith::psi(N));
    double pref = vol * std::exp(std::lgamma((double)kappa) - kappa * std::log(4.0 * M_PI)) / zetaN2;

    out.L_ad2 = L_N * out.omega_2X;
    out.norm = pref * out.L_ad2;
    out.error_bar = pref * L_N * 2.0 * std::abs(out.omega_2X - out.omega_X) + 1e-15 * std::abs(out.norm);
    return out;
}

// ---------------------------------------------------------------------------
// xi machinery

double XiTable::r_f() const {
    double p = (double)d.p;
    double base = 1.0 + (double)d.eps0_M / p;
    return 1.0 - std::norm(d.lambda_p) / (p * base * base);
}

cplx XiTable::xi(int nu, int j) const {
    if (nu < 0 || j < 0 || j > nu) return {0.0, 0.0};
    if (nu == 0) return {1.0, 0.0};
    double p = (double)d.p;
    double base = 1.0 + (double)d.eps0_M / p;
    double top = 1.0 / std::sqrt(r_f());
    if (nu == 1) {
        if (j == 1) return {top, 0.0};
        // j == 0
        return -std::conj(d.lambda_p) / (std::sqrt(p) * base) * top;
    }
    double top2 = top / std::sqrt(1.0 - (double)d.eps0_M / (p * p));
    if (j == nu) return {top2, 0.0};
    if (j == nu - 1) return -std::conj(d.lambda_p) / std::sqrt(p) * top2;
    if (j == nu - 2) return std::conj(d.eps_p) / p * top2;
    return {0.0, 0.0};
}

static std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

LambdaProvider::LambdaProvider(std::map<int64_t, std::pair<cplx, cplx>> local,
                               std::uint64_t fallback_seed)
    : local_(std::move(local)), seed_(fallback_seed) {}

cplx LambdaProvider::prime_power(int64_t p, int e) const {
    cplx lp, chip;
    auto it = local_.find(p);
    if (it != local_.end()) {
        lp = it->second.first;
        chip = it->second.second;
    } else {
        // deterministic synthetic eigenvalue in [-1.5, 1.5], trivial character
        std::uint64_t h = splitmix64(seed_ ^ (std::uint64_t)p);
        lp = cplx(((double)(h >> 11) / (double)(1ULL << 53)) * 3.0 - 1.5, 0.0);
        chip = cplx(1.0, 0.0);
    }
    cplx prev(1.0, 0.0), cur = lp;
    if (e == 0) return prev;
    for (int j = 2; j <= e; j++) {
        cplx next = lp * cur - chip * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

cplx LambdaProvider::operator()(int64_t n) const {
    cplx out(1.0, 0.0);
    for (auto& [p, e] : arith::factor(n).factors) out *= prime_power(p, e);
    return out;
}

cplx v_palpha(int64_t m, int64_t n, int alpha, const XiTable& xi, const LambdaProvider& lam,
              VMode mode) {
    if (alpha < 1) throw std::invalid_argument("v_palpha: alpha must be >= 1");
    int64_t p = xi.d.p;
    if (mode == VMode::Definition) {
        cplx acc(0.0, 0.0);
        for (int k = 0; k <= alpha; k++) {
            auto A = [&](int64_t x) {
                cplx s(0.0, 0.0);
                int64_t pj = 1;
                for (int j = 0; j <= k; j++) {
                    if (x % pj == 0) s += xi.xi(k, j) * std::sqrt((double)pj) * lam(x / pj);
                    if (pj > x / p) break;
                    pj *= p;
                }
                return s;
            };
            acc += std::conj(A(m)) * A(n);
        }
        return acc;
    }
    if (std::gcd(m, n) % p == 0)
        throw std::invalid_argument("v_palpha closed: requires p coprime to (m,n)");
    cplx lm = lam(m), ln = lam(n);
    double sp = std::sqrt((double)p);
    cplx x10 = xi.xi(1, 0), x11 = xi.xi(1, 1);
    cplx acc = std::conj(lm) * ln * (1.0 + std::norm(x10));
    cplx x20, x21, x22;
    if (alpha >= 2) {
        x20 = xi.xi(2, 0);
        x21 = xi.xi(2, 1);
        x22 = xi.xi(2, 2);
        acc += std::conj(lm) * ln * std::norm(x20);
    }
    if (m % p == 0) {
        cplx coef = std::conj(x11) * x10;
        if (alpha >= 2) coef += std::conj(x21) * x20;
        acc += std::conj(lam(m / p)) * ln * sp * coef;
    }
    if (n % p == 0) {
        cplx coef = std::conj(x10) * x11;
        if (alpha >= 2) coef += std::conj(x20) * x21;
        acc += std::conj(lm) * lam(n / p) * sp * coef;
    }
    if (alpha >= 2 && m % (p * p) == 0)
        acc += std::conj(lam(m / (p * p))) * ln * (double)p * std::conj(x22) * x20;
    if (alpha >= 2 && n % (p * p) == 0)
        acc += std::conj(lm) * lam(n / (p * p)) * (double)p * std::conj(x20) * x22;
    return acc;
}

cplx oldform_coeff(const NewformData& f, const std::map<int64_t, XiTable>& xi, int64_t g,
                   int64_t n) {
    auto xi_g = [&](int64_t dd) {  // jointly multiplicative: prod_p xi_{p^{v_p(g)}}(p^{v_p(dd)})
        cplx out(1.0, 0.0);
        for (auto& [p, e] : arith::factor(g).factors) {
            auto it = xi.find(p);
            if (it == xi.end()) throw std::invalid_argument("oldform_coeff: missing local data");
            out *= it->second.xi(e, arith::vp(dd, p));
        }
        return out;
    };
    cplx acc(0.0, 0.0);
    for (int64_t dd : arith::divisors(std::gcd(g, n))) {
        cplx w = xi_g(dd);
        if (w == cplx(0.0, 0.0)) continue;
        acc += w * std::pow((double)dd, f.weight() / 2.0) * to_double(f.a(n / dd));
    }
    return acc;
}

bool RfIdentityReport::ok(double tol) const {
    return resid_rank1 <= tol && resid_rank2 <= tol && resid_series <= tol + series_tail;
}

RfIdentityReport r_f_identities(const XiTable& xi, const LambdaProvider& lam) {
    RfIdentityReport rep;
    double p = (double)xi.d.p;
    double rinv = 1.0 / xi.r_f();
    rep.resid_rank1 = std::abs(1.0 + std::norm(xi.xi(1, 0)) - rinv);
    double rank2 = 1.0 + std::norm(xi.xi(1, 0)) + std::norm(xi.xi(2, 0));
    rep.resid_rank2 = std::abs(rank2 - rinv / (1.0 - (double)xi.d.eps0_M / (p * p)));
    if (xi.d.eps0_M == 1) {
        // p coprime to the level: sum_a conj(eps)(p^a) lambda(p^{2a}) / p^a
        const int A = 48;
        cplx acc(0.0, 0.0);
        cplx epsbar = std::conj(xi.d.eps_p);
        cplx epspow(1.0, 0.0);
        double pa = 1.0;
        for (int a_ = 0; a_ <= A; a_++) {
            acc += epspow * lam.prime_power(xi.d.p, 2 * a_) / pa;
            epspow *= epsbar;
            pa *= p;
        }
        double target = 1.0 / ((1.0 + 1.0 / p) * xi.r_f());
        rep.resid_series = std::abs(acc - cplx(target, 0.0));
        // |lambda(p^{2a})| <= 2a+1 (Deligne range), so the dropped terms are
        // below (2A+3) p^{-(A+1)} times a geometric factor < 4
        rep.series_tail = 4.0 * (2.0 * A + 3.0) * std::pow(p, -(double)(A + 1));
    }
    return rep;
}

} // namespace hecke::modforms
