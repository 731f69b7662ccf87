#include "hecke/census.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "hecke/analytic.hpp"
#include "hecke/arith.hpp"
#include "hecke/config.hpp"

namespace hecke::census {

using arith::mod_reduce;

namespace {

struct Fq {
    int64_t q;
    std::vector<int8_t> chi2;    // quadratic character, chi2[0] = 0
    std::vector<int32_t> root;   // one square root when chi2 = 1

    explicit Fq(int64_t q_) : q(q_), chi2(q_, -1), root(q_, 0) {
        chi2[0] = 0;
        for (int64_t y = 1; y < q; y++) {
            int64_t s = y * y % q;
            chi2[s] = 1;
            root[s] = (int32_t)y;
        }
    }
    int64_t add(int64_t a, int64_t b) const { return (a + b) % q; }
    int64_t sub(int64_t a, int64_t b) const { return mod_reduce(a - b, q); }
    int64_t mul(int64_t a, int64_t b) const { return a * b % q; }
    int64_t inv(int64_t a) const { return arith::mod_inverse(a, q); }
    int64_t rhs(int64_t a, int64_t b, int64_t x) const {
        return (x * x % q * x + a * x + b) % q;
    }
};

struct Pt {
    int64_t x = 0, y = 0;
    bool inf = true;
};

Pt ec_add(const Fq& F, int64_t a, const Pt& P, const Pt& Q) {
    if (P.inf) return Q;
    if (Q.inf) return P;
    if (P.x == Q.x) {
        if (F.add(P.y, Q.y) == 0) return {};  // opposite points
        // doubling
        int64_t lam = F.mul(F.add(F.mul(3, F.mul(P.x, P.x)), mod_reduce(a, F.q)),
                            F.inv(F.mul(2, P.y)));
        int64_t x3 = F.sub(F.mul(lam, lam), F.mul(2, P.x));
        int64_t y3 = F.sub(F.mul(lam, F.sub(P.x, x3)), P.y);
        return {x3, y3, false};
    }
    int64_t lam = F.mul(F.sub(Q.y, P.y), F.inv(F.sub(Q.x, P.x)));
    int64_t x3 = F.sub(F.sub(F.mul(lam, lam), P.x), Q.x);
    int64_t y3 = F.sub(F.mul(lam, F.sub(P.x, x3)), P.y);
    return {x3, y3, false};
}

Pt ec_mul(const Fq& F, int64_t a, Pt P, int64_t k) {
    Pt R;
    while (k > 0) {
        if (k & 1) R = ec_add(F, a, R, P);
        P = ec_add(F, a, P, P);
        k >>= 1;
    }
    return R;
}

std::vector<Pt> all_points(const Fq& F, int64_t a, int64_t b) {
    std::vector<Pt> pts;
    pts.push_back({});  // infinity
    for (int64_t x = 0; x < F.q; x++) {
        int64_t z = F.rhs(a, b, x);
        if (z == 0) {
            pts.push_back({x, 0, false});
        } else if (F.chi2[z] == 1) {
            pts.push_back({x, F.root[z], false});
            pts.push_back({x, F.q - F.root[z], false});
        }
    }
    return pts;
}

int64_t point_order(const Fq& F, int64_t a, const Pt& P, int64_t M,
                    const std::vector<std::pair<int64_t, int>>& mfac) {
    int64_t ord = M;
    for (auto& [l, e] : mfac) {
        while (ord % l == 0 && ec_mul(F, a, P, ord / l).inf) ord /= l;
    }
    return ord;
}

std::pair<int64_t, int64_t> group_structure_impl(const Fq& F, int64_t a, int64_t b) {
    auto pts = all_points(F, a, b);
    int64_t M = (int64_t)pts.size();
    auto mfac = arith::factor(M).factors;
    int64_t expo = 1;
    for (auto& P : pts) {
        if (P.inf) continue;
        expo = std::lcm(expo, point_order(F, a, P, M, mfac));
        if (expo == M) break;  // cyclic, done
    }
    return {expo, M / expo};
}

} // namespace

int64_t count_points(int64_t q, int64_t a, int64_t b) {
    if (q < 5 || !arith::is_prime(q))
        throw std::invalid_argument("count_points: q must be a prime >= 5");
    a = mod_reduce(a, q);
    b = mod_reduce(b, q);
    if ((4 * a % q * a % q * a + 27 * b % q * b) % q == 0)
        throw std::invalid_argument("count_points: singular curve");
    Fq F(q);
    int64_t cnt = 1;
    for (int64_t x = 0; x < q; x++) cnt += 1 + F.chi2[F.rhs(a, b, x)];
    return cnt;
}

std::pair<int64_t, int64_t> group_structure(int64_t q, int64_t a, int64_t b) {
    Fq F(q);
    return group_structure_impl(F, mod_reduce(a, q), mod_reduce(b, q));
}

int64_t torsion_count(int64_t q, int64_t a, int64_t b, int64_t ell) {
    Fq F(q);
    a = mod_reduce(a, q);
    b = mod_reduce(b, q);
    int64_t cnt = 0;
    for (auto& P : all_points(F, a, b))
        if (ec_mul(F, a, P, ell).inf) cnt++;
    return cnt;
}

bool phi_A(int64_t a1, int64_t a2, const CurveRecord& rec) {
    if (a2 < 1 || a1 < 1 || a1 % a2 != 0)
        throw std::invalid_argument("phi_A: need invariant factors a2 | a1");
    return rec.n1 % a1 == 0 && rec.n2 % a2 == 0;
}

static std::vector<CurveRecord> build_census(int64_t q) {
    if (!arith::is_prime(q) || q < 5 || q > config().census_q_cap)
        throw std::invalid_argument("census: q must be a prime in [5, cap]");
    Fq F(q);
    std::vector<int64_t> u4(q), u6(q);
    for (int64_t u = 1; u < q; u++) {
        u4[u] = u * u % q * u % q * u % q;
        u6[u] = u4[u] * u % q * u % q;
    }
    std::vector<bool> seen(q * q, false);
    std::vector<CurveRecord> out;
    for (int64_t a = 0; a < q; a++) {
        for (int64_t b = 0; b < q; b++) {
            if (seen[a * q + b]) continue;
            if ((4 * a % q * a % q * a + 27 * b % q * b) % q == 0) continue;
            int aut = 0;
            for (int64_t u = 1; u < q; u++) {
                seen[F.mul(u4[u], a) * q + F.mul(u6[u], b)] = true;
                if (F.mul(u4[u], a) == a && F.mul(u6[u], b) == b) aut++;
            }
            CurveRecord rec;
            rec.q = q;
            rec.a = a;
            rec.b = b;
            rec.aut = aut;
            int64_t cnt = 1;
            for (int64_t x = 0; x < q; x++) cnt += 1 + F.chi2[F.rhs(a, b, x)];
            rec.t = q + 1 - cnt;
            auto [n1, n2] = group_structure_impl(F, a, b);
            rec.n1 = n1;
            rec.n2 = n2;
            // structural invariants; failures here mean a bug, not bad input
            if (rec.t * rec.t > 4 * q) throw std::logic_error("census: Hasse violation");
            if (n1 * n2 != cnt || n1 % n2 != 0 || (q - 1) % n2 != 0)
                throw std::logic_error("census: invariant-factor violation");
            if (aut != 2 && aut != 4 && aut != 6) throw std::logic_error("census: bad Aut count");
            out.push_back(rec);
        }
    }
    return out;
}

const std::vector<CurveRecord>& census_of(int64_t q) {
    static std::map<int64_t, std::vector<CurveRecord>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(q);
    if (it == cache.end()) it = cache.emplace(q, build_census(q)).first;
    return it->second;
}

Rational v_main(int64_t n1, int64_t n2, int64_t q) {
    if (n2 < 1 || n1 % n2 != 0) throw std::invalid_argument("v_main: need n2 | n1");
    int64_t g = std::gcd(q - 1, n1);
    if (g % n2 != 0)
        throw std::invalid_argument("v_main: requires n2 | (q-1, n1)");
    Rational out(bigint(n1), arith::psi(n1) * arith::phi(n1) * bigint(n2) * bigint(n2));
    for (auto& [l, e] : arith::factor(n1 / g).factors) {
        int vl = arith::vp(g / n2, l);
        out *= Rational(bigint_pow(bigint(l), 1 + 2 * vl) + 1, bigint_pow(bigint(l), 1 + 2 * vl));
    }
    return out;
}

MomentResult moment(int64_t q, int j, int64_t a1, int64_t a2) {
    if (j < 0 || j > 64) throw std::invalid_argument("moment: j must be in [0, 64]");
    MomentResult out;
    out.q = q;
    out.j = j;
    out.n1 = a1;
    out.n2 = a2;
    const auto& recs = census_of(q);
    Rational exact(0);
    long double acc = 0.0L;
    double s = 2.0 * std::sqrt((double)q);
    for (const auto& rec : recs) {
        if (!phi_A(a1, a2, rec)) continue;
        if (j == 0)
            exact += Rational(1, bigint(rec.aut));
        acc += (long double)analytic::chebyshev_u(j, (double)rec.t / s) / rec.aut;
    }
    out.expectation_exact = exact / Rational(bigint(q));
    out.expectation = j == 0 ? to_double(out.expectation_exact) : (double)(acc / q);
    if ((q - 1) % a2 == 0) {
        out.v_main = v_main(a1, a2, q);
        out.deviation = std::abs(out.expectation - (j == 0 ? to_double(out.v_main) : 0.0));
    } else {
        out.v_main = Rational(0);
        out.deviation = std::abs(out.expectation);
    }
    return out;
}

int64_t long_weierstrass_count(int64_t p, int64_t a1, int64_t a2, int64_t a3, int64_t a4,
                               int64_t a6) {
    if (!arith::is_prime(p)) throw std::invalid_argument("long_weierstrass_count: p must be prime");
    a1 = mod_reduce(a1, p); a2 = mod_reduce(a2, p); a3 = mod_reduce(a3, p);
    a4 = mod_reduce(a4, p); a6 = mod_reduce(a6, p);
    int64_t cnt = 1;
    for (int64_t x = 0; x < p; x++)
        for (int64_t y = 0; y < p; y++) {
            int64_t lhs = (y * y + a1 * x % p * y + a3 * y) % p;
            int64_t rhs = ((x * x % p * x) + a2 * x % p * x + a4 * x + a6) % p;
            if (lhs == rhs) cnt++;
        }
    return cnt;
}

int64_t count_points_ext2(int64_t p, int64_t a, int64_t b) {
    if (!arith::is_prime(p) || p < 5 || p > 200)
        throw std::invalid_argument("count_points_ext2: p must be a small prime >= 5");
    a = mod_reduce(a, p);
    b = mod_reduce(b, p);
    // F_{p^2} = F_p[s]/(s^2 - ns) with ns the least nonsquare
    Fq F(p);
    int64_t ns = 2;
    while (F.chi2[ns] == 1) ns++;
    auto mul = [&](std::pair<int64_t, int64_t> X, std::pair<int64_t, int64_t> Y) {
        return std::make_pair((X.first * Y.first + X.second * Y.second % p * ns) % p,
                              (X.first * Y.second + X.second * Y.first) % p);
    };
    // mark all squares of F_{p^2}
    std::vector<int8_t> sq(p * p, 0);
    for (int64_t u = 0; u < p; u++)
        for (int64_t v = 0; v < p; v++) {
            auto z = mul({u, v}, {u, v});
            sq[z.first * p + z.second] = 1;
        }
    int64_t cnt = 1;
    for (int64_t u = 0; u < p; u++)
        for (int64_t v = 0; v < p; v++) {
            auto x = std::make_pair(u, v);
            auto z = mul(mul(x, x), x);
            z.first = (z.first + a * u + b) % p;
            z.second = (z.second + a * v) % p;
            if (z.first == 0 && z.second == 0)
                cnt += 1;
            else
                cnt += sq[z.first * p + z.second] ? 2 : 0;
        }
    return cnt;
}

} // namespace hecke::census
