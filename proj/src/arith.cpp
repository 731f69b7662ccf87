#include "hecke/arith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hecke::arith {

Factorization factor(int64_t n) {
    if (n < 1) throw std::invalid_argument("factor: n must be >= 1");
    Factorization f;
    f.n = n;
    int64_t m = n;
    for (int64_t p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (m % p) continue;
        int e = 0;
        while (m % p == 0) { m /= p; e++; }
        f.factors.push_back({p, e});
    }
    if (m > 1) f.factors.push_back({m, 1});
    return f;
}

bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2))
        if (n % p == 0) return false;
    return true;
}

bigint psi(int64_t n) {
    bigint out(n);
    for (auto& [p, e] : factor(n).factors) { out /= p; out *= p + 1; }
    return out;
}

bigint phi(int64_t n) {
    bigint out(n);
    for (auto& [p, e] : factor(n).factors) { out /= p; out *= p - 1; }
    return out;
}

bigint sigma(int64_t n) {
    bigint out(1);
    for (auto& [p, e] : factor(n).factors) {
        bigint geo = (bigint_pow(bigint(p), e + 1) - 1) / (p - 1);
        out *= geo;
    }
    return out;
}

int64_t d(int64_t n) {
    int64_t out = 1;
    for (auto& [p, e] : factor(n).factors) out *= e + 1;
    return out;
}

int64_t d3(int64_t n) {
    // d3(p^e) = (e+1)(e+2)/2, multiplicative
    int64_t out = 1;
    for (auto& [p, e] : factor(n).factors) out *= int64_t(e + 1) * (e + 2) / 2;
    return out;
}

int mu(int64_t n) {
    auto f = factor(n);
    for (auto& [p, e] : f.factors)
        if (e > 1) return 0;
    return f.factors.size() % 2 ? -1 : 1;
}

int vp(int64_t n, int64_t p) {
    if (n < 1 || p < 2) throw std::invalid_argument("vp: need n >= 1, p >= 2");
    int v = 0;
    while (n % p == 0) { n /= p; v++; }
    return v;
}

std::vector<int64_t> divisors(int64_t n) {
    std::vector<int64_t> out{1};
    for (auto& [p, e] : factor(n).factors) {
        size_t sz = out.size();
        int64_t pk = 1;
        for (int k = 1; k <= e; k++) {
            pk *= p;
            for (size_t i = 0; i < sz; i++) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int64_t gcd3(int64_t a, int64_t b, int64_t c) {
    return std::gcd(std::gcd(std::abs(a), std::abs(b)), std::abs(c));
}

int64_t psi_i64(int64_t n) {
    int64_t out = n;
    for (auto& [p, e] : factor(n).factors) { out /= p; out *= p + 1; }
    return out;
}

int64_t phi_i64(int64_t n) {
    int64_t out = n;
    for (auto& [p, e] : factor(n).factors) { out /= p; out *= p - 1; }
    return out;
}

int64_t sigma_i64(int64_t n) { return sigma(n).convert_to<int64_t>(); }

int64_t mod_pow(int64_t base, int64_t exp, int64_t m) {
    if (m <= 0) throw std::invalid_argument("mod_pow: modulus must be positive");
    unsigned __int128 acc = 1, b = mod_reduce(base, m);
    while (exp > 0) {
        if (exp & 1) acc = acc * b % m;
        b = b * b % m;
        exp >>= 1;
    }
    return int64_t(acc);
}

int64_t mod_inverse(int64_t a, int64_t m) {
    int64_t t = 0, newt = 1, r = m, newr = mod_reduce(a, m);
    while (newr != 0) {
        int64_t q = r / newr;
        std::tie(t, newt) = std::make_pair(newt, t - q * newt);
        std::tie(r, newr) = std::make_pair(newr, r - q * newr);
    }
    if (r != 1) throw std::domain_error("mod_inverse: argument not invertible");
    return mod_reduce(t, m);
}

static void smooth_rec(const std::vector<int64_t>& primes, size_t i, int64_t cur,
                       int64_t bound, std::vector<int64_t>& out) {
    if (i == primes.size()) { out.push_back(cur); return; }
    smooth_rec(primes, i + 1, cur, bound, out);
    while (cur <= bound / primes[i]) {
        cur *= primes[i];
        smooth_rec(primes, i + 1, cur, bound, out);
    }
}

std::vector<int64_t> smooth_numbers(const std::vector<int64_t>& primes, int64_t bound) {
    std::vector<int64_t> out;
    if (bound >= 1) smooth_rec(primes, 0, 1, bound, out);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace hecke::arith
