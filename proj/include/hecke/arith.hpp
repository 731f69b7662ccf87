#ifndef HECKE_ARITH_HPP
#define HECKE_ARITH_HPP

#include <vector>
#include "hecke/types.hpp"

namespace hecke::arith {

struct Factorization {
    int64_t n = 1;
    std::vector<std::pair<int64_t, int>> factors;  // (prime, exponent), primes increasing

    int exponent_of(int64_t p) const {
        for (auto& [q, e] : factors)
            if (q == p) return e;
        return 0;
    }
};

// Trial division; inputs in this project stay below 1e7 so nothing fancier is needed.
Factorization factor(int64_t n);

bool is_prime(int64_t n);

// psi(n) = n * prod_{p|n} (1 + 1/p), the index [Gamma_0(n) : SL_2(Z)].
bigint psi(int64_t n);
bigint phi(int64_t n);
bigint sigma(int64_t n);  // sum of divisors
int64_t d(int64_t n);     // number of divisors
int64_t d3(int64_t n);    // ordered triples (a,b,c) with abc = n
int mu(int64_t n);
int vp(int64_t n, int64_t p);
std::vector<int64_t> divisors(int64_t n);  // ascending

int64_t gcd3(int64_t a, int64_t b, int64_t c);

// convenience doubles/int64 for hot paths
int64_t psi_i64(int64_t n);
int64_t phi_i64(int64_t n);
int64_t sigma_i64(int64_t n);

// modular helpers (m > 0)
int64_t mod_pow(int64_t base, int64_t exp, int64_t m);
int64_t mod_inverse(int64_t a, int64_t m);  // throws if gcd(a,m) != 1
inline int64_t mod_reduce(int64_t a, int64_t m) {
    int64_t r = a % m;
    return r < 0 ? r + m : r;
}

// numbers of the form prod p^e over primes in `primes`, ascending, <= bound
std::vector<int64_t> smooth_numbers(const std::vector<int64_t>& primes, int64_t bound);

} // namespace hecke::arith

#endif
