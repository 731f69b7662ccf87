#include "hecke/traces.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "hecke/arith.hpp"
#include "hecke/modforms.hpp"

namespace hecke::traces {

static int64_t isqrt_exact(int64_t m) {
    int64_t r = (int64_t)std::llround(std::sqrt((double)m));
    while (r * r > m) r--;
    while ((r + 1) * (r + 1) <= m) r++;
    return r * r == m ? r : -1;
}

static void check_mt1(int kappa, int64_t N, const DirichletCharacter& chi, int64_t m) {
    if (kappa < 2 || m < 1 || N < 1) throw std::invalid_argument("mt1: bad parameters");
    if (std::gcd(N, m) != 1) throw std::invalid_argument("mt1: requires (N, m) = 1");
    int want = kappa % 2 == 0 ? 1 : -1;
    if (chi.parity() != want)
        throw std::domain_error("mt1: parity mismatch, space is zero");
}

cplx main_term_mt1(int kappa, int64_t N, const DirichletCharacter& chi, int64_t m,
                   bool normalized) {
    check_mt1(kappa, N, chi, m);
    int64_t r = isqrt_exact(m);
    if (r < 0) return {0.0, 0.0};
    double mexp = normalized ? -0.5 : (double)kappa / 2.0 - 1.0;
    return (kappa - 1) / 12.0 * chi.eval(r) * std::pow((double)m, mexp) *
           to_double(arith::psi(N));
}

std::optional<Rational> main_term_mt1_exact(int kappa, int64_t N, const DirichletCharacter& chi,
                                            int64_t m, bool normalized) {
    check_mt1(kappa, N, chi, m);
    int64_t r = isqrt_exact(m);
    if (r < 0) return Rational(0);
    auto ang = chi.eval_angle(r);
    Rational chival;
    if (ang.is_zero())
        chival = Rational(1);
    else if (ang.is_half())
        chival = Rational(-1);
    else
        return std::nullopt;
    // unnormalized: m^{kappa/2-1} = r^{kappa-2}; normalized: m^{-1/2} = 1/r
    Rational power = normalized ? Rational(1, bigint(r)) : Rational(bigint_pow(bigint(r), kappa - 2));
    return Rational(kappa - 1, 12) * chival * power * Rational(arith::psi(N));
}

Envelopes error_envelopes(int kappa, int64_t N, const DirichletCharacter& chi, int64_t m) {
    const double eps = 0.05;
    Envelopes env;
    double mpow = std::pow((double)m, (kappa - 1) / 2.0);
    env.trivial_bound = (kappa - 1) / 12.0 * to_double(arith::psi(N)) * (double)arith::d(m) * mpow;
    double maxpsi = 1.0;
    for (int64_t f = 1; f * f < 4 * m; f++)
        maxpsi = std::max(maxpsi, (double)arith::psi_i64(f));
    env.eichler_selberg = (to_double(arith::sigma(m)) * maxpsi +
                           (double)arith::d(m) * std::sqrt((double)N)) *
                          mpow * (double)arith::d(N);
    env.petersson = std::pow((double)N, 10.0 / 11.0) *
                    std::pow((double)m, (kappa - 1) / 2.0 + 1.0 / 44.0) *
                    std::pow((double)kappa, 61.0 / 66.0) *
                    std::pow((double)chi.conductor(), 1.0 / 44.0) *
                    std::pow((double)chi.squarefree_conductor(), 1.0 / 44.0) *
                    std::pow((double)N * m * kappa, eps);
    env.petersson_regime =
        (double)m >= std::pow((double)N, 8.0 / 13.0 + eps) &&
        (double)m <= std::pow((double)N, 4.0 - eps);
    return env;
}

Rational main_term_mt2(int kappa, int64_t M, int64_t N, int64_t d, int64_t m) {
    if (kappa < 2 || M < 1 || N % M != 0) throw std::invalid_argument("mt2: requires M | N");
    if (std::gcd(N, m) != 1) throw std::invalid_argument("mt2: requires (N, m) = 1");
    if (std::gcd(d, N) != 1) throw std::invalid_argument("mt2: requires (d, N) = 1");
    int64_t r = isqrt_exact(m);
    if (r < 0) return Rational(0);
    auto delta_N = [&](int64_t a, int64_t b) {
        return arith::mod_reduce(a - b, N) == 0 ? 1 : 0;
    };
    int ind = delta_N(r * d, 1) + (kappa % 2 == 0 ? 1 : -1) * delta_N(r * d, -1);
    return Rational(kappa - 1, 24) * Rational(bigint_pow(bigint(r), kappa - 2)) *
           Rational(arith::phi(N)) * Rational(arith::psi(N * M)) * Rational(ind);
}

double ExactTrace::normalized() const {
    return to_double(unnormalized) / std::pow((double)m, (kappa - 1) / 2.0);
}

std::optional<ExactTrace> exact_trace_small(int kappa, int64_t N, int64_t m) {
    if (m < 1 || std::gcd(m, N) != 1)
        throw std::invalid_argument("exact_trace_small: requires (m, N) = 1");
    // trace of T'_m = sum_{LM=N} d(L) sum_{f in H*(M)} lambda_f(m); every space of
    // level M | N must be shipped (as a one-newform space or a zero space)
    bigint acc(0);
    for (int64_t L : arith::divisors(N)) {
        int64_t M = N / L;
        if (auto* f = modforms::oracle_by_space(kappa, M, (int)m + 8)) {
            acc += arith::d(L) * f->a(m);
        } else if (!modforms::space_is_zero(kappa, M)) {
            return std::nullopt;
        }
    }
    return ExactTrace{acc, kappa, m};
}

X0Prediction x0_predict(int64_t N, int64_t p, int v) {
    if (!arith::is_prime(p)) throw std::invalid_argument("x0_predict: p must be prime");
    if (N % p == 0) throw std::invalid_argument("x0_predict: requires p coprime to N");
    if (v < 1) throw std::invalid_argument("x0_predict: v must be >= 1");
    const double eps = 0.05;
    X0Prediction out;
    int64_t q = 1;
    for (int i = 0; i < v; i++) q *= p;
    out.q = q;
    double psiN = to_double(arith::psi(N));
    out.main = (double)q + (v % 2 == 0 ? (double)(p - 1) * psiN / 12.0 : 0.0);
    double e1 = psiN;
    double e2 = std::pow((double)q, 1.0 / 44.0) * std::pow((double)N, 10.0 / 11.0) *
                std::pow((double)q * N, eps);
    double e3 = (std::pow((double)q, 1.5) + std::sqrt((double)N)) * (double)arith::d(N) *
                std::pow((double)q, eps);
    out.envelope = std::min(std::min(e1, e2), e3) * std::sqrt((double)q);
    return out;
}

int64_t x0_exact_11(int64_t p) {
    if (!arith::is_prime(p) || p == 11)
        throw std::invalid_argument("x0_exact_11: p must be a prime different from 11");
    auto tr = exact_trace_small(2, 11, p);
    return p + 1 - tr->unnormalized.convert_to<int64_t>();
}

} // namespace hecke::traces
