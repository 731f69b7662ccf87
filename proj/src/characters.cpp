#include "hecke/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "hecke/arith.hpp"
#include "hecke/config.hpp"

namespace hecke::chars {

using arith::mod_reduce;

void Angle::add(int64_t n, int64_t d) {
    if (d <= 0) throw std::invalid_argument("Angle: denominator must be positive");
    __int128 nn = (__int128)num * d + (__int128)n * den;
    __int128 dd = (__int128)den * d;
    nn %= dd;
    if (nn < 0) nn += dd;
    int64_t rn = (int64_t)nn, rd = (int64_t)dd;
    int64_t g = std::gcd(rn, rd);
    if (g == 0) g = 1;
    num = rn / g;
    den = rd / g;
}

cplx Angle::value() const {
    if (num == 0) return {1.0, 0.0};
    if (2 * num == den) return {-1.0, 0.0};
    if (4 * num == den) return {0.0, 1.0};
    if (4 * num == 3 * den) return {0.0, -1.0};
    double t = 2.0 * M_PI * (double)num / (double)den;
    return {std::cos(t), std::sin(t)};
}

// least primitive root mod p^e for odd prime p
int64_t primitive_root(int64_t p, int e, int64_t pe) {
    auto ord_factors = arith::factor(p - 1).factors;
    int64_t g = 0;
    for (int64_t cand = 2; cand < p; cand++) {
        bool ok = true;
        for (auto& [q, _] : ord_factors)
            if (arith::mod_pow(cand, (p - 1) / q, p) == 1) { ok = false; break; }
        if (ok) { g = cand; break; }
    }
    if (g == 0) throw std::runtime_error("primitive_root: none found");
    if (e > 1 && arith::mod_pow(g, p - 1, p * p) == 1) g += p;  // lift to p^e
    return mod_reduce(g, pe);
}

std::vector<int64_t> LocalComponent::dlog(int64_t a) const {
    a = mod_reduce(a, pe);
    std::vector<int64_t> out(gens.size());
    for (size_t i = 0; i < gens.size(); i++) {
        int32_t v = dlogs[i][a];
        if (v < 0) throw std::domain_error("dlog: not a unit");
        out[i] = v;
    }
    return out;
}

CharacterGroup::CharacterGroup(int64_t modulus) : modulus_(modulus) {
    if (modulus < 1) throw std::invalid_argument("CharacterGroup: modulus must be >= 1");
    if (modulus > config().character_modulus_cap)
        throw std::invalid_argument("CharacterGroup: modulus exceeds configured cap");
    phi_ = 1;
    for (auto& [p, e] : arith::factor(modulus).factors) {
        LocalComponent lc;
        lc.p = p;
        lc.e = e;
        lc.pe = 1;
        for (int i = 0; i < e; i++) lc.pe *= p;
        if (p == 2) {
            if (e == 1) {
                // trivial unit group, no generators
            } else if (e == 2) {
                lc.gens = {3};
                lc.orders = {2};
            } else {
                lc.gens = {lc.pe - 1, 5};  // -1 and 5
                lc.orders = {2, lc.pe / 4};
            }
        } else {
            lc.gens = {primitive_root(p, e, lc.pe)};
            lc.orders = {lc.pe / p * (p - 1)};
        }
        // discrete logs: walk the cyclic pieces
        lc.dlogs.assign(lc.gens.size(), std::vector<int32_t>(lc.pe, -1));
        if (lc.gens.empty()) {
            // nothing to record
        } else if (lc.gens.size() == 1) {
            int64_t x = 1;
            for (int64_t k = 0; k < lc.orders[0]; k++) {
                lc.dlogs[0][x] = (int32_t)k;
                x = (__int128)x * lc.gens[0] % lc.pe;
            }
        } else {
            int64_t s_el = 1;
            for (int64_t s = 0; s < lc.orders[0]; s++) {
                int64_t x = s_el;
                for (int64_t t = 0; t < lc.orders[1]; t++) {
                    lc.dlogs[0][x] = (int32_t)s;
                    lc.dlogs[1][x] = (int32_t)t;
                    x = (__int128)x * lc.gens[1] % lc.pe;
                }
                s_el = (__int128)s_el * lc.gens[0] % lc.pe;
            }
        }
        for (auto o : lc.orders) phi_ *= o;
        comps_.push_back(std::move(lc));
    }
    for (auto& lc : comps_)
        for (auto o : lc.orders) gen_orders_.push_back(o);
}

std::shared_ptr<const CharacterGroup> CharacterGroup::make(int64_t modulus) {
    return std::shared_ptr<const CharacterGroup>(new CharacterGroup(modulus));
}

DirichletCharacter CharacterGroup::character(int64_t index) const {
    if (index < 0 || index >= phi_) throw std::out_of_range("character index");
    std::vector<int64_t> exps(gen_orders_.size());
    for (size_t i = 0; i < gen_orders_.size(); i++) {
        exps[i] = index % gen_orders_[i];
        index /= gen_orders_[i];
    }
    return character_from_exponents(std::move(exps));
}

DirichletCharacter CharacterGroup::character_from_exponents(std::vector<int64_t> exps) const {
    if (exps.size() != gen_orders_.size())
        throw std::invalid_argument("character_from_exponents: wrong length");
    for (size_t i = 0; i < exps.size(); i++) exps[i] = mod_reduce(exps[i], gen_orders_[i]);
    return DirichletCharacter(shared_from_this(), std::move(exps));
}

DirichletCharacter CharacterGroup::trivial() const {
    return character_from_exponents(std::vector<int64_t>(gen_orders_.size(), 0));
}

// conductor exponent of the local character with exponent vector `ex` on `lc`
static int local_conductor_exponent(const LocalComponent& lc, const int64_t* ex) {
    if (lc.gens.empty()) return 0;
    if (lc.p == 2) {
        if (lc.e == 2) return ex[0] ? 2 : 0;
        if (lc.e >= 3) {
            int64_t t = ex[1];
            if (t != 0) {
                int64_t m = lc.orders[1] / std::gcd(t, lc.orders[1]);  // order of the 5-part, 2^u
                int u = 0;
                while ((int64_t(1) << u) < m) u++;
                return u + 2;
            }
            return ex[0] ? 2 : 0;
        }
        return 0;
    }
    int64_t k = ex[0];
    if (k == 0) return 0;
    int64_t m = lc.orders[0] / std::gcd(k, lc.orders[0]);  // order of the character
    return 1 + arith::vp(m, lc.p);
}

DirichletCharacter::DirichletCharacter(std::shared_ptr<const CharacterGroup> grp,
                                       std::vector<int64_t> exps)
    : grp_(std::move(grp)), exps_(std::move(exps)) {
    // conductor
    conductor_ = 1;
    size_t slot = 0;
    for (auto& lc : grp_->components()) {
        int f = local_conductor_exponent(lc, exps_.data() + slot);
        int64_t pf = 1;
        for (int i = 0; i < f; i++) pf *= lc.p;
        conductor_ *= pf;
        slot += lc.gens.size();
    }
    // parity
    if (grp_->modulus() <= 2) {
        parity_ = 1;
    } else {
        Angle a = eval_angle(grp_->modulus() - 1);
        parity_ = a.is_zero() ? 1 : (a.is_half() ? -1 : 0);
        if (parity_ == 0) throw std::runtime_error("character parity is not +-1");
    }
    // primitive values mod the conductor
    prim_table_.assign(conductor_, cplx(0.0, 0.0));
    int64_t N = grp_->modulus();
    for (int64_t r = 0; r < conductor_; r++) {
        if (std::gcd(r, conductor_) != 1 && conductor_ > 1) continue;
        // lift r to a residue coprime to N; chi is constant on that fiber
        int64_t x = r;
        if (conductor_ == 1) x = 1;
        while (std::gcd(x, N) != 1) x += conductor_;
        prim_table_[r] = eval_angle(x).value();
    }
}

int64_t DirichletCharacter::index() const {
    int64_t idx = 0;
    const auto& ords = grp_->generator_orders();
    for (size_t i = ords.size(); i-- > 0;) idx = idx * ords[i] + exps_[i];
    return idx;
}

Angle DirichletCharacter::eval_angle(int64_t a) const {
    int64_t N = grp_->modulus();
    if (N == 1) return Angle{0, 1};
    a = mod_reduce(a, N);
    if (std::gcd(a, N) != 1) throw std::domain_error("eval_angle: not a unit");
    Angle ang{0, 1};
    size_t slot = 0;
    for (auto& lc : grp_->components()) {
        if (!lc.gens.empty()) {
            auto dl = lc.dlog(a % lc.pe);
            for (size_t i = 0; i < lc.gens.size(); i++) {
                int64_t num = mod_reduce(exps_[slot + i] * dl[i], lc.orders[i]);
                ang.add(num, lc.orders[i]);
            }
        }
        slot += lc.gens.size();
    }
    return ang;
}

cplx DirichletCharacter::eval(int64_t a) const {
    int64_t N = grp_->modulus();
    if (N == 1) return {1.0, 0.0};
    a = mod_reduce(a, N);
    if (std::gcd(a, N) != 1) return {0.0, 0.0};
    return eval_angle(a).value();
}

cplx DirichletCharacter::prim_eval(int64_t a) const {
    if (conductor_ == 1) return {1.0, 0.0};
    a = mod_reduce(a, conductor_);
    return prim_table_[a];
}

int64_t DirichletCharacter::squarefree_conductor() const {
    int64_t out = 1;
    for (auto& [p, e] : arith::factor(conductor_).factors) out *= p;
    return out;
}

int DirichletCharacter::cond_p(int64_t p) const {
    return conductor_ % p == 0 ? arith::vp(conductor_, p) : 0;
}

bool DirichletCharacter::is_trivial() const {
    for (auto e : exps_)
        if (e) return false;
    return true;
}

bool DirichletCharacter::is_character_mod(int64_t M) const {
    if (M < 1 || grp_->modulus() % M != 0)
        throw std::invalid_argument("is_character_mod: M must divide the modulus");
    return M % conductor_ == 0;
}

DirichletCharacter DirichletCharacter::restrict_to(int64_t M) const {
    if (!is_character_mod(M))
        throw std::domain_error("restrict_to: conductor does not divide M");
    auto g = CharacterGroup::make(M);
    int64_t N = grp_->modulus();
    std::vector<int64_t> exps;
    for (auto& lc : g->components()) {
        for (size_t i = 0; i < lc.gens.size(); i++) {
            // lift the generator to x2 == gens[i] mod lc.pe, x2 == 1 mod M/lc.pe,
            // then shift by M until coprime to N; the value is lift-independent
            // because the conductor divides M
            int64_t x = lc.gens[i];
            int64_t M_rest = M / lc.pe;
            int64_t x2 = 1;
            {
                // CRT combine
                int64_t inv = arith::mod_inverse(M_rest % lc.pe, lc.pe);
                int64_t k = mod_reduce((x - 1) % lc.pe * inv, lc.pe);
                x2 = 1 + M_rest * k;
            }
            while (std::gcd(x2, N) != 1) x2 += M;
            Angle a = eval_angle(x2);
            // a = exps * (1/order): recover the exponent on this generator
            int64_t ord = lc.orders[i];
            // a.num/a.den should equal k/ord for integer k
            if (ord % a.den != 0) throw std::runtime_error("restrict_to: inconsistent angle");
            exps.push_back(a.num * (ord / a.den) % ord);
        }
    }
    return g->character_from_exponents(std::move(exps));
}

DirichletCharacter DirichletCharacter::conjugate() const {
    std::vector<int64_t> exps(exps_.size());
    const auto& ords = grp_->generator_orders();
    for (size_t i = 0; i < exps_.size(); i++) exps[i] = mod_reduce(-exps_[i], ords[i]);
    return grp_->character_from_exponents(std::move(exps));
}

std::vector<DirichletCharacter> all_characters(int64_t modulus) {
    auto g = CharacterGroup::make(modulus);
    std::vector<DirichletCharacter> out;
    out.reserve(g->order());
    for (int64_t i = 0; i < g->order(); i++) out.push_back(g->character(i));
    return out;
}

int64_t conductor_by_definition(const DirichletCharacter& chi) {
    int64_t N = chi.modulus();
    for (int64_t f : arith::divisors(N)) {
        // chi induced from modulus f iff chi(x) = 1 for every unit x == 1 mod f
        bool ok = true;
        for (int64_t x = 1 + f; x <= N && ok; x += f)
            if (std::gcd(x, N) == 1 && std::abs(chi.eval(x) - cplx(1.0, 0.0)) > 1e-12) ok = false;
        if (ok) return f;
    }
    return N;
}

} // namespace hecke::chars
