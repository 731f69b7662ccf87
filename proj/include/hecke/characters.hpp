#ifndef HECKE_CHARACTERS_HPP
#define HECKE_CHARACTERS_HPP

#include <memory>
#include <vector>
#include "hecke/types.hpp"

namespace hecke::chars {

// Angle of a root of unity as an exact fraction of a full turn, reduced mod 1.
struct Angle {
    int64_t num = 0;
    int64_t den = 1;
    void add(int64_t n, int64_t d);
    cplx value() const;
    bool is_zero() const { return num == 0; }
    bool is_half() const { return den == 2 && num == 1; }
};

// Unit group (Z/p^e)^* presented by generators with their orders plus a
// discrete-log table.  Odd p: a single primitive root.  2^e, e >= 3: {-1, 5}.
struct LocalComponent {
    int64_t p = 0;
    int e = 0;
    int64_t pe = 1;
    std::vector<int64_t> gens;
    std::vector<int64_t> orders;
    std::vector<std::vector<int32_t>> dlogs;  // one table per generator slot, indexed by residue

    std::vector<int64_t> dlog(int64_t a) const;  // a must be a unit mod pe
};

class DirichletCharacter;

class CharacterGroup : public std::enable_shared_from_this<CharacterGroup> {
  public:
    static std::shared_ptr<const CharacterGroup> make(int64_t modulus);

    int64_t modulus() const { return modulus_; }
    int64_t order() const { return phi_; }  // = phi(modulus)
    const std::vector<LocalComponent>& components() const { return comps_; }
    const std::vector<int64_t>& generator_orders() const { return gen_orders_; }

    // characters indexed 0 .. order()-1 in mixed-radix order over exponent vectors
    DirichletCharacter character(int64_t index) const;
    DirichletCharacter character_from_exponents(std::vector<int64_t> exps) const;
    DirichletCharacter trivial() const;

  private:
    explicit CharacterGroup(int64_t modulus);
    int64_t modulus_;
    int64_t phi_;
    std::vector<LocalComponent> comps_;
    std::vector<int64_t> gen_orders_;
    friend class DirichletCharacter;
};

class DirichletCharacter {
  public:
    int64_t modulus() const { return grp_->modulus(); }
    const std::vector<int64_t>& exponents() const { return exps_; }
    int64_t index() const;

    // 0 when gcd(a, N) > 1, otherwise the exact root of unity
    cplx eval(int64_t a) const;
    Angle eval_angle(int64_t a) const;  // requires gcd(a, N) = 1

    // value of the primitive character inducing this one; 0 iff gcd(a, cond) > 1
    cplx prim_eval(int64_t a) const;

    int64_t conductor() const { return conductor_; }
    int64_t squarefree_conductor() const;
    int cond_p(int64_t p) const;  // exponent of p in the conductor
    int parity() const { return parity_; }  // eval(-1), always +1 or -1
    bool is_trivial() const;
    bool is_character_mod(int64_t M) const;  // true iff conductor | M (requires M | N)
    DirichletCharacter restrict_to(int64_t M) const;  // the character mod M inducing this one
    DirichletCharacter conjugate() const;

    std::shared_ptr<const CharacterGroup> group() const { return grp_; }

  private:
    DirichletCharacter(std::shared_ptr<const CharacterGroup> grp, std::vector<int64_t> exps);
    std::shared_ptr<const CharacterGroup> grp_;
    std::vector<int64_t> exps_;
    int64_t conductor_;
    int parity_;
    std::vector<cplx> prim_table_;  // values of the primitive character mod conductor
    friend class CharacterGroup;
};

std::vector<DirichletCharacter> all_characters(int64_t modulus);

// least primitive root mod p^e (odd p), lifted so it generates mod every power
int64_t primitive_root(int64_t p, int e, int64_t pe);

// smallest f >= 1 with f | N such that chi is induced from modulus f,
// computed from the definition; used to cross-check the fast conductor
int64_t conductor_by_definition(const DirichletCharacter& chi);

} // namespace hecke::chars

#endif
