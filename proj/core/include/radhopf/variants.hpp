#pragma once

#include "radhopf/hopf.hpp"
#include "radhopf/perm.hpp"

#include <optional>
#include <vector>

namespace radhopf {

/// Element of Q(zeta_n, w_n): slots[k] is the Q(zeta_n) coefficient of w^k.
struct BigFieldElt {
    FieldDescriptor field;
    Rat radicand;
    std::vector<CycloElt> slots;

    static BigFieldElt zero(const FieldDescriptor& f, const Rat& a);
    static BigFieldElt one(const FieldDescriptor& f, const Rat& a);
    /// scale * zeta^c w^k.
    static BigFieldElt monomial(const FieldDescriptor& f, const Rat& a, Exp c, Exp k, const Rat& scale = 1);
    /// c w^0 for c in Q(zeta_n).
    static BigFieldElt from_cyclo(const CycloElt& c, const Rat& a);

    bool is_zero() const;
    /// Q-coordinates, index k * phi + (zeta exponent).
    QVec to_rational() const;
    static BigFieldElt from_rational(const FieldDescriptor& f, const Rat& a, const QVec& v);

    BigFieldElt& operator+=(const BigFieldElt& o);
    BigFieldElt& operator-=(const BigFieldElt& o);
    friend BigFieldElt operator+(BigFieldElt x, const BigFieldElt& y) { return x += y; }
    friend BigFieldElt operator-(BigFieldElt x, const BigFieldElt& y) { return x -= y; }
    friend BigFieldElt operator*(const Rat& s, BigFieldElt x);
    friend BigFieldElt operator*(const BigFieldElt& x, const BigFieldElt& y);
    friend bool operator==(const BigFieldElt&, const BigFieldElt&) = default;
};

/// zeta_(n-1)^c w_(n-1)^k -> zeta_n^(pc) w_n^(pk); same radicand.
BigFieldElt embed_big(const BigFieldElt& x, unsigned target_level);

/// sigma^s beta^b in Gal(Q(zeta_n, w_n)/Q(zeta_1)); s mod p^n, b mod p^(n-1).
struct GammaElt {
    Exp s = 0;
    Exp b = 0;
    friend bool operator==(const GammaElt&, const GammaElt&) = default;
};

/// pi^(p-1) mod p^n, the exponent by which beta raises zeta.
Exp beta_unit(const FieldDescriptor& f);
GammaElt gamma_normalize(const FieldDescriptor& f, GammaElt g);
/// sigma^s beta^b sigma^t beta^c = sigma^(s + t u^b) beta^(b + c).
GammaElt gamma_mul(const FieldDescriptor& f, const GammaElt& g, const GammaElt& h);
GammaElt gamma_pow(const FieldDescriptor& f, const GammaElt& g, Exp e);
std::size_t gamma_order(const FieldDescriptor& f, const GammaElt& g);

/// zeta^c w^k -> zeta^(c u^b + s k) w^k.
BigFieldElt gamma_act(const GammaElt& g, const BigFieldElt& x);

/// zeta^c w^k -> zeta^(c unit + shift k) w^k on the p^(2n) points k p^n + c,
/// c and k running over Z/p^n.
Perm monomial_perm(const FieldDescriptor& f, Exp unit, Exp shift);
Perm gamma_perm(const FieldDescriptor& f, const GammaElt& g);
/// Gamma_(n,1) = <sigma, beta> in the permutation model.
FiniteGroup gamma_n1(const FieldDescriptor& f);

struct NormalComplement {
    Exp i;
    GammaElt generator;  ///< sigma (i = 0) or sigma^i beta^(p^(n-2))
    FiniteGroup group;
};

/// N_(n,0) = <sigma> and N_(n,i) = <sigma^i beta^(p^(n-2))> for i = 1..p-1.
std::vector<NormalComplement> normal_complements(Exp p, unsigned n);
/// Order p^n, cyclic, meets <beta> trivially, fills Gamma_(n,1) with it,
/// normalized by beta, and the p groups pairwise distinct.
Report normal_complement_check(Exp p, unsigned n);

/// Q-basis of {x : g(x) = x for all g in gens}; empty gens fixes everything.
std::vector<BigFieldElt> fixed_field(Exp p, unsigned n, const std::vector<GammaElt>& gens, const Rat& a = 2);

/// sum_t coeffs[t] g^t with g the generator of N_(n,i) and coefficients in Q(zeta_n, w_n).
struct VariantGroupRingElt {
    FieldDescriptor field;
    Rat radicand;
    Exp i;
    unsigned group_level;
    std::vector<BigFieldElt> coeffs;

    friend bool operator==(const VariantGroupRingElt&, const VariantGroupRingElt&) = default;
};

VariantGroupRingElt variant_mul(const VariantGroupRingElt& x, const VariantGroupRingElt& y);

struct HVariant {
    FieldDescriptor field;
    Rat radicand;
    Exp i;
    GammaElt generator;
    Exp beta_conjugation;                   ///< beta g beta^-1 = g^beta_conjugation
    std::vector<BigFieldElt> fixed_field;   ///< Q-basis of E_(n,i)
    std::vector<VariantGroupRingElt> basis; ///< Q-basis of H_(n,i)

    std::size_t q_dimension() const { return basis.size(); }
    /// Rank over Q(zeta_1), which multiplies H_(n,i) into itself.
    std::size_t base_rank() const { return basis.size() / static_cast<std::size_t>(field.p - 1); }
};

/// (E_(n,i)[N_(n,i)])^<beta> by exact elimination.
HVariant h_variant(Exp p, unsigned n, Exp i, const Rat& a = 2);

/// x -> sum_t c_t g^t(x) on Q(zeta_n, w_n).
BigFieldElt variant_act(const HVariant& h, const VariantGroupRingElt& x, const BigFieldElt& y);

/// Smash-product criterion for Q(zeta_1, w_n)/Q(zeta_1): the products
/// (left multiplication) * (H action) span End_Q(zeta_1)(Q(zeta_1, w_n)),
/// and the H-fixed part is Q(zeta_1).
Report variant_action_check(Exp p, unsigned n, Exp i, const Rat& a);

/// The Q-spans of the operators of H_(n,i) and H_(n,j) on Q(zeta_1, w_n)
/// differ for i != j.
Report variant_distinct_check(Exp p, unsigned n, const Rat& a);

/// The e-basis of H_n, read inside E_(n,0)[N_(n,0)], is beta-fixed, acts on
/// Q(w_n) exactly as in the split case, and spans H_(n,0) over Q(zeta_1).
Report variant_untwisted_check(Exp p, unsigned n, const Rat& a);

/// Image of the N_(n,i) generator: sigma_(n-1) for i = 0, else
/// sigma_(n-1)^i beta_(n-1)^(p^(n-3)). Requires n >= 3.
GammaElt variant_nu_generator(Exp p, unsigned n, Exp i);
/// g_n^t -> g_(n-1)^t, coefficients kept.
VariantGroupRingElt variant_nu(unsigned n, const VariantGroupRingElt& x);

/// E_(n-1,i) inside E_(n,i) under embed_big.
bool fixed_field_contained(Exp p, unsigned n, Exp i_lower, Exp i_upper);

/// Generator assignment, surjectivity, multiplicativity on the group ring,
/// functoriality, and E_(n-1,0) in E_(n,0).
Report variant_nu_check(Exp p, unsigned n, const Rat& a);

nlohmann::json to_json(const BigFieldElt& x);
BigFieldElt big_from_json(const nlohmann::json& j);
nlohmann::json to_json(const GammaElt& g);

}  // namespace radhopf
