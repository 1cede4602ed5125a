#pragma once

#include "radhopf/rational.hpp"

#include <nlohmann/json_fwd.hpp>

#include <cstdint>
#include <vector>

namespace radhopf {

using Exp = std::int64_t;

bool is_prime(Exp n);
Exp ipow(Exp base, unsigned exp);
Exp powmod(Exp base, Exp exp, Exp mod);
/// Canonical residue in [0, m).
inline Exp mod(Exp a, Exp m) {
    Exp r = a % m;
    return r < 0 ? r + m : r;
}
/// Euler phi of p^n for prime p.
Exp phi_prime_power(Exp p, unsigned n);
Exp multiplicative_order(Exp a, Exp m);

/// Smallest positive primitive root mod p^2; it is then primitive mod every
/// p^n. Rejects p = 2 and non-primes.
Exp primitive_root(Exp p);

/// Level n of the cyclotomic tower over an odd prime p.
struct FieldDescriptor {
    Exp p = 3;
    unsigned n = 1;
    Exp pn = 3;    ///< p^n, the order of zeta
    Exp sub = 1;   ///< p^(n-1)
    Exp phi = 2;   ///< p^(n-1)(p-1), the degree over Q
    Exp pi = 2;    ///< primitive root shared by every level

    static FieldDescriptor make(Exp p, unsigned n);
    FieldDescriptor at_level(unsigned level) const { return make(p, level); }

    friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;
};

/// Element of Q(zeta_{p^n}) in the power basis {zeta^0, ..., zeta^(phi-1)}.
///
/// A zero element stores no coefficients; every other element stores exactly
/// phi of them. Equality is coefficient equality of the canonical form.
class CycloElt {
  public:
    explicit CycloElt(FieldDescriptor field) : field_(field) {}
    CycloElt(FieldDescriptor field, std::vector<Rat> coeffs);

    static CycloElt zero(const FieldDescriptor& f) { return CycloElt(f); }
    static CycloElt rational(const FieldDescriptor& f, const Rat& r);
    static CycloElt one(const FieldDescriptor& f) { return rational(f, 1); }
    /// zeta^k for any integer k (reduced mod p^n first).
    static CycloElt zeta_power(const FieldDescriptor& f, Exp k, const Rat& scale = 1);

    const FieldDescriptor& field() const { return field_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// True when the element lies in Q (only the zeta^0 coordinate is nonzero).
    bool is_rational() const;
    Rat coeff(Exp i) const;
    /// Full length-phi coefficient vector.
    std::vector<Rat> coeffs() const;

    CycloElt& operator+=(const CycloElt& o);
    CycloElt& operator-=(const CycloElt& o);
    CycloElt& operator*=(const Rat& s);
    /// Adds scale * zeta^k in place.
    void add_zeta_power(Exp k, const Rat& scale);

    friend CycloElt operator+(CycloElt a, const CycloElt& b) { return a += b; }
    friend CycloElt operator-(CycloElt a, const CycloElt& b) { return a -= b; }
    friend CycloElt operator-(CycloElt a);
    friend CycloElt operator*(const CycloElt& a, const CycloElt& b);
    friend CycloElt operator*(CycloElt a, const Rat& s) { return a *= s; }
    friend CycloElt operator*(const Rat& s, CycloElt a) { return a *= s; }
    friend bool operator==(const CycloElt& a, const CycloElt& b);

    /// Multiplication by zeta^k; cheaper than a general product.
    CycloElt times_zeta_power(Exp k) const;
    CycloElt inverse() const;

  private:
    void normalize();
    void ensure_storage();
    void accumulate_zeta_power(Exp k, const Rat& scale);

    FieldDescriptor field_;
    std::vector<Rat> coeffs_;
};

/// Canonical form of sum_k raw[k] zeta^k under Phi_{p^n}. raw may be longer
/// than p^n; exponents are taken as-is before reduction.
CycloElt reduce(const FieldDescriptor& f, const std::vector<Rat>& raw);

CycloElt inverse(const CycloElt& a);

/// Ring embedding Q(zeta_m) -> Q(zeta_n), zeta_m -> zeta_n^(p^(n-m)).
CycloElt embed(const CycloElt& x, unsigned target_level);

/// The Galois automorphism delta^e : zeta -> zeta^(pi^e).
CycloElt delta_apply(Exp e, const CycloElt& x);
/// The automorphism zeta -> zeta^u for a unit u mod p^n.
CycloElt galois_apply(Exp u, const CycloElt& x);

nlohmann::json to_json(const CycloElt& x);
CycloElt cyclo_from_json(const FieldDescriptor& f, const nlohmann::json& j);

}  // namespace radhopf
