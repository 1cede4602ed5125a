#pragma once

#include "radhopf/groupring.hpp"
#include "radhopf/report.hpp"

#include <utility>
#include <vector>

namespace radhopf {

/// Element of H_n in the idempotent basis {e_{n,i}}.
struct HElt {
    FieldDescriptor field;
    std::vector<Rat> coords;

    static HElt zero(const FieldDescriptor& f);
    static HElt basis(const FieldDescriptor& f, Exp i);
    /// The unit 1 = sum_i e_{n,i}.
    static HElt unit(const FieldDescriptor& f);

    HElt& operator+=(const HElt& o);
    friend HElt operator+(HElt a, const HElt& b) { return a += b; }
    friend HElt operator*(const Rat& s, HElt h);
    /// Product in H_n; the e_{n,i} are orthogonal idempotents.
    friend HElt operator*(const HElt& a, const HElt& b);
    friend bool operator==(const HElt&, const HElt&) = default;
};

/// Element of Q(w_n), w_n^(p^n) = radicand, in the basis {w^0, ..., w^(p^n - 1)}.
struct RadicalElt {
    FieldDescriptor field;
    Rat radicand;
    std::vector<Rat> coords;

    static RadicalElt zero(const FieldDescriptor& f, const Rat& a);
    static RadicalElt w_power(const FieldDescriptor& f, const Rat& a, Exp k, const Rat& scale = 1);

    RadicalElt& operator+=(const RadicalElt& o);
    RadicalElt& operator-=(const RadicalElt& o);
    friend RadicalElt operator+(RadicalElt a, const RadicalElt& b) { return a += b; }
    friend RadicalElt operator-(RadicalElt a, const RadicalElt& b) { return a -= b; }
    friend RadicalElt operator*(const Rat& s, RadicalElt x);
    /// Field product; w-exponents wrap with one factor of the radicand.
    friend RadicalElt operator*(const RadicalElt& a, const RadicalElt& b);
    friend bool operator==(const RadicalElt&, const RadicalElt&) = default;
};

/// Throws unless a is nonzero and not a p-th power in Q.
void validate_radicand(Exp p, const Rat& a);

/// e_{n,i} = p^-n sum_j zeta^(-ij) sigma^j, coefficients in canonical form.
GroupRingElt e_basis(Exp p, unsigned n, Exp i);
GroupRingElt e_basis(const FieldDescriptor& f, Exp i);
std::vector<GroupRingElt> e_basis_all(const FieldDescriptor& f);

/// sum_i h_i e_{n,i} inside Q(zeta_n)[N_n].
GroupRingElt to_group_ring(const HElt& h);
/// Inverse of to_group_ring by the discrete Fourier inversion
/// c_i = sum_j x_j zeta^(ij); nullopt when x is not in the Q-span of the e_{n,i}.
std::optional<HElt> from_group_ring(const GroupRingElt& x);

/// The character sum p^-n sum_j zeta^(j(k - i)), evaluated in Q(zeta_n).
Rat dual_pairing(Exp i, Exp k, Exp p, unsigned n);

/// Delta(e_i) = sum_{s + t = i mod p^n} e_s (x) e_t, as (s, t) pairs.
std::vector<std::pair<Exp, Exp>> h_comul(Exp i, Exp p, unsigned n);
Rat h_counit(Exp i);
Exp h_antipode(Exp i, Exp p, unsigned n);

/// e_i acts as the projection onto the w^i component.
RadicalElt act(const HElt& h, const RadicalElt& x);
/// End_Q(Q(w_n)) matrix of h; column k is h(w^k).
QMatrix action_matrix(const HElt& h, const Rat& a);

/// Exhaustive measuring identity h(xy) = sum h_(1)(x) h_(2)(y) over
/// h = e_i and x, y powers of w, including wrap-around products.
Report measuring_check(Exp p, unsigned n, const Rat& a);

/// {x : e_i(x) = eps(e_i) x for all i} must be exactly Q = span{w^0}.
Report fixed_field_check(Exp p, unsigned n, const Rat& a);

struct BaseChangeResult {
    std::vector<CycloElt> coefficients;  ///< c_i = zeta_n^(i p^(n-m))
    bool verified = false;               ///< sum c_i e_{n,i} == sigma^(p^(n-m))
    bool coefficients_in_subfield = false;
};

/// Writes sigma_n^(p^(n-m)) as a Q(zeta_m)-combination of the e_{n,i}.
BaseChangeResult base_change_sigma(Exp p, unsigned n, unsigned m);

nlohmann::json to_json(const HElt& h);
HElt helt_from_json(const FieldDescriptor& f, const nlohmann::json& j);
nlohmann::json to_json(const RadicalElt& x);
RadicalElt radical_from_json(const nlohmann::json& j);

}  // namespace radhopf
