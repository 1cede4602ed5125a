#pragma once

#include "radhopf/hopf.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace radhopf {

/// Element of Q(w_n) # H_n over the basis {w^j # e_{n,i}}; zero terms are absent.
struct SmashElt {
    FieldDescriptor field;
    Rat radicand;
    std::map<std::pair<Exp, Exp>, Rat> terms;

    static SmashElt zero(const FieldDescriptor& f, const Rat& a) { return {f, a, {}}; }
    static SmashElt basis(const FieldDescriptor& f, const Rat& a, Exp j, Exp i, const Rat& c = 1);
    /// 1 # 1 = sum_i 1 # e_i.
    static SmashElt unit(const FieldDescriptor& f, const Rat& a);

    void add(Exp j, Exp i, const Rat& c);
    friend SmashElt operator+(SmashElt a, const SmashElt& b);
    friend bool operator==(const SmashElt&, const SmashElt&) = default;
};

/// (w^j # e_i)(w^k # e_l) = w^(j+k) # e_l when k + l = i mod p^n, else 0.
SmashElt smash_mult(const SmashElt& x, const SmashElt& y);

/// Matrix of x acting on Q(w_n); column k is x(w^k) in the basis {1, w, ...}.
QMatrix to_end_matrix(const SmashElt& x);

/// Unique coefficients c_{j,i} with sum c_{j,i} w^j # e_i acting as m.
SmashElt decompose_endomorphism(const QMatrix& m, Exp p, unsigned n, const Rat& a);

/// Exact rank of the p^(2n) basis images in End_Q(Q(w_n)) plus the
/// homomorphism property on basis pairs (exhaustive for small levels) and on
/// seeded random pairs.
Report iso_check(Exp p, unsigned n, const Rat& a, std::uint64_t seed = 20240611, int random_pairs = 8);

struct HomSubalgebra {
    Exp p;
    unsigned n;          ///< domain Q(w_n)
    unsigned m;          ///< codomain Q(w_m)
    unsigned level;      ///< level of the ambient smash product, max(n, m)
    std::vector<std::pair<Exp, Exp>> pairs;  ///< (j, i) indices of w^j # e_{level,i}
    std::size_t dimension() const { return pairs.size(); }
};

/// Basis of Hom_Q(Q(w_n), Q(w_m)) inside Q(w_level) # H_level.
HomSubalgebra hom_subalgebra_basis(unsigned n, unsigned m, Exp p);

/// Dimension p^(n+m), support of every basis image, exact span of the whole
/// Hom space, and closure under smash_mult over all basis pairs.
Report hom_subalgebra_check(unsigned n, unsigned m, Exp p, const Rat& a);

/// Entries rendered as "0", "a" for the radicand, otherwise "num/den".
std::string format_matrix_symbolic(const QMatrix& m, const Rat& a);

nlohmann::json to_json(const SmashElt& x);
SmashElt smash_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const QMatrix& m, Exp p, unsigned n, const Rat& a);
QMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace radhopf
