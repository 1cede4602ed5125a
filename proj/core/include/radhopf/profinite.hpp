#pragma once

#include "radhopf/hopf.hpp"

#include <cstdint>
#include <vector>

namespace radhopf {

/// sigma_j -> sigma_i, coefficients untouched. x must have group level j.
GroupRingElt nu_groupring(unsigned j, unsigned i, const GroupRingElt& x);

/// e_{n,i} -> e_{n-1,i/p} when p | i, else 0.
HElt nu_h(unsigned n, const HElt& h);

/// Re-expresses every coefficient of x in Q(zeta_level), level >= current.
GroupRingElt embed_coefficients(const GroupRingElt& x, unsigned level);

/// delta o nu = nu o delta on every zeta^a sigma^b at level jn.
Report commute_check(Exp p, unsigned jn, unsigned in);

/// Truncation of an element of H_infinity: levels 1..L, compatible under nu_h.
class CoherentH {
  public:
    /// Throws InvalidArgument naming the first level n with nu_h(levels[n]) != levels[n-1].
    static CoherentH make(std::vector<HElt> levels);

    Exp p() const { return levels_.front().field.p; }
    unsigned L() const { return static_cast<unsigned>(levels_.size()); }
    /// levels[n] for 1 <= n <= L.
    const HElt& project(unsigned n) const;
    const std::vector<HElt>& levels() const { return levels_; }

    friend bool operator==(const CoherentH&, const CoherentH&) = default;

  private:
    explicit CoherentH(std::vector<HElt> levels) : levels_(std::move(levels)) {}
    std::vector<HElt> levels_;
};

/// Residues a_n mod p^n for n = 1..L; a_n = a_m mod p^m.
class PadicTrunc {
  public:
    static PadicTrunc make(Exp p, std::vector<Exp> exponents, bool unit);
    /// The integer k seen at every level.
    static PadicTrunc from_integer(Exp p, unsigned L, Exp k, bool unit);
    /// pi^e mod p^n at every level: the truncation of delta^e in Delta_infinity.
    static PadicTrunc delta_power(Exp p, unsigned L, Exp e);

    Exp p() const { return p_; }
    unsigned L() const { return static_cast<unsigned>(exponents_.size()); }
    bool unit() const { return unit_; }
    Exp at(unsigned n) const { return exponents_.at(n - 1); }
    const std::vector<Exp>& exponents() const { return exponents_; }

    friend bool operator==(const PadicTrunc&, const PadicTrunc&) = default;

  private:
    PadicTrunc(Exp p, std::vector<Exp> e, bool unit) : p_(p), exponents_(std::move(e)), unit_(unit) {}
    Exp p_;
    std::vector<Exp> exponents_;
    bool unit_;
};

enum class PadicOp { Add, Mul };
/// Levelwise arithmetic; a sum is never flagged as a unit, a product of units is.
PadicTrunc padic_ops(const PadicTrunc& x, const PadicTrunc& y, PadicOp op);

/// zeta^a sigma^b -> zeta^(a u) sigma^(b u) with u the residue of a unit mod
/// the coefficient and group orders.
GroupRingElt unit_action(Exp u, const GroupRingElt& x);

/// Applies the unit sequence d levelwise through the group ring; d = (1,1,...)
/// is the identity and PadicTrunc::delta_power(p, L, 1) is delta.
CoherentH delta_inf_action(const PadicTrunc& d, const CoherentH& c);

/// True when every level of xs (xs[n-1] at level n) is fixed by d.
bool is_fixed_sequence(const PadicTrunc& d, const std::vector<GroupRingElt>& xs);

/// Largest L accepted by the truncation suite: p^L phi(p^L) <= limit.
unsigned max_truncation_level(Exp p, std::size_t limit = 20000);

/// Per level: fixed ring = span of the e-basis, and nu carries the fixed
/// space at level n onto the fixed space at level n-1.
Report fixed_truncation_check(Exp p, unsigned L);

/// Every levelwise check for one (p, L): functoriality, nu_h against
/// nu_groupring, surjectivity, commutation, coherence, p-adic compatibility
/// and the fixed-ring truncation.
std::vector<Report> profinite_suite(Exp p, unsigned L);

nlohmann::json to_json(const CoherentH& c);
CoherentH coherent_from_json(const nlohmann::json& j);
nlohmann::json to_json(const PadicTrunc& x);
PadicTrunc padic_from_json(const nlohmann::json& j);

}  // namespace radhopf
