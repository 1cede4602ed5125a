#pragma once

#include "radhopf/cyclotomic.hpp"
#include "radhopf/linalg.hpp"

#include <nlohmann/json_fwd.hpp>

#include <array>
#include <map>
#include <utility>
#include <vector>

namespace radhopf {

/// Element of Q(zeta)[N] with N = <sigma> cyclic of order p^level.
///
/// The coefficient field may sit higher in the tower than the group
/// (the connecting maps between levels keep coefficients and shrink the
/// group), so the two levels are stored separately.
class GroupRingElt {
  public:
    GroupRingElt(FieldDescriptor field, unsigned group_level);
    GroupRingElt(FieldDescriptor field, unsigned group_level, std::vector<CycloElt> coeffs);

    /// Group ring whose coefficient field and group share level n.
    static GroupRingElt zero(const FieldDescriptor& f) { return {f, f.n}; }
    static GroupRingElt one(const FieldDescriptor& f, unsigned group_level);
    /// c * sigma^b.
    static GroupRingElt monomial(const FieldDescriptor& f, unsigned group_level, Exp b, const CycloElt& c);

    const FieldDescriptor& field() const { return field_; }
    unsigned group_level() const { return group_level_; }
    Exp order() const { return order_; }
    const CycloElt& coeff(Exp b) const { return coeffs_[static_cast<std::size_t>(mod(b, order_))]; }
    CycloElt& coeff(Exp b) { return coeffs_[static_cast<std::size_t>(mod(b, order_))]; }
    const std::vector<CycloElt>& coeffs() const { return coeffs_; }
    bool is_zero() const;

    GroupRingElt& operator+=(const GroupRingElt& o);
    GroupRingElt& operator-=(const GroupRingElt& o);
    friend GroupRingElt operator+(GroupRingElt a, const GroupRingElt& b) { return a += b; }
    friend GroupRingElt operator-(GroupRingElt a, const GroupRingElt& b) { return a -= b; }
    friend GroupRingElt operator*(const CycloElt& s, const GroupRingElt& x);
    friend GroupRingElt operator*(const Rat& s, const GroupRingElt& x);
    friend bool operator==(const GroupRingElt&, const GroupRingElt&) = default;

    /// Coordinates over Q in the basis zeta^a sigma^b, index b * phi + a.
    QVec to_rational() const;
    static GroupRingElt from_rational(const FieldDescriptor& f, unsigned group_level, const QVec& v);

  private:
    void check_compatible(const GroupRingElt& o) const;

    FieldDescriptor field_;
    unsigned group_level_;
    Exp order_;
    std::vector<CycloElt> coeffs_;
};

/// Convolution product: coefficient of sigma^c is sum over a + b = c.
GroupRingElt gr_mul(const GroupRingElt& a, const GroupRingElt& b);

/// x expanded over basis pairs sigma^a (x) sigma^b with Q(zeta) coefficients.
struct TensorElt {
    FieldDescriptor field;
    unsigned group_level;
    std::map<std::pair<Exp, Exp>, CycloElt> terms;

    void add(Exp a, Exp b, const CycloElt& c);
    friend bool operator==(const TensorElt&, const TensorElt&) = default;
};

/// Triple tensors, used only to state coassociativity.
struct Tensor3 {
    std::map<std::array<Exp, 3>, CycloElt> terms;
    void add(const std::array<Exp, 3>& key, const CycloElt& c);
    friend bool operator==(const Tensor3&, const Tensor3&) = default;
};

TensorElt gr_comul(const GroupRingElt& x);
CycloElt gr_counit(const GroupRingElt& x);
GroupRingElt gr_antipode(const GroupRingElt& x);

/// (Delta (x) id) and (id (x) Delta) applied to a tensor of group-likes.
Tensor3 comul_left(const TensorElt& t);
Tensor3 comul_right(const TensorElt& t);
/// (eps (x) id) and (id (x) eps).
GroupRingElt counit_left(const TensorElt& t);
GroupRingElt counit_right(const TensorElt& t);
/// m (S (x) id).
GroupRingElt antipode_multiply(const TensorElt& t);

/// The diagonal action of delta^e: zeta -> zeta^(pi^e) on coefficients and
/// sigma^b -> sigma^(b pi^e) on the group, simultaneously.
GroupRingElt diag_action(Exp e, const GroupRingElt& x);

enum class FixedRingMethod {
    /// One Gauss-Jordan elimination on the full phi * p^n space.
    Dense,
    /// Exact elimination per orbit of sigma-exponents under b -> b pi;
    /// each block reduces to the fixed field of a power of delta.
    OrbitBlocks,
    /// Dense up to dense_limit rational dimensions, orbit blocks above.
    Auto,
};

struct FixedRingResult {
    std::vector<GroupRingElt> basis;
    FixedRingMethod method;
    std::size_t ambient_dimension;
};

/// Q-basis of (Q(zeta_n)[N_n])^Delta_n.
FixedRingResult fixed_ring(Exp p, unsigned n, FixedRingMethod method = FixedRingMethod::Auto,
                           std::size_t dense_limit = 1000);

nlohmann::json to_json(const GroupRingElt& x);
GroupRingElt group_ring_from_json(const FieldDescriptor& f, unsigned group_level, const nlohmann::json& j);

}  // namespace radhopf
