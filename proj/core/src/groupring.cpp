#include "radhopf/groupring.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>

namespace radhopf {

GroupRingElt::GroupRingElt(FieldDescriptor field, unsigned group_level)
    : field_(field),
      group_level_(group_level),
      order_(ipow(field.p, group_level)),
      coeffs_(static_cast<std::size_t>(order_), CycloElt(field)) {
    if (group_level < 1) throw InvalidArgument("group level must be >= 1");
}

GroupRingElt::GroupRingElt(FieldDescriptor field, unsigned group_level, std::vector<CycloElt> coeffs)
    : GroupRingElt(field, group_level) {
    if (static_cast<Exp>(coeffs.size()) != order_) throw InvalidArgument("group ring element needs p^level coefficients");
    for (const auto& c : coeffs)
        if (!(c.field() == field_)) throw InvalidArgument("coefficient field mismatch");
    coeffs_ = std::move(coeffs);
}

GroupRingElt GroupRingElt::one(const FieldDescriptor& f, unsigned group_level) {
    return monomial(f, group_level, 0, CycloElt::one(f));
}

GroupRingElt GroupRingElt::monomial(const FieldDescriptor& f, unsigned group_level, Exp b, const CycloElt& c) {
    GroupRingElt out(f, group_level);
    out.coeff(b) = c;
    return out;
}

bool GroupRingElt::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const CycloElt& c) { return c.is_zero(); });
}

void GroupRingElt::check_compatible(const GroupRingElt& o) const {
    if (!(field_ == o.field_) || group_level_ != o.group_level_)
        throw InvalidArgument("group ring elements live at different levels");
}

GroupRingElt& GroupRingElt::operator+=(const GroupRingElt& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

GroupRingElt& GroupRingElt::operator-=(const GroupRingElt& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

GroupRingElt operator*(const CycloElt& s, const GroupRingElt& x) {
    GroupRingElt out = x;
    for (auto& c : out.coeffs_) c = s * c;
    return out;
}

GroupRingElt operator*(const Rat& s, const GroupRingElt& x) {
    GroupRingElt out = x;
    for (auto& c : out.coeffs_) c *= s;
    return out;
}

QVec GroupRingElt::to_rational() const {
    const auto phi = static_cast<std::size_t>(field_.phi);
    QVec v(phi * coeffs_.size());
    for (std::size_t b = 0; b < coeffs_.size(); ++b) {
        if (coeffs_[b].is_zero()) continue;
        auto c = coeffs_[b].coeffs();
        std::move(c.begin(), c.end(), v.begin() + static_cast<std::ptrdiff_t>(b * phi));
    }
    return v;
}

GroupRingElt GroupRingElt::from_rational(const FieldDescriptor& f, unsigned group_level, const QVec& v) {
    GroupRingElt out(f, group_level);
    const auto phi = static_cast<std::size_t>(f.phi);
    if (v.size() != phi * static_cast<std::size_t>(out.order_)) throw InvalidArgument("rational vector has wrong length");
    for (std::size_t b = 0; b < out.coeffs_.size(); ++b) {
        out.coeffs_[b] = CycloElt(f, QVec(v.begin() + static_cast<std::ptrdiff_t>(b * phi),
                                          v.begin() + static_cast<std::ptrdiff_t>((b + 1) * phi)));
    }
    return out;
}

GroupRingElt gr_mul(const GroupRingElt& a, const GroupRingElt& b) {
    if (!(a.field() == b.field()) || a.group_level() != b.group_level())
        throw InvalidArgument("gr_mul: mismatched levels");
    GroupRingElt out(a.field(), a.group_level());
    const Exp order = a.order();
    for (Exp i = 0; i < order; ++i) {
        const auto& x = a.coeff(i);
        if (x.is_zero()) continue;
        for (Exp j = 0; j < order; ++j) {
            const auto& y = b.coeff(j);
            if (!y.is_zero()) out.coeff(i + j) += x * y;
        }
    }
    return out;
}

void TensorElt::add(Exp a, Exp b, const CycloElt& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.try_emplace({a, b}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

void Tensor3::add(const std::array<Exp, 3>& key, const CycloElt& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

TensorElt gr_comul(const GroupRingElt& x) {
    TensorElt t{x.field(), x.group_level(), {}};
    for (Exp b = 0; b < x.order(); ++b) t.add(b, b, x.coeff(b));
    return t;
}

CycloElt gr_counit(const GroupRingElt& x) {
    CycloElt sum(x.field());
    for (const auto& c : x.coeffs()) sum += c;
    return sum;
}

GroupRingElt gr_antipode(const GroupRingElt& x) {
    GroupRingElt out(x.field(), x.group_level());
    for (Exp b = 0; b < x.order(); ++b) out.coeff(-b) = x.coeff(b);
    return out;
}

Tensor3 comul_left(const TensorElt& t) {
    Tensor3 out;
    for (const auto& [key, c] : t.terms) out.add({key.first, key.first, key.second}, c);
    return out;
}

Tensor3 comul_right(const TensorElt& t) {
    Tensor3 out;
    for (const auto& [key, c] : t.terms) out.add({key.first, key.second, key.second}, c);
    return out;
}

GroupRingElt counit_left(const TensorElt& t) {
    GroupRingElt out(t.field, t.group_level);
    for (const auto& [key, c] : t.terms) out.coeff(key.second) += c;
    return out;
}

GroupRingElt counit_right(const TensorElt& t) {
    GroupRingElt out(t.field, t.group_level);
    for (const auto& [key, c] : t.terms) out.coeff(key.first) += c;
    return out;
}

GroupRingElt antipode_multiply(const TensorElt& t) {
    GroupRingElt out(t.field, t.group_level);
    for (const auto& [key, c] : t.terms) out.coeff(key.second - key.first) += c;
    return out;
}

GroupRingElt diag_action(Exp e, const GroupRingElt& x) {
    const auto& f = x.field();
    const Exp u_coeff = powmod(f.pi, mod(e, f.phi), f.pn);
    const Exp u_group = mod(u_coeff, x.order());
    GroupRingElt out(f, x.group_level());
    for (Exp b = 0; b < x.order(); ++b) {
        const auto& c = x.coeff(b);
        if (c.is_zero()) continue;
        out.coeff(static_cast<Exp>((static_cast<__int128>(b) * u_group) % x.order())) += galois_apply(u_coeff, c);
    }
    return out;
}

namespace {

std::vector<GroupRingElt> fixed_ring_dense(const FieldDescriptor& f) {
    const auto phi = static_cast<std::size_t>(f.phi);
    const auto dim = phi * static_cast<std::size_t>(f.pn);
    QMatrix m(dim, dim);
    // Column (b, a) holds delta(zeta^a sigma^b) - zeta^a sigma^b.
    for (Exp b = 0; b < f.pn; ++b) {
        for (Exp a = 0; a < f.phi; ++a) {
            const auto col = static_cast<std::size_t>(b) * phi + static_cast<std::size_t>(a);
            auto image = diag_action(1, GroupRingElt::monomial(f, f.n, b, CycloElt::zeta_power(f, a))).to_rational();
            for (std::size_t r = 0; r < dim; ++r) {
                if (sgn(image[r]) != 0) m(r, col) = image[r];
            }
            m(col, col) -= 1;
        }
    }
    std::vector<GroupRingElt> out;
    for (const auto& v : kernel(std::move(m))) out.push_back(GroupRingElt::from_rational(f, f.n, v));
    return out;
}

std::vector<GroupRingElt> fixed_ring_orbits(const FieldDescriptor& f) {
    const auto phi = static_cast<std::size_t>(f.phi);
    std::vector<bool> seen(static_cast<std::size_t>(f.pn), false);
    std::vector<GroupRingElt> out;
    for (Exp b0 = 0; b0 < f.pn; ++b0) {
        if (seen[static_cast<std::size_t>(b0)]) continue;
        std::vector<Exp> orbit;
        for (Exp b = b0; !seen[static_cast<std::size_t>(b)]; b = (b * f.pi) % f.pn) {
            seen[static_cast<std::size_t>(b)] = true;
            orbit.push_back(b);
        }
        // A fixed element restricted to this orbit is determined by its
        // coefficient c at b0, with c_{b pi} = delta(c_b) and delta^k(c) = c.
        const auto k = static_cast<Exp>(orbit.size());
        QMatrix block(phi, phi);
        for (std::size_t a = 0; a < phi; ++a) {
            auto image = delta_apply(k, CycloElt::zeta_power(f, static_cast<Exp>(a)));
            for (std::size_t r = 0; r < phi; ++r) block(r, a) = image.coeff(static_cast<Exp>(r));
            block(a, a) -= 1;
        }
        for (const auto& v : kernel(std::move(block))) {
            GroupRingElt x(f, f.n);
            CycloElt c(f, v);
            for (Exp b : orbit) {
                x.coeff(b) = c;
                c = delta_apply(1, c);
            }
            out.push_back(std::move(x));
        }
    }
    return out;
}

}  // namespace

FixedRingResult fixed_ring(Exp p, unsigned n, FixedRingMethod method, std::size_t dense_limit) {
    const auto f = FieldDescriptor::make(p, n);
    const auto dim = static_cast<std::size_t>(f.phi * f.pn);
    if (method == FixedRingMethod::Auto) method = dim <= dense_limit ? FixedRingMethod::Dense : FixedRingMethod::OrbitBlocks;
    auto basis = method == FixedRingMethod::Dense ? fixed_ring_dense(f) : fixed_ring_orbits(f);
    return {std::move(basis), method, dim};
}

nlohmann::json to_json(const GroupRingElt& x) {
    auto out = nlohmann::json::array();
    for (const auto& c : x.coeffs()) out.push_back(to_json(c));
    return out;
}

GroupRingElt group_ring_from_json(const FieldDescriptor& f, unsigned group_level, const nlohmann::json& j) {
    std::vector<CycloElt> coeffs;
    for (const auto& c : j) coeffs.push_back(cyclo_from_json(f, c));
    return GroupRingElt(f, group_level, std::move(coeffs));
}

}  // namespace radhopf
