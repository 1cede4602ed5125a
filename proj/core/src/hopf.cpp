#include "radhopf/hopf.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace radhopf {

namespace {

void check_index(const FieldDescriptor& f, Exp i) {
    if (i < 0 || i >= f.pn) throw InvalidArgument("index " + std::to_string(i) + " outside 0..p^n-1");
}

nlohmann::json params(Exp p, unsigned n, const Rat& a) {
    return {{"p", p}, {"n", n}, {"a", format_rat(a)}};
}

}  // namespace

HElt HElt::zero(const FieldDescriptor& f) { return {f, std::vector<Rat>(static_cast<std::size_t>(f.pn))}; }

HElt HElt::basis(const FieldDescriptor& f, Exp i) {
    check_index(f, i);
    HElt h = zero(f);
    h.coords[static_cast<std::size_t>(i)] = 1;
    return h;
}

HElt HElt::unit(const FieldDescriptor& f) { return {f, std::vector<Rat>(static_cast<std::size_t>(f.pn), Rat(1))}; }

HElt& HElt::operator+=(const HElt& o) {
    if (!(field == o.field)) throw InvalidArgument("H elements at different levels");
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
    return *this;
}

HElt operator*(const Rat& s, HElt h) {
    for (auto& c : h.coords) c *= s;
    return h;
}

HElt operator*(const HElt& a, const HElt& b) {
    if (!(a.field == b.field)) throw InvalidArgument("H elements at different levels");
    HElt out = a;
    for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] *= b.coords[i];
    return out;
}

RadicalElt RadicalElt::zero(const FieldDescriptor& f, const Rat& a) {
    return {f, a, std::vector<Rat>(static_cast<std::size_t>(f.pn))};
}

RadicalElt RadicalElt::w_power(const FieldDescriptor& f, const Rat& a, Exp k, const Rat& scale) {
    RadicalElt x = zero(f, a);
    // w^k for k >= p^n picks up a^(k / p^n)
    Rat c = scale;
    Exp q = k / f.pn;
    for (Exp t = 0; t < q; ++t) c *= a;
    x.coords[static_cast<std::size_t>(k % f.pn)] = c;
    return x;
}

RadicalElt& RadicalElt::operator+=(const RadicalElt& o) {
    if (!(field == o.field) || radicand != o.radicand) throw InvalidArgument("radical elements of different fields");
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
    return *this;
}

RadicalElt& RadicalElt::operator-=(const RadicalElt& o) {
    if (!(field == o.field) || radicand != o.radicand) throw InvalidArgument("radical elements of different fields");
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
    return *this;
}

RadicalElt operator*(const Rat& s, RadicalElt x) {
    for (auto& c : x.coords) c *= s;
    return x;
}

RadicalElt operator*(const RadicalElt& a, const RadicalElt& b) {
    if (!(a.field == b.field) || a.radicand != b.radicand) throw InvalidArgument("radical elements of different fields");
    RadicalElt out = RadicalElt::zero(a.field, a.radicand);
    const auto pn = a.coords.size();
    for (std::size_t j = 0; j < pn; ++j) {
        if (sgn(a.coords[j]) == 0) continue;
        for (std::size_t k = 0; k < pn; ++k) {
            if (sgn(b.coords[k]) == 0) continue;
            Rat term = a.coords[j] * b.coords[k];
            if (j + k >= pn) {
                term *= a.radicand;
                out.coords[j + k - pn] += term;
            } else {
                out.coords[j + k] += term;
            }
        }
    }
    return out;
}

void validate_radicand(Exp p, const Rat& a) {
    if (sgn(a) == 0) throw InvalidArgument("radicand must be nonzero");
    if (is_perfect_power(a, static_cast<unsigned long>(p)))
        throw InvalidArgument("radicand " + format_rat(a) + " is a p-th power in Q");
}

GroupRingElt e_basis(const FieldDescriptor& f, Exp i) {
    check_index(f, i);
    GroupRingElt out(f, f.n);
    const Rat scale(1, static_cast<unsigned long>(f.pn));
    for (Exp j = 0; j < f.pn; ++j) out.coeff(j) = CycloElt::zeta_power(f, -i * j, scale);
    return out;
}

GroupRingElt e_basis(Exp p, unsigned n, Exp i) { return e_basis(FieldDescriptor::make(p, n), i); }

std::vector<GroupRingElt> e_basis_all(const FieldDescriptor& f) {
    std::vector<GroupRingElt> out;
    out.reserve(static_cast<std::size_t>(f.pn));
    for (Exp i = 0; i < f.pn; ++i) out.push_back(e_basis(f, i));
    return out;
}

GroupRingElt to_group_ring(const HElt& h) {
    const auto& f = h.field;
    GroupRingElt out(f, f.n);
    const Rat scale(1, static_cast<unsigned long>(f.pn));
    for (Exp i = 0; i < f.pn; ++i) {
        const Rat& c = h.coords[static_cast<std::size_t>(i)];
        if (sgn(c) == 0) continue;
        for (Exp j = 0; j < f.pn; ++j) out.coeff(j).add_zeta_power(-i * j, c * scale);
    }
    return out;
}

std::optional<HElt> from_group_ring(const GroupRingElt& x) {
    const auto& f = x.field();
    if (x.group_level() != f.n) throw InvalidArgument("from_group_ring expects matching coefficient and group levels");
    HElt h = HElt::zero(f);
    for (Exp i = 0; i < f.pn; ++i) {
        CycloElt c(f);
        for (Exp j = 0; j < f.pn; ++j) {
            if (!x.coeff(j).is_zero()) c += x.coeff(j).times_zeta_power(i * j);
        }
        if (!c.is_rational()) return std::nullopt;
        h.coords[static_cast<std::size_t>(i)] = c.is_zero() ? Rat(0) : c.coeff(0);
    }
    return h;
}

Rat dual_pairing(Exp i, Exp k, Exp p, unsigned n) {
    const auto f = FieldDescriptor::make(p, n);
    check_index(f, i);
    check_index(f, k);
    CycloElt sum(f);
    const Rat scale(1, static_cast<unsigned long>(f.pn));
    for (Exp j = 0; j < f.pn; ++j) sum.add_zeta_power(-i * j + k * j, scale);
    if (!sum.is_rational()) throw InvalidArgument("character sum is not rational");  // cannot happen
    return sum.is_zero() ? Rat(0) : sum.coeff(0);
}

std::vector<std::pair<Exp, Exp>> h_comul(Exp i, Exp p, unsigned n) {
    const Exp pn = ipow(p, n);
    if (i < 0 || i >= pn) throw InvalidArgument("index outside 0..p^n-1");
    std::vector<std::pair<Exp, Exp>> out;
    out.reserve(static_cast<std::size_t>(pn));
    for (Exp s = 0; s < pn; ++s) out.emplace_back(s, mod(i - s, pn));
    return out;
}

Rat h_counit(Exp i) { return i == 0 ? Rat(1) : Rat(0); }

Exp h_antipode(Exp i, Exp p, unsigned n) { return mod(-i, ipow(p, n)); }

RadicalElt act(const HElt& h, const RadicalElt& x) {
    if (!(h.field == x.field)) throw InvalidArgument("act: mismatched levels");
    RadicalElt out = RadicalElt::zero(x.field, x.radicand);
    for (std::size_t k = 0; k < x.coords.size(); ++k) out.coords[k] = h.coords[k] * x.coords[k];
    return out;
}

QMatrix action_matrix(const HElt& h, const Rat& a) {
    const auto pn = static_cast<std::size_t>(h.field.pn);
    QMatrix m(pn, pn);
    for (std::size_t k = 0; k < pn; ++k) {
        auto image = act(h, RadicalElt::w_power(h.field, a, static_cast<Exp>(k)));
        for (std::size_t r = 0; r < pn; ++r) m(r, k) = image.coords[r];
    }
    return m;
}

Report measuring_check(Exp p, unsigned n, const Rat& a) {
    Stopwatch clock;
    validate_radicand(p, a);
    auto report = begin_report("measuring", params(p, n, a));
    const auto f = FieldDescriptor::make(p, n);
    std::size_t checked = 0;
    for (Exp i = 0; i < f.pn && report.passed(); ++i) {
        const auto pairs = h_comul(i, p, n);
        const auto ei = HElt::basis(f, i);
        for (Exp j = 0; j < f.pn && report.passed(); ++j) {
            const auto x = RadicalElt::w_power(f, a, j);
            for (Exp k = 0; k < f.pn; ++k) {
                const auto y = RadicalElt::w_power(f, a, k);
                const auto lhs = act(ei, x * y);
                auto rhs = RadicalElt::zero(f, a);
                for (const auto& [s, t] : pairs) {
                    auto left = act(HElt::basis(f, s), x);
                    if (is_zero(left.coords)) continue;
                    rhs += left * act(HElt::basis(f, t), y);
                }
                ++checked;
                report.require(lhs == rhs, {{"i", i}, {"j", j}, {"k", k}, {"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}});
                if (!report.passed()) break;
            }
        }
    }
    report.details["triples_checked"] = checked;
    clock.stamp(report);
    return report;
}

Report fixed_field_check(Exp p, unsigned n, const Rat& a) {
    Stopwatch clock;
    validate_radicand(p, a);
    auto report = begin_report("fixed-field", params(p, n, a));
    const auto f = FieldDescriptor::make(p, n);
    const auto pn = static_cast<std::size_t>(f.pn);
    std::vector<QMatrix> blocks;
    for (Exp i = 0; i < f.pn; ++i) {
        blocks.push_back(action_matrix(HElt::basis(f, i), a) - h_counit(i) * QMatrix::identity(pn));
    }
    const auto fixed = kernel(vstack(blocks));
    QVec one(pn);
    one[0] = 1;
    const bool is_q = fixed.size() == 1 && same_span(fixed, {one}, pn);
    report.details["dimension"] = fixed.size();
    report.require(is_q, {{"dimension", fixed.size()}});
    clock.stamp(report);
    return report;
}

BaseChangeResult base_change_sigma(Exp p, unsigned n, unsigned m) {
    if (m < 1 || m >= n) throw InvalidArgument("base_change_sigma requires 1 <= m < n");
    const auto f = FieldDescriptor::make(p, n);
    const auto fm = FieldDescriptor::make(p, m);
    const Exp stride = ipow(p, n - m);
    BaseChangeResult out;
    GroupRingElt sum(f, f.n);
    out.coefficients_in_subfield = true;
    for (Exp i = 0; i < f.pn; ++i) {
        auto c = CycloElt::zeta_power(f, i * stride);
        out.coefficients_in_subfield = out.coefficients_in_subfield && embed(CycloElt::zeta_power(fm, i), n) == c;
        sum += c * e_basis(f, i);
        out.coefficients.push_back(std::move(c));
    }
    out.verified = sum == GroupRingElt::monomial(f, f.n, stride, CycloElt::one(f));
    return out;
}

nlohmann::json to_json(const HElt& h) { return format_rats(h.coords); }

HElt helt_from_json(const FieldDescriptor& f, const nlohmann::json& j) {
    HElt h{f, parse_rats(j.get<std::vector<std::string>>())};
    if (static_cast<Exp>(h.coords.size()) != f.pn) throw InvalidArgument("H element needs p^n coordinates");
    return h;
}

nlohmann::json to_json(const RadicalElt& x) {
    return {{"p", x.field.p}, {"n", x.field.n}, {"radicand", format_rat(x.radicand)}, {"coords", format_rats(x.coords)}};
}

RadicalElt radical_from_json(const nlohmann::json& j) {
    const auto f = FieldDescriptor::make(j.at("p").get<Exp>(), j.at("n").get<unsigned>());
    RadicalElt x{f, parse_rat(j.at("radicand").get<std::string>()),
                 parse_rats(j.at("coords").get<std::vector<std::string>>())};
    if (static_cast<Exp>(x.coords.size()) != f.pn) throw InvalidArgument("radical element needs p^n coordinates");
    return x;
}

}  // namespace radhopf
