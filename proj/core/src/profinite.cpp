#include "radhopf/profinite.hpp"

#include <nlohmann/json.hpp>

#include <numeric>
#include <random>

namespace radhopf {

GroupRingElt nu_groupring(unsigned j, unsigned i, const GroupRingElt& x) {
    if (j < i) throw InvalidArgument("nu_groupring needs j >= i");
    if (i < 1) throw InvalidArgument("levels start at 1");
    if (x.group_level() != j) throw InvalidArgument("element does not live at group level j");
    if (i == j) return x;
    GroupRingElt out(x.field(), i);
    for (Exp b = 0; b < x.order(); ++b)
        if (!x.coeff(b).is_zero()) out.coeff(b) += x.coeff(b);
    return out;
}

HElt nu_h(unsigned n, const HElt& h) {
    if (n < 2) throw InvalidArgument("nu_h needs n >= 2");
    if (h.field.n != n) throw InvalidArgument("element does not live at level n");
    const auto lower = h.field.at_level(n - 1);
    HElt out = HElt::zero(lower);
    for (Exp i = 0; i < h.field.pn; i += h.field.p) out.coords[static_cast<std::size_t>(i / h.field.p)] = h.coords[static_cast<std::size_t>(i)];
    return out;
}

GroupRingElt embed_coefficients(const GroupRingElt& x, unsigned level) {
    const auto target = x.field().at_level(level);
    GroupRingElt out(target, x.group_level());
    for (Exp b = 0; b < x.order(); ++b)
        if (!x.coeff(b).is_zero()) out.coeff(b) = embed(x.coeff(b), level);
    return out;
}

Report commute_check(Exp p, unsigned jn, unsigned in) {
    Stopwatch clock;
    auto report = begin_report("nu-delta-commute", {{"p", p}, {"j", jn}, {"i", in}});
    if (jn < in) throw InvalidArgument("commute_check needs j >= i");
    const auto f = FieldDescriptor::make(p, jn);
    std::size_t checked = 0;
    for (Exp b = 0; b < f.pn && report.passed(); ++b) {
        for (Exp a = 0; a < f.phi; ++a) {
            const auto x = GroupRingElt::monomial(f, jn, b, CycloElt::zeta_power(f, a));
            const bool ok = diag_action(1, nu_groupring(jn, in, x)) == nu_groupring(jn, in, diag_action(1, x));
            ++checked;
            if (!ok) {
                report.require(false, {{"a", a}, {"b", b}});
                break;
            }
        }
    }
    report.details["basis_elements_checked"] = checked;
    clock.stamp(report);
    return report;
}

CoherentH CoherentH::make(std::vector<HElt> levels) {
    if (levels.empty()) throw InvalidArgument("a coherent sequence needs at least one level");
    const Exp p = levels.front().field.p;
    for (std::size_t k = 0; k < levels.size(); ++k) {
        const auto n = static_cast<unsigned>(k + 1);
        if (levels[k].field.p != p || levels[k].field.n != n)
            throw InvalidArgument("entry " + std::to_string(n) + " is not an element of H at level " + std::to_string(n));
        if (n >= 2 && !(nu_h(n, levels[k]) == levels[k - 1]))
            throw InvalidArgument("incoherent at level " + std::to_string(n));
    }
    return CoherentH(std::move(levels));
}

const HElt& CoherentH::project(unsigned n) const {
    if (n < 1 || n > L()) throw InvalidArgument("projection level outside 1..L");
    return levels_[n - 1];
}

PadicTrunc PadicTrunc::make(Exp p, std::vector<Exp> exponents, bool unit) {
    if (!is_prime(p)) throw InvalidArgument("p must be prime");
    if (exponents.empty()) throw InvalidArgument("truncation level must be >= 1");
    for (std::size_t k = 0; k < exponents.size(); ++k) {
        const auto n = static_cast<unsigned>(k + 1);
        const Exp pn = ipow(p, n);
        if (exponents[k] < 0 || exponents[k] >= pn)
            throw InvalidArgument("residue at level " + std::to_string(n) + " outside 0..p^n-1");
        if (k > 0 && exponents[k] % ipow(p, n - 1) != exponents[k - 1])
            throw InvalidArgument("incompatible residues at level " + std::to_string(n));
        if (unit && exponents[k] % p == 0) throw InvalidArgument("unit flag set on a non-unit");
    }
    return PadicTrunc(p, std::move(exponents), unit);
}

PadicTrunc PadicTrunc::from_integer(Exp p, unsigned L, Exp k, bool unit) {
    std::vector<Exp> e;
    for (unsigned n = 1; n <= L; ++n) e.push_back(mod(k, ipow(p, n)));
    return make(p, std::move(e), unit);
}

PadicTrunc PadicTrunc::delta_power(Exp p, unsigned L, Exp e) {
    const Exp pi = primitive_root(p);
    std::vector<Exp> u;
    for (unsigned n = 1; n <= L; ++n) {
        const Exp pn = ipow(p, n);
        const Exp order = phi_prime_power(p, n);
        u.push_back(powmod(pi, mod(e, order), pn));
    }
    return make(p, std::move(u), true);
}

PadicTrunc padic_ops(const PadicTrunc& x, const PadicTrunc& y, PadicOp op) {
    if (x.p() != y.p() || x.L() != y.L()) throw InvalidArgument("p-adic operands differ in p or L");
    std::vector<Exp> out;
    for (unsigned n = 1; n <= x.L(); ++n) {
        const Exp pn = ipow(x.p(), n);
        out.push_back(op == PadicOp::Add ? (x.at(n) + y.at(n)) % pn
                                         : static_cast<Exp>(static_cast<__int128>(x.at(n)) * y.at(n) % pn));
    }
    const bool unit = op == PadicOp::Mul ? x.unit() && y.unit() : false;
    return PadicTrunc::make(x.p(), std::move(out), unit);
}

GroupRingElt unit_action(Exp u, const GroupRingElt& x) {
    const auto& f = x.field();
    const Exp u_coeff = mod(u, f.pn);
    if (u_coeff % f.p == 0) throw InvalidArgument("unit_action needs a unit");
    const Exp u_group = mod(u, x.order());
    GroupRingElt out(f, x.group_level());
    for (Exp b = 0; b < x.order(); ++b) {
        const auto& c = x.coeff(b);
        if (c.is_zero()) continue;
        out.coeff(static_cast<Exp>(static_cast<__int128>(b) * u_group % x.order())) += galois_apply(u_coeff, c);
    }
    return out;
}

CoherentH delta_inf_action(const PadicTrunc& d, const CoherentH& c) {
    if (!d.unit()) throw InvalidArgument("delta_inf_action needs a unit sequence");
    if (d.p() != c.p() || d.L() != c.L()) throw InvalidArgument("p or L mismatch");
    std::vector<HElt> levels;
    for (unsigned n = 1; n <= c.L(); ++n) {
        const auto image = from_group_ring(unit_action(d.at(n), to_group_ring(c.project(n))));
        if (!image) throw InvalidArgument("image left H at level " + std::to_string(n));
        levels.push_back(*image);
    }
    return CoherentH::make(std::move(levels));
}

bool is_fixed_sequence(const PadicTrunc& d, const std::vector<GroupRingElt>& xs) {
    if (!d.unit()) throw InvalidArgument("fixed points need a unit sequence");
    if (xs.size() != d.L()) throw InvalidArgument("sequence length differs from L");
    for (unsigned n = 1; n <= d.L(); ++n)
        if (!(unit_action(d.at(n), xs[n - 1]) == xs[n - 1])) return false;
    return true;
}

unsigned max_truncation_level(Exp p, std::size_t limit) {
    unsigned L = 0;
    while (static_cast<std::size_t>(ipow(p, L + 1) * phi_prime_power(p, L + 1)) <= limit) ++L;
    return L;
}

Report fixed_truncation_check(Exp p, unsigned L) {
    Stopwatch clock;
    auto report = begin_report("fixed-truncation", {{"p", p}, {"L", L}});
    if (L < 1) throw InvalidArgument("L must be >= 1");
    if (L > max_truncation_level(p))
        throw InvalidArgument("L = " + std::to_string(L) + " exceeds the cap " + std::to_string(max_truncation_level(p)));
    auto levels = nlohmann::json::array();
    for (unsigned n = 1; n <= L && report.passed(); ++n) {
        const auto f = FieldDescriptor::make(p, n);
        const auto fixed = fixed_ring(p, n);
        const auto e = e_basis_all(f);
        nlohmann::json level{{"n", n}, {"kernel_dimension", fixed.basis.size()},
                             {"method", fixed.method == FixedRingMethod::Dense ? "dense" : "orbit-blocks"}};
        report.require(static_cast<Exp>(fixed.basis.size()) == f.pn, {{"n", n}, {"kernel_dimension", fixed.basis.size()}});

        // span{e} within the fixed ring
        for (Exp i = 0; i < f.pn && report.passed(); ++i)
            report.require(diag_action(1, e[static_cast<std::size_t>(i)]) == e[static_cast<std::size_t>(i)], {{"n", n}, {"unfixed_e", i}});

        // fixed ring within span{e}: explicit e-coordinates, re-expanded exactly
        std::vector<HElt> coords;
        for (std::size_t k = 0; k < fixed.basis.size() && report.passed(); ++k) {
            const auto h = from_group_ring(fixed.basis[k]);
            const bool ok = h && to_group_ring(*h) == fixed.basis[k];
            report.require(ok, {{"n", n}, {"fixed_vector", k}});
            if (ok) coords.push_back(*h);
        }
        std::vector<QVec> coord_vectors;
        for (const auto& h : coords) coord_vectors.push_back(h.coords);
        const auto fixed_rank = rank(coord_vectors, static_cast<std::size_t>(f.pn));
        level["fixed_rank_in_e_coordinates"] = fixed_rank;
        report.require(static_cast<Exp>(fixed_rank) == f.pn, {{"n", n}, {"fixed_rank", fixed_rank}});

        if (n >= 2 && report.passed()) {
            // nu sends the level-n fixed ring onto the level-(n-1) one
            std::vector<QVec> images;
            for (std::size_t k = 0; k < coords.size() && report.passed(); ++k) {
                const auto lowered = nu_h(n, coords[k]);
                const auto direct = nu_groupring(n, n - 1, fixed.basis[k]);
                report.require(embed_coefficients(to_group_ring(lowered), n) == direct, {{"n", n}, {"fixed_vector", k}});
                report.require(diag_action(1, direct) == direct, {{"n", n}, {"unfixed_image", k}});
                images.push_back(lowered.coords);
            }
            const auto image_rank = rank(images, static_cast<std::size_t>(f.pn / p));
            level["image_rank"] = image_rank;
            report.require(static_cast<Exp>(image_rank) == f.pn / p, {{"n", n}, {"image_rank", image_rank}});
        }
        levels.push_back(level);
    }
    report.details["levels"] = levels;
    clock.stamp(report);
    return report;
}

namespace {

Report functoriality_check(Exp p, unsigned L) {
    Stopwatch clock;
    auto report = begin_report("nu-functorial", {{"p", p}, {"L", L}});
    std::size_t checked = 0;
    for (unsigned k = 1; k <= L; ++k) {
        const auto f = FieldDescriptor::make(p, k);
        for (Exp b = 0; b < f.pn && report.passed(); ++b) {
            for (Exp a = 0; a < f.phi && report.passed(); ++a) {
                const auto x = GroupRingElt::monomial(f, k, b, CycloElt::zeta_power(f, a));
                report.require(nu_groupring(k, k, x) == x, {{"k", k}, {"a", a}, {"b", b}});
                for (unsigned j = 1; j <= k; ++j) {
                    const auto xj = nu_groupring(k, j, x);
                    for (unsigned i = 1; i <= j; ++i) {
                        ++checked;
                        report.require(nu_groupring(j, i, xj) == nu_groupring(k, i, x),
                                       {{"k", k}, {"j", j}, {"i", i}, {"a", a}, {"b", b}});
                    }
                }
            }
        }
    }
    report.details["compositions_checked"] = checked;
    clock.stamp(report);
    return report;
}

Report nu_h_agreement_check(Exp p, unsigned L, std::uint64_t seed) {
    Stopwatch clock;
    auto report = begin_report("nu-h-agreement", {{"p", p}, {"L", L}, {"seed", seed}});
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> val(-4, 4);
    std::size_t checked = 0;
    auto agree = [&](unsigned n, const HElt& h) {
        ++checked;
        const auto via_rule = embed_coefficients(to_group_ring(nu_h(n, h)), n);
        const auto via_group = nu_groupring(n, n - 1, to_group_ring(h));
        return via_rule == via_group;
    };
    for (unsigned n = 2; n <= L; ++n) {
        const auto f = FieldDescriptor::make(p, n);
        for (Exp i = 0; i < f.pn && report.passed(); ++i)
            report.require(agree(n, HElt::basis(f, i)), {{"n", n}, {"basis_index", i}});
        for (int t = 0; t < 4 && report.passed(); ++t) {
            HElt h = HElt::zero(f);
            for (auto& c : h.coords) c = Rat(val(rng));
            report.require(agree(n, h), {{"n", n}, {"element", to_json(h)}});
        }
        // surjectivity: e_{n,p i'} is a preimage of e_{n-1,i'}
        const auto lower = f.at_level(n - 1);
        for (Exp i = 0; i < lower.pn && report.passed(); ++i)
            report.require(nu_h(n, HElt::basis(f, p * i)) == HElt::basis(lower, i), {{"n", n}, {"target_index", i}});
        report.require(nu_h(n, HElt::unit(f)) == HElt::unit(lower), {{"n", n}, {"unit", true}});
    }
    report.details["elements_checked"] = checked;
    clock.stamp(report);
    return report;
}

Report coherence_check(Exp p, unsigned L, std::uint64_t seed) {
    Stopwatch clock;
    auto report = begin_report("coherent-sequences", {{"p", p}, {"L", L}, {"seed", seed}});
    std::vector<HElt> units, chain;
    for (unsigned n = 1; n <= L; ++n) {
        const auto f = FieldDescriptor::make(p, n);
        units.push_back(HElt::unit(f));
        chain.push_back(HElt::basis(f, ipow(p, n - 1)));
    }
    const auto unit_seq = CoherentH::make(units);
    const auto chain_seq = CoherentH::make(chain);

    if (L >= 2) {
        auto broken = chain;
        broken[0].coords[0] += 1;
        bool rejected = false;
        try {
            CoherentH::make(broken);
        } catch (const InvalidArgument& e) {
            rejected = std::string(e.what()).find("level 2") != std::string::npos;
        }
        report.require(rejected, {{"perturbed_level", 1}});
    }

    // delta_infinity fixes every coherent sequence and preserves coherence
    const auto delta = PadicTrunc::delta_power(p, L, 1);
    const auto identity = PadicTrunc::from_integer(p, L, 1, true);
    report.require(delta_inf_action(delta, chain_seq) == chain_seq, {{"sequence", to_json(chain_seq)}});
    report.require(delta_inf_action(identity, unit_seq) == unit_seq, {{"sequence", to_json(unit_seq)}});

    // fixed iff in the e-span, on random group-ring sequences and random H sequences
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> val(-3, 3);
    std::size_t samples = 0, fixed_samples = 0;
    for (int t = 0; t < 6 && report.passed(); ++t) {
        std::vector<GroupRingElt> xs;
        bool in_span = true;
        for (unsigned n = 1; n <= L; ++n) {
            const auto f = FieldDescriptor::make(p, n);
            GroupRingElt x(f, n);
            if (t % 2 == 0) {
                HElt h = HElt::zero(f);
                for (auto& c : h.coords) c = Rat(val(rng));
                x = to_group_ring(h);
            } else {
                for (Exp b = 0; b < f.pn; ++b)
                    if (val(rng) > 1) x.coeff(b) = CycloElt::zeta_power(f, static_cast<Exp>(rng() % static_cast<std::uint64_t>(f.pn)), Rat(val(rng)));
            }
            in_span = in_span && from_group_ring(x).has_value();
            xs.push_back(std::move(x));
        }
        ++samples;
        const bool fixed = is_fixed_sequence(delta, xs);
        fixed_samples += fixed ? 1 : 0;
        report.require(fixed == in_span, {{"sample", t}, {"fixed", fixed}, {"in_e_span", in_span}});
    }
    report.details["random_samples"] = samples;
    report.details["fixed_samples"] = fixed_samples;
    clock.stamp(report);
    return report;
}

Report padic_check(Exp p, unsigned L, std::uint64_t seed) {
    Stopwatch clock;
    auto report = begin_report("padic-truncation", {{"p", p}, {"L", L}, {"seed", seed}});
    std::mt19937_64 rng(seed);
    const Exp top = ipow(p, L);
    std::size_t checked = 0;
    for (int t = 0; t < 16 && report.passed(); ++t) {
        Exp x = static_cast<Exp>(rng() % static_cast<std::uint64_t>(top));
        Exp y = static_cast<Exp>(rng() % static_cast<std::uint64_t>(top));
        if (x % p == 0) ++x;
        if (y % p == 0) ++y;
        const auto px = PadicTrunc::from_integer(p, L, x, true);
        const auto py = PadicTrunc::from_integer(p, L, y, true);
        // make() re-validates compatibility and the unit flag
        const auto sum = padic_ops(px, py, PadicOp::Add);
        const auto prod = padic_ops(px, py, PadicOp::Mul);
        report.require(sum == PadicTrunc::from_integer(p, L, x + y, false), {{"x", x}, {"y", y}, {"op", "add"}});
        report.require(prod.unit() && prod == PadicTrunc::from_integer(p, L, x * y, true), {{"x", x}, {"y", y}, {"op", "mul"}});

        // the unit u acts on N_infinity exponents by levelwise multiplication
        const Exp b = static_cast<Exp>(rng() % static_cast<std::uint64_t>(top));
        const auto exps = PadicTrunc::from_integer(p, L, b, false);
        const auto moved = padic_ops(px, exps, PadicOp::Mul);
        for (unsigned n = 1; n <= L; ++n) {
            const auto f = FieldDescriptor::make(p, n);
            const auto image = unit_action(px.at(n), GroupRingElt::monomial(f, n, exps.at(n), CycloElt::one(f)));
            report.require(image == GroupRingElt::monomial(f, n, moved.at(n), CycloElt::one(f)), {{"u", x}, {"b", b}, {"n", n}});
        }
        ++checked;
    }
    report.details["samples"] = checked;
    clock.stamp(report);
    return report;
}

}  // namespace

std::vector<Report> profinite_suite(Exp p, unsigned L) {
    if (L < 2) throw InvalidArgument("the truncation suite needs L >= 2");
    if (L > max_truncation_level(p))
        throw InvalidArgument("L = " + std::to_string(L) + " exceeds the cap " + std::to_string(max_truncation_level(p)));
    constexpr std::uint64_t seed = 20240611;
    std::vector<Report> out;
    out.push_back(functoriality_check(p, L));
    out.push_back(nu_h_agreement_check(p, L, seed));
    for (unsigned j = 2; j <= L; ++j)
        for (unsigned i = 1; i < j; ++i) out.push_back(commute_check(p, j, i));
    out.push_back(coherence_check(p, L, seed));
    out.push_back(padic_check(p, L, seed));
    out.push_back(fixed_truncation_check(p, L));
    return out;
}

nlohmann::json to_json(const CoherentH& c) {
    auto levels = nlohmann::json::array();
    for (const auto& h : c.levels()) levels.push_back(to_json(h));
    return {{"p", c.p()}, {"L", c.L()}, {"levels", levels}};
}

CoherentH coherent_from_json(const nlohmann::json& j) {
    const Exp p = j.at("p").get<Exp>();
    const auto L = j.at("L").get<unsigned>();
    const auto& levels = j.at("levels");
    if (levels.size() != L) throw InvalidArgument("levels array length differs from L");
    std::vector<HElt> hs;
    for (unsigned n = 1; n <= L; ++n) hs.push_back(helt_from_json(FieldDescriptor::make(p, n), levels[n - 1]));
    return CoherentH::make(std::move(hs));
}

nlohmann::json to_json(const PadicTrunc& x) {
    return {{"p", x.p()}, {"L", x.L()}, {"exponents", x.exponents()}, {"unit", x.unit()}};
}

PadicTrunc padic_from_json(const nlohmann::json& j) {
    auto e = j.at("exponents").get<std::vector<Exp>>();
    if (j.contains("L") && j.at("L").get<std::size_t>() != e.size()) throw InvalidArgument("exponents length differs from L");
    return PadicTrunc::make(j.at("p").get<Exp>(), std::move(e), j.at("unit").get<bool>());
}

}  // namespace radhopf
