#include "radhopf/smash.hpp"

#include <nlohmann/json.hpp>

#include <random>
#include <set>
#include <sstream>

namespace radhopf {

SmashElt SmashElt::basis(const FieldDescriptor& f, const Rat& a, Exp j, Exp i, const Rat& c) {
    SmashElt x = zero(f, a);
    x.add(j, i, c);
    return x;
}

SmashElt SmashElt::unit(const FieldDescriptor& f, const Rat& a) {
    SmashElt x = zero(f, a);
    for (Exp i = 0; i < f.pn; ++i) x.add(0, i, 1);
    return x;
}

void SmashElt::add(Exp j, Exp i, const Rat& c) {
    if (j < 0 || j >= field.pn || i < 0 || i >= field.pn) throw InvalidArgument("smash index outside 0..p^n-1");
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms.try_emplace({j, i}, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms.erase(it);
    }
}

SmashElt operator+(SmashElt a, const SmashElt& b) {
    if (!(a.field == b.field) || a.radicand != b.radicand) throw InvalidArgument("smash elements with different parameters");
    for (const auto& [key, c] : b.terms) a.add(key.first, key.second, c);
    return a;
}

SmashElt smash_mult(const SmashElt& x, const SmashElt& y) {
    if (!(x.field == y.field) || x.radicand != y.radicand) throw InvalidArgument("smash_mult: mismatched parameters");
    const Exp pn = x.field.pn;
    SmashElt out = SmashElt::zero(x.field, x.radicand);
    for (const auto& [lk, c1] : x.terms) {
        const auto [j, i] = lk;
        for (const auto& [rk, c2] : y.terms) {
            const auto [k, l] = rk;
            if (mod(k + l, pn) != i) continue;
            Rat c = c1 * c2;
            if (j + k >= pn) c *= x.radicand;
            out.add((j + k) % pn, l, c);
        }
    }
    return out;
}

QMatrix to_end_matrix(const SmashElt& x) {
    const auto& f = x.field;
    const auto pn = static_cast<std::size_t>(f.pn);
    QMatrix m(pn, pn);
    for (const auto& [key, c] : x.terms) {
        const auto [j, i] = key;
        // (w^j # e_i)(w^k) = w^j * e_i(w^k); only column k = i survives.
        const auto projected = act(HElt::basis(f, i), RadicalElt::w_power(f, x.radicand, i));
        const auto image = RadicalElt::w_power(f, x.radicand, j, c) * projected;
        for (std::size_t r = 0; r < pn; ++r) m(r, static_cast<std::size_t>(i)) += image.coords[r];
    }
    return m;
}

SmashElt decompose_endomorphism(const QMatrix& m, Exp p, unsigned n, const Rat& a) {
    if (sgn(a) == 0) throw InvalidArgument("radicand 0: coefficients are not unique");
    const auto f = FieldDescriptor::make(p, n);
    if (static_cast<Exp>(m.rows()) != f.pn || static_cast<Exp>(m.cols()) != f.pn)
        throw InvalidArgument("matrix must be p^n x p^n");
    SmashElt out = SmashElt::zero(f, a);
    for (Exp k = 0; k < f.pn; ++k) {
        for (Exp j = 0; j < f.pn; ++j) {
            Rat entry = m(static_cast<std::size_t>((j + k) % f.pn), static_cast<std::size_t>(k));
            if (j + k >= f.pn) entry /= a;
            out.add(j, k, entry);
        }
    }
    return out;
}

namespace {

SmashElt random_smash(const FieldDescriptor& f, const Rat& a, std::mt19937_64& rng) {
    std::uniform_int_distribution<Exp> idx(0, f.pn - 1);
    std::uniform_int_distribution<long> val(-5, 5);
    SmashElt x = SmashElt::zero(f, a);
    for (int t = 0; t < 4; ++t) x.add(idx(rng), idx(rng), Rat(val(rng), 1 + static_cast<unsigned long>(idx(rng) % 3)));
    return x;
}

}  // namespace

Report iso_check(Exp p, unsigned n, const Rat& a, std::uint64_t seed, int random_pairs) {
    Stopwatch clock;
    validate_radicand(p, a);
    auto report = begin_report("smash-end-iso", {{"p", p}, {"n", n}, {"a", format_rat(a)}, {"seed", seed}});
    const auto f = FieldDescriptor::make(p, n);
    const auto pn = static_cast<std::size_t>(f.pn);

    std::vector<SmashElt> basis;
    std::vector<QMatrix> images;
    EchelonBasis span(pn * pn);
    for (Exp j = 0; j < f.pn; ++j) {
        for (Exp i = 0; i < f.pn; ++i) {
            basis.push_back(SmashElt::basis(f, a, j, i));
            images.push_back(to_end_matrix(basis.back()));
            span.insert(images.back().flat());
        }
    }
    report.details["rank"] = span.rank();
    report.details["expected_rank"] = pn * pn;
    report.require(span.rank() == pn * pn, {{"rank", span.rank()}});

    std::size_t pairs_checked = 0;
    if (basis.size() * basis.size() <= 10000) {
        for (std::size_t x = 0; x < basis.size() && report.passed(); ++x) {
            for (std::size_t y = 0; y < basis.size(); ++y) {
                ++pairs_checked;
                const bool ok = to_end_matrix(smash_mult(basis[x], basis[y])) == images[x] * images[y];
                report.require(ok, {{"left", to_json(basis[x])}, {"right", to_json(basis[y])}});
                if (!ok) break;
            }
        }
    }
    std::mt19937_64 rng(seed);
    for (int t = 0; t < random_pairs && report.passed(); ++t) {
        const auto x = random_smash(f, a, rng);
        const auto y = random_smash(f, a, rng);
        ++pairs_checked;
        report.require(to_end_matrix(smash_mult(x, y)) == to_end_matrix(x) * to_end_matrix(y),
                       {{"left", to_json(x)}, {"right", to_json(y)}});
    }
    report.details["product_pairs_checked"] = pairs_checked;
    clock.stamp(report);
    return report;
}

HomSubalgebra hom_subalgebra_basis(unsigned n, unsigned m, Exp p) {
    if (n < 1 || m < 1) throw InvalidArgument("levels must be >= 1");
    HomSubalgebra h{p, n, m, std::max(n, m), {}};
    if (m >= n) {
        const Exp pm = ipow(p, m);
        const Exp step = ipow(p, m - n);
        for (Exp j = 0; j < pm; ++j)
            for (Exp i = 0; i < pm; i += step) h.pairs.emplace_back(j, i);
    } else {
        const Exp pn = ipow(p, n);
        const Exp divisor = ipow(p, n - m);
        for (Exp j = 0; j < pn; ++j)
            for (Exp i = 0; i < pn; ++i)
                if ((j + i) % divisor == 0) h.pairs.emplace_back(j, i);
    }
    return h;
}

Report hom_subalgebra_check(unsigned n, unsigned m, Exp p, const Rat& a) {
    Stopwatch clock;
    validate_radicand(p, a);
    auto report = begin_report("hom-subalgebra", {{"p", p}, {"n", n}, {"m", m}, {"a", format_rat(a)}});
    const auto h = hom_subalgebra_basis(n, m, p);
    const auto f = FieldDescriptor::make(p, h.level);
    const auto size = static_cast<std::size_t>(f.pn);
    const auto expected = static_cast<std::size_t>(ipow(p, n + m));
    report.details["dimension"] = h.dimension();
    report.details["expected_dimension"] = expected;
    report.require(h.dimension() == expected, {{"dimension", h.dimension()}});

    // Hom(Q(w_n), Q(w_m)) as matrices on Q(w_level): for m >= n the columns
    // outside Q(w_n) = span{w^(t p^(m-n))} vanish; for m < n every image
    // lies in Q(w_m) = span{w^(t p^(n-m))}.
    const Exp stride = ipow(p, h.level - std::min(n, m));
    auto allowed = [&](std::size_t r, std::size_t c) {
        return m >= n ? static_cast<Exp>(c) % stride == 0 : static_cast<Exp>(r) % stride == 0;
    };
    EchelonBasis span(size * size);
    std::set<std::pair<Exp, Exp>> listed(h.pairs.begin(), h.pairs.end());
    for (const auto& [j, i] : h.pairs) {
        const auto mat = to_end_matrix(SmashElt::basis(f, a, j, i));
        for (std::size_t r = 0; r < size; ++r)
            for (std::size_t c = 0; c < size; ++c)
                if (sgn(mat(r, c)) != 0 && !allowed(r, c))
                    report.require(false, {{"pair", {j, i}}, {"entry", {r, c}}});
        span.insert(mat.flat());
    }
    std::size_t hom_dim = 0;
    for (std::size_t r = 0; r < size; ++r)
        for (std::size_t c = 0; c < size; ++c) hom_dim += allowed(r, c) ? 1 : 0;
    report.details["span_rank"] = span.rank();
    report.require(span.rank() == expected && hom_dim == expected, {{"span_rank", span.rank()}, {"hom_dim", hom_dim}});

    std::size_t products = 0;
    for (const auto& x : h.pairs) {
        for (const auto& y : h.pairs) {
            const auto prod = smash_mult(SmashElt::basis(f, a, x.first, x.second), SmashElt::basis(f, a, y.first, y.second));
            ++products;
            for (const auto& [key, c] : prod.terms)
                if (!listed.contains(key)) report.require(false, {{"left", {x.first, x.second}}, {"right", {y.first, y.second}}});
        }
    }
    report.details["closure_products"] = products;
    clock.stamp(report);
    return report;
}

std::string format_matrix_symbolic(const QMatrix& m, const Rat& a) {
    std::ostringstream out;
    out << "[";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out << (r ? ",[" : "[");
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) out << ",";
            const Rat& x = m(r, c);
            if (sgn(x) == 0) out << "0";
            else if (x == a) out << "a";
            else if (x.get_den() == 1) out << x.get_num().get_str();
            else out << format_rat(x);
        }
        out << "]";
    }
    out << "]";
    return out.str();
}

nlohmann::json to_json(const SmashElt& x) {
    auto terms = nlohmann::json::array();
    for (const auto& [key, c] : x.terms) terms.push_back({{"j", key.first}, {"i", key.second}, {"c", format_rat(c)}});
    return {{"p", x.field.p}, {"n", x.field.n}, {"a", format_rat(x.radicand)}, {"terms", terms}};
}

SmashElt smash_from_json(const nlohmann::json& j) {
    const auto f = FieldDescriptor::make(j.at("p").get<Exp>(), j.at("n").get<unsigned>());
    SmashElt x = SmashElt::zero(f, parse_rat(j.at("a").get<std::string>()));
    for (const auto& t : j.at("terms")) x.add(t.at("j").get<Exp>(), t.at("i").get<Exp>(), parse_rat(t.at("c").get<std::string>()));
    return x;
}

nlohmann::json matrix_to_json(const QMatrix& m, Exp p, unsigned n, const Rat& a) {
    auto rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(format_rats(m.row(r)));
    return {{"p", p}, {"n", n}, {"a", format_rat(a)}, {"rows", rows}};
}

QMatrix matrix_from_json(const nlohmann::json& j) {
    const auto& rows = j.at("rows");
    const std::size_t size = rows.size();
    QMatrix m(size, size);
    for (std::size_t r = 0; r < size; ++r) {
        const auto row = parse_rats(rows[r].get<std::vector<std::string>>());
        if (row.size() != size) throw InvalidArgument("matrix must be square");
        for (std::size_t c = 0; c < size; ++c) m(r, c) = row[c];
    }
    return m;
}

}  // namespace radhopf
