#include "radhopf/gp_enum.hpp"

#include "radhopf/variants.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

namespace radhopf {

namespace {

constexpr std::uint32_t kUnset = 0xffffffffu;

using Code = std::vector<int>;

AbstractGroup make_group(std::string name, std::vector<Code> elements, const std::function<Code(const Code&, const Code&)>& mul) {
    std::map<Code, std::uint32_t> index;
    for (std::size_t k = 0; k < elements.size(); ++k) index.emplace(elements[k], static_cast<std::uint32_t>(k));
    AbstractGroup g{std::move(name), {}};
    g.table.assign(elements.size(), std::vector<std::uint32_t>(elements.size()));
    for (std::size_t x = 0; x < elements.size(); ++x)
        for (std::size_t y = 0; y < elements.size(); ++y) g.table[x][y] = index.at(mul(elements[x], elements[y]));
    return g;
}

/// Tuples over Z/n_1 x ... x Z/n_k; the all-zero tuple comes first.
std::vector<Code> tuples(const std::vector<int>& mods) {
    std::vector<Code> out{Code(mods.size(), 0)};
    for (std::size_t pos = 0; pos < mods.size(); ++pos) {
        std::vector<Code> next;
        for (int v = 0; v < mods[pos]; ++v)
            for (auto c : out) {
                c[pos] = v;
                next.push_back(c);
            }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

AbstractGroup abelian(const std::vector<int>& mods) {
    std::string name;
    for (int m : mods) name += (name.empty() ? "C" : "xC") + std::to_string(m);
    return make_group(name, tuples(mods), [mods](const Code& a, const Code& b) {
        Code c(a.size());
        for (std::size_t k = 0; k < a.size(); ++k) c[k] = (a[k] + b[k]) % mods[k];
        return c;
    });
}

AbstractGroup dihedral(int k) {
    return make_group("D" + std::to_string(k), tuples({k, 2}), [k](const Code& a, const Code& b) {
        return Code{((a[0] + (a[1] ? -b[0] : b[0])) % k + k) % k, a[1] ^ b[1]};
    });
}

/// <x, y | x^(2k), y^2 = x^k, y x y^-1 = x^-1>.
AbstractGroup dicyclic(int k, std::string name) {
    const int n = 2 * k;
    return make_group(std::move(name), tuples({n, 2}), [n, k](const Code& a, const Code& b) {
        if (a[1] == 0) return Code{(a[0] + b[0]) % n, b[1]};
        const int e = ((a[0] - b[0]) % n + n) % n;
        return b[1] == 0 ? Code{e, 1} : Code{(e + k) % n, 0};
    });
}

AbstractGroup alternating4() {
    std::vector<Code> even;
    Code perm{0, 1, 2, 3};
    do {
        int inversions = 0;
        for (int x = 0; x < 4; ++x)
            for (int y = x + 1; y < 4; ++y) inversions += perm[x] > perm[y] ? 1 : 0;
        if (inversions % 2 == 0) even.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return make_group("A4", even, [](const Code& a, const Code& b) {
        Code c(4);
        for (int x = 0; x < 4; ++x) c[x] = a[b[x]];
        return c;
    });
}

/// Unitriangular 3x3 matrices over F_p, stored as (a, b, c) = (x12, x23, x13).
AbstractGroup heisenberg(int p) {
    return make_group("Heis" + std::to_string(p), tuples({p, p, p}), [p](const Code& x, const Code& y) {
        return Code{(x[0] + y[0]) % p, (x[1] + y[1]) % p, (x[2] + y[2] + x[0] * y[1]) % p};
    });
}

/// C_(p^2) semidirect C_p with y x y^-1 = x^(1+p).
AbstractGroup metacyclic(int p) {
    const int q = p * p;
    return make_group("C" + std::to_string(q) + ":C" + std::to_string(p), tuples({q, p}), [p, q](const Code& x, const Code& y) {
        int twist = 1;
        for (int e = 0; e < x[1]; ++e) twist = twist * (1 + p) % q;
        return Code{(x[0] + y[0] * twist) % q, (x[1] + y[1]) % p};
    });
}

std::vector<std::uint32_t> closure(const AbstractGroup& g, const std::vector<std::uint32_t>& gens) {
    std::vector<bool> in(g.order(), false);
    std::vector<std::uint32_t> out{0};
    in[0] = true;
    for (std::size_t k = 0; k < out.size(); ++k)
        for (auto s : gens) {
            const auto y = g.table[out[k]][s];
            if (!in[y]) {
                in[y] = true;
                out.push_back(y);
            }
        }
    return out;
}

std::size_t element_order(const AbstractGroup& g, std::uint32_t x) {
    std::size_t k = 1;
    for (std::uint32_t y = x; y != 0; y = g.table[y][x]) ++k;
    return k;
}

std::vector<std::uint32_t> generating_set(const AbstractGroup& g) {
    std::vector<std::uint32_t> gens;
    std::vector<std::uint32_t> span{0};
    while (span.size() < g.order()) {
        std::vector<bool> in(g.order(), false);
        for (auto x : span) in[x] = true;
        std::uint32_t best = 0;
        std::size_t best_order = 0;
        for (std::uint32_t x = 0; x < g.order(); ++x) {
            if (in[x]) continue;
            const auto o = element_order(g, x);
            if (o > best_order) {
                best = x;
                best_order = o;
            }
        }
        gens.push_back(best);
        span = closure(g, gens);
    }
    return gens;
}

/// Homomorphism determined by gens -> images, if it is a well-defined bijection.
std::optional<std::vector<std::uint32_t>> extend(const AbstractGroup& g, const std::vector<std::uint32_t>& gens,
                                                 const std::vector<std::uint32_t>& images) {
    std::vector<std::uint32_t> f(g.order(), kUnset);
    std::vector<bool> used(g.order(), false);
    f[0] = 0;
    used[0] = true;
    std::deque<std::uint32_t> queue{0};
    while (!queue.empty()) {
        const auto x = queue.front();
        queue.pop_front();
        for (std::size_t j = 0; j < gens.size(); ++j) {
            const auto y = g.table[x][gens[j]];
            const auto fy = g.table[f[x]][images[j]];
            if (f[y] == kUnset) {
                if (used[fy]) return std::nullopt;
                f[y] = fy;
                used[fy] = true;
                queue.push_back(y);
            } else if (f[y] != fy) {
                return std::nullopt;
            }
        }
    }
    return f;
}

std::vector<std::vector<std::uint32_t>> automorphisms(const AbstractGroup& g) {
    const auto gens = generating_set(g);
    std::vector<std::size_t> orders;
    for (auto x : gens) orders.push_back(element_order(g, x));
    std::vector<std::vector<std::uint32_t>> candidates(gens.size());
    for (std::uint32_t x = 0; x < g.order(); ++x)
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (element_order(g, x) == orders[j]) candidates[j].push_back(x);
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> images(gens.size());
    std::function<void(std::size_t)> choose = [&](std::size_t j) {
        if (j == gens.size()) {
            if (auto f = extend(g, gens, images)) out.push_back(std::move(*f));
            return;
        }
        for (auto x : candidates[j]) {
            images[j] = x;
            choose(j + 1);
        }
    };
    choose(0);
    return out;
}

bool is_odd_prime_power(std::size_t m) {
    if (m < 3 || m % 2 == 0) return false;
    std::size_t p = 3;
    while (m % p != 0) p += 2;
    while (m % p == 0) m /= p;
    return m == 1;
}

void check_cap(std::size_t m, const EnumerationOptions& options) {
    if (m <= options.generic_cap) return;
    if (is_odd_prime_power(m) && m <= options.prime_power_cap) return;
    const auto cap = is_odd_prime_power(m) ? options.prime_power_cap : options.generic_cap;
    throw CapExceeded("index " + std::to_string(m) + " exceeds the enumeration cap " + std::to_string(cap), cap);
}

std::vector<Perm> distinct_nontrivial(const std::vector<Perm>& gens) {
    std::vector<Perm> out;
    for (const auto& g : gens)
        if (!g.is_identity() && std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
    return out;
}

/// Multiplication table of a permutation group by element index.
struct IndexedGroup {
    const FiniteGroup& group;
    std::vector<std::vector<std::uint32_t>> table;
    std::vector<std::uint32_t> inverse;

    explicit IndexedGroup(const FiniteGroup& g) : group(g) {
        const auto& e = g.elements();
        table.assign(e.size(), std::vector<std::uint32_t>(e.size()));
        inverse.resize(e.size());
        for (std::size_t x = 0; x < e.size(); ++x)
            for (std::size_t y = 0; y < e.size(); ++y) {
                const auto z = static_cast<std::uint32_t>(g.index_of(e[x] * e[y]));
                table[x][y] = z;
                if (z == 0) inverse[x] = static_cast<std::uint32_t>(y);
            }
    }
};

}  // namespace

CosetAction coset_action(const FiniteGroup& gamma, const FiniteGroup& delta) {
    if (gamma.degree() != delta.degree() || !delta.is_subgroup_of(gamma)) throw InvalidArgument("Delta is not a subgroup of Gamma");
    const auto& e = gamma.elements();
    CosetAction out;
    out.coset_of.assign(e.size(), kUnset);
    std::vector<std::size_t> reps;
    for (std::size_t k = 0; k < e.size(); ++k) {
        if (out.coset_of[k] != kUnset) continue;
        const auto c = reps.size();
        reps.push_back(k);
        for (const auto& d : delta.elements()) out.coset_of[gamma.index_of(e[k] * d)] = c;
    }
    out.size = reps.size();
    out.lambda.reserve(e.size());
    for (const auto& g : e) {
        std::vector<Point> images(out.size);
        for (std::size_t c = 0; c < out.size; ++c) images[c] = static_cast<Point>(out.coset_of[gamma.index_of(g * e[reps[c]])]);
        out.lambda.push_back(Perm::from_images(std::move(images)));
    }
    std::vector<Perm> gens;
    for (const auto& g : gamma.generators()) gens.push_back(out.lambda[gamma.index_of(g)]);
    out.image = FiniteGroup::from_elements(out.lambda, std::move(gens), out.size);
    return out;
}

std::vector<AbstractGroup> groups_of_order(std::size_t m) {
    switch (m) {
        case 1: return {abelian({1})};
        case 2: return {abelian({2})};
        case 3: return {abelian({3})};
        case 4: return {abelian({4}), abelian({2, 2})};
        case 5: return {abelian({5})};
        case 6: return {abelian({6}), dihedral(3)};
        case 7: return {abelian({7})};
        case 8: return {abelian({8}), abelian({4, 2}), abelian({2, 2, 2}), dihedral(4), dicyclic(2, "Q8")};
        case 9: return {abelian({9}), abelian({3, 3})};
        case 10: return {abelian({10}), dihedral(5)};
        case 11: return {abelian({11})};
        case 12: return {abelian({12}), abelian({6, 2}), dihedral(6), dicyclic(3, "Dic3"), alternating4()};
        case 13: return {abelian({13})};
        case 14: return {abelian({14}), dihedral(7)};
        case 15: return {abelian({15})};
        case 25: return {abelian({25}), abelian({5, 5})};
        case 27: return {abelian({27}), abelian({9, 3}), abelian({3, 3, 3}), heisenberg(3), metacyclic(3)};
        default: break;
    }
    throw CapExceeded("no group library for order " + std::to_string(m), m);
}

FiniteGroup regular_centralizer(const FiniteGroup& r) {
    const auto m = r.degree();
    if (!is_regular(r, m)) throw InvalidArgument("regular_centralizer needs a regular group");
    // r is determined by where it sends point 0
    std::vector<const Perm*> by_image(m, nullptr);
    for (const auto& x : r.elements()) by_image[x(0)] = &x;
    std::vector<Perm> out;
    for (Point t = 0; t < m; ++t) {
        std::vector<Point> images(m);
        for (Point s = 0; s < m; ++s) images[s] = (*by_image[s])(t);
        out.push_back(Perm::from_images(std::move(images)));
    }
    return FiniteGroup::from_elements(out, {}, m);
}

std::vector<RegularSubgroup> enumerate_regular_normalized(const FiniteGroup& gamma, const FiniteGroup& delta,
                                                          const EnumerationOptions& options) {
    const Stopwatch clock;
    const auto action = coset_action(gamma, delta);
    const auto m = action.size;
    check_cap(m, options);
    const auto& big = action.image;
    const auto gens = distinct_nontrivial(big.generators());
    std::vector<std::vector<std::size_t>> gen_types;
    for (const auto& g : gens) gen_types.push_back(g.cycle_type());

    auto check_budget = [&] {
        if (options.budget_seconds && static_cast<double>(clock.elapsed_ms()) >= 1000.0 * *options.budget_seconds)
            throw CapExceeded("wall-clock budget exhausted", m);
    };
    std::map<std::vector<Perm>, RegularSubgroup> found;
    std::size_t tuples_tried = 0;
    for (const auto& t : groups_of_order(m)) {
        check_budget();
        const auto auts = automorphisms(t);
        std::vector<Perm> hol;
        for (std::uint32_t x = 0; x < m; ++x)
            for (const auto& a : auts) {
                std::vector<Point> images(m);
                for (std::uint32_t y = 0; y < m; ++y) images[y] = t.table[x][a[y]];
                hol.push_back(Perm{std::move(images)});
            }
        std::vector<std::vector<const Perm*>> candidates(gens.size());
        for (const auto& h : hol) {
            const auto ct = h.cycle_type();
            for (std::size_t j = 0; j < gens.size(); ++j)
                if (ct == gen_types[j]) candidates[j].push_back(&h);
        }
        if (!gens.empty()) {
            // the first image only matters up to conjugation by Aut(T)
            std::vector<Perm> aut_perms;
            for (const auto& a : auts) aut_perms.push_back(Perm{std::vector<Point>(a.begin(), a.end())});
            std::set<Perm> seen;
            std::vector<const Perm*> reps;
            for (const auto* h : candidates[0]) {
                if (seen.contains(*h)) continue;
                reps.push_back(h);
                for (const auto& a : aut_perms) seen.insert(conjugate(a, *h));
            }
            candidates[0] = std::move(reps);
        }

        std::vector<const Perm*> chosen(gens.size());
        std::function<void(std::size_t)> choose = [&](std::size_t j) {
            if (j < gens.size()) {
                for (const auto* h : candidates[j]) {
                    chosen[j] = h;
                    choose(j + 1);
                }
                return;
            }
            if (++tuples_tried % 1024 == 0) check_budget();
            // f(s0) = identity, f(g_j s) = h_j f(s)
            std::vector<std::uint32_t> f(m, kUnset);
            std::vector<bool> used(m, false);
            f[0] = 0;
            used[0] = true;
            std::deque<Point> queue{0};
            while (!queue.empty()) {
                const Point s = queue.front();
                queue.pop_front();
                for (std::size_t k = 0; k < gens.size(); ++k) {
                    const Point target = gens[k](s);
                    const auto value = (*chosen[k])(f[s]);
                    if (f[target] == kUnset) {
                        if (used[value]) return;
                        f[target] = value;
                        used[value] = true;
                        queue.push_back(target);
                    } else if (f[target] != value) {
                        return;
                    }
                }
            }
            std::vector<Point> inverse(m);
            for (Point s = 0; s < m; ++s) inverse[f[s]] = s;
            std::vector<Perm> elements;
            for (std::uint32_t x = 0; x < m; ++x) {
                std::vector<Point> images(m);
                for (Point s = 0; s < m; ++s) images[s] = inverse[t.table[x][f[s]]];
                elements.push_back(Perm{std::move(images)});
            }
            std::vector<Perm> ngens;
            for (auto g : generating_set(t)) ngens.push_back(elements[g]);
            auto group = FiniteGroup::from_elements(std::move(elements), std::move(ngens), m);
            if (found.contains(group.elements())) return;
            RegularSubgroup r{group, t.name, group.is_cyclic(), group.is_abelian(), false};
            found.emplace(group.elements(), std::move(r));
        };
        if (m == 1) {
            auto group = FiniteGroup::from_elements({Perm::identity(1)}, {}, 1);
            found.emplace(group.elements(), RegularSubgroup{group, t.name, true, true, false});
        } else {
            choose(0);
        }
    }

    std::vector<RegularSubgroup> out;
    for (auto& [key, r] : found) {
        if (!is_regular(r.group, m) || !r.group.normalized_by(big)) throw std::logic_error("enumeration produced an invalid subgroup");
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<FiniteGroup> almost_classical(const FiniteGroup& gamma, const FiniteGroup& delta) {
    const auto action = coset_action(gamma, delta);
    const auto m = action.size;
    const auto& e = gamma.elements();
    if (m == 1) return {FiniteGroup::from_elements({e[0]}, {}, gamma.degree())};
    const IndexedGroup g(gamma);
    const auto order = e.size();

    std::vector<std::uint32_t> gen_index;
    for (const auto& x : gamma.generators()) gen_index.push_back(static_cast<std::uint32_t>(gamma.index_of(x)));

    // Gamma-classes of elements acting without fixed points on the cosets
    std::vector<bool> classed(order, false);
    std::vector<std::vector<std::uint32_t>> classes;
    std::vector<bool> allowed(order, false);
    allowed[0] = true;
    for (std::uint32_t x = 1; x < order; ++x) {
        if (classed[x]) continue;
        std::vector<std::uint32_t> cls{x};
        classed[x] = true;
        for (std::size_t k = 0; k < cls.size(); ++k)
            for (auto s : gen_index) {
                const auto y = g.table[g.table[s][cls[k]]][g.inverse[s]];
                if (!classed[y]) {
                    classed[y] = true;
                    cls.push_back(y);
                }
            }
        if (action.lambda[x].fixed_points() == 0) {
            for (auto y : cls) allowed[y] = true;
            classes.push_back(std::move(cls));
        }
    }

    std::set<std::vector<std::uint32_t>> results;
    std::function<void(std::size_t, const std::vector<std::uint32_t>&, const std::vector<std::uint32_t>&)> search =
        [&](std::size_t start, const std::vector<std::uint32_t>& members, const std::vector<std::uint32_t>& gens) {
            std::vector<bool> in(order, false);
            for (auto x : members) in[x] = true;
            for (std::size_t c = start; c < classes.size(); ++c) {
                if (in[classes[c].front()]) continue;
                auto next_gens = gens;
                next_gens.insert(next_gens.end(), classes[c].begin(), classes[c].end());
                std::vector<bool> inside(order, false);
                std::vector<std::uint32_t> span{0};
                inside[0] = true;
                bool ok = true;
                for (std::size_t k = 0; k < span.size() && ok; ++k)
                    for (auto s : next_gens) {
                        const auto y = g.table[span[k]][s];
                        if (inside[y]) continue;
                        if (!allowed[y] || span.size() + 1 > m) {
                            ok = false;
                            break;
                        }
                        inside[y] = true;
                        span.push_back(y);
                    }
                if (!ok || m % span.size() != 0) continue;
                std::sort(span.begin(), span.end());
                if (span.size() == m) {
                    results.insert(span);
                } else {
                    search(c + 1, span, next_gens);
                }
            }
        };
    search(0, {0}, {});

    std::vector<FiniteGroup> out;
    for (const auto& idx : results) {
        std::vector<Perm> members;
        for (auto x : idx) members.push_back(e[x]);
        out.push_back(FiniteGroup::from_elements(std::move(members), {}, gamma.degree()));
    }
    std::sort(out.begin(), out.end(), [](const FiniteGroup& a, const FiniteGroup& b) { return a.elements() < b.elements(); });
    return out;
}

std::pair<FiniteGroup, FiniteGroup> radical_galois_group(Exp p, unsigned n, unsigned r) {
    if (r > n) throw InvalidArgument("r must satisfy 0 <= r <= n");
    const auto f = FieldDescriptor::make(p, n);
    const Exp unit = r == 0 ? mod(f.pi, f.pn) : powmod(f.pi, (p - 1) * ipow(p, r - 1), f.pn);
    const auto pn = static_cast<std::size_t>(f.pn);
    const auto sigma = monomial_perm(f, 1, 1);
    const auto tau = monomial_perm(f, unit, 0);
    auto gamma = FiniteGroup::generate({sigma, tau}, pn * pn);
    auto delta = FiniteGroup::generate({tau}, pn * pn);
    return {std::move(gamma), std::move(delta)};
}

std::size_t CensusResult::almost_classical_count() const {
    return static_cast<std::size_t>(std::count_if(structures.begin(), structures.end(), [](const RegularSubgroup& r) { return r.almost_classical; }));
}

CensusResult census(const FiniteGroup& gamma, const FiniteGroup& delta, const EnumerationOptions& options) {
    CensusResult out;
    const auto action = coset_action(gamma, delta);
    out.degree = action.size;
    out.gamma_order = gamma.order();
    out.delta_order = delta.order();
    out.structures = enumerate_regular_normalized(gamma, delta, options);
    out.complements = almost_classical(gamma, delta);
    for (const auto& c : out.complements) {
        std::vector<Perm> image;
        for (const auto& x : c.elements()) image.push_back(action.lambda[gamma.index_of(x)]);
        const auto lam = FiniteGroup::from_elements(std::move(image), {}, action.size);
        const auto opp = regular_centralizer(lam);
        for (auto& s : out.structures)
            if (s.group == lam || s.group == opp) s.almost_classical = true;
    }
    return out;
}

std::pair<std::size_t, std::size_t> expected_counts(Exp p, unsigned n, unsigned r) {
    if (r > n) throw InvalidArgument("r must satisfy 0 <= r <= n");
    const auto total = static_cast<std::size_t>(r < n ? ipow(p, r) : ipow(p, n - 1));
    const auto classical = static_cast<std::size_t>(ipow(p, std::min(r, n - r)));
    return {total, classical};
}

Report census_check(Exp p, unsigned n, unsigned r, const EnumerationOptions& options) {
    Stopwatch clock;
    auto report = begin_report("gp-census", {{"p", p}, {"n", n}, {"r", r}});
    const auto [gamma, delta] = radical_galois_group(p, n, r);
    const auto result = census(gamma, delta, options);
    const auto [total, classical] = expected_counts(p, n, r);
    report.details["degree"] = result.degree;
    report.details["gamma_order"] = result.gamma_order;
    report.details["delta_order"] = result.delta_order;
    report.details["structures"] = result.structures.size();
    report.details["almost_classical"] = result.almost_classical_count();
    report.details["normal_complements"] = result.complements.size();
    report.details["expected_structures"] = total;
    report.details["expected_almost_classical"] = classical;
    auto types = nlohmann::json::array();
    for (const auto& s : result.structures) types.push_back(s.type);
    report.details["types"] = types;
    report.require(result.structures.size() == total && result.almost_classical_count() == classical &&
                       result.complements.size() == classical,
                   {{"structures", result.structures.size()}, {"almost_classical", result.almost_classical_count()},
                    {"normal_complements", result.complements.size()}});
    clock.stamp(report);
    return report;
}

std::pair<FiniteGroup, FiniteGroup> instance_from_json(const nlohmann::json& j) {
    const auto degree = j.at("degree").get<std::size_t>();
    auto read = [&](const nlohmann::json& list) {
        std::vector<Perm> gens;
        for (const auto& g : list) {
            auto x = perm_from_json(g);
            if (x.degree() != degree) throw InvalidArgument("generator degree differs from the declared degree");
            gens.push_back(std::move(x));
        }
        return FiniteGroup::generate(std::move(gens), degree);
    };
    return {read(j.at("gamma")), read(j.at("delta"))};
}

nlohmann::json to_json(const CensusResult& c) {
    auto structures = nlohmann::json::array();
    for (const auto& s : c.structures) {
        auto elements = nlohmann::json::array();
        for (const auto& x : s.group.elements()) elements.push_back(to_json(x));
        structures.push_back({{"type", s.type}, {"elements", elements}, {"regular", true}, {"normalized", true},
                              {"cyclic", s.cyclic}, {"abelian", s.abelian}, {"almost_classical", s.almost_classical}});
    }
    return {{"degree", c.degree}, {"gamma_order", c.gamma_order}, {"delta_order", c.delta_order},
            {"structures", structures},
            {"counts", {{"structures", c.structures.size()}, {"almost_classical", c.almost_classical_count()},
                        {"normal_complements", c.complements.size()}}}};
}

}  // namespace radhopf
