#include "radhopf/gp_enum.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

using namespace radhopf;

namespace {

Perm cycle_perm(std::size_t degree, std::vector<Point> cycle) {
    auto g = Perm::identity(degree);
    for (std::size_t k = 0; k < cycle.size(); ++k) g.images[cycle[k]] = cycle[(k + 1) % cycle.size()];
    return g;
}

/// Closure of gens; stops early once it exceeds limit elements.
std::set<Perm> closure(std::vector<Perm> gens, std::size_t degree, std::size_t limit) {
    std::set<Perm> seen{Perm::identity(degree)};
    std::vector<Perm> frontier{Perm::identity(degree)};
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const auto& x : frontier)
            for (const auto& g : gens) {
                auto y = g * x;
                if (seen.insert(y).second) next.push_back(y);
                if (seen.size() > limit) return seen;
            }
        frontier = std::move(next);
    }
    return seen;
}

/// All regular subgroups of Sym(m) normalized by g, by brute force over Sym(m).
std::set<std::vector<Perm>> brute_force_regular(const FiniteGroup& g) {
    const auto m = g.degree();
    std::vector<Point> images(m);
    std::iota(images.begin(), images.end(), Point{0});
    std::set<std::set<Perm>> partial;
    do {
        const Perm x{images};
        if (x.is_identity() || x.fixed_points() != 0 || m % x.order() != 0) continue;
        std::vector<Perm> conjugates;
        for (const auto& h : g.elements()) conjugates.push_back(conjugate(h, x));
        const auto n = closure(conjugates, m, m);
        if (n.size() > m) continue;
        bool semiregular = std::all_of(n.begin(), n.end(), [](const Perm& y) { return y.is_identity() || y.fixed_points() == 0; });
        if (semiregular) partial.insert(n);
    } while (std::next_permutation(images.begin(), images.end()));
    std::set<std::vector<Perm>> out;
    auto keep = [&](const std::set<Perm>& n) {
        if (n.size() != m) return;
        for (const auto& y : n)
            if (!y.is_identity() && y.fixed_points() != 0) return;
        out.insert(std::vector<Perm>(n.begin(), n.end()));
    };
    for (const auto& a : partial) {
        keep(a);
        for (const auto& b : partial) {
            std::vector<Perm> gens(a.begin(), a.end());
            gens.insert(gens.end(), b.begin(), b.end());
            const auto n = closure(gens, m, m);
            if (n.size() == m) keep(n);
        }
    }
    return out;
}

std::set<std::vector<Perm>> enumerated(const FiniteGroup& gamma, const FiniteGroup& delta) {
    std::set<std::vector<Perm>> out;
    for (const auto& r : enumerate_regular_normalized(gamma, delta)) out.insert(r.group.elements());
    return out;
}

std::map<std::size_t, std::size_t> order_profile(const AbstractGroup& g) {
    std::map<std::size_t, std::size_t> out;
    for (std::uint32_t x = 0; x < g.order(); ++x) {
        std::size_t k = 1;
        for (auto y = x; y != 0; y = g.table[y][x]) ++k;
        ++out[k];
    }
    return out;
}

FiniteGroup s3() { return FiniteGroup::generate({cycle_perm(3, {0, 1, 2}), cycle_perm(3, {0, 1})}, 3); }

}  // namespace

TEST_CASE("permutations") {
    const auto a = cycle_perm(4, {0, 1, 2});
    const auto b = cycle_perm(4, {2, 3});
    CHECK((a * b)(3) == 0);
    CHECK((a * b)(2) == 3);
    CHECK((a * a.inverse()).is_identity());
    CHECK(a.order() == 3);
    CHECK(a.cycle_type() == std::vector<std::size_t>{1, 3});
    CHECK_THROWS_AS(Perm::from_images({0, 0, 1}), InvalidArgument);
    CHECK(perm_from_json(to_json(a)) == a);
    const auto g = s3();
    CHECK(g.order() == 6);
    CHECK(g.elements().front().is_identity());
    CHECK_FALSE(g.is_abelian());
    CHECK(is_regular(FiniteGroup::generate({cycle_perm(3, {0, 1, 2})}, 3), 3));
    CHECK_FALSE(is_regular(FiniteGroup::generate({cycle_perm(3, {0, 1})}, 3), 3));
}

TEST_CASE("coset action") {
    const auto g = s3();
    const auto d = FiniteGroup::generate({cycle_perm(3, {0, 1})}, 3);
    const auto c = coset_action(g, d);
    CHECK(c.size == 3);
    CHECK(c.image.order() == 6);
    // Delta trivial: left regular representation
    const auto trivial = FiniteGroup::generate({}, 3);
    const auto reg = coset_action(g, trivial);
    CHECK(reg.size == 6);
    CHECK(is_regular(reg.image, 6));
    const auto not_sub = FiniteGroup::generate({cycle_perm(4, {0, 1})}, 4);
    CHECK_THROWS_AS(coset_action(g, not_sub), InvalidArgument);
    const auto [gamma, delta] = radical_galois_group(3, 2, 1);
    CHECK(gamma.order() == 27);
    CHECK(delta.order() == 3);
    CHECK(coset_action(gamma, delta).size == 9);
}

TEST_CASE("group library") {
    const std::map<std::size_t, std::size_t> counts{{1, 1}, {2, 1}, {3, 1}, {4, 2}, {5, 1}, {6, 2}, {7, 1}, {8, 5}, {9, 2},
                                                    {10, 2}, {11, 1}, {12, 5}, {13, 1}, {14, 2}, {15, 1}, {25, 2}, {27, 5}};
    for (auto [m, count] : counts) {
        const auto groups = groups_of_order(m);
        CHECK(groups.size() == count);
        std::set<std::pair<bool, std::map<std::size_t, std::size_t>>> invariants;
        for (const auto& g : groups) {
            REQUIRE(g.order() == m);
            bool abelian = true;
            for (std::uint32_t x = 0; x < m; ++x) {
                CHECK(g.table[0][x] == x);
                CHECK(g.table[x][0] == x);
                for (std::uint32_t y = 0; y < m; ++y) {
                    abelian = abelian && g.table[x][y] == g.table[y][x];
                    for (std::uint32_t z = 0; z < m; z += 3) CHECK(g.table[g.table[x][y]][z] == g.table[x][g.table[y][z]]);
                }
            }
            invariants.insert({abelian, order_profile(g)});
        }
        CHECK(invariants.size() == count);
    }
    CHECK_THROWS_AS(groups_of_order(16), CapExceeded);
}

TEST_CASE("enumeration agrees with brute force over Sym(m)") {
    SUBCASE("S3 on three points") {
        const auto g = s3();
        const auto d = FiniteGroup::generate({cycle_perm(3, {0, 1})}, 3);
        const auto found = enumerated(g, d);
        CHECK(found.size() == 1);
        CHECK(found == brute_force_regular(coset_action(g, d).image));
    }
    for (unsigned r = 0; r <= 2; ++r) {
        CAPTURE(r);
        const auto [gamma, delta] = radical_galois_group(3, 2, r);
        const auto found = enumerated(gamma, delta);
        CHECK(found == brute_force_regular(coset_action(gamma, delta).image));
    }
    const auto [g1, d1] = radical_galois_group(3, 1, 0);
    CHECK(enumerated(g1, d1) == brute_force_regular(coset_action(g1, d1).image));
}

TEST_CASE("normal complements and almost classical structures") {
    const auto g = s3();
    CHECK(almost_classical(g, g).size() == 1);
    CHECK(almost_classical(g, g).front().order() == 1);
    const auto d = FiniteGroup::generate({cycle_perm(3, {0, 1})}, 3);
    const auto m = almost_classical(g, d);
    REQUIRE(m.size() == 1);
    CHECK(m.front().order() == 3);
    const auto [gamma, delta] = radical_galois_group(3, 2, 1);
    const auto complements = almost_classical(gamma, delta);
    CHECK(complements.size() == 3);
    const auto action = coset_action(gamma, delta);
    const auto regular = enumerated(gamma, delta);
    for (const auto& c : complements) {
        std::vector<Perm> image;
        for (const auto& x : c.elements()) image.push_back(action.lambda[gamma.index_of(x)]);
        std::sort(image.begin(), image.end());
        CHECK(regular.contains(image));
    }
    const auto cyc = FiniteGroup::generate({cycle_perm(5, {0, 1, 2, 3, 4})}, 5);
    CHECK(regular_centralizer(cyc) == cyc);
}

TEST_CASE("census counts") {
    for (auto [p, n, r] : std::vector<std::tuple<Exp, unsigned, unsigned>>{{3, 1, 0}, {3, 1, 1}, {3, 2, 0}, {3, 2, 1}, {3, 2, 2}, {5, 1, 0}}) {
        CAPTURE(p);
        CAPTURE(n);
        CAPTURE(r);
        const auto report = census_check(p, n, r);
        CHECK(report.passed());
    }
    CHECK(expected_counts(3, 2, 1) == std::pair<std::size_t, std::size_t>{3, 3});
    CHECK(expected_counts(3, 3, 3) == std::pair<std::size_t, std::size_t>{9, 1});
    const auto [gamma, delta] = radical_galois_group(3, 2, 1);
    const auto a = census(gamma, delta);
    const auto b = census(gamma, delta);
    CHECK(to_json(a) == to_json(b));
    CHECK(a.structures.size() == 3);
    CHECK(a.almost_classical_count() == 3);
}

TEST_CASE("caps and budgets") {
    const auto c16 = FiniteGroup::generate({cycle_perm(16, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15})}, 16);
    const auto trivial = FiniteGroup::generate({}, 16);
    CHECK_THROWS_AS(enumerate_regular_normalized(c16, trivial), CapExceeded);
    EnumerationOptions wide;
    wide.generic_cap = 16;
    CHECK_THROWS_AS(enumerate_regular_normalized(c16, trivial, wide), CapExceeded);
    EnumerationOptions narrow;
    narrow.prime_power_cap = 3;
    narrow.generic_cap = 3;
    const auto [gamma, delta] = radical_galois_group(3, 2, 0);
    CHECK_THROWS_AS(enumerate_regular_normalized(gamma, delta, narrow), CapExceeded);
    EnumerationOptions spent;
    spent.budget_seconds = 0.0;
    CHECK_THROWS_AS(enumerate_regular_normalized(gamma, delta, spent), CapExceeded);
    EnumerationOptions ample;
    ample.budget_seconds = 60.0;
    CHECK(enumerate_regular_normalized(gamma, delta, ample).size() == 1);
}

TEST_CASE("instances from JSON") {
    const nlohmann::json doc = {{"degree", 3}, {"gamma", {{1, 2, 0}, {1, 0, 2}}}, {"delta", {{1, 0, 2}}}};
    const auto [gamma, delta] = instance_from_json(doc);
    CHECK(gamma.order() == 6);
    const auto j = to_json(census(gamma, delta));
    CHECK(j.at("structures").size() == 1);
    const auto& s = j.at("structures").at(0);
    CHECK(s.at("regular") == true);
    CHECK(s.at("normalized") == true);
    CHECK(s.at("cyclic") == true);
    CHECK(s.at("almost_classical") == true);
    CHECK(s.at("elements").size() == 3);
    const nlohmann::json bad = {{"degree", 4}, {"gamma", {{1, 2, 0}}}, {"delta", nlohmann::json::array()}};
    CHECK_THROWS_AS(instance_from_json(bad), InvalidArgument);
}
