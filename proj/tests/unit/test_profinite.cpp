#include "oracle.hpp"

#include "radhopf/hopf.hpp"
#include "radhopf/profinite.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <random>

using namespace radhopf;
using oracle::q;

namespace {

GroupRingElt sigma(const FieldDescriptor& f, unsigned level, Exp b) {
    return GroupRingElt::monomial(f, level, b, CycloElt::one(f));
}

HElt random_h(const FieldDescriptor& f, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-4, 4);
    HElt h = HElt::zero(f);
    for (auto& c : h.coords) c = q(d(rng), 3);
    return h;
}

}  // namespace

TEST_CASE("connecting maps on group rings") {
    const auto f = FieldDescriptor::make(3, 2);
    CHECK(nu_groupring(2, 1, sigma(f, 2, 1)) == sigma(f, 1, 1));
    CHECK(nu_groupring(2, 1, sigma(f, 2, 4)) == sigma(f, 1, 1));
    const auto x = GroupRingElt::monomial(f, 2, 5, CycloElt::zeta_power(f, 2, q(3, 4)));
    CHECK(nu_groupring(2, 2, x) == x);
    CHECK_THROWS_AS(nu_groupring(1, 2, sigma(f, 1, 0)), InvalidArgument);
    const auto f3 = FieldDescriptor::make(3, 3);
    for (Exp b = 0; b < 27; ++b) {
        const auto y = GroupRingElt::monomial(f3, 3, b, CycloElt::zeta_power(f3, b));
        CHECK(nu_groupring(3, 1, y) == nu_groupring(2, 1, nu_groupring(3, 2, y)));
    }
    // multiplicative: sigma exponents reduce modulo p^i
    const auto a = sigma(f3, 3, 7) + sigma(f3, 3, 20);
    const auto b = sigma(f3, 3, 11);
    CHECK(nu_groupring(3, 2, gr_mul(a, b)) == gr_mul(nu_groupring(3, 2, a), nu_groupring(3, 2, b)));
}

TEST_CASE("connecting maps on the idempotent basis") {
    const auto f2 = FieldDescriptor::make(3, 2);
    const auto f1 = FieldDescriptor::make(3, 1);
    CHECK(nu_h(2, HElt::basis(f2, 3)) == HElt::basis(f1, 1));
    CHECK(nu_h(2, HElt::basis(f2, 1)) == HElt::zero(f1));
    CHECK(nu_h(2, HElt::unit(f2)) == HElt::unit(f1));
    CHECK_THROWS_AS(nu_h(1, HElt::unit(f1)), InvalidArgument);
    // agreement with the group-ring map
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 5; ++trial) {
        const auto h = random_h(f2, rng);
        CHECK(embed_coefficients(to_group_ring(nu_h(2, h)), 2) == nu_groupring(2, 1, to_group_ring(h)));
    }
    CHECK(commute_check(3, 2, 1).passed());
    CHECK(commute_check(3, 3, 2).passed());
    CHECK(commute_check(3, 2, 2).passed());
}

TEST_CASE("coherent sequences") {
    std::vector<HElt> units, idempotents;
    for (unsigned n = 1; n <= 3; ++n) {
        const auto f = FieldDescriptor::make(3, n);
        units.push_back(HElt::unit(f));
        idempotents.push_back(HElt::basis(f, ipow(3, n - 1)));
    }
    CHECK_NOTHROW(CoherentH::make(units));
    const auto c = CoherentH::make(idempotents);
    CHECK(c.project(2) == HElt::basis(FieldDescriptor::make(3, 2), 3));
    CHECK(coherent_from_json(to_json(c)) == c);
    auto broken = units;
    broken[0].coords[1] = 5;
    try {
        CoherentH::make(broken);
        FAIL("incoherent levels accepted");
    } catch (const InvalidArgument& e) {
        CHECK(std::string(e.what()).find("level 2") != std::string::npos);
    }
    CHECK(delta_inf_action(PadicTrunc::delta_power(3, 3, 1), c) == c);
    CHECK(delta_inf_action(PadicTrunc::from_integer(3, 3, 1, true), c) == c);
}

TEST_CASE("p-adic truncations") {
    const auto x = PadicTrunc::make(3, {1, 4}, false);
    const auto sum = padic_ops(x, x, PadicOp::Add);
    CHECK(sum.exponents() == std::vector<Exp>{2, 8});
    const auto prod = padic_ops(PadicTrunc::make(3, {2, 2}, true), PadicTrunc::make(3, {2, 5}, true), PadicOp::Mul);
    CHECK(prod.exponents() == std::vector<Exp>{1, 1});
    CHECK(prod.unit());
    CHECK_THROWS_AS(PadicTrunc::make(3, {1, 5}, false), InvalidArgument);
    CHECK_THROWS_AS(PadicTrunc::make(3, {0, 3}, true), InvalidArgument);
    const auto d = PadicTrunc::delta_power(3, 3, 1);
    CHECK(d.exponents() == std::vector<Exp>{2, 2, 2});
    const auto d2 = PadicTrunc::delta_power(3, 3, 2);
    CHECK(d2.exponents() == std::vector<Exp>{1, 4, 4});
    CHECK(padic_from_json(to_json(d2)) == d2);
    // levelwise multiplication on N exponents matches sigma^b -> sigma^(b u)
    const auto f = FieldDescriptor::make(3, 2);
    CHECK(unit_action(d.at(2), sigma(f, 2, 1)) == sigma(f, 2, 2));
}

TEST_CASE("fixed ring truncations") {
    CHECK(max_truncation_level(3) == 4);
    CHECK(max_truncation_level(5) == 3);
    CHECK(max_truncation_level(7) == 2);
    const auto r = fixed_truncation_check(3, 3);
    CHECK(r.passed());
    CHECK(fixed_truncation_check(5, 2).passed());
    std::vector<GroupRingElt> xs;
    for (unsigned n = 1; n <= 2; ++n) xs.push_back(e_basis(3, n, 1));
    CHECK(is_fixed_sequence(PadicTrunc::delta_power(3, 2, 1), xs));
    const auto f2 = FieldDescriptor::make(3, 2);
    xs[1] = GroupRingElt::monomial(f2, 2, 1, CycloElt::zeta_power(f2, 1));
    CHECK_FALSE(is_fixed_sequence(PadicTrunc::delta_power(3, 2, 1), xs));
}

TEST_CASE("the truncation suite passes for p = 3") {
    const auto reports = profinite_suite(3, 2);
    CHECK(reports.size() >= 6);
    for (const auto& r : reports) {
        INFO(r.claim);
        CHECK(r.passed());
    }
}
