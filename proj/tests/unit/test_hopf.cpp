#include "oracle.hpp"

#include "radhopf/groupring.hpp"
#include "radhopf/hopf.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <random>

using namespace radhopf;
using oracle::q;

namespace {

GroupRingElt sigma(const FieldDescriptor& f, Exp b) { return GroupRingElt::monomial(f, f.n, b, CycloElt::one(f)); }

GroupRingElt random_element(const FieldDescriptor& f, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-3, 3);
    GroupRingElt x(f, f.n);
    for (Exp b = 0; b < f.pn; ++b)
        for (Exp a = 0; a < f.phi; ++a) x.coeff(b).add_zeta_power(a, q(d(rng), 1 + (d(rng) + 3) % 3));
    return x;
}

}  // namespace

TEST_CASE("group ring products") {
    const auto f = FieldDescriptor::make(3, 2);
    CHECK(gr_mul(sigma(f, 1), sigma(f, 8)) == GroupRingElt::one(f, 2));
    const auto one = GroupRingElt::one(f, 2);
    CHECK(gr_mul(one + sigma(f, 1), one - sigma(f, 1)) == one - sigma(f, 2));
    // naive convolution evaluated numerically
    std::mt19937_64 rng(3);
    const auto x = random_element(f, rng);
    const auto y = random_element(f, rng);
    const auto z = gr_mul(x, y);
    for (Exp c = 0; c < f.pn; ++c) {
        oracle::C expect = 0;
        for (Exp a = 0; a < f.pn; ++a) expect += oracle::eval(x.coeff(a)) * oracle::eval(y.coeff(c - a));
        CHECK(oracle::near(oracle::eval(z.coeff(c)), expect));
    }
}

TEST_CASE("Hopf structure of the group ring") {
    const auto f = FieldDescriptor::make(3, 2);
    TensorElt expect{f, 2, {}};
    expect.add(1, 1, CycloElt::one(f));
    CHECK(gr_comul(sigma(f, 1)) == expect);
    CHECK(gr_counit(GroupRingElt::one(f, 2)) == CycloElt::one(f));
    CHECK(gr_antipode(sigma(f, 2)) == sigma(f, 7));
    std::mt19937_64 rng(9);
    for (Exp b = 0; b < f.pn; ++b) {
        const auto t = gr_comul(sigma(f, b));
        CHECK(comul_left(t) == comul_right(t));
        CHECK(antipode_multiply(t) == gr_counit(sigma(f, b)) * GroupRingElt::one(f, 2));
    }
    const auto x = random_element(f, rng);
    CHECK(counit_left(gr_comul(x)) == x);
    CHECK(counit_right(gr_comul(x)) == x);
}

TEST_CASE("diagonal action") {
    const auto f = FieldDescriptor::make(3, 1);
    const auto zs = GroupRingElt::monomial(f, 1, 1, CycloElt::zeta_power(f, 1));
    CHECK(diag_action(1, zs) == GroupRingElt::monomial(f, 1, 2, CycloElt::zeta_power(f, 2)));
    const auto f2 = FieldDescriptor::make(3, 2);
    std::mt19937_64 rng(13);
    const auto x = random_element(f2, rng);
    const auto y = random_element(f2, rng);
    CHECK(diag_action(0, x) == x);
    CHECK(diag_action(f2.phi, x) == x);
    CHECK(diag_action(1, gr_mul(x, y)) == gr_mul(diag_action(1, x), diag_action(1, y)));
    for (const auto& e : e_basis_all(f2)) CHECK(diag_action(1, e) == e);
}

TEST_CASE("idempotent basis") {
    const auto f = FieldDescriptor::make(3, 1);
    const auto e0 = e_basis(f, 0);
    for (Exp b = 0; b < 3; ++b) CHECK(e0.coeff(b) == CycloElt::rational(f, q(1, 3)));
    const auto e1 = e_basis(f, 1);
    CHECK(e1.coeff(0).coeffs() == std::vector<Rat>{q(1, 3), q(0)});
    CHECK(e1.coeff(1).coeffs() == std::vector<Rat>{q(-1, 3), q(-1, 3)});
    CHECK(e1.coeff(2).coeffs() == std::vector<Rat>{q(0), q(1, 3)});
    CHECK(gr_mul(e0, e0) == e0);
    CHECK_THROWS_AS(e_basis(f, 3), InvalidArgument);
    for (auto [p, n] : std::vector<std::pair<Exp, unsigned>>{{3, 2}, {5, 1}, {7, 1}}) {
        const auto g = FieldDescriptor::make(p, n);
        GroupRingElt sum(g, n);
        const auto all = e_basis_all(g);
        for (Exp i = 0; i < g.pn; ++i) {
            sum += all[static_cast<std::size_t>(i)];
            for (Exp j = 0; j < g.pn; ++j)
                CHECK(oracle::near(oracle::eval(all[static_cast<std::size_t>(i)].coeff(j)),
                                   oracle::root(g.pn, -i * j) / static_cast<double>(g.pn)));
            for (Exp k = 0; k < g.pn; ++k)
                CHECK(gr_mul(all[static_cast<std::size_t>(i)], all[static_cast<std::size_t>(k)]) ==
                      (i == k ? all[static_cast<std::size_t>(i)] : GroupRingElt(g, n)));
        }
        CHECK(sum == GroupRingElt::one(g, n));
    }
}

TEST_CASE("Fourier inversion") {
    const auto f = FieldDescriptor::make(3, 2);
    const HElt h{f, {q(1), q(-2), q(0), q(3, 4), q(0), q(0), q(5), q(0), q(1, 9)}};
    const auto back = from_group_ring(to_group_ring(h));
    REQUIRE(back);
    CHECK(*back == h);
    const auto x = GroupRingElt::monomial(f, 2, 1, CycloElt::zeta_power(f, 1));
    CHECK_FALSE(from_group_ring(x));
}

TEST_CASE("fixed ring has dimension p^n and is the e-span") {
    for (auto [p, n] : std::vector<std::pair<Exp, unsigned>>{{3, 1}, {3, 2}, {5, 1}}) {
        const auto f = FieldDescriptor::make(p, n);
        const auto dense = fixed_ring(p, n, FixedRingMethod::Dense);
        const auto blocks = fixed_ring(p, n, FixedRingMethod::OrbitBlocks);
        CHECK(static_cast<Exp>(dense.basis.size()) == f.pn);
        CHECK(static_cast<Exp>(blocks.basis.size()) == f.pn);
        std::vector<QVec> a, b, e;
        for (const auto& x : dense.basis) {
            CHECK(diag_action(1, x) == x);
            a.push_back(x.to_rational());
        }
        for (const auto& x : blocks.basis) b.push_back(x.to_rational());
        for (const auto& x : e_basis_all(f)) e.push_back(x.to_rational());
        const auto dim = dense.ambient_dimension;
        CHECK(dim == static_cast<std::size_t>(f.phi * f.pn));
        CHECK(rank(a, dim) == static_cast<std::size_t>(f.pn));
        std::vector<QVec> both = a;
        both.insert(both.end(), e.begin(), e.end());
        CHECK(rank(both, dim) == static_cast<std::size_t>(f.pn));
        CHECK(same_span(a, b, dim));
    }
}

TEST_CASE("duality with the group") {
    CHECK(dual_pairing(2, 2, 3, 1) == 1);
    CHECK(dual_pairing(0, 1, 3, 1) == 0);
    for (Exp i = 0; i < 9; ++i)
        for (Exp k = 0; k < 9; ++k) {
            oracle::C s = 0;
            for (Exp j = 0; j < 9; ++j) s += oracle::root(9, j * (k - i));
            const double numeric = s.real() / 9.0;
            CHECK(dual_pairing(i, k, 3, 2) == (numeric > 0.5 ? 1 : 0));
        }
}

TEST_CASE("Hopf structure in the idempotent basis") {
    auto pairs = h_comul(0, 3, 1);
    std::sort(pairs.begin(), pairs.end());
    CHECK(pairs == std::vector<std::pair<Exp, Exp>>{{0, 0}, {1, 2}, {2, 1}});
    CHECK(h_counit(0) == 1);
    CHECK(h_counit(1) == 0);
    CHECK(h_antipode(1, 3, 1) == 2);
    CHECK(h_antipode(1, 3, 2) == 8);
    // Delta(e_i) agrees with the group-ring comultiplication of e_i
    const auto f = FieldDescriptor::make(3, 1);
    for (Exp i = 0; i < 3; ++i) {
        TensorElt t{f, 1, {}};
        for (auto [s, r] : h_comul(i, 3, 1)) {
            const auto es = e_basis(f, s);
            const auto er = e_basis(f, r);
            for (Exp a = 0; a < 3; ++a)
                for (Exp b = 0; b < 3; ++b) t.add(a, b, es.coeff(a) * er.coeff(b));
        }
        CHECK(t == gr_comul(e_basis(f, i)));
    }
}

TEST_CASE("action on the radical extension") {
    const auto f = FieldDescriptor::make(3, 1);
    const auto w = RadicalElt::w_power(f, 2, 1);
    CHECK(act(HElt::basis(f, 1), w) == w);
    CHECK(act(HElt::basis(f, 0), w) == RadicalElt::zero(f, 2));
    CHECK(RadicalElt::w_power(f, 2, 3) == RadicalElt::w_power(f, 2, 0, 2));
    CHECK(w * RadicalElt::w_power(f, 2, 2) == RadicalElt::w_power(f, 2, 0, 2));
    const auto m = action_matrix(HElt::basis(f, 2), 2);
    CHECK(m(2, 2) == 1);
    CHECK(m(0, 0) == 0);
    CHECK(measuring_check(3, 1, 2).passed());
    CHECK(measuring_check(3, 2, 2).passed());
    CHECK(measuring_check(3, 1, q(-7, 3)).passed());
    CHECK_THROWS_AS(measuring_check(3, 1, 1), InvalidArgument);
    CHECK(fixed_field_check(3, 1, 2).passed());
    CHECK(fixed_field_check(5, 1, 2).passed());
    CHECK_THROWS_AS(validate_radicand(3, 8), InvalidArgument);
    CHECK_THROWS_AS(validate_radicand(3, 0), InvalidArgument);
    CHECK_NOTHROW(validate_radicand(3, q(2, 3)));
}

TEST_CASE("partial base change of sigma") {
    for (auto [p, n, m] : std::vector<std::tuple<Exp, unsigned, unsigned>>{{3, 2, 1}, {3, 3, 1}, {3, 3, 2}, {5, 2, 1}}) {
        const auto r = base_change_sigma(p, n, m);
        CHECK(r.verified);
        CHECK(r.coefficients_in_subfield);
        const Exp pn = ipow(p, n);
        const Exp stride = ipow(p, n - m);
        for (Exp i = 0; i < pn; ++i)
            CHECK(oracle::near(oracle::eval(r.coefficients[static_cast<std::size_t>(i)]), oracle::root(pn, i * stride)));
    }
    CHECK_THROWS_AS(base_change_sigma(3, 2, 2), InvalidArgument);
}

TEST_CASE("Hopf JSON round trips") {
    const auto f = FieldDescriptor::make(3, 1);
    const HElt h{f, {q(1, 2), q(0), q(-3)}};
    CHECK(helt_from_json(f, to_json(h)) == h);
    const auto x = RadicalElt::w_power(f, q(5, 3), 2, q(7));
    CHECK(radical_from_json(to_json(x)) == x);
    const auto e = e_basis(f, 1);
    CHECK(group_ring_from_json(f, 1, to_json(e)) == e);
}
