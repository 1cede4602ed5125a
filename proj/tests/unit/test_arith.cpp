#include "oracle.hpp"

#include "radhopf/cyclotomic.hpp"
#include "radhopf/linalg.hpp"
#include "radhopf/rational.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <random>

using namespace radhopf;

namespace {

std::vector<Rat> rats(std::initializer_list<long> v) {
    std::vector<Rat> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

CycloElt random_cyclo(const FieldDescriptor& f, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-5, 5);
    std::vector<Rat> c;
    for (Exp k = 0; k < f.phi; ++k) c.push_back(oracle::q(d(rng), 1 + (d(rng) + 5) % 4));
    return CycloElt(f, c);
}

}  // namespace

TEST_CASE("rationals cross text boundaries exactly") {
    CHECK(parse_rat("6/4") == oracle::q(3, 2));
    CHECK(parse_rat("-7") == Rat(-7));
    CHECK(format_rat(oracle::q(3, 2)) == "3/2");
    CHECK(format_rat(Rat(0)) == "0/1");
    CHECK(format_rat(Rat(-5)) == "-5/1");
    CHECK_THROWS_AS(parse_rat("1/0"), InvalidArgument);
    CHECK_THROWS_AS(parse_rat("x"), InvalidArgument);
    CHECK(is_perfect_power(oracle::q(8, 27), 3));
    CHECK_FALSE(is_perfect_power(oracle::q(2), 3));
    CHECK(is_perfect_power(oracle::q(-8), 3));
}

TEST_CASE("kernel, rank and coordinates") {
    QMatrix a(2, 3);
    a(0, 0) = 1; a(0, 1) = 2; a(0, 2) = 3;
    a(1, 0) = 2; a(1, 1) = 4; a(1, 2) = 6;
    const auto k = kernel(a);
    CHECK(k.size() == 2);
    for (const auto& v : k) CHECK(is_zero(a.apply(v)));
    CHECK(rank({rats({1, 2}), rats({2, 4}), rats({0, 1})}, 2) == 2);
    CHECK(same_span({rats({1, 0}), rats({0, 1})}, {rats({1, 1}), rats({1, -1})}, 2));
    const auto c = coordinates({rats({1, 1, 0}), rats({0, 1, 1})}, rats({2, 5, 3}));
    REQUIRE(c);
    CHECK(*c == rats({2, 3}));
    CHECK_FALSE(coordinates({rats({1, 0, 0})}, rats({0, 1, 0})));
    QMatrix singular(2, 2);
    singular(0, 0) = 1; singular(0, 1) = 2;
    singular(1, 0) = 2; singular(1, 1) = 4;
    CHECK_FALSE(solve(singular, rats({1, 3})));
    singular(1, 1) = 5;
    const auto x = solve(singular, rats({1, 3}));
    REQUIRE(x);
    CHECK(*x == rats({-1, 1}));
    CHECK_THROWS_AS(solve(a, rats({1, 2})), InvalidArgument);
}

TEST_CASE("primitive roots agree with brute-force orders") {
    CHECK(primitive_root(3) == 2);
    CHECK(primitive_root(5) == 2);
    CHECK(primitive_root(7) == 3);
    for (Exp p : {3, 5, 7, 11, 13}) {
        const auto g = primitive_root(p);
        CHECK(oracle::order_mod(g, p * p) == p * (p - 1));
        CHECK(oracle::order_mod(g, p * p * p) == p * p * (p - 1));
    }
    CHECK_THROWS_AS(primitive_root(2), InvalidArgument);
    CHECK_THROWS_AS(primitive_root(9), InvalidArgument);
}

TEST_CASE("reduction modulo the cyclotomic polynomial") {
    const auto f1 = FieldDescriptor::make(3, 1);
    CHECK(reduce(f1, rats({0, 0, 1})).coeffs() == rats({-1, -1}));
    CHECK(reduce(f1, rats({1, 0, 0})).coeffs() == rats({1, 0}));
    const auto f2 = FieldDescriptor::make(3, 2);
    std::vector<Rat> raw(7);
    raw[6] = 1;
    CHECK(reduce(f2, raw).coeffs() == rats({-1, 0, 0, -1, 0, 0}));
    const auto z = CycloElt::zeta_power(f1, 1);
    CHECK((z * z).coeffs() == rats({-1, -1}));
}

TEST_CASE("products and inverses match complex evaluation") {
    std::mt19937_64 rng(7);
    for (auto [p, n] : std::vector<std::pair<Exp, unsigned>>{{3, 1}, {3, 2}, {5, 1}, {7, 1}, {3, 3}}) {
        const auto f = FieldDescriptor::make(p, n);
        for (int trial = 0; trial < 4; ++trial) {
            const auto a = random_cyclo(f, rng);
            const auto b = random_cyclo(f, rng);
            CHECK(oracle::near(oracle::eval(a * b), oracle::eval(a) * oracle::eval(b)));
            CHECK(oracle::near(oracle::eval(a + b), oracle::eval(a) + oracle::eval(b)));
            if (!a.is_zero()) CHECK(a * inverse(a) == CycloElt::one(f));
        }
        CHECK(oracle::near(oracle::eval(CycloElt::zeta_power(f, -1)), oracle::root(f.pn, -1)));
    }
    CHECK_THROWS_AS(inverse(CycloElt::zero(FieldDescriptor::make(3, 1))), InvalidArgument);
}

TEST_CASE("embedding between levels") {
    const auto f1 = FieldDescriptor::make(3, 1);
    const auto f2 = FieldDescriptor::make(3, 2);
    CHECK(embed(CycloElt::zeta_power(f1, 1), 2) == CycloElt::zeta_power(f2, 3));
    CHECK(embed(CycloElt::one(f1) + CycloElt::zeta_power(f1, 1), 2) == CycloElt::one(f2) + CycloElt::zeta_power(f2, 3));
    const auto x = CycloElt::zeta_power(f2, 5, oracle::q(2, 3));
    CHECK(embed(x, 2) == x);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 4; ++trial) {
        const auto a = random_cyclo(f1, rng);
        const auto b = random_cyclo(f1, rng);
        CHECK(embed(a * b, 3) == embed(a, 3) * embed(b, 3));
        CHECK(oracle::near(oracle::eval(embed(a, 3)), oracle::eval(a)));
    }
}

TEST_CASE("Galois automorphisms") {
    const auto f = FieldDescriptor::make(3, 2);
    std::mt19937_64 rng(5);
    const auto a = random_cyclo(f, rng);
    const auto b = random_cyclo(f, rng);
    CHECK(delta_apply(0, a) == a);
    CHECK(delta_apply(f.phi, a) == a);
    CHECK(delta_apply(1, a * b) == delta_apply(1, a) * delta_apply(1, b));
    CHECK(delta_apply(1, CycloElt::zeta_power(f, 1)) == CycloElt::zeta_power(f, 2));
    // zeta -> zeta^u evaluated as x(exp(2 pi i u / p^n))
    const auto g = galois_apply(4, a);
    oracle::C expect = 0;
    const auto c = a.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) expect += c[k].get_d() * oracle::root(f.pn, 4 * static_cast<Exp>(k));
    CHECK(oracle::near(oracle::eval(g), expect));
}

TEST_CASE("cyclotomic JSON round trip") {
    const auto f = FieldDescriptor::make(5, 1);
    const auto x = CycloElt::zeta_power(f, 3, oracle::q(-2, 7)) + CycloElt::one(f);
    CHECK(cyclo_from_json(f, to_json(x)) == x);
}
