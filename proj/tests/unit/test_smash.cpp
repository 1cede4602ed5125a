#include "oracle.hpp"

#include "radhopf/smash.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

using namespace radhopf;
using oracle::q;

namespace {

/// Multiplication by w on Q(w), written out directly.
QMatrix mult_by_w(Exp size, const Rat& a) {
    QMatrix m(static_cast<std::size_t>(size), static_cast<std::size_t>(size));
    for (Exp k = 0; k + 1 < size; ++k) m(static_cast<std::size_t>(k + 1), static_cast<std::size_t>(k)) = 1;
    m(0, static_cast<std::size_t>(size - 1)) = a;
    return m;
}

QMatrix projection(Exp size, Exp i) {
    QMatrix m(static_cast<std::size_t>(size), static_cast<std::size_t>(size));
    m(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = 1;
    return m;
}

QMatrix oracle_matrix(Exp size, const Rat& a, Exp j, Exp i) {
    QMatrix m = QMatrix::identity(static_cast<std::size_t>(size));
    for (Exp t = 0; t < j; ++t) m = mult_by_w(size, a) * m;
    return m * projection(size, i);
}

}  // namespace

TEST_CASE("smash product formula") {
    const auto f = FieldDescriptor::make(3, 1);
    const Rat a = 2;
    CHECK(smash_mult(SmashElt::basis(f, a, 1, 2), SmashElt::basis(f, a, 1, 1)) == SmashElt::basis(f, a, 2, 1));
    CHECK(smash_mult(SmashElt::basis(f, a, 1, 2), SmashElt::basis(f, a, 1, 0)) == SmashElt::zero(f, a));
    // w^2 * w^2 wraps once
    CHECK(smash_mult(SmashElt::basis(f, a, 2, 1), SmashElt::basis(f, a, 2, 2)) == SmashElt::basis(f, a, 1, 2, 2));
    const auto one = SmashElt::unit(f, a);
    const auto x = SmashElt::basis(f, a, 2, 1, q(3, 5)) + SmashElt::basis(f, a, 0, 2, q(-1));
    CHECK(smash_mult(one, x) == x);
    CHECK(smash_mult(x, one) == x);
}

TEST_CASE("basis matrices against direct matrix products") {
    for (auto [p, n] : std::vector<std::pair<Exp, unsigned>>{{3, 1}, {3, 2}, {5, 1}}) {
        const auto f = FieldDescriptor::make(p, n);
        const Rat a = q(2, 1);
        for (Exp j = 0; j < f.pn; ++j)
            for (Exp i = 0; i < f.pn; ++i) CHECK(to_end_matrix(SmashElt::basis(f, a, j, i)) == oracle_matrix(f.pn, a, j, i));
    }
    const auto f = FieldDescriptor::make(3, 1);
    const auto m = to_end_matrix(SmashElt::basis(f, 2, 1, 1));
    CHECK(m(2, 1) == 1);
    CHECK(format_matrix_symbolic(m, 2) == "[[0,0,0],[0,0,0],[0,1,0]]");
    CHECK(format_matrix_symbolic(mult_by_w(3, 2), 2) == "[[0,0,a],[1,0,0],[0,1,0]]");
    CHECK(format_matrix_symbolic(q(1, 2) * QMatrix::identity(2), 5) == "[[1/2,0],[0,1/2]]");
}

TEST_CASE("decomposition of endomorphisms") {
    const auto f = FieldDescriptor::make(3, 1);
    const Rat a = 2;
    const auto id = decompose_endomorphism(QMatrix::identity(3), 3, 1, a);
    CHECK(id == SmashElt::unit(f, a));
    const auto lw = decompose_endomorphism(mult_by_w(3, a), 3, 1, a);
    SmashElt expect = SmashElt::zero(f, a);
    for (Exp i = 0; i < 3; ++i) expect.add(1, i, 1);
    CHECK(lw == expect);
    // generic matrix with pattern c_{(r-c) mod 3, c} and a above the diagonal
    SmashElt generic = SmashElt::zero(f, a);
    QMatrix m(3, 3);
    for (Exp j = 0; j < 3; ++j)
        for (Exp i = 0; i < 3; ++i) {
            const Rat c = q(10 * j + i + 1, 7);
            generic.add(j, i, c);
            const auto row = static_cast<std::size_t>((i + j) % 3);
            m(row, static_cast<std::size_t>(i)) = c * (i + j >= 3 ? a : Rat(1));
        }
    CHECK(decompose_endomorphism(m, 3, 1, a) == generic);
    CHECK(to_end_matrix(generic) == m);
    CHECK_THROWS_AS(decompose_endomorphism(QMatrix::identity(3), 3, 1, 0), InvalidArgument);
}

TEST_CASE("smash product is isomorphic to the endomorphism ring") {
    for (auto [p, n, r] : std::vector<std::tuple<Exp, unsigned, int>>{{3, 1, 9}, {3, 2, 81}, {5, 1, 25}}) {
        const auto report = iso_check(p, n, 2);
        CHECK(report.passed());
        CHECK(report.details.at("rank").get<int>() == r);
    }
    CHECK(iso_check(3, 1, q(-7, 3)).passed());
}

TEST_CASE("Hom subalgebras") {
    CHECK(hom_subalgebra_basis(1, 2, 3).dimension() == 27);
    CHECK(hom_subalgebra_basis(2, 1, 3).dimension() == 27);
    CHECK(hom_subalgebra_basis(2, 2, 3).dimension() == 81);
    for (auto [n, m] : std::vector<std::pair<unsigned, unsigned>>{{1, 2}, {2, 1}, {2, 2}, {1, 1}})
        CHECK(hom_subalgebra_check(n, m, 3, 2).passed());
    // Hom(Q(w_1), Q(w_2)) elements kill everything off the Q(w_1) block: supported on columns of multiples of 3
    const auto h = hom_subalgebra_basis(1, 2, 3);
    const auto f = FieldDescriptor::make(3, 2);
    for (auto [j, i] : h.pairs) {
        const auto mat = to_end_matrix(SmashElt::basis(f, 2, j, i));
        for (std::size_t c = 0; c < 9; ++c)
            if (c % 3 != 0)
                for (std::size_t r = 0; r < 9; ++r) CHECK(mat(r, c) == 0);
    }
}

TEST_CASE("smash JSON round trips") {
    const auto f = FieldDescriptor::make(3, 1);
    const auto x = SmashElt::basis(f, q(2), 2, 1, q(3, 5)) + SmashElt::basis(f, q(2), 0, 2, q(-1));
    CHECK(smash_from_json(to_json(x)) == x);
    const auto m = to_end_matrix(x);
    CHECK(matrix_from_json(matrix_to_json(m, 3, 1, 2)) == m);
}
