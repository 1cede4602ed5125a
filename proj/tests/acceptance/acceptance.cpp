// One line per acceptance criterion; exit status is nonzero when any fails.
#include "radhopf/gp_enum.hpp"
#include "radhopf/hopf.hpp"
#include "radhopf/profinite.hpp"
#include "radhopf/smash.hpp"
#include "radhopf/suite.hpp"
#include "radhopf/variants.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace radhopf;

namespace {

const std::vector<std::pair<Exp, unsigned>> kInstances{{3, 1}, {3, 2}, {5, 1}, {7, 1}, {3, 3}};

struct Outcome {
    bool ok = true;
    std::string note;

    void expect(bool condition, const std::string& what) {
        if (!condition && ok) note = what;
        ok = ok && condition;
    }
    void expect(const Report& r) {
        expect(r.passed(), r.claim + " " + r.parameters.dump() + (r.witness ? " witness " + r.witness->dump() : ""));
    }
};

int failures = 0;

void criterion(int number, const char* title, std::int64_t budget_ms, const std::function<void(Outcome&)>& body) {
    Stopwatch clock;
    Outcome out;
    try {
        body(out);
    } catch (const std::exception& e) {
        out.expect(false, std::string("exception: ") + e.what());
    }
    const auto ms = clock.elapsed_ms();
    out.expect(ms <= budget_ms, "over the runtime budget");
    failures += out.ok ? 0 : 1;
    std::printf("criterion %2d %s  %s  (%lld ms, budget %lld ms)%s%s\n", number, out.ok ? "PASS" : "FAIL", title,
                static_cast<long long>(ms), static_cast<long long>(budget_ms), out.ok ? "" : "  ", out.note.c_str());
    std::fflush(stdout);
}

// w^j # e_i for p = 3, n = 1, j-major
const std::array<const char*, 9> kNineMatrices{
    "[[1,0,0],[0,0,0],[0,0,0]]", "[[0,0,0],[0,1,0],[0,0,0]]", "[[0,0,0],[0,0,0],[0,0,1]]",
    "[[0,0,0],[1,0,0],[0,0,0]]", "[[0,0,0],[0,0,0],[0,1,0]]", "[[0,0,a],[0,0,0],[0,0,0]]",
    "[[0,0,0],[0,0,0],[1,0,0]]", "[[0,a,0],[0,0,0],[0,0,0]]", "[[0,0,0],[0,0,a],[0,0,0]]",
};

}  // namespace

int main() {
    const Rat a = 2;

    criterion(1, "dual basis pairing is the identity", 10'000, [](Outcome& o) {
        for (auto [p, n] : kInstances) o.expect(dual_basis_check(p, n));
    });

    criterion(2, "fixed ring equals the span of the idempotents", 60'000, [](Outcome& o) {
        for (auto [p, n] : kInstances) {
            const auto r = fixed_ring_check(p, n);
            o.expect(r);
            o.expect(r.details.at("kernel_dimension").get<Exp>() == ipow(p, n), "kernel dimension");
        }
    });

    criterion(3, "action and measuring", 30'000, [&](Outcome& o) {
        for (auto [p, n] : {std::pair<Exp, unsigned>{3, 1}, {3, 2}, {5, 1}}) o.expect(measuring_check(p, n, a));
    });

    criterion(4, "fixed field of the action is Q", 5'000, [&](Outcome& o) {
        for (auto [p, n] : kInstances) {
            const auto r = fixed_field_check(p, n, a);
            o.expect(r);
            o.expect(r.details.at("dimension").get<int>() == 1, "fixed dimension");
        }
    });

    criterion(5, "smash product is the endomorphism ring", 60'000, [&](Outcome& o) {
        for (auto [p, n] : {std::pair<Exp, unsigned>{3, 1}, {3, 2}, {5, 1}}) {
            const auto r = iso_check(p, n, a);
            o.expect(r);
            o.expect(r.details.at("rank").get<Exp>() == ipow(p, 2 * n), "rank p^(2n)");
        }
        const auto f = FieldDescriptor::make(3, 1);
        std::size_t k = 0;
        for (Exp j = 0; j < 3; ++j)
            for (Exp i = 0; i < 3; ++i, ++k) {
                const auto s = format_matrix_symbolic(to_end_matrix(SmashElt::basis(f, a, j, i)), a);
                o.expect(s == kNineMatrices[k], "matrix w^" + std::to_string(j) + "#e_" + std::to_string(i) + " is " + s);
            }
    });

    criterion(6, "sigma^(p^(n-m)) from the idempotents", 10'000, [](Outcome& o) {
        for (auto [p, n, m] : {std::tuple<Exp, unsigned, unsigned>{3, 2, 1}, {3, 3, 1}, {3, 3, 2}, {5, 2, 1}})
            o.expect(base_change_check(p, n, m));
    });

    criterion(7, "inverse-system truncation suite", 120'000, [](Outcome& o) {
        for (Exp p : {3, 5})
            for (const auto& r : profinite_suite(p, 3)) o.expect(r);
    });

    criterion(8, "Hom subalgebras of the smash product", 10'000, [&](Outcome& o) {
        for (auto [n, m] : {std::pair<unsigned, unsigned>{1, 2}, {2, 1}, {2, 2}}) {
            const auto r = hom_subalgebra_check(n, m, 3, a);
            o.expect(r);
            o.expect(r.details.at("dimension").get<Exp>() == ipow(3, n + m), "dimension p^(n+m)");
        }
    });

    criterion(9, "normal complements and the variant Hopf algebras", 120'000, [&](Outcome& o) {
        const auto c = normal_complement_check(3, 2);
        o.expect(c);
        o.expect(normal_complements(3, 2).size() == 3, "p complements");
        for (Exp i = 0; i < 3; ++i) {
            const auto h = h_variant(3, 2, i, a);
            o.expect(h.base_rank() == 9, "rank of H_(2," + std::to_string(i) + ")");
            o.expect(variant_action_check(3, 2, i, a));
        }
        o.expect(variant_nu_generator(3, 3, 1) == GammaElt{1, 1}, "generator image for i = 1");
        o.expect(variant_nu_generator(3, 3, 0) == GammaElt{1, 0}, "generator image for i = 0");
        o.expect(variant_nu_check(3, 3, a));
    });

    criterion(10, "Hopf-Galois structure counts", 300'000, [](Outcome& o) {
        const std::array<std::tuple<Exp, unsigned, unsigned, std::size_t, std::size_t>, 3> cases{
            {{3, 1, 0, 1, 1}, {3, 2, 0, 1, 1}, {3, 2, 1, 3, 3}}};
        for (auto [p, n, r, total, classical] : cases) {
            const auto [gamma, delta] = radical_galois_group(p, n, r);
            const auto result = census(gamma, delta);
            const std::string tag = "(" + std::to_string(p) + "," + std::to_string(n) + "," + std::to_string(r) + ")";
            o.expect(result.degree == static_cast<std::size_t>(ipow(p, n)), "degree " + tag);
            o.expect(result.structures.size() == total, "structure count " + tag);
            o.expect(result.almost_classical_count() == classical, "almost classical count " + tag);
            o.expect(census_check(p, n, r));
        }
    });

    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
