#include "radhopf/suite.hpp"

#include "radhopf/hopf.hpp"
#include "radhopf/profinite.hpp"
#include "radhopf/smash.hpp"
#include "radhopf/variants.hpp"

#include <nlohmann/json.hpp>

#include <set>

namespace radhopf {

Report dual_basis_check(Exp p, unsigned n) {
    Stopwatch clock;
    auto report = begin_report("dual-basis", {{"p", p}, {"n", n}});
    const auto f = FieldDescriptor::make(p, n);
    std::size_t entries = 0;
    for (Exp i = 0; i < f.pn; ++i)
        for (Exp k = 0; k < f.pn; ++k) {
            const Rat value = dual_pairing(i, k, p, n);
            ++entries;
            if (value != Rat(i == k ? 1 : 0)) {
                report.require(false, {{"i", i}, {"k", k}, {"value", format_rat(value)}});
                clock.stamp(report);
                return report;
            }
        }
    report.details["entries"] = entries;
    clock.stamp(report);
    return report;
}

Report fixed_ring_check(Exp p, unsigned n) {
    Stopwatch clock;
    auto report = begin_report("fixed-ring", {{"p", p}, {"n", n}});
    const auto f = FieldDescriptor::make(p, n);
    const auto fixed = fixed_ring(p, n);
    std::vector<QVec> kernel_vectors;
    for (const auto& x : fixed.basis) kernel_vectors.push_back(x.to_rational());
    std::vector<QVec> e_vectors;
    for (const auto& e : e_basis_all(f)) e_vectors.push_back(e.to_rational());
    const bool span = same_span(kernel_vectors, e_vectors, fixed.ambient_dimension);
    report.details["kernel_dimension"] = fixed.basis.size();
    report.details["ambient_dimension"] = fixed.ambient_dimension;
    report.details["method"] = fixed.method == FixedRingMethod::Dense ? "dense" : "orbit-blocks";
    report.details["span_equal"] = span;
    report.require(static_cast<Exp>(fixed.basis.size()) == f.pn && span,
                   {{"kernel_dimension", fixed.basis.size()}, {"expected", f.pn}, {"span_equal", span}});
    clock.stamp(report);
    return report;
}

Report base_change_check(Exp p, unsigned n, unsigned m) {
    Stopwatch clock;
    auto report = begin_report("base-change-sigma", {{"p", p}, {"n", n}, {"m", m}});
    const auto result = base_change_sigma(p, n, m);
    report.details["coefficients_in_subfield"] = result.coefficients_in_subfield;
    report.require(result.verified && result.coefficients_in_subfield,
                   {{"verified", result.verified}, {"coefficients_in_subfield", result.coefficients_in_subfield}});
    clock.stamp(report);
    return report;
}

std::vector<Report> verify_all(const SuiteOptions& options, const std::function<void(const Report&)>& on_report) {
    std::vector<Report> out;
    auto emit = [&](Report r) {
        if (on_report) on_report(r);
        out.push_back(std::move(r));
    };
    const Rat& a = options.radicand;
    std::set<Exp> primes;
    for (const auto& [p, n] : options.instances) {
        validate_radicand(p, a);
        primes.insert(p);
        emit(dual_basis_check(p, n));
        emit(fixed_ring_check(p, n));
        emit(measuring_check(p, n, a));
        emit(fixed_field_check(p, n, a));
        emit(iso_check(p, n, a, options.seed));
        for (unsigned m = 1; m < n; ++m) emit(base_change_check(p, n, m));
        if (n <= 2)
            for (unsigned dn = 1; dn <= n; ++dn)
                for (unsigned dm = 1; dm <= n; ++dm) emit(hom_subalgebra_check(dn, dm, p, a));
    }
    for (Exp p : primes) {
        const unsigned L = std::min(options.truncation_level, max_truncation_level(p));
        for (auto& r : profinite_suite(p, L)) emit(std::move(r));
    }
    for (const auto& [p, n] : options.instances) {
        if (n < 2) continue;
        emit(normal_complement_check(p, n));
        if (ipow(p, n) <= options.variant_action_limit) {
            for (Exp i = 0; i < p; ++i) emit(variant_action_check(p, n, i, a));
            emit(variant_distinct_check(p, n, a));
            emit(variant_untwisted_check(p, n, a));
        }
        if (n >= 3) emit(variant_nu_check(p, n, a));
    }
    for (const auto& [p, n] : options.instances) {
        if (static_cast<std::size_t>(ipow(p, n)) > options.enumeration.prime_power_cap) continue;
        for (unsigned r = 0; r <= n; ++r) emit(census_check(p, n, r, options.enumeration));
    }
    return out;
}

}  // namespace radhopf
