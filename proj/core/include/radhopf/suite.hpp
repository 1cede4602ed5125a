#pragma once

#include "radhopf/gp_enum.hpp"
#include "radhopf/report.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace radhopf {

/// The pairing e_i(sigma^k) is the p^n x p^n identity.
Report dual_basis_check(Exp p, unsigned n);

/// (Q(zeta_n)[N_n])^Delta_n has dimension p^n and equals the Q-span of the e-basis.
Report fixed_ring_check(Exp p, unsigned n);

/// sum_i zeta_n^(i p^(n-m)) e_{n,i} = sigma^(p^(n-m)) with coefficients in Q(zeta_m).
Report base_change_check(Exp p, unsigned n, unsigned m);

struct SuiteOptions {
    std::vector<std::pair<Exp, unsigned>> instances{{3, 1}, {3, 2}, {5, 1}, {7, 1}, {3, 3}};
    Rat radicand = 2;
    std::uint64_t seed = 20240611;
    unsigned truncation_level = 3;
    /// Variant Hopf-Galois action is checked up to this p^n.
    Exp variant_action_limit = 9;
    EnumerationOptions enumeration;
};

/// Every report for the instance matrix, in a fixed order: per instance the
/// level checks, then the truncation suite per prime, then variants and the census.
/// on_report, when set, sees each report as soon as it is produced.
std::vector<Report> verify_all(const SuiteOptions& options, const std::function<void(const Report&)>& on_report = {});

}  // namespace radhopf
