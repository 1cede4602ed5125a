#pragma once

#include "radhopf/cyclotomic.hpp"
#include "radhopf/groupring.hpp"

#include <cmath>
#include <complex>
#include <numbers>

namespace oracle {

using C = std::complex<double>;

inline C root(radhopf::Exp order, radhopf::Exp k) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(order);
    return {std::cos(t), std::sin(t)};
}

/// Complex value of x under zeta -> exp(2 pi i / p^n).
inline C eval(const radhopf::CycloElt& x) {
    C s = 0;
    const auto c = x.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) s += c[k].get_d() * root(x.field().pn, static_cast<radhopf::Exp>(k));
    return s;
}

/// Canonical n/d.
inline radhopf::Rat q(long n, long d = 1) {
    radhopf::Rat r(n, d);
    r.canonicalize();
    return r;
}

inline bool near(C a, C b, double tol = 1e-9) { return std::abs(a - b) < tol; }

/// Brute-force multiplicative order of a mod m.
inline long order_mod(long a, long m) {
    long x = a % m;
    for (long k = 1; k <= m; ++k) {
        if (x == 1) return k;
        x = x * a % m;
    }
    return 0;
}

}  // namespace oracle
