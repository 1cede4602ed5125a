#include "radhopf/cyclotomic.hpp"

#include "radhopf/linalg.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace radhopf {

bool is_prime(Exp n) {
    if (n < 2) return false;
    for (Exp d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Exp ipow(Exp base, unsigned exp) {
    Exp out = 1;
    for (unsigned i = 0; i < exp; ++i) out *= base;
    return out;
}

Exp powmod(Exp base, Exp exp, Exp m) {
    if (exp < 0) throw InvalidArgument("negative exponent in powmod");
    __int128 result = 1 % m;
    __int128 b = mod(base, m);
    while (exp > 0) {
        if (exp & 1) result = (result * b) % m;
        b = (b * b) % m;
        exp >>= 1;
    }
    return static_cast<Exp>(result);
}

Exp phi_prime_power(Exp p, unsigned n) {
    if (n == 0) return 1;
    return ipow(p, n - 1) * (p - 1);
}

Exp multiplicative_order(Exp a, Exp m) {
    a = mod(a, m);
    Exp x = a;
    for (Exp k = 1; k <= m; ++k) {
        if (x == 1 % m) return k;
        x = static_cast<Exp>((static_cast<__int128>(x) * a) % m);
    }
    throw InvalidArgument("element is not a unit");
}

Exp primitive_root(Exp p) {
    if (p == 2) throw InvalidArgument("p = 2 is not supported");
    if (!is_prime(p)) throw InvalidArgument("p = " + std::to_string(p) + " is not prime");
    const Exp m = p * p;
    const Exp order = p * (p - 1);
    std::vector<Exp> prime_factors{p};
    Exp rest = p - 1;
    for (Exp q = 2; q <= rest; ++q) {
        if (rest % q != 0) continue;
        prime_factors.push_back(q);
        while (rest % q == 0) rest /= q;
    }
    for (Exp g = 2; g < m; ++g) {
        if (g % p == 0) continue;
        bool primitive = true;
        for (Exp q : prime_factors) {
            if (powmod(g, order / q, m) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) return g;
    }
    throw InvalidArgument("no primitive root found");  // unreachable for odd primes
}

FieldDescriptor FieldDescriptor::make(Exp p, unsigned n) {
    if (n < 1) throw InvalidArgument("cyclotomic level must be >= 1");
    FieldDescriptor f;
    f.pi = primitive_root(p);
    f.p = p;
    f.n = n;
    f.sub = ipow(p, n - 1);
    f.pn = f.sub * p;
    f.phi = f.sub * (p - 1);
    return f;
}

CycloElt::CycloElt(FieldDescriptor field, std::vector<Rat> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
    if (static_cast<Exp>(coeffs_.size()) != field_.phi)
        throw InvalidArgument("cyclotomic coefficient vector must have length phi(p^n)");
    normalize();
}

CycloElt CycloElt::rational(const FieldDescriptor& f, const Rat& r) {
    CycloElt out(f);
    if (sgn(r) == 0) return out;
    out.ensure_storage();
    out.coeffs_[0] = r;
    return out;
}

CycloElt CycloElt::zeta_power(const FieldDescriptor& f, Exp k, const Rat& scale) {
    CycloElt out(f);
    out.add_zeta_power(k, scale);
    return out;
}

bool CycloElt::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (sgn(coeffs_[i]) != 0) return false;
    return true;
}

Rat CycloElt::coeff(Exp i) const {
    if (i < 0 || i >= field_.phi) throw InvalidArgument("coefficient index out of range");
    return coeffs_.empty() ? Rat(0) : coeffs_[static_cast<std::size_t>(i)];
}

std::vector<Rat> CycloElt::coeffs() const {
    return coeffs_.empty() ? std::vector<Rat>(static_cast<std::size_t>(field_.phi)) : coeffs_;
}

void CycloElt::ensure_storage() {
    if (coeffs_.empty()) coeffs_.resize(static_cast<std::size_t>(field_.phi));
}

void CycloElt::normalize() {
    if (!coeffs_.empty() && radhopf::is_zero(coeffs_)) coeffs_.clear();
}

void CycloElt::accumulate_zeta_power(Exp k, const Rat& scale) {
    k = mod(k, field_.pn);
    ensure_storage();
    if (k < field_.phi) {
        coeffs_[static_cast<std::size_t>(k)] += scale;
    } else {
        // zeta^k = -sum_{s=1}^{p-1} zeta^(k - s p^(n-1)), all exponents below phi
        for (Exp s = 1; s < field_.p; ++s) coeffs_[static_cast<std::size_t>(k - s * field_.sub)] -= scale;
    }
}

void CycloElt::add_zeta_power(Exp k, const Rat& scale) {
    if (sgn(scale) == 0) return;
    accumulate_zeta_power(k, scale);
    normalize();
}

CycloElt& CycloElt::operator+=(const CycloElt& o) {
    if (!(field_ == o.field_)) throw InvalidArgument("cyclotomic level mismatch");
    if (o.coeffs_.empty()) return *this;
    ensure_storage();
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

CycloElt& CycloElt::operator-=(const CycloElt& o) {
    if (!(field_ == o.field_)) throw InvalidArgument("cyclotomic level mismatch");
    if (o.coeffs_.empty()) return *this;
    ensure_storage();
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

CycloElt& CycloElt::operator*=(const Rat& s) {
    if (sgn(s) == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
}

CycloElt operator-(CycloElt a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
}

CycloElt operator*(const CycloElt& a, const CycloElt& b) {
    if (!(a.field_ == b.field_)) throw InvalidArgument("cyclotomic level mismatch");
    if (a.is_zero() || b.is_zero()) return CycloElt(a.field_);
    const auto phi = static_cast<std::size_t>(a.field_.phi);
    std::vector<Rat> raw(2 * phi - 1);
    for (std::size_t i = 0; i < phi; ++i) {
        if (sgn(a.coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < phi; ++j) {
            if (sgn(b.coeffs_[j]) != 0) raw[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return reduce(a.field_, raw);
}

bool operator==(const CycloElt& a, const CycloElt& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

CycloElt CycloElt::times_zeta_power(Exp k) const {
    CycloElt out(field_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) != 0) out.accumulate_zeta_power(static_cast<Exp>(i) + k, coeffs_[i]);
    }
    out.normalize();
    return out;
}

CycloElt CycloElt::inverse() const {
    if (is_zero()) throw InvalidArgument("inverse of zero in a cyclotomic field");
    const auto phi = static_cast<std::size_t>(field_.phi);
    // Column j of the multiplication-by-this matrix is this * zeta^j.
    QMatrix m(phi, phi);
    for (std::size_t j = 0; j < phi; ++j) {
        CycloElt col = times_zeta_power(static_cast<Exp>(j));
        for (std::size_t i = 0; i < phi; ++i) m(i, j) = col.coeff(static_cast<Exp>(i));
    }
    QVec rhs(phi);
    rhs[0] = 1;
    auto x = solve(std::move(m), std::move(rhs));
    if (!x) throw InvalidArgument("singular multiplication matrix");  // impossible in a field
    return CycloElt(field_, std::move(*x));
}

CycloElt reduce(const FieldDescriptor& f, const std::vector<Rat>& raw) {
    std::vector<Rat> work = raw;
    const auto phi = static_cast<std::size_t>(f.phi);
    const auto sub = static_cast<std::size_t>(f.sub);
    const auto p = static_cast<std::size_t>(f.p);
    // zeta^phi = -sum_{k=0}^{p-2} zeta^(k p^(n-1)); sweep from the top degree down.
    for (std::size_t d = work.size(); d-- > phi;) {
        if (sgn(work[d]) == 0) continue;
        const Rat c = work[d];
        work[d] = 0;
        const std::size_t base = d - phi;
        for (std::size_t k = 0; k + 1 < p; ++k) work[base + k * sub] -= c;
    }
    work.resize(phi);
    return CycloElt(f, std::move(work));
}

CycloElt inverse(const CycloElt& a) { return a.inverse(); }

CycloElt embed(const CycloElt& x, unsigned target_level) {
    const auto& src = x.field();
    if (target_level < src.n) throw InvalidArgument("embed requires source level <= target level");
    if (target_level == src.n) return x;
    const auto dst = src.at_level(target_level);
    const Exp stride = ipow(src.p, target_level - src.n);
    if (x.is_zero()) return CycloElt(dst);
    std::vector<Rat> raw(static_cast<std::size_t>(dst.pn));
    for (Exp i = 0; i < src.phi; ++i) raw[static_cast<std::size_t>(i * stride)] = x.coeff(i);
    return reduce(dst, raw);
}

CycloElt galois_apply(Exp u, const CycloElt& x) {
    const auto& f = x.field();
    if (mod(u, f.p) == 0) throw InvalidArgument("Galois exponent must be a unit mod p");
    if (x.is_zero()) return x;
    std::vector<Rat> raw(static_cast<std::size_t>(f.pn));
    const auto src = x.coeffs();
    for (Exp i = 0; i < f.phi; ++i) {
        if (sgn(src[static_cast<std::size_t>(i)]) != 0)
            raw[static_cast<std::size_t>((static_cast<__int128>(i) * mod(u, f.pn)) % f.pn)] += src[static_cast<std::size_t>(i)];
    }
    return reduce(f, raw);
}

CycloElt delta_apply(Exp e, const CycloElt& x) {
    const auto& f = x.field();
    return galois_apply(powmod(f.pi, mod(e, f.phi), f.pn), x);
}

nlohmann::json to_json(const CycloElt& x) { return format_rats(x.coeffs()); }

CycloElt cyclo_from_json(const FieldDescriptor& f, const nlohmann::json& j) {
    return CycloElt(f, parse_rats(j.get<std::vector<std::string>>()));
}

}  // namespace radhopf
