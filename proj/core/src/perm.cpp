#include "radhopf/perm.hpp"

#include "radhopf/rational.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <numeric>
#include <set>

namespace radhopf {

Perm Perm::identity(std::size_t degree) {
    Perm g;
    g.images.resize(degree);
    std::iota(g.images.begin(), g.images.end(), Point{0});
    return g;
}

Perm Perm::from_images(std::vector<Point> images) {
    std::vector<bool> hit(images.size(), false);
    for (Point x : images) {
        if (x >= images.size() || hit[x]) throw InvalidArgument("image vector is not a permutation");
        hit[x] = true;
    }
    return Perm{std::move(images)};
}

bool Perm::is_identity() const {
    for (std::size_t x = 0; x < images.size(); ++x)
        if (images[x] != x) return false;
    return true;
}

Perm Perm::inverse() const {
    Perm g;
    g.images.resize(images.size());
    for (std::size_t x = 0; x < images.size(); ++x) g.images[images[x]] = static_cast<Point>(x);
    return g;
}

std::size_t Perm::order() const {
    std::size_t result = 1;
    for (std::size_t len : cycle_type()) result = std::lcm(result, len);
    return result;
}

std::size_t Perm::fixed_points() const {
    std::size_t count = 0;
    for (std::size_t x = 0; x < images.size(); ++x) count += images[x] == x ? 1 : 0;
    return count;
}

std::vector<std::size_t> Perm::cycle_type() const {
    std::vector<bool> seen(images.size(), false);
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < images.size(); ++x) {
        if (seen[x]) continue;
        std::size_t len = 0;
        for (std::size_t y = x; !seen[y]; y = images[y]) {
            seen[y] = true;
            ++len;
        }
        out.push_back(len);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Perm operator*(const Perm& a, const Perm& b) {
    if (a.degree() != b.degree()) throw InvalidArgument("permutations of different degree");
    Perm g;
    g.images.resize(b.images.size());
    for (std::size_t x = 0; x < b.images.size(); ++x) g.images[x] = a.images[b.images[x]];
    return g;
}

Perm conjugate(const Perm& a, const Perm& b) { return a * b * a.inverse(); }

FiniteGroup FiniteGroup::generate(std::vector<Perm> generators, std::size_t degree, std::size_t limit) {
    for (const auto& g : generators)
        if (g.degree() != degree) throw InvalidArgument("generator degree differs from the group degree");
    std::set<Perm> seen{Perm::identity(degree)};
    std::vector<Perm> frontier{Perm::identity(degree)};
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const auto& x : frontier) {
            for (const auto& g : generators) {
                auto y = g * x;
                if (seen.insert(y).second) {
                    if (seen.size() > limit) throw InvalidArgument("group closure exceeds " + std::to_string(limit) + " elements");
                    next.push_back(std::move(y));
                }
            }
        }
        frontier = std::move(next);
    }
    FiniteGroup out;
    out.degree_ = degree;
    out.elements_.assign(seen.begin(), seen.end());
    out.generators_ = std::move(generators);
    return out;
}

FiniteGroup FiniteGroup::from_elements(std::vector<Perm> elements, std::vector<Perm> generators, std::size_t degree) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    FiniteGroup out;
    out.degree_ = degree;
    out.elements_ = std::move(elements);
    out.generators_ = std::move(generators);
    return out;
}

bool FiniteGroup::contains(const Perm& g) const { return std::binary_search(elements_.begin(), elements_.end(), g); }

std::size_t FiniteGroup::index_of(const Perm& g) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), g);
    return it != elements_.end() && *it == g ? static_cast<std::size_t>(it - elements_.begin()) : elements_.size();
}

bool FiniteGroup::is_subgroup_of(const FiniteGroup& g) const {
    return std::all_of(elements_.begin(), elements_.end(), [&](const Perm& x) { return g.contains(x); });
}

bool FiniteGroup::is_cyclic() const {
    return std::any_of(elements_.begin(), elements_.end(), [&](const Perm& x) { return x.order() == elements_.size(); });
}

bool FiniteGroup::is_abelian() const {
    const auto& gens = generators_.empty() ? elements_ : generators_;
    for (const auto& a : gens)
        for (const auto& b : gens)
            if (!(a * b == b * a)) return false;
    return true;
}

bool FiniteGroup::normalized_by(const FiniteGroup& other) const {
    for (const auto& g : other.generators().empty() ? other.elements() : other.generators())
        for (const auto& h : generators_.empty() ? elements_ : generators_)
            if (!contains(conjugate(g, h))) return false;
    return true;
}

bool is_regular(const FiniteGroup& n, std::size_t size) {
    if (n.degree() != size || n.order() != size) return false;
    for (const auto& g : n.elements())
        if (!g.is_identity() && g.fixed_points() != 0) return false;
    // |N| = |S| and fixed-point-free forces a single orbit; checked anyway
    std::vector<bool> hit(size, false);
    for (const auto& g : n.elements()) hit[g(0)] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

nlohmann::json to_json(const Perm& g) { return g.images; }

Perm perm_from_json(const nlohmann::json& j) { return Perm::from_images(j.get<std::vector<Point>>()); }

}  // namespace radhopf
