#pragma once

#include <nlohmann/json_fwd.hpp>

#include <cstddef>
#include <cstdint>
#include <vector>

namespace radhopf {

using Point = std::uint32_t;

/// Bijection of {0, ..., degree - 1}; images[x] is the image of x.
struct Perm {
    std::vector<Point> images;

    static Perm identity(std::size_t degree);
    /// Throws InvalidArgument unless images is a bijection.
    static Perm from_images(std::vector<Point> images);

    std::size_t degree() const { return images.size(); }
    Point operator()(Point x) const { return images[x]; }
    bool is_identity() const;
    Perm inverse() const;
    std::size_t order() const;
    std::size_t fixed_points() const;
    /// Sorted cycle lengths, fixed points included.
    std::vector<std::size_t> cycle_type() const;

    friend auto operator<=>(const Perm&, const Perm&) = default;
};

/// (a * b)(x) = a(b(x)).
Perm operator*(const Perm& a, const Perm& b);
/// a b a^-1.
Perm conjugate(const Perm& a, const Perm& b);

/// Closed set of permutations, elements sorted; elements[0] is the identity.
class FiniteGroup {
  public:
    /// Closure of the generators; throws when it exceeds limit elements.
    static FiniteGroup generate(std::vector<Perm> generators, std::size_t degree, std::size_t limit = 1u << 20);
    /// Trusted constructor from an already closed element list.
    static FiniteGroup from_elements(std::vector<Perm> elements, std::vector<Perm> generators, std::size_t degree);

    std::size_t degree() const { return degree_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<Perm>& elements() const { return elements_; }
    const std::vector<Perm>& generators() const { return generators_; }
    bool contains(const Perm& g) const;
    /// Index of g in elements(), or order() when absent.
    std::size_t index_of(const Perm& g) const;
    bool is_subgroup_of(const FiniteGroup& g) const;
    bool is_cyclic() const;
    bool is_abelian() const;
    /// g H g^-1 = H for every generator g of other.
    bool normalized_by(const FiniteGroup& other) const;

    friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.elements_ == b.elements_; }

  private:
    std::size_t degree_ = 0;
    std::vector<Perm> elements_;
    std::vector<Perm> generators_;
};

/// Single orbit and no nonidentity element fixes a point.
bool is_regular(const FiniteGroup& n, std::size_t size);

nlohmann::json to_json(const Perm& g);
Perm perm_from_json(const nlohmann::json& j);

}  // namespace radhopf
