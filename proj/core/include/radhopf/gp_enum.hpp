#pragma once

#include "radhopf/cyclotomic.hpp"
#include "radhopf/perm.hpp"
#include "radhopf/report.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace radhopf {

/// Raised when an enumeration is refused: degree over the cap, an order
/// outside the group library, or the wall-clock budget spent.
class CapExceeded : public std::runtime_error {
  public:
    CapExceeded(const std::string& what, std::size_t cap) : std::runtime_error(what), cap_(cap) {}
    std::size_t cap() const { return cap_; }

  private:
    std::size_t cap_;
};

struct CosetAction {
    std::size_t size = 0;
    /// lambda[k] is the action of gamma.elements()[k] on the cosets.
    std::vector<Perm> lambda;
    /// lambda(Gamma), generated by the images of Gamma's generators.
    FiniteGroup image;
    /// coset_of[k] is the coset containing gamma.elements()[k]; coset 0 is Delta.
    std::vector<std::size_t> coset_of;
};

/// Left cosets g Delta, numbered by first appearance in element order.
CosetAction coset_action(const FiniteGroup& gamma, const FiniteGroup& delta);

/// An abstract finite group as a multiplication table; index 0 is the identity.
struct AbstractGroup {
    std::string name;
    std::vector<std::vector<std::uint32_t>> table;
    std::size_t order() const { return table.size(); }
};

struct EnumerationOptions {
    std::size_t generic_cap = 15;      ///< any degree up to this
    std::size_t prime_power_cap = 27;  ///< odd prime-power degrees up to this
    std::optional<double> budget_seconds;
};

/// Every group of order m up to isomorphism, for the orders the library
/// covers (all m <= 15, and 25, 27). Throws CapExceeded otherwise.
std::vector<AbstractGroup> groups_of_order(std::size_t m);

struct RegularSubgroup {
    FiniteGroup group;       ///< on the cosets
    std::string type;        ///< library name of the isomorphism type
    bool cyclic = false;
    bool abelian = false;
    bool almost_classical = false;
};

/// All regular N <= Perm(Gamma/Delta) normalized by lambda(Gamma), sorted by
/// element set.
std::vector<RegularSubgroup> enumerate_regular_normalized(const FiniteGroup& gamma, const FiniteGroup& delta,
                                                          const EnumerationOptions& options = {});

/// All N normal in Gamma with N meet Delta = 1 and N Delta = Gamma, sorted.
std::vector<FiniteGroup> almost_classical(const FiniteGroup& gamma, const FiniteGroup& delta);

/// The regular group commuting with a regular group r.
FiniteGroup regular_centralizer(const FiniteGroup& r);

/// Gal(Q(zeta_n, w_n)/Q(zeta_r)) and Gal(Q(zeta_n, w_n)/Q(zeta_r, w_n)) on
/// the p^(2n) points zeta^c w^k.
std::pair<FiniteGroup, FiniteGroup> radical_galois_group(Exp p, unsigned n, unsigned r);

struct CensusResult {
    std::size_t degree = 0;
    std::size_t gamma_order = 0;
    std::size_t delta_order = 0;
    std::vector<RegularSubgroup> structures;
    std::vector<FiniteGroup> complements;
    std::size_t almost_classical_count() const;
};

CensusResult census(const FiniteGroup& gamma, const FiniteGroup& delta, const EnumerationOptions& options = {});

/// p^r structures for r < n, p^(n-1) for r = n; p^min(r, n-r) almost classical.
std::pair<std::size_t, std::size_t> expected_counts(Exp p, unsigned n, unsigned r);

/// Census of Q(zeta_r, a^(1/p^n))/Q(zeta_r) against the expected counts.
Report census_check(Exp p, unsigned n, unsigned r, const EnumerationOptions& options = {});

/// {"degree": d, "gamma": [[...], ...], "delta": [[...], ...]} with generator image vectors.
std::pair<FiniteGroup, FiniteGroup> instance_from_json(const nlohmann::json& j);
nlohmann::json to_json(const CensusResult& c);

}  // namespace radhopf
