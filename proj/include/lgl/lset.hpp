#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "lgl/group.hpp"
#include "lgl/lattice.hpp"

namespace lgl {

/// Same group up to pointer identity or structural equality.
bool same_group(const GroupPtr& a, const GroupPtr& b);
bool same_lattice(const LatticePtr& a, const LatticePtr& b);

/// A lattice-valued subset of a finite group: one lattice element per group
/// element.
class LSubset {
public:
    LSubset(GroupPtr g, LatticePtr l, std::vector<std::uint8_t> values);

    static LSubset constant(GroupPtr g, LatticePtr l, std::size_t a);
    /// Value a at x, bottom elsewhere.
    static LSubset point(GroupPtr g, LatticePtr l, std::size_t x, std::size_t a);
    /// `inside` (default top) on S, `outside` (default bottom) elsewhere.
    static LSubset characteristic(GroupPtr g, LatticePtr l, const FiniteGroup::ElemSet& s,
                                  std::optional<std::size_t> inside = {},
                                  std::optional<std::size_t> outside = {});

    const GroupPtr& group_ptr() const { return group_; }
    const LatticePtr& lattice_ptr() const { return lattice_; }
    const FiniteGroup& group() const { return *group_; }
    const FiniteLattice& lattice() const { return *lattice_; }

    std::size_t value(std::size_t x) const { return values_[x]; }
    void set_value(std::size_t x, std::size_t a);
    const std::vector<std::uint8_t>& values() const { return values_; }

    /// Largest value taken (the sup of the image).
    std::size_t tip() const;
    /// Smallest value taken (the inf of the image).
    std::size_t tail() const;
    /// Values taken, sorted, without repeats.
    std::vector<std::size_t> image() const;

    /// {x : value(x) >= a}, sorted.
    FiniteGroup::ElemSet level(std::size_t a) const;
    /// {x : value(x) > a}, sorted.
    FiniteGroup::ElemSet strong_level(std::size_t a) const;

    /// The point with value a at x lies inside this subset.
    bool contains_point(std::size_t a, std::size_t x) const {
        return lattice_->leq(a, values_[x]);
    }
    /// Pointwise below `other` (same carriers required).
    bool subset_of(const LSubset& other) const;
    bool is_constant() const;
    /// Every nonempty subset of the carrier attains the sup of its values at
    /// one of its own members.  In the finite case this holds exactly when
    /// the values taken are pairwise comparable.
    bool has_sup_property() const;

    LSubset meet(const LSubset& other) const;
    LSubset join(const LSubset& other) const;

    bool operator==(const LSubset& other) const;

    /// Throws carrier_mismatch / lattice_mismatch unless both sides live on
    /// the same group and lattice.
    void require_compatible(const LSubset& other) const;

private:
    GroupPtr group_;
    LatticePtr lattice_;
    std::vector<std::uint8_t> values_;
};

/// (mu o eta)(x) = sup over y of mu(y) /\ eta(y^-1 x).
LSubset set_product(const LSubset& mu, const LSubset& eta);
/// a_x o eta, computed by its closed form z |-> a /\ eta(x^-1 z).
LSubset left_point_product(std::size_t a, std::size_t x, const LSubset& eta);
/// eta o a_x, computed by its closed form z |-> a /\ eta(z x^-1).
LSubset right_point_product(const LSubset& eta, std::size_t a, std::size_t x);

/// Forward image along a homomorphism: z |-> sup of mu over the preimage of
/// z (bottom when the preimage is empty).
LSubset image_along(const GroupHom& h, const LSubset& mu);
/// Preimage along a homomorphism: x |-> nu(h(x)).
LSubset preimage_along(const GroupHom& h, const LSubset& nu);

} // namespace lgl
