#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lgl/error.hpp"

namespace lgl {

/// A finite bounded lattice over named elements.
///
/// Built from an element list and a set of order pairs (covers or arbitrary
/// comparable pairs).  The constructor takes the reflexive-transitive closure,
/// rejects cycles, and tabulates meet and join for every pair; a pair without
/// a greatest lower / least upper bound is rejected with a witness.  Element
/// order is the file order and is the canonical order used everywhere else.
class FiniteLattice {
public:
    static constexpr std::size_t max_size = 64;

    /// `le_pairs` lists (lo, hi) index pairs meaning lo <= hi.
    static FiniteLattice build(std::string name,
                               std::vector<std::string> elements,
                               const std::vector<std::pair<std::size_t, std::size_t>>& le_pairs);

    std::size_t size() const { return labels_.size(); }
    const std::string& name() const { return name_; }
    const std::string& label(std::size_t i) const { return labels_[i]; }
    std::optional<std::size_t> index_of(std::string_view label) const;
    /// index_of or an unknown_element error.
    std::size_t require(std::string_view label) const;

    bool leq(std::size_t x, std::size_t y) const { return leq_[x * n_ + y] != 0; }
    bool lt(std::size_t x, std::size_t y) const { return x != y && leq(x, y); }
    bool comparable(std::size_t x, std::size_t y) const { return leq(x, y) || leq(y, x); }
    std::size_t meet(std::size_t x, std::size_t y) const { return meet_[x * n_ + y]; }
    std::size_t join(std::size_t x, std::size_t y) const { return join_[x * n_ + y]; }
    std::size_t bottom() const { return bottom_; }
    std::size_t top() const { return top_; }

    /// sup of a set of elements; empty set gives bottom.
    std::size_t sup_of(std::span<const std::size_t> xs) const;
    /// inf of a set of elements; empty set gives top.
    std::size_t inf_of(std::span<const std::size_t> xs) const;

    /// Both distributive laws hold on all triples (checked once at build).
    bool distributive() const { return distributive_; }
    /// A triple (x,y,z) with x /\ (y \/ z) != (x /\ y) \/ (x /\ z), if any.
    const std::optional<std::array<std::size_t, 3>>& distributivity_witness() const {
        return dist_witness_;
    }

    bool is_chain() const { return is_chain_; }
    /// For finite lattices this coincides with being a chain.
    bool upper_well_ordered() const { return is_chain_; }

    /// All z with lo <= z <= hi, in canonical order.  lo must be <= hi.
    std::vector<std::size_t> interval(std::size_t lo, std::size_t hi) const;
    /// All z <= x, in canonical order.
    std::vector<std::size_t> down_set(std::size_t x) const;

    bool operator==(const FiniteLattice& o) const {
        return labels_ == o.labels_ && leq_ == o.leq_;
    }

    /// Cover pairs (lo, hi) of the Hasse diagram, canonically ordered.
    std::vector<std::pair<std::size_t, std::size_t>> covers() const;

private:
    FiniteLattice() = default;

    std::string name_;
    std::vector<std::string> labels_;
    std::size_t n_ = 0;
    std::vector<std::uint8_t> leq_;
    std::vector<std::uint8_t> meet_;
    std::vector<std::uint8_t> join_;
    std::size_t bottom_ = 0;
    std::size_t top_ = 0;
    bool distributive_ = true;
    std::optional<std::array<std::size_t, 3>> dist_witness_;
    bool is_chain_ = true;
};

using LatticePtr = std::shared_ptr<const FiniteLattice>;

} // namespace lgl
