#include "lgl/lset.hpp"

#include <algorithm>

namespace lgl {

bool same_group(const GroupPtr& a, const GroupPtr& b) {
    return a == b || (a && b && *a == *b);
}

bool same_lattice(const LatticePtr& a, const LatticePtr& b) {
    return a == b || (a && b && *a == *b);
}

LSubset::LSubset(GroupPtr g, LatticePtr l, std::vector<std::uint8_t> values)
    : group_(std::move(g)), lattice_(std::move(l)), values_(std::move(values)) {
    if (!group_ || !lattice_) fail(errc::bad_input, "subset needs a group and a lattice");
    if (values_.size() != group_->order())
        fail(errc::bad_input, "value list has " + std::to_string(values_.size()) +
                                  " entries for a group of order " +
                                  std::to_string(group_->order()));
    for (std::uint8_t v : values_)
        if (v >= lattice_->size())
            fail(errc::unknown_element, "value index " + std::to_string(v) +
                                            " outside lattice '" + lattice_->name() + "'");
}

LSubset LSubset::constant(GroupPtr g, LatticePtr l, std::size_t a) {
    if (!g || !l) fail(errc::bad_input, "subset needs a group and a lattice");
    std::vector<std::uint8_t> vals(g->order(), static_cast<std::uint8_t>(a));
    return LSubset(std::move(g), std::move(l), std::move(vals));
}

LSubset LSubset::point(GroupPtr g, LatticePtr l, std::size_t x, std::size_t a) {
    if (!g || !l) fail(errc::bad_input, "subset needs a group and a lattice");
    std::vector<std::uint8_t> vals(g->order(), static_cast<std::uint8_t>(l->bottom()));
    if (x >= vals.size()) fail(errc::unknown_element, "point index out of range");
    vals[x] = static_cast<std::uint8_t>(a);
    return LSubset(std::move(g), std::move(l), std::move(vals));
}

LSubset LSubset::characteristic(GroupPtr g, LatticePtr l, const FiniteGroup::ElemSet& s,
                                std::optional<std::size_t> inside,
                                std::optional<std::size_t> outside) {
    if (!g || !l) fail(errc::bad_input, "subset needs a group and a lattice");
    const std::size_t hi = inside.value_or(l->top());
    const std::size_t lo = outside.value_or(l->bottom());
    std::vector<std::uint8_t> vals(g->order(), static_cast<std::uint8_t>(lo));
    for (std::uint16_t x : s) {
        if (x >= vals.size()) fail(errc::unknown_element, "member index out of range");
        vals[x] = static_cast<std::uint8_t>(hi);
    }
    return LSubset(std::move(g), std::move(l), std::move(vals));
}

void LSubset::set_value(std::size_t x, std::size_t a) {
    if (x >= values_.size()) fail(errc::unknown_element, "element index out of range");
    if (a >= lattice_->size()) fail(errc::unknown_element, "value index out of range");
    values_[x] = static_cast<std::uint8_t>(a);
}

std::size_t LSubset::tip() const {
    std::size_t acc = lattice_->bottom();
    for (std::uint8_t v : values_) acc = lattice_->join(acc, v);
    return acc;
}

std::size_t LSubset::tail() const {
    std::size_t acc = lattice_->top();
    for (std::uint8_t v : values_) acc = lattice_->meet(acc, v);
    return acc;
}

std::vector<std::size_t> LSubset::image() const {
    std::vector<std::size_t> out(values_.begin(), values_.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

FiniteGroup::ElemSet LSubset::level(std::size_t a) const {
    FiniteGroup::ElemSet out;
    for (std::size_t x = 0; x < values_.size(); ++x)
        if (lattice_->leq(a, values_[x])) out.push_back(static_cast<std::uint16_t>(x));
    return out;
}

FiniteGroup::ElemSet LSubset::strong_level(std::size_t a) const {
    FiniteGroup::ElemSet out;
    for (std::size_t x = 0; x < values_.size(); ++x)
        if (lattice_->lt(a, values_[x])) out.push_back(static_cast<std::uint16_t>(x));
    return out;
}

bool LSubset::subset_of(const LSubset& other) const {
    require_compatible(other);
    for (std::size_t x = 0; x < values_.size(); ++x)
        if (!lattice_->leq(values_[x], other.values_[x])) return false;
    return true;
}

bool LSubset::is_constant() const {
    for (std::uint8_t v : values_)
        if (v != values_[0]) return false;
    return true;
}

bool LSubset::has_sup_property() const {
    auto im = image();
    for (std::size_t i = 0; i < im.size(); ++i)
        for (std::size_t j = i + 1; j < im.size(); ++j)
            if (!lattice_->comparable(im[i], im[j])) return false;
    return true;
}

LSubset LSubset::meet(const LSubset& other) const {
    require_compatible(other);
    std::vector<std::uint8_t> vals(values_.size());
    for (std::size_t x = 0; x < values_.size(); ++x)
        vals[x] = static_cast<std::uint8_t>(lattice_->meet(values_[x], other.values_[x]));
    return LSubset(group_, lattice_, std::move(vals));
}

LSubset LSubset::join(const LSubset& other) const {
    require_compatible(other);
    std::vector<std::uint8_t> vals(values_.size());
    for (std::size_t x = 0; x < values_.size(); ++x)
        vals[x] = static_cast<std::uint8_t>(lattice_->join(values_[x], other.values_[x]));
    return LSubset(group_, lattice_, std::move(vals));
}

bool LSubset::operator==(const LSubset& other) const {
    return same_group(group_, other.group_) && same_lattice(lattice_, other.lattice_) &&
           values_ == other.values_;
}

void LSubset::require_compatible(const LSubset& other) const {
    if (!same_group(group_, other.group_))
        fail(errc::carrier_mismatch, "subsets live on different groups ('" + group_->name() +
                                         "' vs '" + other.group_->name() + "')");
    if (!same_lattice(lattice_, other.lattice_))
        fail(errc::lattice_mismatch, "subsets take values in different lattices ('" +
                                         lattice_->name() + "' vs '" + other.lattice_->name() +
                                         "')");
}

LSubset set_product(const LSubset& mu, const LSubset& eta) {
    mu.require_compatible(eta);
    const FiniteGroup& G = mu.group();
    const FiniteLattice& L = mu.lattice();
    std::vector<std::uint8_t> vals(G.order());
    for (std::size_t x = 0; x < G.order(); ++x) {
        std::size_t acc = L.bottom();
        for (std::size_t y = 0; y < G.order(); ++y)
            acc = L.join(acc, L.meet(mu.value(y), eta.value(G.mul(G.inv(y), x))));
        vals[x] = static_cast<std::uint8_t>(acc);
    }
    return LSubset(mu.group_ptr(), mu.lattice_ptr(), std::move(vals));
}

LSubset left_point_product(std::size_t a, std::size_t x, const LSubset& eta) {
    const FiniteGroup& G = eta.group();
    const FiniteLattice& L = eta.lattice();
    std::vector<std::uint8_t> vals(G.order());
    for (std::size_t z = 0; z < G.order(); ++z)
        vals[z] = static_cast<std::uint8_t>(L.meet(a, eta.value(G.mul(G.inv(x), z))));
    return LSubset(eta.group_ptr(), eta.lattice_ptr(), std::move(vals));
}

LSubset right_point_product(const LSubset& eta, std::size_t a, std::size_t x) {
    const FiniteGroup& G = eta.group();
    const FiniteLattice& L = eta.lattice();
    std::vector<std::uint8_t> vals(G.order());
    for (std::size_t z = 0; z < G.order(); ++z)
        vals[z] = static_cast<std::uint8_t>(L.meet(a, eta.value(G.mul(z, G.inv(x)))));
    return LSubset(eta.group_ptr(), eta.lattice_ptr(), std::move(vals));
}

LSubset image_along(const GroupHom& h, const LSubset& mu) {
    if (!same_group(h.dom, mu.group_ptr()))
        fail(errc::carrier_mismatch, "subset does not live on the map's source group");
    const FiniteLattice& L = mu.lattice();
    std::vector<std::uint8_t> vals(h.cod->order(), static_cast<std::uint8_t>(L.bottom()));
    for (std::size_t x = 0; x < h.dom->order(); ++x)
        vals[h.map[x]] =
            static_cast<std::uint8_t>(L.join(vals[h.map[x]], mu.value(x)));
    return LSubset(h.cod, mu.lattice_ptr(), std::move(vals));
}

LSubset preimage_along(const GroupHom& h, const LSubset& nu) {
    if (!same_group(h.cod, nu.group_ptr()))
        fail(errc::carrier_mismatch, "subset does not live on the map's target group");
    std::vector<std::uint8_t> vals(h.dom->order());
    for (std::size_t x = 0; x < h.dom->order(); ++x)
        vals[x] = static_cast<std::uint8_t>(nu.value(h.map[x]));
    return LSubset(h.dom, nu.lattice_ptr(), std::move(vals));
}

} // namespace lgl
