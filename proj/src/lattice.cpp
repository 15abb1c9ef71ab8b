#include "lgl/lattice.hpp"

#include <algorithm>
#include <unordered_map>

namespace lgl {

const char* errc_name(errc k) {
    switch (k) {
    case errc::unknown_element: return "UnknownElement";
    case errc::order_cycle: return "OrderCycle";
    case errc::no_meet: return "NoMeet";
    case errc::no_join: return "NoJoin";
    case errc::size_cap: return "SizeCap";
    case errc::not_closed_table: return "NotClosedTable";
    case errc::no_identity: return "NoIdentity";
    case errc::no_inverse: return "NoInverse";
    case errc::not_associative: return "NotAssociative";
    case errc::bad_permutation: return "BadPermutation";
    case errc::order_cap: return "OrderCap";
    case errc::lattice_mismatch: return "LatticeMismatch";
    case errc::carrier_mismatch: return "CarrierMismatch";
    case errc::not_a_chain: return "NotAChain";
    case errc::not_an_lsubgroup: return "NotAnLSubgroup";
    case errc::not_contained: return "NotContained";
    case errc::not_comparable: return "NotComparable";
    case errc::tip_equals_tail: return "TipEqualsTail";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::no_witness: return "NoWitness";
    case errc::unknown_suite: return "UnknownSuite";
    case errc::bad_input: return "BadInput";
    }
    return "Unknown";
}

FiniteLattice FiniteLattice::build(std::string name,
                                   std::vector<std::string> elements,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& le_pairs) {
    FiniteLattice L;
    L.name_ = std::move(name);
    L.labels_ = std::move(elements);
    const std::size_t n = L.labels_.size();
    L.n_ = n;
    if (n == 0) fail(errc::bad_input, "lattice '" + L.name_ + "' has no elements");
    if (n > max_size)
        fail(errc::size_cap, "lattice '" + L.name_ + "' has " + std::to_string(n) +
                                 " elements, cap is " + std::to_string(max_size));
    {
        std::unordered_map<std::string, std::size_t> seen;
        for (std::size_t i = 0; i < n; ++i)
            if (!seen.emplace(L.labels_[i], i).second)
                fail(errc::bad_input, "duplicate lattice element '" + L.labels_[i] + "'");
    }

    L.leq_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) L.leq_[i * n + i] = 1;
    for (auto [lo, hi] : le_pairs) {
        if (lo >= n || hi >= n) fail(errc::unknown_element, "order pair index out of range");
        L.leq_[lo * n + hi] = 1;
    }
    // Transitive closure (Warshall).
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (L.leq_[i * n + k])
                for (std::size_t j = 0; j < n; ++j)
                    if (L.leq_[k * n + j]) L.leq_[i * n + j] = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (L.leq_[i * n + j] && L.leq_[j * n + i])
                fail(errc::order_cycle,
                     "elements '" + L.labels_[i] + "' and '" + L.labels_[j] + "' order each other");

    // Joins first, then meets: a two-element antichain with no bounds reports NoJoin.
    L.join_.assign(n * n, 0);
    L.meet_.assign(n * n, 0);
    auto bound = [&](std::size_t x, std::size_t y, bool upper) -> std::optional<std::size_t> {
        std::vector<std::size_t> cands;
        for (std::size_t z = 0; z < n; ++z) {
            bool ok = upper ? (L.leq(x, z) && L.leq(y, z)) : (L.leq(z, x) && L.leq(z, y));
            if (ok) cands.push_back(z);
        }
        for (std::size_t z : cands) {
            bool extreme = true;
            for (std::size_t w : cands)
                if (upper ? !L.leq(z, w) : !L.leq(w, z)) { extreme = false; break; }
            if (extreme) return z;
        }
        return std::nullopt;
    };
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            auto j = bound(x, y, true);
            if (!j) fail(errc::no_join,
                         "no join for ('" + L.labels_[x] + "', '" + L.labels_[y] + "')");
            L.join_[x * n + y] = static_cast<std::uint8_t>(*j);
        }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            auto m = bound(x, y, false);
            if (!m) fail(errc::no_meet,
                         "no meet for ('" + L.labels_[x] + "', '" + L.labels_[y] + "')");
            L.meet_[x * n + y] = static_cast<std::uint8_t>(*m);
        }

    std::size_t bot = 0, top = 0;
    for (std::size_t i = 0; i < n; ++i) {
        bot = L.meet(bot, i);
        top = L.join(top, i);
    }
    L.bottom_ = bot;
    L.top_ = top;

    L.is_chain_ = true;
    for (std::size_t x = 0; x < n && L.is_chain_; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (!L.comparable(x, y)) { L.is_chain_ = false; break; }

    L.distributive_ = true;
    for (std::size_t x = 0; x < n && L.distributive_; ++x)
        for (std::size_t y = 0; y < n && L.distributive_; ++y)
            for (std::size_t z = 0; z < n; ++z)
                if (L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), L.meet(x, z))) {
                    L.distributive_ = false;
                    L.dist_witness_ = std::array<std::size_t, 3>{x, y, z};
                    break;
                }
    return L;
}

std::optional<std::size_t> FiniteLattice::index_of(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    return std::nullopt;
}

std::size_t FiniteLattice::require(std::string_view label) const {
    auto i = index_of(label);
    if (!i) fail(errc::unknown_element,
                 "lattice '" + name_ + "' has no element '" + std::string(label) + "'");
    return *i;
}

std::size_t FiniteLattice::sup_of(std::span<const std::size_t> xs) const {
    std::size_t acc = bottom_;
    for (std::size_t x : xs) acc = join(acc, x);
    return acc;
}

std::size_t FiniteLattice::inf_of(std::span<const std::size_t> xs) const {
    std::size_t acc = top_;
    for (std::size_t x : xs) acc = meet(acc, x);
    return acc;
}

std::vector<std::size_t> FiniteLattice::interval(std::size_t lo, std::size_t hi) const {
    if (!leq(lo, hi))
        fail(errc::not_comparable,
             "'" + labels_[lo] + "' is not below '" + labels_[hi] + "'");
    std::vector<std::size_t> out;
    for (std::size_t z = 0; z < size(); ++z)
        if (leq(lo, z) && leq(z, hi)) out.push_back(z);
    return out;
}

std::vector<std::size_t> FiniteLattice::down_set(std::size_t x) const {
    std::vector<std::size_t> out;
    for (std::size_t z = 0; z < size(); ++z)
        if (leq(z, x)) out.push_back(z);
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> FiniteLattice::covers() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t lo = 0; lo < size(); ++lo)
        for (std::size_t hi = 0; hi < size(); ++hi) {
            if (lo == hi || !leq(lo, hi)) continue;
            bool cover = true;
            for (std::size_t z = 0; z < size(); ++z)
                if (z != lo && z != hi && leq(lo, z) && leq(z, hi)) { cover = false; break; }
            if (cover) out.emplace_back(lo, hi);
        }
    return out;
}

} // namespace lgl
