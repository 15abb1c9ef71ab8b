#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lgl/error.hpp"

namespace lgl {

/// One-line notation, 0-based: perm[p] is the image of point p.
using Perm = std::vector<std::uint16_t>;

/// Parse cycle notation ("(1234)", "(12)(34)", "(1 10 3)", "e" or "()" for the
/// identity) into one-line notation on `degree` points.  Points are 1-based in
/// the notation.  Within a cycle, separators (spaces or commas) split points;
/// without separators every character is one point.  With several cycles the
/// rightmost is applied first.
Perm parse_perm(std::size_t degree, std::string_view text);

/// Canonical cycle notation for a permutation: cycles start at their smallest
/// point, are listed by smallest point, fixed points are dropped, the identity
/// renders as "e".  Points are printed 1-based, space-separated when the
/// degree exceeds 9.
std::string render_perm(const Perm& p);

/// A finite group, either from a multiplication table or generated by
/// permutations.  Element order is canonical: for tables it is the input
/// order; for permutation groups it is breadth-first from the identity,
/// right-multiplying by the generators in input order.
class FiniteGroup {
public:
    static constexpr std::size_t max_order = 10080;

    /// A sorted list of element indices, used for subgroups and element sets.
    using ElemSet = std::vector<std::uint16_t>;

    /// `table` is row-major: table[x * n + y] = x * y.
    static FiniteGroup from_table(std::string name, std::vector<std::string> elements,
                                  std::vector<std::uint16_t> table);

    /// Each generator is (name, cycle notation).  An empty generator list
    /// gives the trivial group.
    static FiniteGroup from_generators(std::string name, std::size_t degree,
                                       const std::vector<std::pair<std::string, std::string>>& gens);

    std::size_t order() const { return labels_.size(); }
    const std::string& name() const { return name_; }
    const std::string& label(std::size_t i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Resolve an element: exact label, then a word in the generator names
    /// (e.g. "sr2" = s * r * r), then cycle notation for permutation groups.
    std::optional<std::size_t> index_of(std::string_view text) const;
    /// index_of or an unknown_element error.
    std::size_t require(std::string_view text) const;

    std::size_t identity() const { return 0; }
    std::size_t mul(std::size_t x, std::size_t y) const {
        return table_.empty() ? mul_slow(x, y) : table_[x * order() + y];
    }
    std::size_t inv(std::size_t x) const { return inv_[x]; }
    /// g x g^-1.
    std::size_t conj(std::size_t g, std::size_t x) const { return mul(mul(g, x), inv(g)); }
    /// x y x^-1 y^-1.
    std::size_t commutator(std::size_t x, std::size_t y) const {
        return mul(mul(x, y), mul(inv(x), inv(y)));
    }
    std::size_t element_order(std::size_t x) const;
    bool is_abelian() const;

    /// 0 for table-built groups.
    std::size_t degree() const { return degree_; }
    /// Permutation groups only: the one-line image of element i.
    const Perm& perm(std::size_t i) const { return perms_[i]; }
    const std::vector<std::pair<std::string, std::size_t>>& generators() const { return gens_; }

    /// Subgroup generated by `gens` (element indices), sorted.
    ElemSet closure(const ElemSet& gens) const;
    bool is_subgroup(const ElemSet& elems) const;
    bool is_normal(const ElemSet& subgroup) const;
    /// Every subgroup, sorted by (size, elements).  Guarded to order <= 200.
    std::vector<ElemSet> all_subgroups() const;

    /// Extra names for elements, resolvable through index_of/require.
    void add_alias(std::string alias, std::size_t elem);
    const std::map<std::string, std::uint16_t>& aliases() const { return aliases_; }

    /// Same multiplication on the same element labels.
    bool operator==(const FiniteGroup& o) const;

private:
    FiniteGroup() = default;
    std::size_t mul_slow(std::size_t x, std::size_t y) const;
    void finish(); // inv_, cached table for small permutation groups

    std::string name_;
    std::vector<std::string> labels_;
    std::vector<std::uint16_t> table_; // full multiplication table when cached
    std::vector<std::uint16_t> inv_;
    std::size_t degree_ = 0;
    std::vector<Perm> perms_;                               // permutation groups
    std::vector<std::pair<Perm, std::uint16_t>> perm_index_; // sorted for lookup
    std::vector<std::pair<std::string, std::size_t>> gens_;  // name -> element
    std::map<std::string, std::uint16_t> aliases_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A verified homomorphism: map[x] in cod for each x in dom.
struct GroupHom {
    GroupPtr dom;
    GroupPtr cod;
    std::vector<std::uint16_t> map;

    std::size_t operator()(std::size_t x) const { return map[x]; }
};

bool is_homomorphism(const FiniteGroup& dom, const FiniteGroup& cod,
                     const std::vector<std::uint16_t>& map);
/// Throws bad_input unless `map` is a homomorphism.
GroupHom make_hom(GroupPtr dom, GroupPtr cod, std::vector<std::uint16_t> map);
FiniteGroup::ElemSet hom_kernel(const GroupHom& h);
FiniteGroup::ElemSet hom_image(const GroupHom& h);

} // namespace lgl
