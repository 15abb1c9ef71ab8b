#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lgl/lgroup.hpp"
#include "lgl/lset.hpp"

namespace lgl {

// Resource limits for the enumeration engine.  max_candidates caps the number
// of DFS assignment steps a box walk may spend (not just completed maps, so a
// heavily pruned walk over a huge box still terminates); max_results caps how
// many survivors are collected; threads is the number of workers a box walk
// may split its root interval across.  Exhausting a cap never corrupts the
// partial output: enumerate_box reports it via `complete = false`, and the
// derived operations that need a certified-complete list raise
// errc::budget_exceeded instead of returning an answer they cannot certify.
struct EnumerationBudget {
    std::uint64_t max_candidates = 1'000'000;
    std::uint64_t max_results = 1'000'000;
    unsigned threads = 1;
};

// What enumerate_box keeps.  `none` keeps every map in the box.  The two
// subgroup filters are equivalent whenever `hi` itself satisfies the subgroup
// laws, because the box already forces every candidate below `hi`; both are
// accepted so call sites can state which reading they rely on.
enum class BoxFilter { none, lsubgroup, lsubgroup_of_hi };

const char* box_filter_name(BoxFilter f);

struct BoxEnumeration {
    std::vector<LSubset> items;   // sorted by canonical value vector
    std::uint64_t box_size = 0;   // product of interval sizes, saturated
    std::uint64_t visited = 0;    // DFS assignment steps actually spent
    bool complete = true;
};

// Walks the Cartesian product of the intervals [lo(x), hi(x)], element by
// element, and returns the maps that pass the filter.  The walk assigns the
// identity first and then the remaining elements in order of increasing
// interval size (ties by element index); with a subgroup filter it prunes a
// branch as soon as some fully assigned triple x, y, xy already violates
// the product law.  With more than one worker the root interval is dealt
// round-robin and each worker gets an equal slice of the candidate budget,
// so results and flags are reproducible for a fixed (arguments, threads).
BoxEnumeration enumerate_box(const LSubset& lo, const LSubset& hi, BoxFilter filter,
                             const EnumerationBudget& budget = {});

// Verdict of a maximality test, with enough evidence to audit it: either the
// subject is maximal below the ambient map, or `strict_intermediate` holds a
// subgroup map strictly between the two, or `reason` explains why the subject
// was not even a proper candidate.  box_size / survivors describe the interval
// enumeration the verdict came from.
struct MaximalityCertificate {
    LSubset subject;
    LSubset ambient;
    bool verdict = false;
    std::optional<LSubset> strict_intermediate;
    std::string reason;           // non-empty only when improper
    std::uint64_t box_size = 0;
    std::uint64_t survivors = 0;
};

MaximalityCertificate is_maximal(const LSubset& eta, const LSubset& mu,
                                 const EnumerationBudget& budget = {});

// Every subgroup map bounded by mu (including the constant-bottom map and mu
// itself), sorted canonically.  Raises budget_exceeded if the walk could not
// be completed, since a partial list would be useless for the callers below.
std::vector<LSubset> all_lsubgroups(const LSubset& mu,
                                    const EnumerationBudget& budget = {});

// The maximal members: proper subgroup maps of mu with nothing strictly
// between them and mu.  Computed by poset maximality over the full list,
// which agrees with running is_maximal on each member.
std::vector<LSubset> all_maximal(const LSubset& mu,
                                 const EnumerationBudget& budget = {});

// Routes for computing the Frattini map of mu: `enumeration` takes the meet
// of the maximal members (mu itself when there are none), `nongenerators`
// joins the removable points, and `both` computes the two, checks that the
// point join sits inside the meet (with equality when the value lattice is a
// chain and mu is constant or differs from its own trivial member), and
// returns the meet.
enum class FrattiniRoute { enumeration, nongenerators, both };

const char* frattini_route_name(FrattiniRoute via);

LSubset frattini(const LSubset& mu, const EnumerationBudget& budget = {},
                 FrattiniRoute via = FrattiniRoute::enumeration);

// True when the point with the given lattice value at the given element can
// always be dropped from a generating set: no subgroup map theta of mu other
// than mu itself reaches mu once the point is adjoined.  The point must lie
// in mu.
bool is_nongenerator(std::size_t value, std::size_t element, const LSubset& mu,
                     const EnumerationBudget& budget = {});

// A single lattice-valued point, value at element, ordered by element then
// value so that witness sets have a canonical least representative.
struct LPoint {
    std::size_t element = 0;
    std::size_t value = 0;
    friend bool operator==(const LPoint&, const LPoint&) = default;
    friend bool operator<(const LPoint& a, const LPoint& b) {
        return a.element != b.element ? a.element < b.element : a.value < b.value;
    }
};

struct GeneratingSet {
    std::vector<LPoint> points;   // greedy ascent picks, in pick order
    LSubset target;
    bool complete = false;        // greedy ascent reached the target
    std::optional<std::vector<LPoint>> minimal;  // least witness of minimum size
};

// Greedy generating set for mu: repeatedly adjoin the point carrying mu's
// value at the first element where the span so far falls short, until the
// span is mu.  When k_max > 0, additionally search all point sets of size
// 0..k_max in canonical order and record the first (hence minimum-cardinality,
// canonically least) one whose span is mu.
GeneratingSet generating_points(const LSubset& mu, std::size_t k_max = 0,
                                const EnumerationBudget& budget = {});

// How many subgroup maps sit below mu and how long a strictly ascending
// containment chain of them can get.
struct MaximalConditionReport {
    std::size_t count = 0;
    std::size_t longest_chain = 0;
};

MaximalConditionReport maximal_condition_report(const LSubset& mu,
                                                const EnumerationBudget& budget = {});

// A subgroup map of mu that contains theta, avoids the given point, and is
// maximal with those two properties: every strictly larger subgroup map of mu
// picks the point up.  theta must be a subgroup map of mu; the point must lie
// in mu but not in theta (errc::no_witness otherwise).  Ties are broken by the
// canonical value-vector order.
LSubset zorn_witness(const LSubset& theta, std::size_t value, std::size_t element,
                     const LSubset& mu, const EnumerationBudget& budget = {});

// A maximal member of mu containing eta (eta must be proper in mu), the
// canonically least one, certified maximal before it is returned.  Raises
// errc::no_witness when no maximal member contains eta, which can happen over
// lattices that are not chains.
LSubset maximal_containing(const LSubset& eta, const LSubset& mu,
                           const EnumerationBudget& budget = {});

// Whether the set product of eta with the Frattini map of mu is exactly mu.
bool frattini_product_check(const LSubset& eta, const LSubset& mu,
                            const EnumerationBudget& budget = {});

}  // namespace lgl
