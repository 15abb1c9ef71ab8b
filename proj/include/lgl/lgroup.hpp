#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "lgl/lset.hpp"

namespace lgl {

/// How an L-subgroup check runs: directly on values, via level sets, or via
/// strict level sets (the latter only meaningful over chain lattices).
enum class LCheckMode { pointwise, levels, strong_levels };

const char* lcheck_mode_name(LCheckMode m);

/// Outcome of an L-subgroup check, with a re-checkable counterexample when the
/// verdict is negative.
///
/// pointwise mode: `bad_pair` = first (x, y) in row-major element order with
/// value(x*y) not above value(x) /\ value(y); failing that, `bad_inverse` =
/// first x with value(x^-1) != value(x).
/// level modes: `bad_level` = first lattice element (in canonical order) whose
/// non-empty (strict) level set is not a subgroup, with `bad_pair` /
/// `bad_inverse` the offending members inside that level set.
struct LSubgroupWitness {
    bool verdict = true;
    LCheckMode mode = LCheckMode::pointwise;
    std::optional<std::pair<std::size_t, std::size_t>> bad_pair;
    std::optional<std::size_t> bad_inverse;
    std::optional<std::size_t> bad_level;
};

/// value(x*y) >= value(x) /\ value(y) and value(x^-1) = value(x) everywhere,
/// checked per `mode`.  All modes agree on every input where they are defined;
/// strong_levels requires a chain lattice (error not_a_chain otherwise).
LSubgroupWitness check_lsubgroup(const LSubset& mu, LCheckMode mode = LCheckMode::pointwise);
bool is_lsubgroup(const LSubset& mu);
/// Throws not_an_lsubgroup naming `role` unless mu passes check_lsubgroup.
void require_lsubgroup(const LSubset& mu, const char* role);

/// eta is an L-subgroup of the carrier group and lies below mu pointwise.
bool is_lsubgroup_of(const LSubset& eta, const LSubset& mu);
/// is_lsubgroup_of, and eta is non-constant and differs from mu.
bool is_proper(const LSubset& eta, const LSubset& mu);

/// value(x*y) = value(y*x) for all x, y.
bool is_normal_in_group(const LSubset& mu);
/// eta(y*x*y^-1) >= eta(x) /\ mu(y) for all x, y.  Requires eta to be an
/// L-subgroup of mu (error not_an_lsubgroup).
bool is_normal_in(const LSubset& eta, const LSubset& mu);

/// tip(eta) at the identity, tail(eta) everywhere else.
LSubset trivial_lsubgroup(const LSubset& eta);

/// Smallest L-subgroup of mu above eta: at x, the join of all lattice values
/// a <= tip(eta) whose level set of eta generates a subgroup containing x.
/// Requires mu to be an L-subgroup (not_an_lsubgroup) and eta <= mu
/// (not_contained).  The result always contains eta and lies below mu; it is
/// verified to be an L-subgroup and rejected with bad_input otherwise, which
/// can happen when the value lattice is not distributive.
LSubset generated(const LSubset& eta, const LSubset& mu);

/// At x, the join of all values a <= mu(x) whose point at x commutes with eta
/// under the set product (checked by the closed coset forms).  Requires eta to
/// be an L-subgroup of mu.  The joined value is re-checked to commute itself
/// and rejected with bad_input when the lattice fails to distribute.
LSubset normalizer(const LSubset& eta, const LSubset& mu);

/// At x = y*z*y^-1*z^-1 for some y, z: join of eta(y) /\ theta(z) over all
/// such pairs; at every other x: tail(eta) /\ tail(theta).
LSubset commutator_lsubset(const LSubset& eta, const LSubset& theta);
/// generated(commutator_lsubset(eta, theta), mu); requires eta, theta <= mu
/// (not_contained) and mu an L-subgroup (not_an_lsubgroup).
LSubset commutator_lsubgroup(const LSubset& eta, const LSubset& theta, const LSubset& mu);

/// Descending chain Z_0 = mu, Z_{i+1} = commutator_lsubgroup(Z_i, mu, mu),
/// recorded up to its first repeat.  class_index is the position of the
/// trivial L-subgroup of mu when the chain reaches it, and empty otherwise.
struct CentralChain {
    std::vector<LSubset> stages;
    bool stabilized = false;
    std::optional<std::size_t> class_index;
};

/// max_steps = 0 means |G| * |L|, which always suffices on finite carriers.
CentralChain central_chain(const LSubset& mu, std::size_t max_steps = 0);
/// Position at which the central chain of mu reaches the trivial L-subgroup,
/// empty if it stabilizes elsewhere.  Requires tip(mu) != tail(mu)
/// (tip_equals_tail) and mu an L-subgroup.
std::optional<std::size_t> nilpotency_class(const LSubset& mu);

/// Ascending chain eta, N(eta), N(N(eta)), ... inside mu, recorded up to its
/// first fixpoint.  Throws budget_exceeded if no fixpoint appears within
/// max_steps (0 = |G| * |L|).
std::vector<LSubset> normalizer_chain(const LSubset& eta, const LSubset& mu,
                                      std::size_t max_steps = 0);

/// At x, the join of eta(y) /\ mu(z) over all z*y*z^-1 = x.  Requires eta to
/// be an L-subgroup of mu.
LSubset conjugate_in(const LSubset& eta, const LSubset& mu);
/// generated(conjugate_in(eta, mu), mu): the smallest normal L-subgroup of mu
/// containing eta.
LSubset normal_closure(const LSubset& eta, const LSubset& mu);

/// Stages mu, then repeatedly the normal closure of the SAME eta inside the
/// previous stage; stops on reaching eta or on a repeat.
struct ClosureSeries {
    std::vector<LSubset> stages;
    bool stabilized = false;
};

ClosureSeries closure_series(const LSubset& eta, const LSubset& mu, std::size_t max_steps = 0);
/// The closure series of eta in mu descends all the way to eta.
bool is_subnormal_in(const LSubset& eta, const LSubset& mu);

} // namespace lgl
