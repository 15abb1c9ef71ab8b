#pragma once

#include <array>
#include <string>
#include <vector>

#include "lgl/lset.hpp"

namespace lgl::fixtures {

/// Names served by group(): z1, z2, z3, z4, v4, z6, s3, d8, q8, a4, d12, s4.
const std::vector<std::string>& group_names();
/// Names served by lattice(): chain2, chain3, chain4, l3, m3, m14.
const std::vector<std::string>& lattice_names();

/// Shared instance of a built-in group / lattice; unknown names are rejected
/// with unknown_element.  Instances are built once and reused, so carriers
/// compare equal by pointer across call sites.
GroupPtr group(const std::string& name);
LatticePtr lattice(const std::string& name);

/// Map on d8 over l3: top at e, b at r2, c at s, a at sr2, bottom elsewhere.
/// Its non-empty levels step through {e} < <r2> < <r2,s> < d8; it equals the
/// l-subgroup generated by the two points b@r2 and c@s.
LSubset d8_mu();

/// Map on s4 over m14: u1 at the identity, d1 on the other double
/// transpositions, a1 / b1 / c1 on the rest of the three order-8 dihedral
/// subgroups, f0 on the eight 3-cycles.  An l-subgroup whose descending
/// central chain reaches its trivial l-subgroup in two steps.
LSubset s4_mu();

/// s4_mu with the b1 block dropped to b0; a maximal l-subgroup of s4_mu,
/// normal in it.
LSubset s4_eta();

/// One verified lattice from the bounded m14 reconstruction search.
struct M14Candidate {
    FiniteLattice lattice;            ///< named l0..u1 in canonical order
    std::size_t below_fork = 0;       ///< chain length under the fork point
    std::array<std::size_t, 3> arms;  ///< parallel chain lengths, longest first
    std::size_t cap = 0;              ///< chain length above the arms
};

/// Bounded search for the 14-element value lattice of the s4 maps.  The
/// search space is every distributive bounded lattice of down-sets of a
/// poset shaped as: a bottom chain, forking into three parallel chains,
/// rejoined by a top chain (three arms because the maps force three pairwise
/// incomparable values; wider or narrower shapes cannot meet the size and
/// meet constraints).  A candidate survives when the names can be placed so
/// that every order fact the maps force holds: l0 bottom and u1 top; a1, b1,
/// c1 pairwise incomparable with all three pairwise meets equal to f0;
/// a1, b1, c1 below d1, d1 strictly below u1; and b0 the unique element
/// strictly under b1 (everything under b1 other than b1 lies under b0).
/// Candidates come back in deterministic search order; lattice("m14") serves
/// the first one.
const std::vector<M14Candidate>& m14_candidates();

} // namespace lgl::fixtures
