#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "lgl/error.hpp"
#include "lgl/fixtures.hpp"
#include "lgl/lgroup.hpp"

using namespace lgl;
namespace fx = lgl::fixtures;

TEST_CASE("built-in group pool") {
    std::map<std::string, std::size_t> expected = {{"z1", 1}, {"z2", 2},  {"z3", 3},  {"z4", 4},
                                                   {"v4", 4}, {"z6", 6},  {"s3", 6},  {"d8", 8},
                                                   {"q8", 8}, {"a4", 12}, {"d12", 12}, {"s4", 24}};
    CHECK(fx::group_names().size() == expected.size());
    for (const auto& name : fx::group_names()) {
        auto g = fx::group(name);
        REQUIRE(g != nullptr);
        CHECK(g->name() == name);
        CHECK(g->order() == expected.at(name));
    }
    CHECK(fx::group("d8").get() == fx::group("d8").get());
    CHECK_THROWS_AS((void)fx::group("nope"), error);

    auto q8 = fx::group("q8");
    CHECK_FALSE(q8->is_abelian());
    CHECK(q8->element_order(q8->require("i")) == 4);
    CHECK(q8->element_order(q8->require("m")) == 2);
    CHECK(q8->mul(q8->require("i"), q8->require("j")) == q8->require("k"));
    CHECK(q8->mul(q8->require("j"), q8->require("i")) == q8->require("mk"));
    // every subgroup of q8 is normal
    for (const auto& h : q8->all_subgroups()) CHECK(q8->is_normal(h));

    auto a4 = fx::group("a4");
    std::set<std::size_t> sizes;
    for (const auto& h : a4->all_subgroups()) sizes.insert(h.size());
    CHECK(sizes == std::set<std::size_t>{1, 2, 3, 4, 12});

    auto d12 = fx::group("d12");
    CHECK_FALSE(d12->is_abelian());
    CHECK(d12->element_order(d12->require("r")) == 6);
    CHECK(fx::group("z6")->is_abelian());
}

TEST_CASE("built-in lattice pool") {
    for (const auto& name : fx::lattice_names()) {
        auto l = fx::lattice(name);
        REQUIRE(l != nullptr);
        CHECK(l->name() == name);
    }
    CHECK(fx::lattice("chain2")->size() == 2);
    CHECK(fx::lattice("chain3")->size() == 3);
    CHECK(fx::lattice("chain4")->size() == 4);
    CHECK(fx::lattice("chain4")->is_chain());
    auto l3 = fx::lattice("l3");
    CHECK(l3->size() == 5);
    CHECK(l3->distributive());
    CHECK_FALSE(l3->is_chain());
    auto m3 = fx::lattice("m3");
    CHECK(m3->size() == 5);
    CHECK_FALSE(m3->distributive());
    CHECK_THROWS_AS((void)fx::lattice("nope"), error);
}

TEST_CASE("d8 map over l3") {
    LSubset mu = fx::d8_mu();
    auto g = mu.group_ptr();
    auto l = mu.lattice_ptr();
    CHECK(is_lsubgroup(mu));
    CHECK(mu.value(g->require("e")) == l->require("1"));
    CHECK(mu.value(g->require("r2")) == l->require("b"));
    CHECK(mu.value(g->require("s")) == l->require("c"));
    CHECK(mu.value(g->require("sr2")) == l->require("a"));
    CHECK(mu.value(g->require("r")) == l->require("0"));
    CHECK(mu.value(g->require("rs")) == l->require("0"));
    CHECK_FALSE(mu.has_sup_property());

    // mu is generated inside itself by the two points b@r2 and c@s
    LSubset eta = LSubset::point(g, l, g->require("r2"), l->require("b"))
                      .join(LSubset::point(g, l, g->require("s"), l->require("c")));
    CHECK(generated(eta, mu) == mu);
}

TEST_CASE("m14 reconstruction search") {
    const auto& cands = fx::m14_candidates();
    REQUIRE(cands.size() == 2);
    for (const auto& c : cands) {
        CHECK(c.below_fork == 1);
        CHECK(c.arms == std::array<std::size_t, 3>{2, 1, 1});
        CHECK(c.cap == 1);
        CHECK(c.lattice.size() == 14);
        CHECK(c.lattice.distributive());
        CHECK_FALSE(c.lattice.is_chain());
    }

    const FiniteLattice& m14 = cands.front().lattice;
    CHECK(*fx::lattice("m14") == m14);

    auto leq = [&](const char* x, const char* y) { return m14.leq(m14.require(x), m14.require(y)); };
    std::map<std::string, std::set<std::string>> up = {
        {"l0", {"l0", "f0", "a0", "b0", "c0", "d0", "u0", "l1", "f1", "a1", "b1", "c1", "d1", "u1"}},
        {"f0", {"f0", "a0", "b0", "c0", "d0", "u0", "l1", "f1", "a1", "b1", "c1", "d1", "u1"}},
        {"a1", {"a1", "a0", "c0", "u0", "l1", "d1", "u1"}},
        {"c1", {"c1", "a0", "d0", "u0", "f1", "d1", "u1"}},
        {"b0", {"b0", "c0", "d0", "u0", "b1", "l1", "f1", "d1", "u1"}},
        {"a0", {"a0", "u0", "d1", "u1"}},
        {"c0", {"c0", "u0", "l1", "d1", "u1"}},
        {"d0", {"d0", "u0", "f1", "d1", "u1"}},
        {"b1", {"b1", "l1", "f1", "d1", "u1"}},
        {"u0", {"u0", "d1", "u1"}},
        {"l1", {"l1", "d1", "u1"}},
        {"f1", {"f1", "d1", "u1"}},
        {"d1", {"d1", "u1"}},
        {"u1", {"u1"}},
    };
    for (const auto& [x, expect] : up) {
        std::set<std::string> got;
        for (std::size_t j = 0; j < m14.size(); ++j)
            if (m14.leq(m14.require(x), j)) got.insert(m14.label(j));
        CHECK_MESSAGE(got == expect, "up-set of ", x);
    }
    CHECK(m14.label(m14.bottom()) == "l0");
    CHECK(m14.label(m14.top()) == "u1");

    auto meet_is = [&](const char* x, const char* y, const char* want) {
        return m14.label(m14.meet(m14.require(x), m14.require(y))) == want;
    };
    auto join_is = [&](const char* x, const char* y, const char* want) {
        return m14.label(m14.join(m14.require(x), m14.require(y))) == want;
    };
    CHECK(meet_is("a1", "b1", "f0"));
    CHECK(meet_is("a1", "c1", "f0"));
    CHECK(meet_is("b1", "c1", "f0"));
    CHECK(meet_is("a1", "d1", "a1"));
    CHECK(meet_is("b1", "d1", "b1"));
    CHECK(meet_is("c1", "d1", "c1"));
    CHECK(meet_is("l1", "f1", "b1"));
    CHECK(meet_is("c0", "d0", "b0"));
    CHECK(join_is("a1", "c1", "a0"));
    CHECK(join_is("a1", "b1", "l1"));
    CHECK(join_is("b1", "c1", "f1"));
    CHECK(join_is("a0", "b1", "d1"));
    CHECK(leq("b0", "b1"));
    // everything strictly under b1 sits under b0
    for (std::size_t j = 0; j < m14.size(); ++j)
        if (j != m14.require("b1") && m14.leq(j, m14.require("b1"))) CHECK(m14.leq(j, m14.require("b0")));

    // the second candidate swaps the roles of a1 and c1
    const FiniteLattice& other = cands.back().lattice;
    CHECK_FALSE(other == m14);
    CHECK(other.leq(other.require("a1"), other.require("f1")));
    CHECK_FALSE(other.leq(other.require("a1"), other.require("l1")));
    CHECK(other.leq(other.require("c1"), other.require("l1")));
}

TEST_CASE("s4 maps over m14") {
    LSubset mu = fx::s4_mu();
    LSubset eta = fx::s4_eta();
    auto g = mu.group_ptr();
    auto l = mu.lattice_ptr();
    REQUIRE(is_lsubgroup(mu));
    REQUIRE(is_lsubgroup_of(eta, mu));
    CHECK(is_normal_in(eta, mu));

    auto val = [&](const LSubset& m, const char* x) { return l->label(m.value(g->require(x))); };
    CHECK(val(mu, "e") == "u1");
    CHECK(val(mu, "(12)(34)") == "d1");
    CHECK(val(mu, "(13)(24)") == "d1");
    CHECK(val(mu, "(1234)") == "a1");
    CHECK(val(mu, "(13)") == "a1");
    CHECK(val(mu, "(12)") == "b1");
    CHECK(val(mu, "(1324)") == "b1");
    CHECK(val(mu, "(23)") == "c1");
    CHECK(val(mu, "(1342)") == "c1");
    CHECK(val(mu, "(123)") == "f0");
    CHECK(val(eta, "(12)") == "b0");
    CHECK(val(eta, "(1234)") == "a1");
    CHECK(eta.value(g->require("(12)")) != mu.value(g->require("(12)")));

    // first descending commutator stage: block value at the squared 4-cycle
    LSubset z1 = commutator_lsubgroup(mu, mu, mu);
    CHECK(val(z1, "e") == "u1");
    CHECK(val(z1, "(13)(24)") == "a1");
    CHECK(val(z1, "(12)(34)") == "b1");
    CHECK(val(z1, "(14)(23)") == "c1");
    CHECK(val(z1, "(123)") == "f0");
    CHECK(val(z1, "(12)") == "f0");
    CHECK(val(z1, "(1234)") == "f0");
    CHECK(commutator_lsubset(mu, mu) == z1);  // already closed

    // second stage collapses to the trivial member: chain length two
    LSubset z2 = commutator_lsubgroup(z1, mu, mu);
    CHECK(z2 == trivial_lsubgroup(mu));
    auto chain = central_chain(mu);
    REQUIRE(chain.stabilized);
    CHECK(chain.class_index == 2);
    CHECK(nilpotency_class(mu) == 2);
}
