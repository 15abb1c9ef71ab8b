#include "doctest.h"

#include <memory>

#include "lgl/lset.hpp"

using lgl::FiniteGroup;
using lgl::FiniteLattice;
using lgl::GroupPtr;
using lgl::LatticePtr;
using lgl::LSubset;

namespace {

GroupPtr d8() {
    static GroupPtr g = std::make_shared<const FiniteGroup>(
        FiniteGroup::from_generators("d8", 4, {{"r", "(1234)"}, {"s", "(24)"}}));
    return g;
}

LatticePtr l3() {
    static LatticePtr l = std::make_shared<const FiniteLattice>(
        FiniteLattice::build("l3", {"0", "a", "b", "c", "1"},
                             {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}}));
    return l;
}

LatticePtr chain2() {
    static LatticePtr l = std::make_shared<const FiniteLattice>(
        FiniteLattice::build("chain2", {"0", "1"}, {{0, 1}}));
    return l;
}

// e -> 1, r2 -> b, s -> c, sr2 -> a, rest -> 0
LSubset d8_mu() {
    auto g = d8();
    auto l = l3();
    LSubset mu = LSubset::constant(g, l, l->require("0"));
    mu.set_value(g->require("e"), l->require("1"));
    mu.set_value(g->require("r2"), l->require("b"));
    mu.set_value(g->require("s"), l->require("c"));
    mu.set_value(g->require("sr2"), l->require("a"));
    return mu;
}

template <typename Fn>
lgl::errc kind_of(Fn&& fn) {
    try {
        fn();
    } catch (const lgl::error& e) {
        return e.kind();
    }
    return lgl::errc::bad_input;
}

} // namespace

TEST_CASE("construction and value access") {
    auto mu = d8_mu();
    auto& l = mu.lattice();
    CHECK(mu.value(0) == l.require("1"));
    CHECK(mu.value(mu.group().require("rs")) == l.require("0"));
    CHECK(mu.tip() == l.require("1"));
    CHECK(mu.tail() == l.require("0"));
    CHECK(mu.image() == std::vector<std::size_t>{0, 1, 2, 3, 4});
    CHECK(!mu.is_constant());
    CHECK(LSubset::constant(d8(), l3(), 2).is_constant());

    CHECK(kind_of([] {
        LSubset(d8(), l3(), std::vector<std::uint8_t>(3, 0));
    }) == lgl::errc::bad_input);
    CHECK(kind_of([] {
        LSubset(d8(), l3(), std::vector<std::uint8_t>(8, 9));
    }) == lgl::errc::unknown_element);
}

TEST_CASE("levels") {
    auto mu = d8_mu();
    auto& l = mu.lattice();
    auto& g = mu.group();
    CHECK(mu.level(l.require("0")) == FiniteGroup::ElemSet{0, 1, 2, 3, 4, 5, 6, 7});
    CHECK(mu.level(l.require("a")) == FiniteGroup::ElemSet{0, 2, 3, 7});
    CHECK(mu.level(l.require("b")) == FiniteGroup::ElemSet{0, 3});
    CHECK(mu.level(l.require("c")) == FiniteGroup::ElemSet{0, 2});
    CHECK(mu.level(l.require("1")) == FiniteGroup::ElemSet{0});
    CHECK(mu.strong_level(l.require("0")) == FiniteGroup::ElemSet{0, 2, 3, 7});
    CHECK(mu.strong_level(l.require("1")).empty());
    for (std::size_t a = 0; a < l.size(); ++a) CHECK(g.is_subgroup(mu.level(a)));
}

TEST_CASE("points and containment") {
    auto g = d8();
    auto l = l3();
    auto p = LSubset::point(g, l, g->require("s"), l->require("b"));
    CHECK(p.value(g->require("s")) == l->require("b"));
    CHECK(p.value(0) == l->bottom());
    CHECK(p.tip() == l->require("b"));

    auto mu = d8_mu();
    CHECK(mu.contains_point(l->require("c"), g->require("s")));
    CHECK(mu.contains_point(l->require("a"), g->require("s")));
    CHECK(!mu.contains_point(l->require("b"), g->require("s")));
    CHECK(p.subset_of(mu) == false); // b at s, but mu(s) = c
    auto q = LSubset::point(g, l, g->require("r2"), l->require("b"));
    CHECK(q.subset_of(mu));

    auto chi = LSubset::characteristic(g, l, {0, 3});
    CHECK(chi.value(0) == l->top());
    CHECK(chi.value(1) == l->bottom());
    auto chi2 = LSubset::characteristic(g, l, {0}, l->require("b"), l->require("a"));
    CHECK(chi2.value(0) == l->require("b"));
    CHECK(chi2.value(5) == l->require("a"));
}

TEST_CASE("pointwise meet and join") {
    auto g = d8();
    auto l = l3();
    auto mu = d8_mu();
    auto p = LSubset::point(g, l, g->require("s"), l->require("b"));
    auto m = mu.meet(p);
    CHECK(m.value(g->require("s")) == l->require("a")); // c /\ b
    CHECK(m.value(0) == l->bottom());
    auto j = mu.join(p);
    CHECK(j.value(g->require("s")) == l->top()); // c \/ b
    CHECK(j.value(0) == l->top());
    CHECK(m.subset_of(mu));
    CHECK(mu.subset_of(j));
}

TEST_CASE("sup property is pairwise comparability of the image") {
    auto g = d8();
    auto mu = d8_mu();
    CHECK(!mu.has_sup_property()); // b and c are incomparable

    LSubset nu = LSubset::constant(g, l3(), l3()->require("0"));
    nu.set_value(0, l3()->require("1"));
    nu.set_value(3, l3()->require("b"));
    CHECK(nu.has_sup_property()); // image {0, b, 1} is a chain

    LSubset on_chain = LSubset::constant(g, chain2(), 0);
    on_chain.set_value(0, 1);
    CHECK(on_chain.has_sup_property()); // chain-valued always has it

    // Exhaustive oracle: over every nonempty subset of the carrier, the sup
    // of the values must be attained at a member.
    auto oracle = [](const LSubset& s) {
        const auto& L = s.lattice();
        const std::size_t n = s.group().order();
        for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
            std::size_t sup = L.bottom();
            for (std::size_t x = 0; x < n; ++x)
                if (mask & (std::size_t{1} << x)) sup = L.join(sup, s.value(x));
            bool attained = false;
            for (std::size_t x = 0; x < n && !attained; ++x)
                if (mask & (std::size_t{1} << x)) attained = s.value(x) == sup;
            if (!attained) return false;
        }
        return true;
    };
    CHECK(oracle(mu) == mu.has_sup_property());
    CHECK(oracle(nu) == nu.has_sup_property());
    CHECK(oracle(on_chain) == on_chain.has_sup_property());
}

TEST_CASE("set product") {
    auto g = d8();
    auto l = l3();
    auto mu = d8_mu();

    // the top point at the identity is neutral
    auto e_top = LSubset::point(g, l, 0, l->top());
    CHECK(set_product(e_top, mu) == mu);
    CHECK(set_product(mu, e_top) == mu);

    // associativity on sample subsets
    auto p = LSubset::point(g, l, g->require("r"), l->require("c"));
    auto q = LSubset::point(g, l, g->require("s"), l->require("b"));
    CHECK(set_product(set_product(mu, p), q) == set_product(mu, set_product(p, q)));
    CHECK(set_product(set_product(p, q), mu) == set_product(p, set_product(q, mu)));

    // product of two points is the point at the product with the meet value
    auto pq = set_product(p, q);
    CHECK(pq.value(g->mul(g->require("r"), g->require("s"))) == l->require("a"));
    for (std::size_t z = 0; z < g->order(); ++z)
        if (z != g->mul(g->require("r"), g->require("s"))) CHECK(pq.value(z) == l->bottom());
}

TEST_CASE("point products match their closed forms") {
    auto g = d8();
    auto l = l3();
    auto mu = d8_mu();
    for (std::size_t x : {std::size_t{0}, g->require("r"), g->require("s"), g->require("sr")}) {
        for (std::size_t a : {l->require("a"), l->require("c"), l->top()}) {
            auto pt = LSubset::point(g, l, x, a);
            CHECK(lgl::left_point_product(a, x, mu) == set_product(pt, mu));
            CHECK(lgl::right_point_product(mu, a, x) == set_product(mu, pt));
        }
    }
}

TEST_CASE("carrier mismatch is rejected") {
    auto mu = d8_mu();
    auto other_group = std::make_shared<const FiniteGroup>(
        FiniteGroup::from_generators("z4p", 4, {{"a", "(1234)"}}));
    auto on_other = LSubset::constant(other_group, l3(), 0);
    CHECK(kind_of([&] { (void)mu.subset_of(on_other); }) == lgl::errc::carrier_mismatch);
    auto on_chain = LSubset::constant(d8(), chain2(), 0);
    CHECK(kind_of([&] { (void)mu.meet(on_chain); }) == lgl::errc::lattice_mismatch);

    // structurally equal carriers behind different pointers are compatible
    auto d8_copy = std::make_shared<const FiniteGroup>(
        FiniteGroup::from_generators("d8", 4, {{"r", "(1234)"}, {"s", "(24)"}}));
    auto mu2 = LSubset::constant(d8_copy, l3(), l3()->require("a"));
    CHECK(mu2.subset_of(mu) == false);
    CHECK(mu.meet(mu2).value(5) == l3()->require("0"));
}

TEST_CASE("transport along homomorphisms") {
    auto g = d8();
    auto z2 = std::make_shared<const FiniteGroup>(
        FiniteGroup::from_table("z2", {"0", "1"}, {0, 1, 1, 0}));
    // quotient by the rotation subgroup: rotations -> 0, reflections -> 1
    FiniteGroup::ElemSet rots = g->closure({static_cast<std::uint16_t>(g->require("r"))});
    std::vector<std::uint16_t> qmap(g->order(), 1);
    for (std::uint16_t x : rots) qmap[x] = 0;
    REQUIRE(lgl::is_homomorphism(*g, *z2, qmap));
    auto h = lgl::make_hom(g, z2, qmap);

    auto mu = d8_mu();
    auto img = lgl::image_along(h, mu);
    auto& l = mu.lattice();
    // over 0: e, r, r2, r3 with values 1, 0, b, 0; over 1: s, rs, sr, sr2 with c, 0, 0, a
    CHECK(img.value(0) == l.require("1"));
    CHECK(img.value(1) == l.join(l.require("c"), l.require("a")));

    auto pre = lgl::preimage_along(h, img);
    CHECK(pre.value(g->require("r")) == l.require("1"));
    CHECK(pre.value(g->require("s")) == l.require("c"));
    CHECK(mu.subset_of(pre));

    auto round = lgl::image_along(h, pre);
    CHECK(round == img);

    CHECK(kind_of([&] {
        auto wrong = LSubset::constant(z2, l3(), 0);
        lgl::image_along(h, wrong);
    }) == lgl::errc::carrier_mismatch);
}
