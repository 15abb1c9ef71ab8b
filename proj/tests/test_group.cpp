#include "doctest.h"

#include <memory>

#include "lgl/group.hpp"

using lgl::FiniteGroup;
using lgl::Perm;

namespace {

FiniteGroup make_d8() {
    return FiniteGroup::from_generators("d8", 4, {{"r", "(1234)"}, {"s", "(24)"}});
}

FiniteGroup make_z4() {
    std::vector<std::uint16_t> table;
    for (std::uint16_t x = 0; x < 4; ++x)
        for (std::uint16_t y = 0; y < 4; ++y) table.push_back((x + y) % 4);
    return FiniteGroup::from_table("z4", {"0", "1", "2", "3"}, table);
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

TEST_CASE("cycle notation round trip") {
    Perm r = lgl::parse_perm(4, "(1234)");
    CHECK(r == Perm{1, 2, 3, 0});
    CHECK(lgl::render_perm(r) == "(1234)");

    Perm s = lgl::parse_perm(4, "(24)");
    CHECK(s == Perm{0, 3, 2, 1});
    CHECK(lgl::render_perm(s) == "(24)");

    CHECK(lgl::render_perm(lgl::parse_perm(5, "e")) == "e");
    CHECK(lgl::render_perm(lgl::parse_perm(4, "(12)(34)")) == "(12)(34)");
    // non-disjoint cycles: rightmost acts first
    Perm t = lgl::parse_perm(3, "(12)(13)");
    CHECK(lgl::render_perm(t) == "(132)");
    // separators for wide degrees
    Perm w = lgl::parse_perm(11, "(1 10 11)");
    CHECK(lgl::render_perm(w) == "(1 10 11)");

    CHECK(kind_of([] { lgl::parse_perm(4, "(15)"); }) == lgl::errc::bad_permutation);
    CHECK(kind_of([] { lgl::parse_perm(4, "(12"); }) == lgl::errc::bad_permutation);
    CHECK(kind_of([] { lgl::parse_perm(4, "(11)"); }) == lgl::errc::bad_permutation);
}

TEST_CASE("breadth-first element order and word resolution") {
    auto G = make_d8();
    REQUIRE(G.order() == 8);
    CHECK(G.label(0) == "e");
    CHECK(G.require("r") == 1);
    CHECK(G.require("s") == 2);
    CHECK(G.require("r2") == 3);
    CHECK(G.require("rs") == 4);
    CHECK(G.require("sr") == 5);
    CHECK(G.require("r3") == 6);
    CHECK(G.require("sr2") == 7);
    CHECK(G.require("r2s") == 7); // r^2 s = s r^2
    CHECK(G.require("(13)(24)") == 3);
    CHECK(G.require("(12)(34)") == 4);
    CHECK(G.require("(14)(23)") == 5);
    CHECK(G.require("(13)") == 7);
    CHECK(G.require("e") == 0);
    CHECK(!G.index_of("q7").has_value());

    // rs = s r^-1 in dihedral groups
    CHECK(G.mul(G.require("r"), G.require("s")) ==
          G.mul(G.require("s"), G.inv(G.require("r"))));
}

TEST_CASE("multiplication, inverses, orders") {
    auto G = make_d8();
    CHECK(G.identity() == 0);
    CHECK(G.mul(0, 5) == 5);
    CHECK(G.inv(G.require("r")) == G.require("r3"));
    CHECK(G.inv(G.require("s")) == G.require("s"));
    CHECK(G.element_order(G.require("r")) == 4);
    CHECK(G.element_order(G.require("s")) == 2);
    CHECK(G.element_order(G.require("r2")) == 2);
    CHECK(G.element_order(0) == 1);
    CHECK(!G.is_abelian());
    CHECK(G.conj(G.require("r"), G.require("s")) == G.require("r2s"));
    CHECK(G.commutator(G.require("r"), G.require("s")) == G.require("r2"));
    for (std::size_t x = 0; x < G.order(); ++x) {
        CHECK(G.mul(x, G.inv(x)) == G.identity());
        CHECK(G.mul(G.inv(x), x) == G.identity());
    }
}

TEST_CASE("table-built groups") {
    auto Z4 = make_z4();
    CHECK(Z4.order() == 4);
    CHECK(Z4.is_abelian());
    CHECK(Z4.require("0") == 0);
    CHECK(Z4.mul(Z4.require("1"), Z4.require("3")) == 0);
    CHECK(Z4.inv(Z4.require("1")) == Z4.require("3"));
    CHECK(Z4.element_order(Z4.require("2")) == 2);
    CHECK(Z4.all_subgroups().size() == 3);

    // canonical order is the table order, so the identity must sit at index 0
    CHECK(kind_of([] {
        FiniteGroup::from_table("z2-shifted", {"x", "id"}, {1, 0, 0, 1});
    }) == lgl::errc::no_identity);

    Z4.add_alias("two", 2);
    CHECK(Z4.require("two") == 2);
    CHECK(Z4.aliases().size() == 1);
    CHECK(kind_of([&] { Z4.add_alias("two", 1); }) == lgl::errc::bad_input);
    CHECK(kind_of([&] { Z4.add_alias("3", 1); }) == lgl::errc::bad_input);
}

TEST_CASE("subgroup closure, membership, normality") {
    auto G = make_d8();
    auto R = G.closure({static_cast<std::uint16_t>(G.require("r"))});
    CHECK(R == FiniteGroup::ElemSet{0, 1, 3, 6});
    CHECK(G.is_subgroup(R));
    CHECK(G.is_normal(R)); // index 2

    auto S = G.closure({static_cast<std::uint16_t>(G.require("s"))});
    CHECK(S == FiniteGroup::ElemSet{0, 2});
    CHECK(G.is_subgroup(S));
    CHECK(!G.is_normal(S));

    CHECK(G.is_normal({0, 3})); // the center
    CHECK(!G.is_subgroup({0, 1}));
    CHECK(!G.is_subgroup({1, 3, 6}));
    CHECK(G.closure({}) == FiniteGroup::ElemSet{0});
}

TEST_CASE("subgroup enumeration counts") {
    CHECK(make_d8().all_subgroups().size() == 10);
    CHECK(make_z4().all_subgroups().size() == 3);

    auto S4 = FiniteGroup::from_generators("s4", 4, {{"a", "(12)"}, {"b", "(1234)"}});
    REQUIRE(S4.order() == 24);
    auto subs = S4.all_subgroups();
    CHECK(subs.size() == 30);
    CHECK(subs.front() == FiniteGroup::ElemSet{0});
    CHECK(subs.back().size() == 24);
    for (const auto& H : subs) CHECK(S4.is_subgroup(H));

    auto D41 = S4.closure({static_cast<std::uint16_t>(S4.require("(24)")),
                           static_cast<std::uint16_t>(S4.require("(1234)"))});
    CHECK(D41.size() == 8);
    bool listed = false;
    for (const auto& H : subs) listed = listed || H == D41;
    CHECK(listed);

    auto A4 = FiniteGroup::from_generators("a4", 4, {{"a", "(123)"}, {"b", "(12)(34)"}});
    REQUIRE(A4.order() == 12);
    CHECK(A4.all_subgroups().size() == 10);

    auto S3 = FiniteGroup::from_generators("s3", 3, {{"a", "(123)"}, {"b", "(12)"}});
    CHECK(S3.all_subgroups().size() == 6);

    auto Z6 = FiniteGroup::from_generators("z6", 6, {{"a", "(123456)"}});
    CHECK(Z6.all_subgroups().size() == 4);

    auto D12 = FiniteGroup::from_generators("d12", 6, {{"r", "(123456)"}, {"s", "(26)(35)"}});
    REQUIRE(D12.order() == 12);
    CHECK(D12.all_subgroups().size() == 16);

    auto Z201 = FiniteGroup::from_generators("z201", 201, {{"a", "(1 2 3)"}});
    CHECK(kind_of([&] {
        auto big = FiniteGroup::from_generators(
            "z210", 210,
            {{"a", "(1 2 3 4 5 6 7)"}, {"b", "(8 9 10 11 12 13 14 15 16 17 18 19 20 "
                                              "21 22 23 24 25 26 27 28 29 30 31 32 33 34 37 36 35)"}});
        big.all_subgroups();
    }) == lgl::errc::order_cap);
    CHECK(Z201.all_subgroups().size() == 2); // order 3 cyclic on a wide degree
}

TEST_CASE("rejected tables and generators") {
    using lgl::errc;
    CHECK(kind_of([] {
        FiniteGroup::from_table("bad", {"a", "b"}, {0, 1, 1});
    }) == errc::not_closed_table);
    CHECK(kind_of([] {
        FiniteGroup::from_table("bad", {"a", "b"}, {0, 7, 1, 0});
    }) == errc::not_closed_table);
    CHECK(kind_of([] {
        FiniteGroup::from_table("bad", {"a", "b"}, {1, 1, 1, 1});
    }) == errc::no_identity);
    CHECK(kind_of([] {
        FiniteGroup::from_table("bad", {"a", "b"}, {0, 1, 1, 1});
    }) == errc::no_inverse);
    // A loop (latin square with identity) that fails associativity.
    CHECK(kind_of([] {
        FiniteGroup::from_table("loop5", {"0", "1", "2", "3", "4"},
                                {0, 1, 2, 3, 4,
                                 1, 0, 3, 4, 2,
                                 2, 3, 4, 0, 1,
                                 3, 4, 1, 2, 0,
                                 4, 2, 0, 1, 3});
    }) == errc::not_associative);
    CHECK(kind_of([] {
        FiniteGroup::from_table("dup", {"x", "x"}, {0, 1, 1, 0});
    }) == errc::bad_input);
    // Two transpositions on 8 points generate a group past the order cap.
    CHECK(kind_of([] {
        FiniteGroup::from_generators("big", 8, {{"a", "(12345678)"}, {"b", "(12)"}});
    }) == errc::order_cap);
    CHECK(kind_of([] {
        FiniteGroup::from_generators("dup", 3, {{"a", "(12)"}, {"a", "(13)"}});
    }) == errc::bad_input);
    CHECK(kind_of([] {
        FiniteGroup::from_generators("bad", 3, {{"a", "(14)"}});
    }) == errc::bad_permutation);
}

TEST_CASE("trivial group") {
    auto Z1 = FiniteGroup::from_generators("z1", 1, {});
    CHECK(Z1.order() == 1);
    CHECK(Z1.label(0) == "e");
    CHECK(Z1.mul(0, 0) == 0);
    CHECK(Z1.is_abelian());
    CHECK(Z1.all_subgroups().size() == 1);
}

TEST_CASE("group equality") {
    auto A = make_d8();
    auto B = make_d8();
    CHECK(A == B);
    auto C = FiniteGroup::from_generators("d8-other-gens", 4, {{"s", "(24)"}, {"r", "(1234)"}});
    CHECK(!(A == C)); // different canonical order
}

TEST_CASE("homomorphisms") {
    auto S3 = std::make_shared<const FiniteGroup>(
        FiniteGroup::from_generators("s3", 3, {{"a", "(123)"}, {"b", "(12)"}}));
    auto Z2 = std::make_shared<const FiniteGroup>(
        FiniteGroup::from_table("z2", {"0", "1"}, {0, 1, 1, 0}));

    // the sign map
    std::vector<std::uint16_t> sign(S3->order());
    for (std::size_t i = 0; i < S3->order(); ++i) {
        const Perm& p = S3->perm(i);
        std::size_t inversions = 0;
        for (std::size_t a = 0; a < p.size(); ++a)
            for (std::size_t b = a + 1; b < p.size(); ++b)
                if (p[a] > p[b]) ++inversions;
        sign[i] = inversions % 2;
    }
    CHECK(lgl::is_homomorphism(*S3, *Z2, sign));
    auto h = lgl::make_hom(S3, Z2, sign);
    auto ker = lgl::hom_kernel(h);
    CHECK(ker.size() == 3);
    CHECK(S3->is_normal(ker));
    CHECK(lgl::hom_image(h) == FiniteGroup::ElemSet{0, 1});

    std::vector<std::uint16_t> bad(S3->order(), 1);
    CHECK(!lgl::is_homomorphism(*S3, *Z2, bad));
    CHECK(kind_of([&] { lgl::make_hom(S3, Z2, bad); }) == lgl::errc::bad_input);

    std::vector<std::uint16_t> trivial(S3->order(), 0);
    CHECK(lgl::is_homomorphism(*S3, *Z2, trivial));
}
