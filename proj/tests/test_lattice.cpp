#include "doctest.h"

#include "lgl/lattice.hpp"

using lgl::FiniteLattice;

namespace {

FiniteLattice make_l3() {
    // 0 < a < {b, c} < 1 with b, c incomparable.
    return FiniteLattice::build("l3", {"0", "a", "b", "c", "1"},
                                {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}});
}

FiniteLattice make_oversized() {
    std::vector<std::string> labels;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < FiniteLattice::max_size + 1; ++i) {
        labels.push_back(std::to_string(i));
        if (i) pairs.emplace_back(i - 1, i);
    }
    return FiniteLattice::build("big", std::move(labels), pairs);
}

FiniteLattice make_chain(std::size_t n) {
    std::vector<std::string> labels;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back("c" + std::to_string(i));
        if (i) pairs.emplace_back(i - 1, i);
    }
    return FiniteLattice::build("chain", std::move(labels), pairs);
}

} // namespace

TEST_CASE("order closure, bounds, meet and join tables") {
    auto L = make_l3();
    REQUIRE(L.size() == 5);
    CHECK(L.bottom() == 0);
    CHECK(L.top() == 4);
    CHECK(L.leq(0, 4));          // transitive closure: 0 <= a <= b <= 1
    CHECK(L.lt(0, 4));
    CHECK(!L.lt(4, 4));
    CHECK(!L.leq(2, 3));
    CHECK(!L.comparable(2, 3));
    CHECK(L.comparable(1, 4));
    CHECK(L.join(2, 3) == 4);
    CHECK(L.meet(2, 3) == 1);
    CHECK(L.join(0, 2) == 2);
    CHECK(L.meet(2, 4) == 2);
    CHECK(L.label(1) == "a");
    CHECK(L.require("c") == 3);
    CHECK(!L.index_of("zz").has_value());
}

TEST_CASE("sup and inf over element spans") {
    auto L = make_l3();
    std::vector<std::size_t> both{2, 3};
    std::vector<std::size_t> none;
    std::vector<std::size_t> one{1};
    CHECK(L.sup_of(both) == 4);
    CHECK(L.inf_of(both) == 1);
    CHECK(L.sup_of(none) == L.bottom());
    CHECK(L.inf_of(none) == L.top());
    CHECK(L.sup_of(one) == 1);
    CHECK(L.inf_of(one) == 1);
}

TEST_CASE("chain recognition") {
    auto C = make_chain(4);
    CHECK(C.is_chain());
    CHECK(C.upper_well_ordered());
    CHECK(C.distributive());
    CHECK(C.bottom() == 0);
    CHECK(C.top() == 3);
    CHECK(C.meet(1, 3) == 1);
    CHECK(C.join(1, 3) == 3);

    auto L = make_l3();
    CHECK(!L.is_chain());
    CHECK(!L.upper_well_ordered());
}

TEST_CASE("distributivity and its witness") {
    auto L = make_l3();
    CHECK(L.distributive());
    CHECK(!L.distributivity_witness().has_value());

    // Diamond: three incomparable atoms under a common top.
    auto M3 = FiniteLattice::build("m3", {"0", "x", "y", "z", "1"},
                                   {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
    CHECK(!M3.distributive());
    REQUIRE(M3.distributivity_witness().has_value());
    auto [x, y, z] = *M3.distributivity_witness();
    CHECK(M3.meet(x, M3.join(y, z)) != M3.join(M3.meet(x, y), M3.meet(x, z)));

    // Pentagon.
    auto N5 = FiniteLattice::build("n5", {"0", "p", "q", "r", "1"},
                                   {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
    CHECK(!N5.distributive());
}

TEST_CASE("intervals, down sets, covers") {
    auto L = make_l3();
    CHECK(L.interval(1, 4) == std::vector<std::size_t>{1, 2, 3, 4});
    CHECK(L.interval(2, 2) == std::vector<std::size_t>{2});
    CHECK(L.down_set(2) == std::vector<std::size_t>{0, 1, 2});
    CHECK(L.down_set(0) == std::vector<std::size_t>{0});
    auto cov = L.covers();
    std::vector<std::pair<std::size_t, std::size_t>> want{
        {0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}};
    CHECK(cov == want);

    CHECK_THROWS_AS(L.interval(2, 3), lgl::error);
    try {
        L.interval(2, 3);
    } catch (const lgl::error& e) {
        CHECK(e.kind() == lgl::errc::not_comparable);
    }
}

TEST_CASE("equality ignores name, compares order") {
    auto A = make_l3();
    auto B = FiniteLattice::build("other-name", {"0", "a", "b", "c", "1"},
                                  {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}, {0, 4}});
    CHECK(A == B); // redundant pair changes nothing after closure
    auto C = make_chain(5);
    CHECK(!(A == C));
}

TEST_CASE("rebuilding from covers reproduces the lattice") {
    auto L = make_l3();
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < L.size(); ++i) labels.push_back(L.label(i));
    auto R = FiniteLattice::build(L.name(), labels, L.covers());
    CHECK(L == R);
}

TEST_CASE("rejected inputs") {
    using lgl::errc;
    auto kind_of = [](auto&& fn) {
        try {
            fn();
        } catch (const lgl::error& e) {
            return e.kind();
        }
        return errc::bad_input;
    };

    // Two maximal elements: no join for the top antichain.
    CHECK(kind_of([] {
        FiniteLattice::build("v", {"0", "x", "y"}, {{0, 1}, {0, 2}});
    }) == errc::no_join);

    // Two minimal elements under a common top: no meet.
    CHECK(kind_of([] {
        FiniteLattice::build("^", {"x", "y", "1"}, {{0, 2}, {1, 2}});
    }) == errc::no_meet);

    // Cycle between distinct elements.
    CHECK(kind_of([] {
        FiniteLattice::build("cyc", {"x", "y"}, {{0, 1}, {1, 0}});
    }) == errc::order_cycle);

    // Out-of-range order pair.
    CHECK(kind_of([] {
        FiniteLattice::build("oob", {"x"}, {{0, 7}});
    }) == errc::unknown_element);

    // Duplicate label.
    CHECK(kind_of([] {
        FiniteLattice::build("dup", {"x", "x"}, {{0, 1}});
    }) == errc::bad_input);

    // Empty element list.
    CHECK_THROWS_AS(FiniteLattice::build("none", {}, {}), lgl::error);

    // Size cap.
    CHECK(kind_of([] { make_oversized(); }) == errc::size_cap);

    // require() on a missing label.
    auto L = make_l3();
    CHECK(kind_of([&] { (void)L.require("nope"); }) == errc::unknown_element);
}
