#include "lgl/fixtures.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "lgl/error.hpp"
#include "lgl/lgroup.hpp"

namespace lgl::fixtures {
namespace {

GroupPtr share(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }
LatticePtr share(FiniteLattice l) { return std::make_shared<const FiniteLattice>(std::move(l)); }

FiniteGroup cyclic_group(const std::string& name, std::size_t n) {
    std::vector<std::string> labels(n);
    std::vector<std::uint16_t> table(n * n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) table[i * n + j] = static_cast<std::uint16_t>((i + j) % n);
    return FiniteGroup::from_table(name, std::move(labels), std::move(table));
}

FiniteGroup klein_group() {
    std::vector<std::uint16_t> table(16);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) table[i * 4 + j] = static_cast<std::uint16_t>(i ^ j);
    return FiniteGroup::from_table("v4", {"e", "a", "b", "c"}, std::move(table));
}

FiniteGroup quaternion_group() {
    // Index = sign * 4 + unit, units ordered 1, i, j, k; m stands for -1.
    static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int neg[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    std::vector<std::uint16_t> table(64);
    for (std::size_t x = 0; x < 8; ++x)
        for (std::size_t y = 0; y < 8; ++y) {
            std::size_t s = (x / 4 + y / 4 + static_cast<std::size_t>(neg[x % 4][y % 4])) % 2;
            table[x * 8 + y] = static_cast<std::uint16_t>(s * 4 + static_cast<std::size_t>(unit[x % 4][y % 4]));
        }
    return FiniteGroup::from_table("q8", {"e", "i", "j", "k", "m", "mi", "mj", "mk"}, std::move(table));
}

FiniteLattice chain_lattice(const std::string& name, std::size_t n) {
    std::vector<std::string> labels(n);
    std::vector<std::pair<std::size_t, std::size_t>> le;
    for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
    for (std::size_t i = 0; i + 1 < n; ++i) le.emplace_back(i, i + 1);
    return FiniteLattice::build(name, std::move(labels), le);
}

// ---- m14 reconstruction -------------------------------------------------

// A slot is a down-set of the generating poset, encoded as prefix counts:
// (bottom prefix, arm prefixes x3, cap prefix).  Containment is componentwise.
using Slot = std::array<std::uint8_t, 5>;

struct Shape {
    std::size_t below = 0;            // bottom chain length
    std::array<std::size_t, 3> arms;  // parallel chain lengths, longest first
    std::size_t cap = 0;              // top chain length
};

std::size_t slot_size(const Slot& a) {
    return std::size_t{a[0]} + a[1] + a[2] + a[3] + a[4];
}

bool slot_leq(const Slot& a, const Slot& b) {
    for (std::size_t i = 0; i < 5; ++i)
        if (a[i] > b[i]) return false;
    return true;
}

std::vector<Slot> shape_slots(const Shape& sh) {
    std::vector<Slot> slots;
    auto u8 = [](std::size_t v) { return static_cast<std::uint8_t>(v); };
    for (std::size_t bp = 0; bp < sh.below; ++bp) slots.push_back({u8(bp), 0, 0, 0, 0});
    for (std::size_t p1 = 0; p1 <= sh.arms[0]; ++p1)
        for (std::size_t p2 = 0; p2 <= sh.arms[1]; ++p2)
            for (std::size_t p3 = 0; p3 <= sh.arms[2]; ++p3)
                slots.push_back({u8(sh.below), u8(p1), u8(p2), u8(p3), 0});
    for (std::size_t cp = 1; cp <= sh.cap; ++cp)
        slots.push_back({u8(sh.below), u8(sh.arms[0]), u8(sh.arms[1]), u8(sh.arms[2]), u8(cp)});
    std::sort(slots.begin(), slots.end(), [](const Slot& a, const Slot& b) {
        auto sa = slot_size(a), sb = slot_size(b);
        if (sa != sb) return sa < sb;
        return a < b;
    });
    return slots;
}

// Element blocks of s4 driving the two maps: 0 identity, 1 the other double
// transpositions, 2..4 the rest of each order-8 dihedral subgroup, 5 the
// 3-cycles.
const std::array<std::uint8_t, 24>& s4_blocks() {
    static const std::array<std::uint8_t, 24> table = [] {
        auto g = group("s4");
        auto span2 = [&](const char* x, const char* y) {
            return g->closure({static_cast<std::uint16_t>(g->require(x)),
                               static_cast<std::uint16_t>(g->require(y))});
        };
        auto v4 = span2("(12)(34)", "(13)(24)");
        auto d1 = span2("(24)", "(1234)");
        auto d2 = span2("(12)", "(1324)");
        auto d3 = span2("(23)", "(1342)");
        auto contains = [](const FiniteGroup::ElemSet& s, std::size_t x) {
            return std::binary_search(s.begin(), s.end(), static_cast<std::uint16_t>(x));
        };
        std::array<std::uint8_t, 24> t{};
        for (std::size_t x = 0; x < 24; ++x) {
            if (x == 0)
                t[x] = 0;
            else if (contains(v4, x))
                t[x] = 1;
            else if (contains(d1, x))
                t[x] = 2;
            else if (contains(d2, x))
                t[x] = 3;
            else if (contains(d3, x))
                t[x] = 4;
            else
                t[x] = 5;
        }
        return t;
    }();
    return table;
}

// The two maps over any lattice carrying the fourteen block-value names.
LSubset block_map(const GroupPtr& g, const LatticePtr& l, bool lower_b) {
    const auto& blocks = s4_blocks();
    std::array<std::size_t, 6> value = {l->require("u1"), l->require("d1"), l->require("a1"),
                                        l->require(lower_b ? "b0" : "b1"), l->require("c1"),
                                        l->require("f0")};
    LSubset mu = LSubset::constant(g, l, l->bottom());
    for (std::size_t x = 0; x < g->order(); ++x) mu.set_value(x, value[blocks[x]]);
    return mu;
}

const std::array<const char*, 14> m14_names = {"l0", "f0", "a0", "b0", "c0", "d0", "u0",
                                               "l1", "f1", "a1", "b1", "c1", "d1", "u1"};

std::vector<M14Candidate> run_m14_search() {
    std::vector<M14Candidate> found;
    auto g = group("s4");
    for (std::size_t s = 0; s <= 12; ++s)
        for (std::size_t t = 0; t <= 12; ++t)
            for (std::size_t la = 1; la <= 12; ++la)
                for (std::size_t lb = 1; lb <= la; ++lb)
                    for (std::size_t lc = 1; lc <= lb; ++lc) {
                        if (s + (la + 1) * (lb + 1) * (lc + 1) + t != 14) continue;
                        Shape sh{s, {la, lb, lc}, t};
                        auto slots = shape_slots(sh);
                        const std::size_t n = slots.size();
                        std::vector<std::vector<bool>> le(n, std::vector<bool>(n));
                        for (std::size_t i = 0; i < n; ++i)
                            for (std::size_t j = 0; j < n; ++j) le[i][j] = slot_leq(slots[i], slots[j]);
                        auto meet_of = [&](std::size_t x, std::size_t y) {
                            Slot m;
                            for (std::size_t i = 0; i < 5; ++i) m[i] = std::min(slots[x][i], slots[y][i]);
                            return static_cast<std::size_t>(
                                std::lower_bound(slots.begin(), slots.end(), m,
                                                 [](const Slot& a, const Slot& b) {
                                                     auto sa = slot_size(a), sb = slot_size(b);
                                                     if (sa != sb) return sa < sb;
                                                     return a < b;
                                                 }) -
                                slots.begin());
                        };
                        const std::size_t bot = 0, top = n - 1;
                        // Place the constrained names; remaining names fill the
                        // leftover slots in canonical order.
                        for (std::size_t f0 = 0; f0 < n; ++f0) {
                            if (f0 == bot || f0 == top) continue;
                            for (std::size_t b1 = 0; b1 < n; ++b1) {
                                if (b1 == bot || b1 == top || b1 == f0) continue;
                                if (!le[f0][b1]) continue;
                                for (std::size_t b0 = 0; b0 < n; ++b0) {
                                    if (b0 == bot || b0 == top || b0 == f0 || b0 == b1) continue;
                                    if (!le[b0][b1] || !le[f0][b0]) continue;
                                    // everything strictly under b1 sits under b0
                                    bool hinge = true;
                                    for (std::size_t z = 0; z < n && hinge; ++z)
                                        if (z != b1 && le[z][b1] && !le[z][b0]) hinge = false;
                                    if (!hinge) continue;
                                    for (std::size_t a1 = 0; a1 < n; ++a1) {
                                        if (a1 == bot || a1 == top || a1 == f0 || a1 == b0 || a1 == b1) continue;
                                        if (le[a1][b1] || le[b1][a1]) continue;
                                        if (meet_of(a1, b1) != f0) continue;
                                        for (std::size_t c1 = 0; c1 < n; ++c1) {
                                            if (c1 == bot || c1 == top || c1 == f0 || c1 == b0 ||
                                                c1 == b1 || c1 == a1)
                                                continue;
                                            if (le[c1][a1] || le[a1][c1]) continue;
                                            if (le[c1][b1] || le[b1][c1]) continue;
                                            if (meet_of(c1, a1) != f0 || meet_of(c1, b1) != f0) continue;
                                            for (std::size_t d1 = 0; d1 < n; ++d1) {
                                                if (d1 == bot || d1 == top || d1 == f0 || d1 == b0 ||
                                                    d1 == b1 || d1 == a1 || d1 == c1)
                                                    continue;
                                                if (!le[a1][d1] || !le[b1][d1] || !le[c1][d1]) continue;
                                                std::array<std::size_t, 14> slot_of{};
                                                std::array<bool, 14> taken{};
                                                auto put = [&](const char* nm, std::size_t sl) {
                                                    auto it = std::find(m14_names.begin(), m14_names.end(),
                                                                        std::string_view(nm));
                                                    slot_of[static_cast<std::size_t>(it - m14_names.begin())] = sl;
                                                    taken[sl] = true;
                                                };
                                                put("l0", bot);
                                                put("u1", top);
                                                put("f0", f0);
                                                put("b0", b0);
                                                put("b1", b1);
                                                put("a1", a1);
                                                put("c1", c1);
                                                put("d1", d1);
                                                std::size_t next = 0;
                                                for (const char* nm : {"a0", "c0", "d0", "u0", "l1", "f1"}) {
                                                    while (taken[next]) ++next;
                                                    put(nm, next);
                                                }
                                                std::vector<std::string> labels(14);
                                                for (std::size_t i = 0; i < 14; ++i) labels[slot_of[i]] = m14_names[i];
                                                std::vector<std::pair<std::size_t, std::size_t>> pairs;
                                                for (std::size_t i = 0; i < n; ++i)
                                                    for (std::size_t j = 0; j < n; ++j)
                                                        if (i != j && le[i][j]) pairs.emplace_back(i, j);
                                                auto lat = share(FiniteLattice::build("m14", labels, pairs));
                                                if (!lat->distributive()) continue;
                                                LSubset mu = block_map(g, lat, false);
                                                LSubset eta = block_map(g, lat, true);
                                                if (!is_lsubgroup(mu) || !is_lsubgroup_of(eta, mu)) continue;
                                                found.push_back(M14Candidate{*lat, s, {la, lb, lc}, t});
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
    return found;
}

} // namespace

const std::vector<std::string>& group_names() {
    static const std::vector<std::string> names = {"z1", "z2", "z3", "z4", "v4", "z6",
                                                   "s3", "d8", "q8", "a4", "d12", "s4"};
    return names;
}

const std::vector<std::string>& lattice_names() {
    static const std::vector<std::string> names = {"chain2", "chain3", "chain4", "l3", "m3", "m14"};
    return names;
}

GroupPtr group(const std::string& name) {
    static const std::map<std::string, GroupPtr> pool = [] {
        std::map<std::string, GroupPtr> m;
        m["z1"] = share(cyclic_group("z1", 1));
        m["z2"] = share(cyclic_group("z2", 2));
        m["z3"] = share(cyclic_group("z3", 3));
        m["z4"] = share(cyclic_group("z4", 4));
        m["z6"] = share(cyclic_group("z6", 6));
        m["v4"] = share(klein_group());
        m["q8"] = share(quaternion_group());
        m["s3"] = share(FiniteGroup::from_generators("s3", 3, {{"t", "(12)"}, {"c", "(123)"}}));
        m["d8"] = share(FiniteGroup::from_generators("d8", 4, {{"r", "(1234)"}, {"s", "(24)"}}));
        m["a4"] = share(FiniteGroup::from_generators("a4", 4, {{"a", "(123)"}, {"b", "(12)(34)"}}));
        m["d12"] = share(FiniteGroup::from_generators("d12", 6, {{"r", "(123456)"}, {"s", "(26)(35)"}}));
        m["s4"] = share(FiniteGroup::from_generators("s4", 4, {{"a", "(12)"}, {"b", "(1234)"}}));
        return m;
    }();
    auto it = pool.find(name);
    if (it == pool.end()) fail(errc::unknown_element, "unknown built-in group: " + name);
    return it->second;
}

LatticePtr lattice(const std::string& name) {
    static const std::map<std::string, LatticePtr> pool = [] {
        std::map<std::string, LatticePtr> m;
        m["chain2"] = share(chain_lattice("chain2", 2));
        m["chain3"] = share(chain_lattice("chain3", 3));
        m["chain4"] = share(chain_lattice("chain4", 4));
        m["l3"] = share(FiniteLattice::build("l3", {"0", "a", "b", "c", "1"},
                                             {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}}));
        m["m3"] = share(FiniteLattice::build("m3", {"0", "x", "y", "z", "1"},
                                             {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}));
        const auto& cands = m14_candidates();
        if (!cands.empty()) m["m14"] = share(cands.front().lattice);
        return m;
    }();
    auto it = pool.find(name);
    if (it == pool.end()) fail(errc::unknown_element, "unknown built-in lattice: " + name);
    return it->second;
}

LSubset d8_mu() {
    auto g = group("d8");
    auto l = lattice("l3");
    LSubset mu = LSubset::constant(g, l, l->bottom());
    mu.set_value(g->require("e"), l->require("1"));
    mu.set_value(g->require("r2"), l->require("b"));
    mu.set_value(g->require("s"), l->require("c"));
    mu.set_value(g->require("sr2"), l->require("a"));
    return mu;
}

LSubset s4_mu() { return block_map(group("s4"), lattice("m14"), false); }

LSubset s4_eta() { return block_map(group("s4"), lattice("m14"), true); }

const std::vector<M14Candidate>& m14_candidates() {
    static const std::vector<M14Candidate> cands = run_m14_search();
    return cands;
}

} // namespace lgl::fixtures
