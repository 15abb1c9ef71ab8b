#include "lgl/maxfrat.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <thread>

#include "lgl/error.hpp"

namespace lgl {

namespace {

bool value_vector_less(const LSubset& a, const LSubset& b) {
    return a.values() < b.values();
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
        return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

// One worker's share of a box walk: a slice of the root element's interval
// plus its own slice of the assignment budget, so a run with a fixed worker
// count is reproducible down to which partial results survive a budget stop.
struct BoxWalk {
    const FiniteGroup* g = nullptr;
    const FiniteLattice* l = nullptr;
    const std::vector<std::size_t>* order = nullptr;            // depth -> element
    const std::vector<std::vector<std::size_t>>* choices = nullptr;  // element -> interval
    const std::vector<std::vector<std::array<std::size_t, 3>>>* triples = nullptr;
    std::vector<std::size_t> root_values;
    std::uint64_t max_visits = 0;
    std::uint64_t max_items = 0;

    std::vector<std::uint8_t> partial;
    std::vector<std::vector<std::uint8_t>> items;
    std::uint64_t visited = 0;
    bool complete = true;

    bool admissible(std::size_t depth) const {
        if (!triples) return true;
        for (const auto& t : (*triples)[depth]) {
            std::size_t prod = l->meet(partial[t[0]], partial[t[1]]);
            if (!l->leq(prod, partial[t[2]])) return false;
        }
        return true;
    }

    // Returns false when the walk must abort (budget or result cap hit).
    bool descend(std::size_t depth) {
        if (depth == order->size()) {
            if (items.size() >= max_items) {
                complete = false;
                return false;
            }
            items.push_back(partial);
            return true;
        }
        std::size_t x = (*order)[depth];
        const std::vector<std::size_t>& vals =
            depth == 0 ? root_values : (*choices)[x];
        for (std::size_t v : vals) {
            if (++visited > max_visits) {
                complete = false;
                return false;
            }
            partial[x] = static_cast<std::uint8_t>(v);
            if (admissible(depth) && !descend(depth + 1)) return false;
        }
        return true;
    }

    void run() {
        partial.assign(g->order(), 0);
        descend(0);
    }
};

std::vector<LSubset> complete_members(const LSubset& mu, const EnumerationBudget& budget,
                                      const char* purpose) {
    require_lsubgroup(mu, "the ambient bound");
    LSubset bottom = LSubset::constant(mu.group_ptr(), mu.lattice_ptr(),
                                       mu.lattice().bottom());
    BoxEnumeration box = enumerate_box(bottom, mu, BoxFilter::lsubgroup, budget);
    if (!box.complete)
        fail(errc::budget_exceeded,
             std::string("the enumeration budget ran out before ") + purpose +
                 " could be certified complete");
    return std::move(box.items);
}

bool nongenerator_given(const std::vector<LSubset>& members, std::size_t value,
                        std::size_t element, const LSubset& mu) {
    LSubset point = LSubset::point(mu.group_ptr(), mu.lattice_ptr(), element, value);
    for (const LSubset& theta : members) {
        if (theta == mu) continue;
        if (generated(theta.join(point), mu) == mu) return false;
    }
    return true;
}

LSubset meet_of_maximals(const LSubset& mu, const EnumerationBudget& budget) {
    LSubset acc = mu;
    for (const LSubset& m : all_maximal(mu, budget)) acc = acc.meet(m);
    return acc;
}

LSubset nongenerator_join(const LSubset& mu, const EnumerationBudget& budget) {
    std::vector<LSubset> members =
        complete_members(mu, budget, "the removable-point scan");
    const FiniteLattice& l = mu.lattice();
    LSubset out = LSubset::constant(mu.group_ptr(), mu.lattice_ptr(), l.bottom());
    for (std::size_t x = 0; x < mu.group().order(); ++x) {
        std::size_t acc = l.bottom();
        for (std::size_t a : l.interval(l.bottom(), mu.value(x)))
            if (nongenerator_given(members, a, x, mu)) acc = l.join(acc, a);
        out.set_value(x, acc);
    }
    return out;
}

// Longest chain from bottom up to each lattice element; strictly monotone
// along <, which makes it a safe topological weight for containment sorting.
std::vector<std::size_t> lattice_heights(const FiniteLattice& l) {
    std::vector<std::size_t> idx(l.size());
    for (std::size_t i = 0; i < l.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return l.down_set(a).size() < l.down_set(b).size();
    });
    std::vector<std::size_t> h(l.size(), 0);
    for (std::size_t a : idx)
        for (std::size_t b = 0; b < l.size(); ++b)
            if (l.lt(b, a)) h[a] = std::max(h[a], h[b] + 1);
    return h;
}

}  // namespace

const char* box_filter_name(BoxFilter f) {
    switch (f) {
        case BoxFilter::none: return "none";
        case BoxFilter::lsubgroup: return "lsubgroup";
        case BoxFilter::lsubgroup_of_hi: return "lsubgroup_of_hi";
    }
    return "?";
}

const char* frattini_route_name(FrattiniRoute via) {
    switch (via) {
        case FrattiniRoute::enumeration: return "enumeration";
        case FrattiniRoute::nongenerators: return "nongenerators";
        case FrattiniRoute::both: return "both";
    }
    return "?";
}

BoxEnumeration enumerate_box(const LSubset& lo, const LSubset& hi, BoxFilter filter,
                             const EnumerationBudget& budget) {
    lo.require_compatible(hi);
    if (!lo.subset_of(hi))
        fail(errc::not_contained, "the lower bound must sit inside the upper bound");
    const FiniteGroup& g = lo.group();
    const FiniteLattice& l = lo.lattice();
    const std::size_t n = g.order();

    std::vector<std::vector<std::size_t>> choices(n);
    for (std::size_t x = 0; x < n; ++x) choices[x] = l.interval(lo.value(x), hi.value(x));

    // Identity first, then small intervals first so pruning bites early.
    std::vector<std::size_t> order(n);
    for (std::size_t x = 0; x < n; ++x) order[x] = x;
    std::stable_sort(order.begin() + 1, order.end(),
                     [&](std::size_t a, std::size_t b) {
                         return choices[a].size() < choices[b].size();
                     });
    std::vector<std::size_t> depth_of(n, 0);
    for (std::size_t d = 0; d < n; ++d) depth_of[order[d]] = d;

    // Each product triple x, y, xy is checked at the first depth where all
    // three values are assigned.
    std::vector<std::vector<std::array<std::size_t, 3>>> triples(n);
    if (filter != BoxFilter::none)
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                std::size_t z = g.mul(x, y);
                std::size_t d = std::max({depth_of[x], depth_of[y], depth_of[z]});
                triples[d].push_back({x, y, z});
            }

    BoxEnumeration out;
    out.box_size = 1;
    for (std::size_t x = 0; x < n; ++x)
        out.box_size = saturating_mul(out.box_size, choices[x].size());

    const std::vector<std::size_t>& root = choices[order[0]];
    unsigned workers = std::max(1u, budget.threads);
    if (workers > root.size()) workers = root.size() ? static_cast<unsigned>(root.size()) : 1u;

    std::vector<BoxWalk> walks(workers);
    for (unsigned w = 0; w < workers; ++w) {
        BoxWalk& walk = walks[w];
        walk.g = &g;
        walk.l = &l;
        walk.order = &order;
        walk.choices = &choices;
        walk.triples = filter == BoxFilter::none ? nullptr : &triples;
        for (std::size_t i = w; i < root.size(); i += workers)
            walk.root_values.push_back(root[i]);
        walk.max_visits = budget.max_candidates / workers +
                          (w < budget.max_candidates % workers ? 1 : 0);
        walk.max_items = budget.max_results;
    }
    if (workers == 1) {
        walks[0].run();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (BoxWalk& walk : walks) pool.emplace_back([&walk] { walk.run(); });
        for (std::thread& t : pool) t.join();
    }

    for (BoxWalk& walk : walks) {
        out.visited += walk.visited;
        out.complete = out.complete && walk.complete;
        for (std::vector<std::uint8_t>& v : walk.items)
            out.items.emplace_back(lo.group_ptr(), lo.lattice_ptr(), std::move(v));
    }
    std::sort(out.items.begin(), out.items.end(), value_vector_less);
    if (out.items.size() > budget.max_results) {
        out.items.resize(budget.max_results, out.items.front());
        out.complete = false;
    }
    return out;
}

MaximalityCertificate is_maximal(const LSubset& eta, const LSubset& mu,
                                 const EnumerationBudget& budget) {
    eta.require_compatible(mu);
    require_lsubgroup(mu, "the ambient bound");
    if (!is_lsubgroup_of(eta, mu))
        fail(errc::not_an_lsubgroup,
             "the subject must satisfy the subgroup laws inside the ambient map");
    MaximalityCertificate cert{eta, mu, false, std::nullopt, "", 0, 0};
    if (eta.is_constant()) {
        cert.reason = "the subject is constant, hence not proper";
        return cert;
    }
    if (eta == mu) {
        cert.reason = "the subject equals the ambient map";
        return cert;
    }
    BoxEnumeration box = enumerate_box(eta, mu, BoxFilter::lsubgroup, budget);
    if (!box.complete)
        fail(errc::budget_exceeded,
             "the enumeration budget ran out before the interval could be searched");
    cert.box_size = box.box_size;
    cert.survivors = box.items.size();
    for (const LSubset& sigma : box.items)
        if (sigma != eta && sigma != mu) {
            cert.strict_intermediate = sigma;
            break;
        }
    cert.verdict = !cert.strict_intermediate.has_value();
    return cert;
}

std::vector<LSubset> all_lsubgroups(const LSubset& mu, const EnumerationBudget& budget) {
    return complete_members(mu, budget, "the full member list");
}

std::vector<LSubset> all_maximal(const LSubset& mu, const EnumerationBudget& budget) {
    std::vector<LSubset> members = complete_members(mu, budget, "the maximal-member scan");
    std::vector<LSubset> out;
    for (const LSubset& theta : members) {
        if (!is_proper(theta, mu)) continue;
        bool blocked = false;
        for (const LSubset& sigma : members) {
            if (sigma == mu || sigma == theta) continue;
            if (theta.subset_of(sigma)) {
                blocked = true;
                break;
            }
        }
        if (!blocked) out.push_back(theta);
    }
    return out;
}

LSubset frattini(const LSubset& mu, const EnumerationBudget& budget, FrattiniRoute via) {
    switch (via) {
        case FrattiniRoute::enumeration:
            return meet_of_maximals(mu, budget);
        case FrattiniRoute::nongenerators:
            return nongenerator_join(mu, budget);
        case FrattiniRoute::both:
            break;
    }
    LSubset phi = meet_of_maximals(mu, budget);
    LSubset lambda = nongenerator_join(mu, budget);
    if (!lambda.subset_of(phi))
        fail(errc::bad_input,
             "the removable-point join escaped the meet of the maximal members");
    // Over a chain the two routes agree unless mu is a non-constant map that
    // equals its own trivial member (tip at the identity, tail elsewhere).
    // There the constant-tail map makes the tip point at the identity
    // removable-proof: adjoining it spans mu while the constant itself never
    // does, so the point join can sit strictly below the maximal meet.
    bool degenerate = !mu.is_constant() && mu == trivial_lsubgroup(mu);
    if (mu.lattice().is_chain() && !degenerate && lambda != phi)
        fail(errc::bad_input,
             "over a chain the removable-point join must equal the meet of the "
             "maximal members, and it did not");
    return phi;
}

bool is_nongenerator(std::size_t value, std::size_t element, const LSubset& mu,
                     const EnumerationBudget& budget) {
    if (element >= mu.group().order())
        fail(errc::unknown_element, "no such group element");
    if (!mu.contains_point(value, element))
        fail(errc::bad_input, "the point lies outside the map under test");
    std::vector<LSubset> members =
        complete_members(mu, budget, "the removable-point test");
    return nongenerator_given(members, value, element, mu);
}

GeneratingSet generating_points(const LSubset& mu, std::size_t k_max,
                                const EnumerationBudget& budget) {
    require_lsubgroup(mu, "the target");
    const FiniteGroup& g = mu.group();
    const FiniteLattice& l = mu.lattice();
    GeneratingSet out{{}, mu, false, std::nullopt};

    LSubset seed = LSubset::constant(mu.group_ptr(), mu.lattice_ptr(), l.bottom());
    LSubset current = generated(seed, mu);
    for (;;) {
        std::size_t next = g.order();
        for (std::size_t x = 0; x < g.order(); ++x)
            if (!l.leq(mu.value(x), current.value(x))) {
                next = x;
                break;
            }
        if (next == g.order()) break;
        out.points.push_back({next, mu.value(next)});
        seed = seed.join(LSubset::point(mu.group_ptr(), mu.lattice_ptr(), next,
                                        mu.value(next)));
        current = generated(seed, mu);
    }
    out.complete = current == mu;

    if (k_max == 0) return out;

    std::vector<LPoint> pool;
    for (std::size_t x = 0; x < g.order(); ++x)
        for (std::size_t a : l.interval(l.bottom(), mu.value(x)))
            if (a != l.bottom()) pool.push_back({x, a});

    std::uint64_t spent = 0;
    auto spans_target = [&](const std::vector<LPoint>& pts) {
        if (++spent > budget.max_candidates)
            fail(errc::budget_exceeded,
                 "the enumeration budget ran out during the minimum-witness search");
        LSubset s = LSubset::constant(mu.group_ptr(), mu.lattice_ptr(), l.bottom());
        for (const LPoint& p : pts)
            s = s.join(LSubset::point(mu.group_ptr(), mu.lattice_ptr(), p.element, p.value));
        return generated(s, mu) == mu;
    };

    for (std::size_t k = 0; k <= std::min(k_max, pool.size()); ++k) {
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        for (;;) {
            std::vector<LPoint> combo;
            combo.reserve(k);
            for (std::size_t i : idx) combo.push_back(pool[i]);
            if (spans_target(combo)) {
                out.minimal = std::move(combo);
                return out;
            }
            // Advance to the next k-combination of pool indices.
            std::size_t i = k;
            while (i > 0 && idx[i - 1] == pool.size() - (k - (i - 1))) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return out;
}

MaximalConditionReport maximal_condition_report(const LSubset& mu,
                                                const EnumerationBudget& budget) {
    std::vector<LSubset> members = complete_members(mu, budget, "the chain survey");
    const FiniteLattice& l = mu.lattice();
    std::vector<std::size_t> height = lattice_heights(l);

    std::vector<std::size_t> idx(members.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    auto weight = [&](std::size_t i) {
        std::size_t w = 0;
        for (std::uint8_t v : members[i].values()) w += height[v];
        return w;
    };
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        std::size_t wa = weight(a), wb = weight(b);
        return wa != wb ? wa < wb : members[a].values() < members[b].values();
    });

    std::vector<std::size_t> chain(members.size(), 1);
    std::size_t longest = members.empty() ? 0 : 1;
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            const LSubset& lo = members[idx[j]];
            const LSubset& hi = members[idx[i]];
            if (lo != hi && lo.subset_of(hi))
                chain[i] = std::max(chain[i], chain[j] + 1);
            longest = std::max(longest, chain[i]);
        }
    return {members.size(), longest};
}

LSubset zorn_witness(const LSubset& theta, std::size_t value, std::size_t element,
                     const LSubset& mu, const EnumerationBudget& budget) {
    theta.require_compatible(mu);
    require_lsubgroup(mu, "the ambient bound");
    if (!is_lsubgroup_of(theta, mu))
        fail(errc::not_an_lsubgroup,
             "the seed must satisfy the subgroup laws inside the ambient map");
    if (element >= mu.group().order())
        fail(errc::unknown_element, "no such group element");
    if (!mu.contains_point(value, element))
        fail(errc::no_witness, "the avoided point lies outside the ambient map");
    if (theta.contains_point(value, element))
        fail(errc::no_witness, "the seed already contains the avoided point");

    std::vector<LSubset> members = complete_members(mu, budget, "the witness search");
    std::vector<LSubset> avoiding;
    for (const LSubset& sigma : members)
        if (theta.subset_of(sigma) && !sigma.contains_point(value, element))
            avoiding.push_back(sigma);

    const LSubset* best = nullptr;
    for (const LSubset& sigma : avoiding) {
        bool topped = false;
        for (const LSubset& tau : avoiding)
            if (tau != sigma && sigma.subset_of(tau)) {
                topped = true;
                break;
            }
        if (!topped && best == nullptr) best = &sigma;
    }
    // theta itself always qualifies as avoiding, so a best exists.
    return *best;
}

LSubset maximal_containing(const LSubset& eta, const LSubset& mu,
                           const EnumerationBudget& budget) {
    eta.require_compatible(mu);
    require_lsubgroup(mu, "the ambient bound");
    if (!is_lsubgroup_of(eta, mu))
        fail(errc::not_an_lsubgroup,
             "the seed must satisfy the subgroup laws inside the ambient map");
    if (!is_proper(eta, mu))
        fail(errc::bad_input, "the seed must be proper below the ambient map");
    for (const LSubset& m : all_maximal(mu, budget))
        if (eta.subset_of(m)) {
            MaximalityCertificate cert = is_maximal(m, mu, budget);
            if (!cert.verdict)
                fail(errc::bad_input, "a maximal candidate failed its certification");
            return m;
        }
    fail(errc::no_witness, "no maximal member contains the seed");
}

bool frattini_product_check(const LSubset& eta, const LSubset& mu,
                            const EnumerationBudget& budget) {
    eta.require_compatible(mu);
    return set_product(eta, frattini(mu, budget)) == mu;
}

}  // namespace lgl
