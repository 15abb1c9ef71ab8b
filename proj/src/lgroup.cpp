#include "lgl/lgroup.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace lgl {

const char* lcheck_mode_name(LCheckMode m) {
    switch (m) {
    case LCheckMode::pointwise: return "pointwise";
    case LCheckMode::levels: return "levels";
    case LCheckMode::strong_levels: return "strong-levels";
    }
    return "unknown";
}

namespace {

// First (x, y) in row-major order with value(x*y) not above value(x) /\ value(y).
std::optional<std::pair<std::size_t, std::size_t>> product_violation(const LSubset& mu) {
    const FiniteGroup& g = mu.group();
    const FiniteLattice& l = mu.lattice();
    const std::size_t n = g.order();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (!l.leq(l.meet(mu.value(x), mu.value(y)), mu.value(g.mul(x, y))))
                return std::make_pair(x, y);
    return {};
}

std::optional<std::size_t> inverse_violation(const LSubset& mu) {
    const FiniteGroup& g = mu.group();
    for (std::size_t x = 0; x < g.order(); ++x)
        if (mu.value(g.inv(x)) != mu.value(x)) return x;
    return {};
}

LSubgroupWitness check_by_levels(const LSubset& mu, bool strong) {
    LSubgroupWitness w;
    w.mode = strong ? LCheckMode::strong_levels : LCheckMode::levels;
    const FiniteGroup& g = mu.group();
    std::vector<char> in(g.order());
    for (std::size_t a = 0; a < mu.lattice().size(); ++a) {
        auto s = strong ? mu.strong_level(a) : mu.level(a);
        if (s.empty()) continue;
        std::fill(in.begin(), in.end(), 0);
        for (auto x : s) in[x] = 1;
        for (auto x : s)
            for (auto y : s)
                if (!in[g.mul(x, y)]) {
                    w.verdict = false;
                    w.bad_level = a;
                    w.bad_pair = std::make_pair<std::size_t, std::size_t>(x, y);
                    return w;
                }
        for (auto x : s)
            if (!in[g.inv(x)]) {
                w.verdict = false;
                w.bad_level = a;
                w.bad_inverse = x;
                return w;
            }
    }
    return w;
}

// (a_x o eta)(z) = a /\ eta(x^-1 z) agrees with (eta o a_x)(z) = a /\ eta(z x^-1)
// at every z.
bool point_commutes(const LSubset& eta, std::size_t a, std::size_t x) {
    const FiniteGroup& g = eta.group();
    const FiniteLattice& l = eta.lattice();
    const std::size_t xi = g.inv(x);
    for (std::size_t z = 0; z < g.order(); ++z)
        if (l.meet(a, eta.value(g.mul(xi, z))) != l.meet(a, eta.value(g.mul(z, xi))))
            return false;
    return true;
}

} // namespace

LSubgroupWitness check_lsubgroup(const LSubset& mu, LCheckMode mode) {
    switch (mode) {
    case LCheckMode::pointwise: {
        LSubgroupWitness w;
        if (auto p = product_violation(mu)) {
            w.verdict = false;
            w.bad_pair = p;
        } else if (auto x = inverse_violation(mu)) {
            w.verdict = false;
            w.bad_inverse = x;
        }
        return w;
    }
    case LCheckMode::levels:
        return check_by_levels(mu, false);
    case LCheckMode::strong_levels:
        if (!mu.lattice().is_chain())
            fail(errc::not_a_chain, "strict level checks need a chain lattice and '" +
                                        mu.lattice().name() + "' is not one");
        return check_by_levels(mu, true);
    }
    fail(errc::bad_input, "unknown check mode");
}

bool is_lsubgroup(const LSubset& mu) { return check_lsubgroup(mu).verdict; }

void require_lsubgroup(const LSubset& mu, const char* role) {
    if (!is_lsubgroup(mu))
        fail(errc::not_an_lsubgroup,
             std::string(role) + " must be an L-subgroup of the carrier group");
}

bool is_lsubgroup_of(const LSubset& eta, const LSubset& mu) {
    return eta.subset_of(mu) && is_lsubgroup(eta);
}

bool is_proper(const LSubset& eta, const LSubset& mu) {
    return is_lsubgroup_of(eta, mu) && !eta.is_constant() && !(eta == mu);
}

bool is_normal_in_group(const LSubset& mu) {
    const FiniteGroup& g = mu.group();
    const std::size_t n = g.order();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (mu.value(g.mul(x, y)) != mu.value(g.mul(y, x))) return false;
    return true;
}

bool is_normal_in(const LSubset& eta, const LSubset& mu) {
    if (!is_lsubgroup_of(eta, mu))
        fail(errc::not_an_lsubgroup, "normality needs the smaller side to be an L-subgroup "
                                     "lying below the ambient");
    const FiniteGroup& g = eta.group();
    const FiniteLattice& l = eta.lattice();
    const std::size_t n = g.order();
    for (std::size_t y = 0; y < n; ++y)
        for (std::size_t x = 0; x < n; ++x)
            if (!l.leq(l.meet(eta.value(x), mu.value(y)), eta.value(g.conj(y, x))))
                return false;
    return true;
}

LSubset trivial_lsubgroup(const LSubset& eta) {
    std::vector<std::uint8_t> v(eta.group().order(),
                                static_cast<std::uint8_t>(eta.tail()));
    v[eta.group().identity()] = static_cast<std::uint8_t>(eta.tip());
    return LSubset(eta.group_ptr(), eta.lattice_ptr(), std::move(v));
}

LSubset generated(const LSubset& eta, const LSubset& mu) {
    eta.require_compatible(mu);
    require_lsubgroup(mu, "the ambient bound");
    if (!eta.subset_of(mu)) fail(errc::not_contained, "the seed must lie below the ambient bound");
    const FiniteGroup& g = eta.group();
    const FiniteLattice& l = eta.lattice();
    const std::size_t tip = eta.tip();
    std::vector<std::uint8_t> out(g.order(), static_cast<std::uint8_t>(l.bottom()));
    std::map<FiniteGroup::ElemSet, FiniteGroup::ElemSet> span_of_level;
    for (std::size_t a = 0; a < l.size(); ++a) {
        if (!l.leq(a, tip)) continue;
        auto lev = eta.level(a);
        auto it = span_of_level.find(lev);
        if (it == span_of_level.end()) it = span_of_level.emplace(lev, g.closure(lev)).first;
        for (auto x : it->second) out[x] = static_cast<std::uint8_t>(l.join(out[x], a));
    }
    LSubset res(eta.group_ptr(), eta.lattice_ptr(), std::move(out));
    if (!is_lsubgroup(res))
        fail(errc::bad_input, "generation did not close into an L-subgroup; the value lattice '" +
                                  l.name() + "' lacks the distributivity this construction needs");
    return res;
}

LSubset normalizer(const LSubset& eta, const LSubset& mu) {
    if (!is_lsubgroup_of(eta, mu))
        fail(errc::not_an_lsubgroup,
             "the normalized argument must be an L-subgroup lying below the ambient");
    require_lsubgroup(mu, "the ambient");
    const FiniteGroup& g = eta.group();
    const FiniteLattice& l = eta.lattice();
    const std::size_t n = g.order();
    std::vector<std::uint8_t> out(n);
    for (std::size_t x = 0; x < n; ++x) {
        std::size_t acc = l.bottom();
        for (std::size_t a = 0; a < l.size(); ++a)
            if (l.leq(a, mu.value(x)) && point_commutes(eta, a, x)) acc = l.join(acc, a);
        if (!point_commutes(eta, acc, x))
            fail(errc::bad_input,
                 "joining the commuting point values broke commutation; the value lattice '" +
                     l.name() + "' is not distributive enough");
        out[x] = static_cast<std::uint8_t>(acc);
    }
    return LSubset(eta.group_ptr(), eta.lattice_ptr(), std::move(out));
}

LSubset commutator_lsubset(const LSubset& eta, const LSubset& theta) {
    eta.require_compatible(theta);
    const FiniteGroup& g = eta.group();
    const FiniteLattice& l = eta.lattice();
    const std::size_t n = g.order();
    std::vector<char> hit(n, 0);
    std::vector<std::uint8_t> acc(n, static_cast<std::uint8_t>(l.bottom()));
    for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) {
            const std::size_t x = g.commutator(y, z);
            hit[x] = 1;
            acc[x] = static_cast<std::uint8_t>(
                l.join(acc[x], l.meet(eta.value(y), theta.value(z))));
        }
    const auto rest = static_cast<std::uint8_t>(l.meet(eta.tail(), theta.tail()));
    for (std::size_t x = 0; x < n; ++x)
        if (!hit[x]) acc[x] = rest;
    return LSubset(eta.group_ptr(), eta.lattice_ptr(), std::move(acc));
}

LSubset commutator_lsubgroup(const LSubset& eta, const LSubset& theta, const LSubset& mu) {
    eta.require_compatible(mu);
    theta.require_compatible(mu);
    require_lsubgroup(mu, "the ambient");
    if (!eta.subset_of(mu) || !theta.subset_of(mu))
        fail(errc::not_contained, "both commutator arguments must lie below the ambient");
    return generated(commutator_lsubset(eta, theta), mu);
}

CentralChain central_chain(const LSubset& mu, std::size_t max_steps) {
    require_lsubgroup(mu, "the chain seed");
    if (max_steps == 0) max_steps = mu.group().order() * mu.lattice().size();
    CentralChain c;
    c.stages.push_back(mu);
    for (std::size_t step = 0; step < max_steps; ++step) {
        LSubset next = commutator_lsubgroup(c.stages.back(), mu, mu);
        if (!next.subset_of(c.stages.back()))
            fail(errc::bad_input, "central stages stopped descending");
        if (next == c.stages.back()) {
            c.stabilized = true;
            break;
        }
        c.stages.push_back(std::move(next));
    }
    if (c.stabilized && c.stages.back() == trivial_lsubgroup(mu))
        c.class_index = c.stages.size() - 1;
    return c;
}

std::optional<std::size_t> nilpotency_class(const LSubset& mu) {
    require_lsubgroup(mu, "the chain seed");
    if (mu.tip() == mu.tail())
        fail(errc::tip_equals_tail, "a class needs distinct tip and tail");
    return central_chain(mu).class_index;
}

std::vector<LSubset> normalizer_chain(const LSubset& eta, const LSubset& mu,
                                      std::size_t max_steps) {
    if (max_steps == 0) max_steps = eta.group().order() * eta.lattice().size();
    std::vector<LSubset> stages;
    stages.push_back(eta);
    for (std::size_t step = 0; step < max_steps; ++step) {
        LSubset next = normalizer(stages.back(), mu);
        if (next == stages.back()) return stages;
        stages.push_back(std::move(next));
    }
    fail(errc::budget_exceeded,
         "no normalizer fixpoint within " + std::to_string(max_steps) + " steps");
}

LSubset conjugate_in(const LSubset& eta, const LSubset& mu) {
    if (!is_lsubgroup_of(eta, mu))
        fail(errc::not_an_lsubgroup,
             "the conjugated argument must be an L-subgroup lying below the ambient");
    const FiniteGroup& g = eta.group();
    const FiniteLattice& l = eta.lattice();
    const std::size_t n = g.order();
    std::vector<std::uint8_t> out(n, static_cast<std::uint8_t>(l.bottom()));
    for (std::size_t z = 0; z < n; ++z)
        for (std::size_t y = 0; y < n; ++y) {
            const std::size_t x = g.conj(z, y);
            out[x] =
                static_cast<std::uint8_t>(l.join(out[x], l.meet(eta.value(y), mu.value(z))));
        }
    return LSubset(eta.group_ptr(), eta.lattice_ptr(), std::move(out));
}

LSubset normal_closure(const LSubset& eta, const LSubset& mu) {
    return generated(conjugate_in(eta, mu), mu);
}

ClosureSeries closure_series(const LSubset& eta, const LSubset& mu, std::size_t max_steps) {
    if (!is_lsubgroup_of(eta, mu))
        fail(errc::not_an_lsubgroup,
             "the series seed must be an L-subgroup lying below the ambient");
    require_lsubgroup(mu, "the ambient");
    if (max_steps == 0) max_steps = eta.group().order() * eta.lattice().size();
    ClosureSeries s;
    s.stages.push_back(mu);
    for (std::size_t step = 0;; ++step) {
        if (s.stages.back() == eta) {
            s.stabilized = true;
            return s;
        }
        if (step == max_steps)
            fail(errc::budget_exceeded,
                 "normal closures kept moving for " + std::to_string(max_steps) + " steps");
        LSubset next = normal_closure(eta, s.stages.back());
        if (next == s.stages.back()) {
            s.stabilized = true;
            return s;
        }
        s.stages.push_back(std::move(next));
    }
}

bool is_subnormal_in(const LSubset& eta, const LSubset& mu) {
    return closure_series(eta, mu).stages.back() == eta;
}

} // namespace lgl
