#include "lgl/group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <unordered_map>

namespace lgl {

Perm parse_perm(std::size_t degree, std::string_view text) {
    Perm p(degree);
    std::iota(p.begin(), p.end(), 0);
    if (text == "e" || text == "()" || text.empty()) return p;

    // Collect cycles left to right; apply rightmost first by composing at the end.
    std::vector<std::vector<std::size_t>> cycles;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) { ++i; continue; }
        if (text[i] != '(')
            fail(errc::bad_permutation, "expected '(' in '" + std::string(text) + "'");
        std::size_t close = text.find(')', i);
        if (close == std::string_view::npos)
            fail(errc::bad_permutation, "unclosed cycle in '" + std::string(text) + "'");
        std::string_view body = text.substr(i + 1, close - i - 1);
        std::vector<std::size_t> cyc;
        bool separated = body.find_first_of(" ,") != std::string_view::npos;
        if (separated) {
            std::size_t j = 0;
            while (j < body.size()) {
                while (j < body.size() && (body[j] == ' ' || body[j] == ',')) ++j;
                std::size_t k = j;
                while (k < body.size() && std::isdigit(static_cast<unsigned char>(body[k]))) ++k;
                if (k == j) {
                    if (j < body.size())
                        fail(errc::bad_permutation, "bad point in '" + std::string(text) + "'");
                    break;
                }
                cyc.push_back(std::stoul(std::string(body.substr(j, k - j))));
                j = k;
            }
        } else {
            for (char c : body) {
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    fail(errc::bad_permutation, "bad point in '" + std::string(text) + "'");
                cyc.push_back(static_cast<std::size_t>(c - '0'));
            }
        }
        for (std::size_t pt : cyc)
            if (pt < 1 || pt > degree)
                fail(errc::bad_permutation, "point " + std::to_string(pt) + " outside 1.." +
                                                std::to_string(degree));
        std::set<std::size_t> uniq(cyc.begin(), cyc.end());
        if (uniq.size() != cyc.size())
            fail(errc::bad_permutation, "repeated point in '" + std::string(text) + "'");
        if (!cyc.empty()) cycles.push_back(std::move(cyc));
        i = close + 1;
    }

    // Compose: rightmost cycle acts first, so fold from the right.
    for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
        Perm q(degree);
        std::iota(q.begin(), q.end(), 0);
        const auto& cyc = *it;
        for (std::size_t k = 0; k < cyc.size(); ++k)
            q[cyc[k] - 1] = static_cast<std::uint16_t>(cyc[(k + 1) % cyc.size()] - 1);
        Perm next(degree);
        for (std::size_t pt = 0; pt < degree; ++pt) next[pt] = q[p[pt]];
        p = std::move(next);
    }
    return p;
}

std::string render_perm(const Perm& p) {
    const std::size_t degree = p.size();
    std::vector<bool> seen(degree, false);
    std::string out;
    bool wide = degree > 9;
    for (std::size_t start = 0; start < degree; ++start) {
        if (seen[start] || p[start] == start) continue;
        out += '(';
        std::size_t pt = start;
        bool first = true;
        do {
            if (!first && wide) out += ' ';
            out += std::to_string(pt + 1);
            seen[pt] = true;
            pt = p[pt];
            first = false;
        } while (pt != start);
        out += ')';
    }
    return out.empty() ? "e" : out;
}

FiniteGroup FiniteGroup::from_table(std::string name, std::vector<std::string> elements,
                                    std::vector<std::uint16_t> table) {
    FiniteGroup G;
    G.name_ = std::move(name);
    G.labels_ = std::move(elements);
    const std::size_t n = G.labels_.size();
    if (n == 0) fail(errc::bad_input, "group '" + G.name_ + "' has no elements");
    if (n > max_order)
        fail(errc::order_cap, "group '" + G.name_ + "' has order " + std::to_string(n) +
                                  ", cap is " + std::to_string(max_order));
    {
        std::set<std::string> seen(G.labels_.begin(), G.labels_.end());
        if (seen.size() != n) fail(errc::bad_input, "duplicate element label");
    }
    if (table.size() != n * n)
        fail(errc::not_closed_table, "table has " + std::to_string(table.size()) +
                                         " entries, expected " + std::to_string(n * n));
    for (std::uint16_t v : table)
        if (v >= n) fail(errc::not_closed_table, "table entry " + std::to_string(v) + " out of range");

    auto at = [&](std::size_t x, std::size_t y) { return table[x * n + y]; };

    std::size_t e = n;
    for (std::size_t cand = 0; cand < n; ++cand) {
        bool ok = true;
        for (std::size_t x = 0; x < n && ok; ++x)
            ok = at(cand, x) == x && at(x, cand) == x;
        if (ok) { e = cand; break; }
    }
    if (e == n) fail(errc::no_identity, "table has no identity element");

    for (std::size_t x = 0; x < n; ++x) {
        bool has = false;
        for (std::size_t y = 0; y < n && !has; ++y) has = at(x, y) == e;
        if (!has) fail(errc::no_inverse, "'" + G.labels_[x] + "' has no inverse");
    }

    // Light's test: associativity need only be checked against a generating set.
    std::vector<std::size_t> gens;
    {
        std::vector<bool> reached(n, false);
        reached[e] = true;
        std::size_t count = 1;
        while (count < n) {
            std::size_t fresh = 0;
            while (reached[fresh]) ++fresh;
            gens.push_back(fresh);
            // close under the (unverified) operation
            bool grew = true;
            reached[fresh] = true;
            ++count;
            while (grew) {
                grew = false;
                for (std::size_t x = 0; x < n; ++x) {
                    if (!reached[x]) continue;
                    for (std::size_t y = 0; y < n; ++y) {
                        if (!reached[y]) continue;
                        std::size_t z = at(x, y);
                        if (!reached[z]) { reached[z] = true; ++count; grew = true; }
                    }
                }
            }
        }
    }
    for (std::size_t a : gens)
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                if (at(x, at(a, y)) != at(at(x, a), y))
                    fail(errc::not_associative,
                         "(" + G.labels_[x] + " " + G.labels_[a] + ") " + G.labels_[y] + " != " +
                             G.labels_[x] + " (" + G.labels_[a] + " " + G.labels_[y] + ")");

    // Canonical order is the table order, so the identity must come first.
    if (e != 0)
        fail(errc::no_identity, "identity is element " + std::to_string(e) + ", must be element 0");
    G.table_ = std::move(table);
    G.finish();
    return G;
}

FiniteGroup FiniteGroup::from_generators(std::string name, std::size_t degree,
                                         const std::vector<std::pair<std::string, std::string>>& gens) {
    FiniteGroup G;
    G.name_ = std::move(name);
    G.degree_ = degree;
    if (degree == 0) fail(errc::bad_input, "permutation group needs degree >= 1");

    std::vector<Perm> gen_perms;
    std::set<std::string> gen_names;
    for (const auto& [gname, cycles] : gens) {
        if (gname.empty()) fail(errc::bad_input, "generator with empty name");
        if (!gen_names.insert(gname).second)
            fail(errc::bad_input, "duplicate generator name '" + gname + "'");
        gen_perms.push_back(parse_perm(degree, cycles));
    }

    std::unordered_map<std::string, std::uint16_t> index;
    auto key = [](const Perm& p) {
        std::string k(reinterpret_cast<const char*>(p.data()), p.size() * sizeof(std::uint16_t));
        return k;
    };
    Perm id(degree);
    std::iota(id.begin(), id.end(), 0);
    G.perms_.push_back(id);
    index.emplace(key(id), 0);
    for (std::size_t head = 0; head < G.perms_.size(); ++head) {
        for (const Perm& g : gen_perms) {
            Perm prod(degree);
            // right multiplication: x * g, with g applied first
            const Perm x = G.perms_[head];
            for (std::size_t pt = 0; pt < degree; ++pt) prod[pt] = x[g[pt]];
            auto [it, fresh] = index.emplace(key(prod), static_cast<std::uint16_t>(G.perms_.size()));
            (void)it;
            if (fresh) {
                G.perms_.push_back(std::move(prod));
                if (G.perms_.size() > max_order)
                    fail(errc::order_cap, "group '" + G.name_ + "' exceeds order cap " +
                                              std::to_string(max_order));
            }
        }
    }

    const std::size_t n = G.perms_.size();
    G.labels_.reserve(n);
    for (const Perm& p : G.perms_) G.labels_.push_back(render_perm(p));
    for (std::size_t i = 0; i < gens.size(); ++i)
        G.gens_.emplace_back(gens[i].first, index.at(key(gen_perms[i])));

    G.perm_index_.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        G.perm_index_.emplace_back(G.perms_[i], static_cast<std::uint16_t>(i));
    std::sort(G.perm_index_.begin(), G.perm_index_.end());

    if (n <= 2048) {
        G.table_.assign(n * n, 0);
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                Perm prod(degree);
                for (std::size_t pt = 0; pt < degree; ++pt) prod[pt] = G.perms_[x][G.perms_[y][pt]];
                auto it = std::lower_bound(G.perm_index_.begin(), G.perm_index_.end(),
                                           std::make_pair(prod, std::uint16_t{0}));
                G.table_[x * n + y] = it->second;
            }
    }
    G.finish();
    return G;
}

std::size_t FiniteGroup::mul_slow(std::size_t x, std::size_t y) const {
    Perm prod(degree_);
    for (std::size_t pt = 0; pt < degree_; ++pt) prod[pt] = perms_[x][perms_[y][pt]];
    auto it = std::lower_bound(perm_index_.begin(), perm_index_.end(),
                               std::make_pair(prod, std::uint16_t{0}));
    return it->second;
}

void FiniteGroup::finish() {
    const std::size_t n = order();
    inv_.assign(n, 0);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (mul(x, y) == 0) { inv_[x] = static_cast<std::uint16_t>(y); break; }
}

void FiniteGroup::add_alias(std::string alias, std::size_t elem) {
    if (alias.empty()) fail(errc::bad_input, "empty alias");
    if (elem >= order()) fail(errc::unknown_element, "alias target out of range");
    for (const std::string& l : labels_)
        if (l == alias) fail(errc::bad_input, "alias '" + alias + "' collides with an element label");
    if (!aliases_.emplace(std::move(alias), static_cast<std::uint16_t>(elem)).second)
        fail(errc::bad_input, "duplicate alias");
}

std::optional<std::size_t> FiniteGroup::index_of(std::string_view text) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == text) return i;
    if (auto it = aliases_.find(std::string(text)); it != aliases_.end()) return it->second;

    // A word in the generator names with optional exponents, e.g. "sr2".
    if (!gens_.empty() && !text.empty()) {
        std::size_t acc = identity();
        std::size_t i = 0;
        bool ok = true;
        if (text == "e") return identity();
        while (i < text.size() && ok) {
            std::size_t best = 0;
            std::size_t best_gen = gens_.size();
            for (std::size_t g = 0; g < gens_.size(); ++g) {
                const std::string& gn = gens_[g].first;
                if (gn.size() > best && text.substr(i, gn.size()) == gn) {
                    best = gn.size();
                    best_gen = g;
                }
            }
            if (best_gen == gens_.size()) { ok = false; break; }
            i += best;
            std::size_t exp = 1;
            if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                exp = 0;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                    exp = exp * 10 + static_cast<std::size_t>(text[i++] - '0');
            }
            for (std::size_t k = 0; k < exp; ++k) acc = mul(acc, gens_[best_gen].second);
        }
        if (ok && i == text.size()) return acc;
    }

    if (degree_ > 0 && !text.empty() && (text[0] == '(' || text == "e" || text == "()")) {
        try {
            Perm p = parse_perm(degree_, text);
            auto it = std::lower_bound(perm_index_.begin(), perm_index_.end(),
                                       std::make_pair(p, std::uint16_t{0}));
            if (it != perm_index_.end() && it->first == p) return it->second;
        } catch (const error&) {
            // fall through to not-found
        }
    }
    return std::nullopt;
}

std::size_t FiniteGroup::require(std::string_view text) const {
    auto i = index_of(text);
    if (!i) fail(errc::unknown_element,
                 "group '" + name_ + "' has no element '" + std::string(text) + "'");
    return *i;
}

std::size_t FiniteGroup::element_order(std::size_t x) const {
    std::size_t k = 1;
    std::size_t acc = x;
    while (acc != identity()) {
        acc = mul(acc, x);
        ++k;
    }
    return k;
}

bool FiniteGroup::is_abelian() const {
    for (std::size_t x = 0; x < order(); ++x)
        for (std::size_t y = x + 1; y < order(); ++y)
            if (mul(x, y) != mul(y, x)) return false;
    return true;
}

FiniteGroup::ElemSet FiniteGroup::closure(const ElemSet& gens) const {
    std::vector<bool> in(order(), false);
    std::vector<std::uint16_t> queue{static_cast<std::uint16_t>(identity())};
    in[identity()] = true;
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (std::uint16_t g : gens) {
            auto z = static_cast<std::uint16_t>(mul(queue[head], g));
            if (!in[z]) { in[z] = true; queue.push_back(z); }
        }
    std::sort(queue.begin(), queue.end());
    return queue;
}

bool FiniteGroup::is_subgroup(const ElemSet& elems) const {
    if (elems.empty() || !std::binary_search(elems.begin(), elems.end(), identity())) return false;
    for (std::uint16_t x : elems)
        for (std::uint16_t y : elems)
            if (!std::binary_search(elems.begin(), elems.end(),
                                    static_cast<std::uint16_t>(mul(x, y))))
                return false;
    return true;
}

bool FiniteGroup::is_normal(const ElemSet& subgroup) const {
    for (std::uint16_t h : subgroup)
        for (std::size_t g = 0; g < order(); ++g)
            if (!std::binary_search(subgroup.begin(), subgroup.end(),
                                    static_cast<std::uint16_t>(conj(g, h))))
                return false;
    return true;
}

std::vector<FiniteGroup::ElemSet> FiniteGroup::all_subgroups() const {
    if (order() > 200)
        fail(errc::order_cap, "subgroup enumeration is limited to order 200, group '" + name_ +
                                  "' has order " + std::to_string(order()));
    std::set<ElemSet> seen;
    std::vector<ElemSet> queue{closure({})};
    seen.insert(queue[0]);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        ElemSet base = queue[head];
        for (std::uint16_t g = 0; g < order(); ++g) {
            if (std::binary_search(base.begin(), base.end(), g)) continue;
            ElemSet gens = base;
            gens.push_back(g);
            ElemSet ext = closure(gens);
            if (seen.insert(ext).second) queue.push_back(std::move(ext));
        }
    }
    std::vector<ElemSet> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [](const ElemSet& a, const ElemSet& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

bool FiniteGroup::operator==(const FiniteGroup& o) const {
    if (labels_ != o.labels_) return false;
    for (std::size_t x = 0; x < order(); ++x)
        for (std::size_t y = 0; y < order(); ++y)
            if (mul(x, y) != o.mul(x, y)) return false;
    return true;
}

bool is_homomorphism(const FiniteGroup& dom, const FiniteGroup& cod,
                     const std::vector<std::uint16_t>& map) {
    if (map.size() != dom.order()) return false;
    for (std::uint16_t v : map)
        if (v >= cod.order()) return false;
    for (std::size_t x = 0; x < dom.order(); ++x)
        for (std::size_t y = 0; y < dom.order(); ++y)
            if (map[dom.mul(x, y)] != cod.mul(map[x], map[y])) return false;
    return true;
}

GroupHom make_hom(GroupPtr dom, GroupPtr cod, std::vector<std::uint16_t> map) {
    if (!dom || !cod) fail(errc::bad_input, "homomorphism needs both groups");
    if (!is_homomorphism(*dom, *cod, map))
        fail(errc::bad_input, "map " + dom->name() + " -> " + cod->name() +
                                  " is not a homomorphism");
    return GroupHom{std::move(dom), std::move(cod), std::move(map)};
}

FiniteGroup::ElemSet hom_kernel(const GroupHom& h) {
    FiniteGroup::ElemSet out;
    for (std::size_t x = 0; x < h.dom->order(); ++x)
        if (h.map[x] == h.cod->identity()) out.push_back(static_cast<std::uint16_t>(x));
    return out;
}

FiniteGroup::ElemSet hom_image(const GroupHom& h) {
    FiniteGroup::ElemSet out(h.map.begin(), h.map.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace lgl
