#include "lgl/io.hpp"

#include <algorithm>
#include <fstream>
#include <vector>

#include "lgl/error.hpp"
#include "lgl/fixtures.hpp"

namespace lgl::io {
namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) { fail(errc::bad_input, what); }

const json& field(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) bad(std::string("missing field '") + key + "'");
    return *it;
}

std::string cycle_string(const std::vector<std::size_t>& image0) {
    const std::size_t degree = image0.size();
    std::vector<bool> seen(degree, false);
    std::string out;
    bool wide = degree > 9;
    for (std::size_t start = 0; start < degree; ++start) {
        if (seen[start] || image0[start] == start) continue;
        out += '(';
        std::size_t pt = start;
        bool first = true;
        do {
            if (!first && wide) out += ' ';
            out += std::to_string(pt + 1);
            seen[pt] = true;
            pt = image0[pt];
            first = false;
        } while (pt != start);
        out += ')';
    }
    return out.empty() ? "e" : out;
}

void apply_aliases(FiniteGroup& g, const json& j) {
    auto it = j.find("aliases");
    if (it == j.end()) return;
    if (!it->is_object()) bad("'aliases' must be an object");
    for (const auto& [key, val] : it->items()) {
        std::size_t target;
        if (val.is_number_unsigned()) {
            target = val.get<std::size_t>();
            if (target >= g.order()) bad("alias '" + key + "' targets element " +
                                         std::to_string(target) + " out of range");
        } else if (val.is_string()) {
            target = g.require(val.get<std::string>());
        } else {
            bad("alias '" + key + "' must map to an index or an element name");
        }
        if (auto known = g.index_of(key); known && *known == target) continue;
        g.add_alias(key, target);
    }
}

} // namespace

bool is_file_ref(const std::string& ref) {
    if (ref.find('/') != std::string::npos) return true;
    return ref.size() > 5 && ref.compare(ref.size() - 5, 5, ".json") == 0;
}

Loader::Loader(std::string root) : root_(std::move(root)) {
    if (root_.empty()) root_ = ".";
}

std::string Loader::resolve(const std::string& ref) const {
    if (!ref.empty() && ref.front() == '/') return ref;
    return root_ + "/" + ref;
}

GroupPtr Loader::group(const std::string& ref) {
    if (!is_file_ref(ref)) return fixtures::group(ref);
    std::string path = resolve(ref);
    if (auto it = groups_.find(path); it != groups_.end()) return it->second;
    auto g = std::make_shared<const FiniteGroup>(group_from_json(load_json_file(path)));
    groups_.emplace(path, g);
    return g;
}

LatticePtr Loader::lattice(const std::string& ref) {
    if (!is_file_ref(ref)) return fixtures::lattice(ref);
    std::string path = resolve(ref);
    if (auto it = lattices_.find(path); it != lattices_.end()) return it->second;
    auto l = std::make_shared<const FiniteLattice>(lattice_from_json(load_json_file(path)));
    lattices_.emplace(path, l);
    return l;
}

LSubset Loader::lsubset(const std::string& ref) {
    if (!is_file_ref(ref)) {
        if (ref == "d8_mu") return fixtures::d8_mu();
        if (ref == "s4_mu") return fixtures::s4_mu();
        if (ref == "s4_eta") return fixtures::s4_eta();
        fail(errc::unknown_element, "unknown built-in map: " + ref);
    }
    return lsubset_from_json(load_json_file(resolve(ref)), *this);
}

FiniteLattice lattice_from_json(const json& j) {
    try {
        if (!j.is_object()) bad("lattice file must hold a JSON object");
        std::string name = field(j, "name").get<std::string>();
        std::vector<std::string> elements = field(j, "elements").get<std::vector<std::string>>();
        std::map<std::string, std::size_t> index;
        for (std::size_t i = 0; i < elements.size(); ++i)
            if (!index.emplace(elements[i], i).second) bad("duplicate element '" + elements[i] + "'");
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (const auto& entry : field(j, "le")) {
            if (!entry.is_array() || entry.size() != 2) bad("'le' entries must be [lo, hi] pairs");
            auto lookup = [&](const json& v) {
                std::string s = v.get<std::string>();
                auto it = index.find(s);
                if (it == index.end()) bad("'le' mentions unknown element '" + s + "'");
                return it->second;
            };
            pairs.emplace_back(lookup(entry[0]), lookup(entry[1]));
        }
        return FiniteLattice::build(std::move(name), std::move(elements), pairs);
    } catch (const json::exception& e) {
        bad(std::string("lattice file: ") + e.what());
    }
}

nlohmann::json lattice_to_json(const FiniteLattice& l) {
    json le = json::array();
    for (const auto& [lo, hi] : l.covers()) le.push_back({l.label(lo), l.label(hi)});
    json elements = json::array();
    for (std::size_t i = 0; i < l.size(); ++i) elements.push_back(l.label(i));
    return {{"name", l.name()}, {"elements", std::move(elements)}, {"le", std::move(le)}};
}

FiniteGroup group_from_json(const json& j) {
    try {
        if (!j.is_object()) bad("group file must hold a JSON object");
        std::string name = field(j, "name").get<std::string>();
        std::string kind = field(j, "kind").get<std::string>();
        if (kind == "cayley") {
            const json& rows = field(j, "table");
            if (!rows.is_array() || rows.empty()) bad("'table' must be a non-empty array of rows");
            const std::size_t n = rows.size();
            std::vector<std::string> labels(n);
            for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
            std::vector<std::uint16_t> table;
            table.reserve(n * n);
            for (const auto& row : rows) {
                if (!row.is_array() || row.size() != n) bad("'table' must be square");
                for (const auto& cell : row) {
                    std::size_t v = cell.get<std::size_t>();
                    if (v >= n) bad("table entry " + std::to_string(v) + " out of range");
                    table.push_back(static_cast<std::uint16_t>(v));
                }
            }
            FiniteGroup g = FiniteGroup::from_table(std::move(name), std::move(labels), std::move(table));
            apply_aliases(g, j);
            return g;
        }
        if (kind == "permutation") {
            std::size_t degree = field(j, "degree").get<std::size_t>();
            if (degree == 0 || degree > FiniteGroup::max_order)
                bad("'degree' must be between 1 and " + std::to_string(FiniteGroup::max_order));
            std::vector<std::pair<std::string, std::string>> gens;
            std::size_t k = 0;
            for (const auto& img : field(j, "generators")) {
                ++k;
                std::vector<std::size_t> image = img.get<std::vector<std::size_t>>();
                if (image.size() != degree) bad("generator " + std::to_string(k) + " must list " +
                                                std::to_string(degree) + " images");
                std::vector<std::size_t> image0(degree);
                std::vector<bool> hit(degree, false);
                for (std::size_t p = 0; p < degree; ++p) {
                    if (image[p] < 1 || image[p] > degree || hit[image[p] - 1])
                        bad("generator " + std::to_string(k) + " is not a permutation of 1.." +
                            std::to_string(degree));
                    hit[image[p] - 1] = true;
                    image0[p] = image[p] - 1;
                }
                gens.emplace_back("g" + std::to_string(k), cycle_string(image0));
            }
            FiniteGroup g = FiniteGroup::from_generators(std::move(name), degree, gens);
            apply_aliases(g, j);
            return g;
        }
        bad("unknown group kind '" + kind + "'");
    } catch (const json::exception& e) {
        bad(std::string("group file: ") + e.what());
    }
}

nlohmann::json group_to_json(const FiniteGroup& g) {
    json out = {{"name", g.name()}};
    json aliases = json::object();
    if (g.degree() > 0) {
        out["kind"] = "permutation";
        out["degree"] = g.degree();
        json gens = json::array();
        for (const auto& [gname, elem] : g.generators()) {
            (void)gname;
            const Perm& p = g.perm(elem);
            std::vector<std::size_t> image(p.size());
            for (std::size_t pt = 0; pt < p.size(); ++pt) image[pt] = std::size_t{p[pt]} + 1;
            gens.push_back(image);
        }
        out["generators"] = std::move(gens);
    } else {
        out["kind"] = "cayley";
        const std::size_t n = g.order();
        json rows = json::array();
        for (std::size_t x = 0; x < n; ++x) {
            json row = json::array();
            for (std::size_t y = 0; y < n; ++y) row.push_back(g.mul(x, y));
            rows.push_back(std::move(row));
        }
        out["table"] = std::move(rows);
        for (std::size_t x = 0; x < n; ++x)
            if (g.label(x) != std::to_string(x)) aliases[g.label(x)] = x;
    }
    for (const auto& [alias, elem] : g.aliases()) aliases[alias] = elem;
    if (!aliases.empty()) out["aliases"] = std::move(aliases);
    return out;
}

LSubset lsubset_from_json(const json& j, Loader& loader) {
    try {
        if (!j.is_object()) bad("map file must hold a JSON object");
        GroupPtr g = loader.group(field(j, "group").get<std::string>());
        LatticePtr l = loader.lattice(field(j, "lattice").get<std::string>());
        std::size_t dflt = l->require(field(j, "default").get<std::string>());
        LSubset m = LSubset::constant(g, l, dflt);
        if (auto it = j.find("values"); it != j.end()) {
            if (!it->is_object()) bad("'values' must be an object");
            for (const auto& [key, val] : it->items())
                m.set_value(g->require(key), l->require(val.get<std::string>()));
        }
        return m;
    } catch (const json::exception& e) {
        bad(std::string("map file: ") + e.what());
    }
}

nlohmann::json lsubset_to_json(const LSubset& m, const std::string& group_ref,
                               const std::string& lattice_ref) {
    const FiniteGroup& g = m.group();
    const FiniteLattice& l = m.lattice();
    std::vector<std::size_t> count(l.size(), 0);
    for (std::size_t x = 0; x < g.order(); ++x) ++count[m.value(x)];
    std::size_t dflt = static_cast<std::size_t>(
        std::max_element(count.begin(), count.end()) - count.begin());
    json values = json::object();
    for (std::size_t x = 0; x < g.order(); ++x)
        if (m.value(x) != dflt) values[g.label(x)] = l.label(m.value(x));
    return {{"group", group_ref},
            {"lattice", lattice_ref},
            {"default", l.label(dflt)},
            {"values", std::move(values)}};
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        bad("'" + path + "': " + e.what());
    }
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) bad("cannot write '" + path + "'");
    out << j.dump(2) << '\n';
    if (!out) bad("failed writing '" + path + "'");
}

} // namespace lgl::io
