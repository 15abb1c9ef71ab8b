#pragma once

#include <map>
#include <string>

#include "json.hpp"
#include "lgl/lset.hpp"

namespace lgl::io {

/// True when `ref` names a file (contains '/' or ends in ".json") rather than
/// a built-in pool entry.
bool is_file_ref(const std::string& ref);

/// Loads carriers and maps from JSON files or the built-in pools.  File
/// references are resolved against `root` unless absolute; loads are cached,
/// so repeated references within one loader share a carrier instance.
class Loader {
public:
    explicit Loader(std::string root = ".");

    GroupPtr group(const std::string& ref);
    LatticePtr lattice(const std::string& ref);
    /// A file reference, or one of the built-in maps d8_mu, s4_mu, s4_eta.
    LSubset lsubset(const std::string& ref);

    const std::string& root() const { return root_; }

private:
    std::string resolve(const std::string& ref) const;

    std::string root_;
    std::map<std::string, GroupPtr> groups_;
    std::map<std::string, LatticePtr> lattices_;
};

/// {"name": str, "elements": [str], "le": [[str, str]]}; le entries mean
/// first <= second.
FiniteLattice lattice_from_json(const nlohmann::json& j);
nlohmann::json lattice_to_json(const FiniteLattice& l);

/// {"name": str, "kind": "cayley" | "permutation", ...}.  A cayley group
/// carries "table" as rows of 0-based indices with the identity at index 0;
/// its elements are labeled by index.  A permutation group carries "degree"
/// and "generators" as 1-based one-line images; its elements are labeled by
/// cycle notation.  Optional "aliases" maps extra names to an element index
/// or to any resolvable element name.  Unknown keys are ignored.
FiniteGroup group_from_json(const nlohmann::json& j);
nlohmann::json group_to_json(const FiniteGroup& g);

/// {"group": ref, "lattice": ref, "default": label, "values": {element: label}}.
/// Carrier refs go through the loader, so they may be files or built-in names;
/// element keys resolve through labels, generator words, cycle notation, and
/// aliases.
LSubset lsubset_from_json(const nlohmann::json& j, Loader& loader);
/// Serializes with the most frequent value as "default" and the rest listed
/// explicitly by element label.
nlohmann::json lsubset_to_json(const LSubset& m, const std::string& group_ref,
                               const std::string& lattice_ref);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

} // namespace lgl::io
