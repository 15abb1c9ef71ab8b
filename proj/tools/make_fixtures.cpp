// Regenerates the JSON fixture files from the built-in pools.
// Usage: lgl_make_fixtures [output-dir]   (default: fixtures)

#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "lgl/error.hpp"
#include "lgl/fixtures.hpp"
#include "lgl/io.hpp"

namespace fx = lgl::fixtures;

int main(int argc, char** argv) {
    std::string dir = argc > 1 ? argv[1] : "fixtures";
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        std::cerr << "cannot create '" << dir << "': " << ec.message() << "\n";
        return 2;
    }

    // Friendly word names resolved against the built-in groups and written as
    // aliases, so files loaded back accept the same element names.
    const std::map<std::string, std::vector<std::string>> words = {
        {"d8", {"r", "s", "r2", "rs", "sr", "r3", "sr2"}},
        {"s3", {"t", "c", "tc", "ct", "c2"}},
        {"s4", {"a", "b"}},
        {"a4", {"a", "b"}},
        {"d12", {"r", "s", "r2", "r3", "r4", "r5", "sr", "rs"}},
    };

    std::size_t written = 0;
    try {
        for (const auto& name : fx::group_names()) {
            auto g = fx::group(name);
            nlohmann::json j = lgl::io::group_to_json(*g);
            if (auto it = words.find(name); it != words.end())
                for (const auto& w : it->second) j["aliases"][w] = g->require(w);
            lgl::io::save_json_file(dir + "/" + name + ".json", j);
            ++written;
        }
        for (const auto& name : fx::lattice_names()) {
            nlohmann::json j = lgl::io::lattice_to_json(*fx::lattice(name));
            if (name == "m14") j["notes"] = "Reconstructed by bounded search; canonical first solution.";
            lgl::io::save_json_file(dir + "/" + name + ".json", j);
            ++written;
        }
        nlohmann::json mu = lgl::io::lsubset_to_json(fx::d8_mu(), "d8", "l3");
        lgl::io::save_json_file(dir + "/d8_mu.json", mu);
        ++written;
        nlohmann::json smu = lgl::io::lsubset_to_json(fx::s4_mu(), "s4", "m14");
        smu["notes"] = "Tip taken as the value at the identity.";
        lgl::io::save_json_file(dir + "/s4_mu.json", smu);
        ++written;
        nlohmann::json seta = lgl::io::lsubset_to_json(fx::s4_eta(), "s4", "m14");
        lgl::io::save_json_file(dir + "/s4_eta.json", seta);
        ++written;
    } catch (const lgl::error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    std::cout << "wrote " << written << " fixture files to " << dir << "\n";
    return 0;
}
