#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <functional>

#include "lgl/error.hpp"
#include "lgl/fixtures.hpp"
#include "lgl/io.hpp"
#include "lgl/lgroup.hpp"

using namespace lgl;
using nlohmann::json;
namespace fx = lgl::fixtures;

namespace {

errc kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const error& e) {
        return e.kind();
    }
    FAIL("expected an lgl::error");
    return errc::bad_input;
}

std::string scratch_dir() {
    auto dir = std::filesystem::temp_directory_path() / "lgl_io_test";
    std::filesystem::create_directories(dir);
    return dir.string();
}

} // namespace

TEST_CASE("file reference detection") {
    CHECK_FALSE(io::is_file_ref("d8"));
    CHECK_FALSE(io::is_file_ref("chain2"));
    CHECK(io::is_file_ref("d8.json"));
    CHECK(io::is_file_ref("sub/d8"));
    CHECK(io::is_file_ref("/abs/path.json"));
    CHECK_FALSE(io::is_file_ref(".json"));
}

TEST_CASE("lattice json round trip") {
    auto l3 = fx::lattice("l3");
    json j = io::lattice_to_json(*l3);
    CHECK(j["name"] == "l3");
    CHECK(j["elements"].size() == 5);
    FiniteLattice back = io::lattice_from_json(j);
    CHECK(back == *l3);
    CHECK(back.name() == "l3");

    // unknown keys are tolerated
    j["notes"] = "extra";
    CHECK(io::lattice_from_json(j) == *l3);

    json broken = j;
    broken["le"].push_back({"0", "zz"});
    CHECK(kind_of([&] { io::lattice_from_json(broken); }) == errc::bad_input);
    json nofield = {{"name", "x"}, {"elements", {"a"}}};
    CHECK(kind_of([&] { io::lattice_from_json(nofield); }) == errc::bad_input);
}

TEST_CASE("cayley group json round trip") {
    auto q8 = fx::group("q8");
    json j = io::group_to_json(*q8);
    CHECK(j["kind"] == "cayley");
    CHECK(j["table"].size() == 8);
    CHECK(j["aliases"]["mi"] == 5);
    FiniteGroup back = io::group_from_json(j);
    CHECK(back.order() == 8);
    CHECK(back.label(5) == "5");  // labels are indices; names arrive as aliases
    CHECK(back.require("mi") == 5);
    CHECK_FALSE(back.is_abelian());
    for (std::size_t x = 0; x < 8; ++x)
        for (std::size_t y = 0; y < 8; ++y) CHECK(back.mul(x, y) == q8->mul(x, y));

    json bad_kind = {{"name", "x"}, {"kind", "weird"}};
    CHECK(kind_of([&] { io::group_from_json(bad_kind); }) == errc::bad_input);
    json not_square = {{"name", "x"}, {"kind", "cayley"}, {"table", {{0, 1}, {1}}}};
    CHECK(kind_of([&] { io::group_from_json(not_square); }) == errc::bad_input);
    json shifted = {{"name", "x"}, {"kind", "cayley"}, {"table", {{1, 0}, {0, 1}}}};
    CHECK(kind_of([&] { io::group_from_json(shifted); }) == errc::no_identity);
    json bad_alias = io::group_to_json(*q8);
    bad_alias["aliases"]["oops"] = 99;
    CHECK(kind_of([&] { io::group_from_json(bad_alias); }) == errc::bad_input);
}

TEST_CASE("permutation group json round trip") {
    auto d8 = fx::group("d8");
    json j = io::group_to_json(*d8);
    CHECK(j["kind"] == "permutation");
    CHECK(j["degree"] == 4);
    REQUIRE(j["generators"].size() == 2);
    CHECK(j["generators"][0] == json({2, 3, 4, 1}));
    CHECK(j["generators"][1] == json({1, 4, 3, 2}));

    FiniteGroup back = io::group_from_json(j);
    CHECK(back == *d8);  // same orbit order, cycle-notation labels
    CHECK(back.require("(13)(24)") == d8->require("r2"));
    CHECK_FALSE(back.index_of("r2").has_value());  // generator words are not carried

    j["aliases"]["r2"] = d8->require("r2");
    FiniteGroup aliased = io::group_from_json(j);
    CHECK(aliased.require("r2") == d8->require("r2"));

    json bad_gen = j;
    bad_gen["generators"][0] = {2, 2, 4, 1};
    CHECK(kind_of([&] { io::group_from_json(bad_gen); }) == errc::bad_input);
}

TEST_CASE("map json round trip") {
    io::Loader loader(".");
    LSubset mu = fx::d8_mu();
    json j = io::lsubset_to_json(mu, "d8", "l3");
    CHECK(j["group"] == "d8");
    CHECK(j["default"] == "0");
    CHECK(j["values"].size() == 4);
    LSubset back = io::lsubset_from_json(j, loader);
    CHECK(back == mu);

    json missing = j;
    missing.erase("default");
    CHECK(kind_of([&] { io::lsubset_from_json(missing, loader); }) == errc::bad_input);
    json badval = j;
    badval["values"]["(12)"] = "zz";
    CHECK(kind_of([&] { io::lsubset_from_json(badval, loader); }) == errc::unknown_element);
}

TEST_CASE("loader resolves files and names") {
    std::string dir = scratch_dir();
    io::save_json_file(dir + "/l3.json", io::lattice_to_json(*fx::lattice("l3")));
    io::save_json_file(dir + "/d8.json", io::group_to_json(*fx::group("d8")));
    json mu = io::lsubset_to_json(fx::d8_mu(), "d8.json", "l3.json");
    io::save_json_file(dir + "/mu.json", mu);

    io::Loader loader(dir);
    CHECK(loader.lattice("l3").get() == fx::lattice("l3").get());  // built-in name
    auto file_l3 = loader.lattice("l3.json");
    CHECK(*file_l3 == *fx::lattice("l3"));
    CHECK(loader.lattice("l3.json").get() == file_l3.get());  // cached

    LSubset loaded = loader.lsubset("mu.json");
    CHECK(loaded.lattice_ptr().get() == file_l3.get());
    // the file-loaded carrier equals the built-in one structurally
    LSubset builtin = fx::d8_mu();
    CHECK(loaded.values() == builtin.values());
    CHECK(is_lsubgroup(loaded));

    LSubset named = loader.lsubset("d8_mu");
    CHECK(named == builtin);
    CHECK(kind_of([&] { loader.lsubset("mystery"); }) == errc::unknown_element);
    CHECK(kind_of([&] { loader.lattice("missing.json"); }) == errc::bad_input);
    CHECK(kind_of([&] { loader.group("mystery"); }) == errc::unknown_element);

    std::ofstream(dir + "/garbage.json") << "{not json";
    CHECK(kind_of([&] { loader.lattice("garbage.json"); }) == errc::bad_input);
}
