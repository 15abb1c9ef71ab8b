// Black-box tests for the lgl binary: pinned output lines, exit codes, JSON
// shapes, and determinism.  Commands run from the source directory so the
// fixture paths match what a user would type.

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

#ifndef LGL_CLI_BIN
#error "LGL_CLI_BIN must point at the built lgl binary"
#endif
#ifndef LGL_SOURCE_DIR
#error "LGL_SOURCE_DIR must point at the repository root"
#endif

namespace {

using nlohmann::json;

struct RunResult {
    int rc = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string("cd '") + LGL_SOURCE_DIR + "' && '" + LGL_CLI_BIN + "' " +
                      args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int status = pclose(pipe);
    r.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

json load_fixture(const std::string& rel) {
    std::ifstream f(std::string(LGL_SOURCE_DIR) + "/" + rel);
    REQUIRE(f.good());
    return json::parse(f);
}

}  // namespace

TEST_CASE("cli pinned command lines") {
    RunResult lat = run_cli("lattice check fixtures/chain2.json");
    CHECK(lat.rc == 0);
    CHECK(lat.out == "valid, distributive, chain\n");

    RunResult mx = run_cli("maximal --eta fixtures/s4_eta.json --mu fixtures/s4_mu.json");
    CHECK(mx.rc == 0);
    CHECK(mx.out == "maximal: true (box 16, survivors 2)\n");

    RunResult gen = run_cli("gen --mu fixtures/d8_mu.json --points \"b@r2,c@s\" --json");
    CHECK(gen.rc == 0);
    CHECK(json::parse(gen.out) == load_fixture("fixtures/d8_mu.json"));
}

TEST_CASE("cli suite listing") {
    RunResult ls = run_cli("verify --list");
    CHECK(ls.rc == 0);
    std::map<std::string, std::string> rows;
    std::istringstream lines(ls.out);
    std::string line;
    while (std::getline(lines, line)) {
        std::istringstream cols(line);
        std::string id, result;
        cols >> id >> result;
        if (!id.empty()) rows[id] = result;
    }
    CHECK(rows.size() >= 20);
    CHECK(rows["nil_max"] == "thm:nil_max");
    CHECK(rows["frat_lambda"] == "thm:frat");
    CHECK(rows.count("neg_ctl") == 1);

    RunResult lsj = run_cli("verify --list --json");
    CHECK(lsj.rc == 0);
    json arr = json::parse(lsj.out);
    CHECK(arr.is_array());
    CHECK(arr.size() == rows.size());
}

TEST_CASE("cli verify reports, determinism, and replay") {
    RunResult r1 = run_cli("verify --suite gen_sup --cases 200 --seed 7 --json");
    CHECK(r1.rc == 0);
    json j1 = json::parse(r1.out);
    CHECK(j1["schema"] == 1);
    CHECK(j1["suite_id"] == "gen_sup");
    CHECK(j1["cases_run"] == 200);
    CHECK(j1["violations"].empty());
    CHECK(j1["budget_status"] == "complete");

    RunResult r2 = run_cli("verify --suite gen_sup --cases 200 --seed 7 --json --threads 3");
    CHECK(r2.rc == 0);
    json j2 = json::parse(r2.out);
    j1.erase("elapsed_ms");
    j2.erase("elapsed_ms");
    CHECK(j1 == j2);

    RunResult i500 = run_cli("verify --suite int_pro --cases 500 --seed 1 --json");
    CHECK(i500.rc == 0);
    CHECK(json::parse(i500.out)["violations"].empty());

    RunResult bad = run_cli("verify --suite neg_ctl --cases 12 --seed 42 --json");
    CHECK(bad.rc == 1);
    json jb = json::parse(bad.out);
    REQUIRE(!jb["violations"].empty());
    const json& first = jb["violations"][0];
    RunResult rp = run_cli("verify --suite neg_ctl --seed 42 --replay " +
                           std::to_string(first["case_index"].get<std::uint64_t>()) + " --json");
    CHECK(rp.rc == 1);
    json jr = json::parse(rp.out);
    CHECK(jr["violation"]["detail"] == first["detail"]);
    CHECK(jr["violation"]["case_seed"] == first["case_seed"]);
    CHECK(jr["violation"]["input"] == first["input"]);
}

TEST_CASE("cli exit code contract") {
    CHECK(run_cli("verify --suite nope").rc == 2);
    CHECK(run_cli("verify").rc == 2);
    CHECK(run_cli("gen --mu fixtures/d8_mu.json").rc == 2);
    CHECK(run_cli("gen --mu fixtures/d8_mu.json --points b#r2").rc == 2);
    CHECK(run_cli("gen --mu fixtures/d8_mu.json --points z@r2").rc == 2);
    CHECK(run_cli("lsub check fixtures/does_not_exist.json").rc == 2);
    CHECK(run_cli("group info no_such_group").rc == 2);

    RunResult part = run_cli("verify --suite ex_gen --cases 50 --budget 10 --seed 3 --json");
    CHECK(part.rc == 3);
    json jp = json::parse(part.out);
    CHECK(jp["budget_status"] == "partial");
    CHECK(jp["cases_run"] == 10);

    std::ofstream bad_map("/tmp/lgl_badmap.json");
    bad_map << R"({"group":"z4","lattice":"chain2","default":"0","values":{"1":"1"}})";
    bad_map.close();
    RunResult chk = run_cli("lsub check /tmp/lgl_badmap.json");
    CHECK(chk.rc == 1);
    CHECK(chk.out.rfind("lsubgroup: false", 0) == 0);
    CHECK(run_cli("lsub check fixtures/d8_mu.json").rc == 0);
    CHECK(run_cli("lsub check fixtures/s4_eta.json --mode levels").rc == 0);

    RunResult m3 = run_cli("lattice check m3");
    CHECK(m3.rc == 0);
    CHECK(m3.out == "valid\n");
}

TEST_CASE("cli computation subcommands") {
    RunResult nil = run_cli("nilpotency --mu fixtures/s4_mu.json");
    CHECK(nil.rc == 0);
    CHECK(nil.out.rfind("class: 2", 0) == 0);

    RunResult fg = run_cli("fingen --mu fixtures/d8_mu.json --k-max 2 --json");
    CHECK(fg.rc == 0);
    json jf = json::parse(fg.out);
    CHECK(jf["complete"] == true);
    REQUIRE(jf["minimal"].is_array());
    CHECK(jf["minimal"].size() == 2);

    RunResult fr = run_cli("frattini --mu fixtures/d8_mu.json --route both --json");
    CHECK(fr.rc == 0);
    CHECK(json::parse(fr.out)["values"].is_object());

    RunResult gi = run_cli("group info q8 --json");
    CHECK(gi.rc == 0);
    json jg = json::parse(gi.out);
    CHECK(jg["order"] == 8);
    CHECK(jg["abelian"] == false);
    CHECK(jg["subgroups"] == 6);

    auto strip_notes = [](json j) {
        j.erase("notes");
        return j;
    };
    RunResult nor = run_cli("normalizer --eta fixtures/s4_eta.json --mu fixtures/s4_mu.json --json");
    CHECK(nor.rc == 0);
    CHECK(json::parse(nor.out) == strip_notes(load_fixture("fixtures/s4_mu.json")));

    RunResult clo = run_cli("closure --eta fixtures/s4_eta.json --mu fixtures/s4_mu.json --json");
    CHECK(clo.rc == 0);
    CHECK(json::parse(clo.out) == strip_notes(load_fixture("fixtures/s4_eta.json")));
}
