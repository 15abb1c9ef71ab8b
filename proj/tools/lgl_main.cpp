// lgl: command-line front end for the lattice-valued subgroup library.
//
// Exit codes: 0 = success / property holds, 1 = a property violation was
// found, 2 = bad input or usage, 3 = an enumeration or case budget ran out
// before the answer could be certified.

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lgl/io.hpp"
#include "lgl/lgroup.hpp"
#include "lgl/maxfrat.hpp"
#include "lgl/verify.hpp"

namespace {

using nlohmann::json;

struct Globals {
    bool json_out = false;
    std::size_t threads = 1;
    std::uint64_t budget = 0;
    std::uint64_t seed = 0;
    std::string fixtures = ".";
};

void emit(const json& j) { std::printf("%s\n", j.dump(2).c_str()); }

lgl::EnumerationBudget box_budget(const Globals& g) {
    lgl::EnumerationBudget b;
    if (g.budget) {
        b.max_candidates = g.budget;
        b.max_results = g.budget;
    }
    b.threads = static_cast<unsigned>(g.threads);
    return b;
}

// The group/lattice reference to embed when re-serializing a map: reuse the
// field from the file the map came from, so output files resolve in the same
// environment as their inputs; fall back to the carrier's own name.
json carrier_field(lgl::io::Loader& loader, const std::string& ref, const char* field) {
    if (lgl::io::is_file_ref(ref)) {
        std::string path = ref.front() == '/' ? ref : loader.root() + "/" + ref;
        json j = lgl::io::load_json_file(path);
        if (j.contains(field)) return j[field];
    }
    return json();
}

json lsubset_json(lgl::io::Loader& loader, const lgl::LSubset& m, const std::string& from_ref) {
    json j = lgl::io::lsubset_to_json(m, m.group().name(), m.lattice().name());
    if (!from_ref.empty()) {
        json g = carrier_field(loader, from_ref, "group");
        json l = carrier_field(loader, from_ref, "lattice");
        if (!g.is_null()) j["group"] = g;
        if (!l.is_null()) j["lattice"] = l;
    }
    return j;
}

void print_lsubset(const lgl::LSubset& m) {
    for (std::size_t x = 0; x < m.group().order(); ++x)
        std::printf("  %s: %s\n", m.group().label(x).c_str(),
                    m.lattice().label(m.value(x)).c_str());
}

json values_of(const lgl::LSubset& m) {
    json j = json::object();
    for (std::size_t x = 0; x < m.group().order(); ++x)
        j[m.group().label(x)] = m.lattice().label(m.value(x));
    return j;
}

// "value@element" pairs, comma separated.
std::vector<std::pair<std::size_t, std::size_t>> parse_points(const std::string& text,
                                                              const lgl::LSubset& mu) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        std::string tok =
            text.substr(start, end == std::string::npos ? std::string::npos : end - start);
        std::size_t a = tok.find_first_not_of(" \t");
        std::size_t b = tok.find_last_not_of(" \t");
        tok = a == std::string::npos ? std::string() : tok.substr(a, b - a + 1);
        if (!tok.empty()) {
            std::size_t at = tok.find('@');
            if (at == std::string::npos || at == 0 || at + 1 == tok.size())
                throw lgl::error(lgl::errc::bad_input,
                                 "--points entry '" + tok + "' is not value@element");
            out.emplace_back(mu.lattice().require(tok.substr(0, at)),
                             mu.group().require(tok.substr(at + 1)));
        }
        if (end == std::string::npos) break;
        start = end + 1;
    }
    if (out.empty()) throw lgl::error(lgl::errc::bad_input, "--points names no points");
    return out;
}

lgl::LCheckMode parse_mode(const std::string& s) {
    if (s == "pointwise") return lgl::LCheckMode::pointwise;
    if (s == "levels") return lgl::LCheckMode::levels;
    if (s == "strong" || s == "strong_levels") return lgl::LCheckMode::strong_levels;
    throw lgl::error(lgl::errc::bad_input,
                     "--mode must be pointwise, levels, or strong_levels");
}

lgl::FrattiniRoute parse_route(const std::string& s) {
    if (s == "enumeration") return lgl::FrattiniRoute::enumeration;
    if (s == "nongenerators") return lgl::FrattiniRoute::nongenerators;
    if (s == "both") return lgl::FrattiniRoute::both;
    throw lgl::error(lgl::errc::bad_input,
                     "--route must be enumeration, nongenerators, or both");
}

int cmd_lattice_check(Globals& G, const std::string& ref) {
    lgl::io::Loader loader(G.fixtures);
    lgl::LatticePtr l;
    try {
        l = loader.lattice(ref);
    } catch (const lgl::error& e) {
        if (e.kind() == lgl::errc::no_meet || e.kind() == lgl::errc::no_join ||
            e.kind() == lgl::errc::order_cycle) {
            if (G.json_out)
                emit(json{{"valid", false}, {"reason", e.what()}});
            else
                std::printf("invalid: %s\n", e.what());
            return 1;
        }
        throw;
    }
    if (G.json_out) {
        emit(json{{"valid", true},
                  {"name", l->name()},
                  {"elements", l->size()},
                  {"distributive", l->distributive()},
                  {"chain", l->is_chain()}});
    } else {
        std::string line = "valid";
        if (l->distributive()) line += ", distributive";
        if (l->is_chain()) line += ", chain";
        std::printf("%s\n", line.c_str());
    }
    return 0;
}

int cmd_group_info(Globals& G, const std::string& ref) {
    lgl::io::Loader loader(G.fixtures);
    lgl::GroupPtr g = loader.group(ref);
    std::uint64_t subgroups = 0;
    bool counted = g->order() <= 100;
    if (counted) subgroups = g->all_subgroups().size();
    if (G.json_out) {
        json j{{"name", g->name()}, {"order", g->order()}, {"abelian", g->is_abelian()}};
        j["subgroups"] = counted ? json(subgroups) : json();
        emit(j);
    } else {
        std::printf("%s: order %zu, %s", g->name().c_str(), g->order(),
                    g->is_abelian() ? "abelian" : "non-abelian");
        if (counted) std::printf(", %llu subgroups", (unsigned long long)subgroups);
        std::printf("\n");
    }
    return 0;
}

int cmd_lsub_check(Globals& G, const std::string& ref, const std::string& mode) {
    lgl::io::Loader loader(G.fixtures);
    lgl::LSubset m = loader.lsubset(ref);
    lgl::LSubgroupWitness w = lgl::check_lsubgroup(m, parse_mode(mode));
    std::string detail;
    if (w.bad_level)
        detail = "level '" + m.lattice().label(*w.bad_level) + "' is not a subgroup";
    if (w.bad_pair) {
        if (!detail.empty()) detail += "; ";
        detail += "product escapes at (" + m.group().label(w.bad_pair->first) + ", " +
                  m.group().label(w.bad_pair->second) + ")";
    }
    if (w.bad_inverse) {
        if (!detail.empty()) detail += "; ";
        detail += "inverse value differs at " + m.group().label(*w.bad_inverse);
    }
    if (G.json_out) {
        json j{{"lsubgroup", w.verdict}, {"mode", lgl::lcheck_mode_name(w.mode)}};
        j["detail"] = w.verdict ? json() : json(detail);
        emit(j);
    } else if (w.verdict) {
        std::printf("lsubgroup: true\n");
    } else {
        std::printf("lsubgroup: false (%s)\n", detail.c_str());
    }
    return w.verdict ? 0 : 1;
}

int cmd_gen(Globals& G, const std::string& mu_ref, const std::string& points) {
    lgl::io::Loader loader(G.fixtures);
    lgl::LSubset mu = loader.lsubset(mu_ref);
    lgl::LSubset eta =
        lgl::LSubset::constant(mu.group_ptr(), mu.lattice_ptr(), mu.lattice().bottom());
    for (auto [value, element] : parse_points(points, mu))
        eta = eta.join(lgl::LSubset::point(mu.group_ptr(), mu.lattice_ptr(), element, value));
    lgl::LSubset span = lgl::generated(eta, mu);
    if (G.json_out)
        emit(lsubset_json(loader, span, mu_ref));
    else
        print_lsubset(span);
    return 0;
}

int cmd_nilpotency(Globals& G, const std::string& mu_ref) {
    lgl::io::Loader loader(G.fixtures);
    lgl::LSubset mu = loader.lsubset(mu_ref);
    if (mu.tip() == mu.tail()) {
        if (G.json_out)
            emit(json{{"class", json()}, {"reason", "tip equals tail"}});
        else
            std::printf("class: undefined (tip equals tail)\n");
        return 0;
    }
    lgl::CentralChain cc = lgl::central_chain(mu);
    if (G.json_out) {
        json j{{"stages", cc.stages.size()}, {"stabilized", cc.stabilized}};
        j["class"] = cc.class_index ? json(*cc.class_index) : json();
        emit(j);
    } else {
        if (cc.class_index)
            std::printf("class: %zu\n", *cc.class_index);
        else
            std::printf("class: none (chain stabilizes above the trivial member)\n");
        std::printf("stages: %zu\n", cc.stages.size());
    }
    return 0;
}

int cmd_normalizer(Globals& G, const std::string& eta_ref, const std::string& mu_ref) {
    lgl::io::Loader loader(G.fixtures);
    lgl::LSubset eta = loader.lsubset(eta_ref);
    lgl::LSubset mu = loader.lsubset(mu_ref);
    lgl::LSubset n = lgl::normalizer(eta, mu);
    if (G.json_out)
        emit(lsubset_json(loader, n, mu_ref));
    else
        print_lsubset(n);
    return 0;
}

int cmd_closure(Globals& G, const std::string& eta_ref, const std::string& mu_ref, bool series) {
    lgl::io::Loader loader(G.fixtures);
    lgl::LSubset eta = loader.lsubset(eta_ref);
    lgl::LSubset mu = loader.lsubset(mu_ref);
    lgl::LSubset nc = lgl::normal_closure(eta, mu);
    if (G.json_out) {
        json j = lsubset_json(loader, nc, mu_ref);
        if (series) {
            lgl::ClosureSeries cs = lgl::closure_series(eta, mu);
            j["series"] = json{{"stages", cs.stages.size()}, {"stabilized", cs.stabilized}};
        }
        emit(j);
    } else {
        print_lsubset(nc);
        if (series) {
            lgl::ClosureSeries cs = lgl::closure_series(eta, mu);
            std::printf("series stages: %zu (%s)\n", cs.stages.size(),
                        cs.stabilized ? "stabilized" : "descending");
        }
    }
    return 0;
}

int cmd_maximal(Globals& G, const std::string& eta_ref, const std::string& mu_ref) {
    lgl::io::Loader loader(G.fixtures);
    lgl::LSubset eta = loader.lsubset(eta_ref);
    lgl::LSubset mu = loader.lsubset(mu_ref);
    lgl::MaximalityCertificate cert = lgl::is_maximal(eta, mu, box_budget(G));
    if (G.json_out) {
        json j{{"maximal", cert.verdict}, {"box", cert.box_size}, {"survivors", cert.survivors}};
        j["reason"] = cert.reason.empty() ? json() : json(cert.reason);
        j["strict_intermediate"] =
            cert.strict_intermediate ? values_of(*cert.strict_intermediate) : json();
        emit(j);
    } else {
        std::printf("maximal: %s (box %llu, survivors %llu)\n", cert.verdict ? "true" : "false",
                    (unsigned long long)cert.box_size, (unsigned long long)cert.survivors);
        if (!cert.reason.empty()) std::printf("reason: %s\n", cert.reason.c_str());
        if (cert.strict_intermediate) {
            std::printf("strictly between:\n");
            print_lsubset(*cert.strict_intermediate);
        }
    }
    return cert.verdict ? 0 : 1;
}

int cmd_frattini(Globals& G, const std::string& mu_ref, const std::string& route) {
    lgl::io::Loader loader(G.fixtures);
    lgl::LSubset mu = loader.lsubset(mu_ref);
    lgl::LSubset f = lgl::frattini(mu, box_budget(G), parse_route(route));
    if (G.json_out)
        emit(lsubset_json(loader, f, mu_ref));
    else
        print_lsubset(f);
    return 0;
}

int cmd_fingen(Globals& G, const std::string& mu_ref, std::size_t k_max) {
    lgl::io::Loader loader(G.fixtures);
    lgl::LSubset mu = loader.lsubset(mu_ref);
    lgl::GeneratingSet gs = lgl::generating_points(mu, k_max, box_budget(G));
    auto format = [&](const std::vector<lgl::LPoint>& pts) {
        std::string s;
        for (const auto& p : pts) {
            if (!s.empty()) s += ", ";
            s += mu.lattice().label(p.value) + "@" + mu.group().label(p.element);
        }
        return s;
    };
    if (G.json_out) {
        json pts = json::array();
        for (const auto& p : gs.points)
            pts.push_back(mu.lattice().label(p.value) + "@" + mu.group().label(p.element));
        json j{{"points", pts}, {"complete", gs.complete}};
        if (gs.minimal) {
            json mins = json::array();
            for (const auto& p : *gs.minimal)
                mins.push_back(mu.lattice().label(p.value) + "@" + mu.group().label(p.element));
            j["minimal"] = mins;
        } else {
            j["minimal"] = json();
        }
        emit(j);
    } else {
        std::printf("points: %s\n", format(gs.points).c_str());
        std::printf("complete: %s\n", gs.complete ? "true" : "false");
        if (gs.minimal) std::printf("minimal: %s\n", format(*gs.minimal).c_str());
    }
    return gs.complete ? 0 : 1;
}

int cmd_verify(Globals& G, bool list, const std::string& suite, std::uint64_t cases,
               bool have_replay, std::uint64_t replay_idx) {
    namespace V = lgl::verify;
    if (list) {
        if (G.json_out) {
            json rows = json::array();
            for (const auto& s : V::suites())
                rows.push_back(json{{"id", s.id},
                                    {"result", s.result},
                                    {"covers", s.covers},
                                    {"description", s.description}});
            emit(rows);
        } else {
            for (const auto& s : V::suites())
                std::printf("%-16s %-18s %s\n", s.id.c_str(),
                            s.result.empty() ? "-" : s.result.c_str(), s.description.c_str());
        }
        return 0;
    }
    if (suite.empty())
        throw lgl::error(lgl::errc::bad_input, "verify needs --suite ID or --list");
    if (have_replay) {
        auto v = V::replay_case(suite, G.seed, replay_idx);
        if (G.json_out) {
            json j{{"schema", 1}, {"suite_id", suite}, {"seed", G.seed},
                   {"case_index", replay_idx}};
            j["violation"] = v ? json{{"case_index", v->case_index},
                                      {"case_seed", v->case_seed},
                                      {"input", v->input},
                                      {"detail", v->detail}}
                               : json();
            emit(j);
        } else if (v) {
            std::printf("case %llu (seed %llu): %s\n", (unsigned long long)v->case_index,
                        (unsigned long long)v->case_seed, v->detail.c_str());
            std::printf("input: %s\n", v->input.dump().c_str());
        } else {
            std::printf("case %llu passes\n", (unsigned long long)replay_idx);
        }
        return v ? 1 : 0;
    }
    V::Report rep = V::run_suite(suite, G.seed, cases, G.budget, G.threads);
    if (G.json_out) {
        emit(V::report_to_json(rep));
    } else {
        std::printf("suite %s: %llu cases, %zu violations, %s, %llu ms\n", rep.suite_id.c_str(),
                    (unsigned long long)rep.cases_run, rep.violations.size(),
                    rep.complete ? "complete" : "partial", (unsigned long long)rep.elapsed_ms);
        for (const auto& v : rep.violations) {
            std::printf("  case %llu (seed %llu): %s\n", (unsigned long long)v.case_index,
                        (unsigned long long)v.case_seed, v.detail.c_str());
            std::printf("    input: %s\n", v.input.dump().c_str());
        }
    }
    if (!rep.violations.empty()) return 1;
    return rep.complete ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lattice-valued subgroup toolkit"};
    app.require_subcommand(1);

    Globals G;
    app.add_flag("--json", G.json_out, "emit machine-readable JSON");
    app.add_option("--threads", G.threads, "worker thread count")->envname("LGL_THREADS");
    app.add_option("--budget", G.budget,
                   "cap enumeration steps (box walks) or cases (verify)");
    app.add_option("--seed", G.seed, "seed for the randomized suites");
    app.add_option("--fixtures", G.fixtures, "root directory for file references");

    auto* lat = app.add_subcommand("lattice", "lattice operations");
    lat->require_subcommand(1);
    lat->fallthrough();
    auto* lat_check = lat->add_subcommand("check", "validate a lattice");
    lat_check->fallthrough();
    std::string lat_file;
    lat_check->add_option("file", lat_file, "lattice file or built-in name")->required();

    auto* grp = app.add_subcommand("group", "group operations");
    grp->require_subcommand(1);
    grp->fallthrough();
    auto* grp_info = grp->add_subcommand("info", "summarize a group");
    grp_info->fallthrough();
    std::string grp_file;
    grp_info->add_option("file", grp_file, "group file or built-in name")->required();

    auto* lsub = app.add_subcommand("lsub", "lattice-valued map operations");
    lsub->require_subcommand(1);
    lsub->fallthrough();
    auto* lsub_check = lsub->add_subcommand("check", "test the subgroup laws");
    lsub_check->fallthrough();
    std::string lsub_file, lsub_mode = "pointwise";
    lsub_check->add_option("file", lsub_file, "map file or built-in name")->required();
    lsub_check->add_option("--mode", lsub_mode, "pointwise, levels, or strong_levels");

    auto* gen = app.add_subcommand("gen", "span of lattice-valued points inside an ambient map");
    gen->fallthrough();
    std::string gen_mu, gen_points;
    gen->add_option("--mu", gen_mu, "ambient map")->required();
    gen->add_option("--points", gen_points, "comma-separated value@element points")->required();

    auto* nil = app.add_subcommand("nilpotency", "descending central chain and class");
    nil->fallthrough();
    std::string nil_mu;
    nil->add_option("--mu", nil_mu, "map to analyze")->required();

    auto* nor = app.add_subcommand("normalizer", "normalizer of a member inside an ambient map");
    nor->fallthrough();
    std::string nor_eta, nor_mu;
    nor->add_option("--eta", nor_eta, "member map")->required();
    nor->add_option("--mu", nor_mu, "ambient map")->required();

    auto* clo = app.add_subcommand("closure", "least normal member containing a map");
    clo->fallthrough();
    std::string clo_eta, clo_mu;
    bool clo_series = false;
    clo->add_option("--eta", clo_eta, "member map")->required();
    clo->add_option("--mu", clo_mu, "ambient map")->required();
    clo->add_flag("--series", clo_series, "also report the iterated closure series");

    auto* mx = app.add_subcommand("maximal", "certify that a member is maximal");
    mx->fallthrough();
    std::string mx_eta, mx_mu;
    mx->add_option("--eta", mx_eta, "member map")->required();
    mx->add_option("--mu", mx_mu, "ambient map")->required();

    auto* fr = app.add_subcommand("frattini", "meet of the maximal members");
    fr->fallthrough();
    std::string fr_mu, fr_route = "enumeration";
    fr->add_option("--mu", fr_mu, "ambient map")->required();
    fr->add_option("--route", fr_route, "enumeration, nongenerators, or both");

    auto* fg = app.add_subcommand("fingen", "generating points of a map");
    fg->fallthrough();
    std::string fg_mu;
    std::size_t fg_kmax = 0;
    fg->add_option("--mu", fg_mu, "map to generate")->required();
    fg->add_option("--k-max", fg_kmax, "also search for a minimum set up to this size");

    auto* vf = app.add_subcommand("verify", "run randomized law suites");
    vf->fallthrough();
    bool vf_list = false;
    std::string vf_suite;
    std::uint64_t vf_cases = 200, vf_replay = 0;
    vf->add_flag("--list", vf_list, "list the registered suites");
    vf->add_option("--suite", vf_suite, "suite id");
    vf->add_option("--cases", vf_cases, "cases to run (default 200)");
    auto* replay_opt = vf->add_option("--replay", vf_replay, "re-run one case by index");

    int rc = 0;
    try {
        app.parse(argc, argv);
        if (*lat_check)
            rc = cmd_lattice_check(G, lat_file);
        else if (*grp_info)
            rc = cmd_group_info(G, grp_file);
        else if (*lsub_check)
            rc = cmd_lsub_check(G, lsub_file, lsub_mode);
        else if (*gen)
            rc = cmd_gen(G, gen_mu, gen_points);
        else if (*nil)
            rc = cmd_nilpotency(G, nil_mu);
        else if (*nor)
            rc = cmd_normalizer(G, nor_eta, nor_mu);
        else if (*clo)
            rc = cmd_closure(G, clo_eta, clo_mu, clo_series);
        else if (*mx)
            rc = cmd_maximal(G, mx_eta, mx_mu);
        else if (*fr)
            rc = cmd_frattini(G, fr_mu, fr_route);
        else if (*fg)
            rc = cmd_fingen(G, fg_mu, fg_kmax);
        else if (*vf)
            rc = cmd_verify(G, vf_list, vf_suite, vf_cases, replay_opt->count() > 0, vf_replay);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const lgl::error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return e.kind() == lgl::errc::budget_exceeded ? 3 : 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return rc;
}
