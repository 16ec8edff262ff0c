// Command-line front end: orbit tables, closure diagrams, Hilbert series, syzygy terms,
// Bott's rule and the fixture verifier.

#include "vinberg/verify.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cctype>
#include <fstream>
#include <set>
#include <iostream>
#include <thread>

using namespace vinberg;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMismatch = 2;
constexpr int kExitFailure = 3;

std::string root_string(const IntVec& v) {
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
    return s + ")";
}

std::string rep_string(const CaseModel& m, const OrbitRecord& o) {
    std::string s;
    for (int p = 0; p < m.graded().dim_g1(); ++p) {
        long long c = o.rep[p];
        if (c == 0) continue;
        std::string term = root_string(m.rs().root(m.graded().g1()[p]));
        if (c < 0) s += "-";
        else if (!s.empty()) s += "+";
        if (c != 1 && c != -1) s += std::to_string(c < 0 ? -c : c) + "*";
        s += term;
    }
    return s.empty() ? "0" : s;
}

CaseInfo need_case(const std::string& name) {
    auto c = find_case(name);
    if (!c) throw CLI::ValidationError("case", "unknown case " + name + " (try list-cases)");
    return *c;
}

json irrep_json(const CaseModel& m, const LeviIrrep& v) {
    json j{{"grade", v.grade}, {"levi_weight", v.hw}};
    if (auto t = to_gl_tuple(m.gl_labels(), v)) j["gl"] = tuple_string(*t);
    return j;
}

int orbit_from_options(CaseModel& m, int orbit, int paper_orbit) {
    if (paper_orbit >= 0) {
        auto fx = load_fixture(m.info().name);
        auto om = match_orbits(m, fx);
        int j = computed_index(fx, om, paper_orbit);
        if (j < 0) throw std::runtime_error("fixture orbit " + std::to_string(paper_orbit) + " has no computed match");
        return j;
    }
    if (orbit < 0 || orbit >= (int)m.orbits().size()) throw std::runtime_error("orbit index out of range");
    return orbit;
}

int report_verification(const CaseReport& r, bool strict) {
    for (const auto& c : r.cells)
        if (c.status != CellStatus::Match)
            std::cerr << r.name << " " << c.table << " " << c.key << ": expected " << c.expected << ", computed "
                      << c.computed << " [" << status_name(c.status) << (c.note.empty() ? "" : " " + c.note) << "]\n";
    if (!r.error.empty()) return kExitFailure;
    return r.pass(strict) ? kExitPass : kExitMismatch;
}

// ---- subcommands ----

int cmd_list_cases(bool as_json) {
    json out = json::array();
    for (const auto& c : case_catalog()) {
        auto rs = std::make_shared<const RootSystem>(build_root_system(c.type));
        GradedLie gl(rs, c.node);
        json comps = json::array();
        for (auto& comp : gl.levi_components()) {
            json nodes = json::array();
            for (int k : comp) nodes.push_back(k + 1);
            comps.push_back(nodes);
        }
        out.push_back({{"case", c.name}, {"type", c.type.name()}, {"node", c.node}, {"dim_g1", gl.dim_g1()},
                       {"levi_components", comps}});
    }
    if (as_json) std::cout << out.dump(2) << "\n";
    else
        for (auto& r : out)
            std::cout << r["case"].get<std::string>() << "  " << r["type"].get<std::string>() << " node "
                      << r["node"] << "  dim g1 = " << r["dim_g1"] << "  Levi " << r["levi_components"].dump() << "\n";
    return kExitPass;
}

int cmd_grade(const std::string& name, bool as_json) {
    auto c = need_case(name);
    auto rs = std::make_shared<const RootSystem>(build_root_system(c.type));
    GradedLie gl(rs, c.node);
    json pieces = json::object();
    for (auto [i, d] : gl.dims()) pieces[std::to_string(i)] = d;
    json g1 = json::array();
    for (int r : gl.g1()) g1.push_back(rs->root(r));
    json out{{"case", c.name}, {"dims", pieces}, {"levi_nodes", json::array()}, {"g1_roots", g1}};
    for (int k : gl.levi_nodes()) out["levi_nodes"].push_back(k + 1);
    if (as_json) {
        std::cout << out.dump(2) << "\n";
        return kExitPass;
    }
    std::cout << c.name << ": " << c.type.name() << " graded by node " << c.node << "\n";
    for (auto [i, d] : gl.dims()) std::cout << "  dim g_" << i << " = " << d << "\n";
    std::cout << "  g_1 roots (by height):";
    for (int r : gl.g1()) std::cout << " " << root_string(rs->root(r));
    std::cout << "\n";
    return kExitPass;
}

int cmd_orbits(const std::string& name, bool as_json, bool verify, bool strict) {
    CaseModel m(need_case(name));
    std::optional<json> fx;
    std::optional<OrbitMatch> om;
    if (verify) {
        fx = load_fixture(m.info().name);
        om = match_orbits(m, *fx);
    }
    auto fixture_index = [&](int j) -> int {
        if (!om) return -1;
        for (std::size_t k = 0; k < om->to_computed.size(); ++k)
            if (om->to_computed[k] == j) return (*fx)["orbits"][k]["i"];
        return -1;
    };
    json out = json::array();
    for (const auto& o : m.orbits()) {
        json j{{"index", o.index}, {"label", o.label}, {"dim", o.dim}, {"representative", rep_string(m, o)},
               {"signature", o.signature}};
        if (om) j["fixture_index"] = fixture_index(o.index);
        out.push_back(j);
    }
    if (as_json) std::cout << out.dump(2) << "\n";
    else {
        std::cout << m.info().name << ": " << m.orbits().size() << " orbits\n";
        for (auto& j : out) {
            std::cout << "  O" << j["index"] << "  " << j["label"].get<std::string>() << "  dim " << j["dim"] << "  "
                      << j["representative"].get<std::string>();
            if (j.contains("fixture_index")) {
                int fi = j["fixture_index"];
                std::cout << (fi >= 0 ? "  [fixture " + std::to_string(fi) + "]" : "  [not in fixture]");
            }
            std::cout << "\n";
        }
    }
    if (!verify) return kExitPass;
    CaseReport r;
    r.name = m.info().name;
    verify_orbits(m, *fx, *om, r);
    return report_verification(r, strict);
}

int cmd_hasse(const std::string& name, bool as_json, const std::string& dot_path, bool verify, bool strict) {
    CaseModel m(need_case(name));
    const auto& h = m.hasse_diagram();
    if (!dot_path.empty()) {
        std::ofstream f(dot_path);
        if (!f) throw std::runtime_error("cannot write " + dot_path);
        f << hasse_dot(h, m.info().name);
    }
    if (as_json) {
        json e = json::array();
        for (auto [a, b] : h.edges) e.push_back({a, b});
        std::cout << json{{"case", m.info().name}, {"dims", h.dims}, {"edges", e}}.dump(2) << "\n";
    } else if (dot_path.empty())
        std::cout << hasse_dot(h, m.info().name);
    if (!verify) return kExitPass;
    auto fx = load_fixture(m.info().name);
    auto om = match_orbits(m, fx);
    CaseReport r;
    r.name = m.info().name;
    verify_hasse(m, fx, om, r);
    return report_verification(r, strict);
}

json hilbert_json(const Desingularization& d) {
    json num = json::array();
    for (auto& c : d.hilbert.numerator) num.push_back(c.str());
    json eta = json::array();
    for (int p = 0; p < 64; ++p)
        if (d.spec.eta >> p & 1) eta.push_back(p);
    json par = json::array();
    for (int k : d.spec.parabolic) par.push_back(k + 1);
    return {{"dim", d.hilbert.dim},         {"codim", d.hilbert.codim},       {"numerator", num},
            {"numerator_text", poly_string(d.hilbert.numerator)},             {"degree", d.hilbert.degree.str()},
            {"terms_used", d.hilbert.terms_used}, {"flags", d.hilbert.flags}, {"eta_positions", eta},
            {"parabolic_levi_nodes", par},  {"base_dim", d.spec.base_dim}};
}

int cmd_hilbert(const std::string& name, int orbit, int paper_orbit, bool as_json, bool verify) {
    CaseModel m(need_case(name));
    std::vector<int> which;
    if (orbit >= 0 || paper_orbit >= 0) which.push_back(orbit_from_options(m, orbit, paper_orbit));
    else
        for (auto& o : m.orbits()) which.push_back(o.index);
    json out = json::array();
    for (int j : which) {
        auto d = m.desingularization(j);
        json row{{"orbit", j}, {"label", m.orbits()[j].label}};
        if (d) row.update(hilbert_json(*d));
        else row["error"] = "no B_0-stable desingularization";
        out.push_back(row);
    }
    if (as_json) std::cout << out.dump(2) << "\n";
    else
        for (auto& r : out) {
            std::cout << "O" << r["orbit"] << "  " << r["label"].get<std::string>();
            if (r.contains("error")) std::cout << "  " << r["error"].get<std::string>() << "\n";
            else
                std::cout << "  dim " << r["dim"] << "  degree " << r["degree"].get<std::string>() << "  numerator "
                          << r["numerator_text"].get<std::string>() << "\n";
        }
    if (!verify) return kExitPass;
    auto fx = load_fixture(m.info().name);
    auto om = match_orbits(m, fx);
    CaseReport r;
    r.name = m.info().name;
    verify_hilbert(m, fx, om, r);
    return report_verification(r, false);
}

int cmd_resolve(const std::string& name, int orbit, int paper_orbit, bool dual, int normality, bool as_json) {
    CaseModel m(need_case(name));
    const int j = orbit_from_options(m, orbit, paper_orbit);
    auto d = m.desingularization(j);
    if (!d) throw std::runtime_error("no B_0-stable desingularization for this orbit");
    ComplexTerms ct = dual ? complex_terms(m.levi(), d->spec, duality_twist(m.levi(), d->spec)) : *m.complex(j);
    auto ranks = betti_ranks(m.levi(), ct);
    json terms = json::array();
    for (auto& s : ct.summands)
        terms.push_back({{"i", s.i}, {"d", s.d}, {"mult", s.mult}, {"irrep", irrep_json(m, s.irrep)},
                         {"placement_ambiguous", ct.ambiguous.count({s.d, s.irrep}) > 0}});
    json rk = json::array();
    for (auto& x : ranks) rk.push_back(x.str());
    json flags = ct.flags;
    if (ct.cancelled) flags.push_back("cancelled");
    json out{{"case", m.info().name}, {"orbit", j},         {"dual", dual},
             {"terms", terms},         {"ranks", rk},       {"palindromic", is_palindromic(m.levi(), ct)},
             {"flags", flags},         {"hilbert", hilbert_json(*d)}};
    if (normality > 0) {
        auto rep = prop38_check(m.levi(), d->spec, normality);
        json hits = json::object(), f0 = json::array(), f0_amb = json::array();
        for (auto& [jj, s] : rep.normal_hits) {
            json a = json::array();
            for (auto& v : s) a.push_back(irrep_json(m, v));
            hits[std::to_string(jj)] = a;
        }
        for (auto& s : rep.f0_positive) f0.push_back({{"d", s.d}, {"irrep", irrep_json(m, s.irrep)}});
        for (auto& s : rep.f0_ambiguous) f0_amb.push_back({{"d", s.d}, {"irrep", irrep_json(m, s.irrep)}});
        out["normality"] = {{"j_max", normality}, {"rational_clean", rep.rational_clean()},
                            {"normal_clean", rep.normal_clean()}, {"hits", hits}, {"f0_positive_degree", f0},
                            {"f0_positive_degree_ambiguous", f0_amb}};
    }
    if (as_json) {
        std::cout << out.dump(2) << "\n";
        return kExitPass;
    }
    std::cout << m.info().name << " O" << j << " (" << m.orbits()[j].label << ", dim " << m.orbits()[j].dim << ")"
              << (dual ? " dual complex" : "") << "\n";
    for (auto& s : ct.summands)
        std::cout << (ct.ambiguous.count({s.d, s.irrep}) ? " ?F" : "  F") << s.i << "  " << (s.mult > 1 ? std::to_string(s.mult) + "*" : "") << m.irrep_string(s.irrep)
                  << "  d" << s.d << "  rank " << (m.levi().dim(s.irrep.hw) * s.mult).str() << "\n";
    std::cout << "  ranks";
    for (auto& x : ranks) std::cout << " " << x;
    std::cout << "\n  palindromic " << (out["palindromic"].get<bool>() ? "yes" : "no") << "  flags " << flags.dump()
              << "\n";
    if (!ct.ambiguous.empty()) std::cout << "  ?F: cancellation across cohomological degrees, placed by parity\n";
    if (out.contains("normality"))
        std::cout << "  normality evidence (j <= " << normality << "): "
                  << (out["normality"]["normal_clean"].get<bool>() ? "no obstruction" : "obstruction found")
                  << ", positive-degree F0 summands " << out["normality"]["f0_positive_degree"].size()
                  << " (plus " << out["normality"]["f0_positive_degree_ambiguous"].size() << " placed by parity only)\n";
    return kExitPass;
}

int cmd_bott(const std::string& space, const std::string& weight) {
    json out;
    if (space.rfind("grass:", 0) == 0) {
        auto nums = detail::parse_ints(space.substr(6));
        if (nums.size() != 2) throw CLI::ValidationError("--space", "expected grass:r,n");
        const int r = nums[0], n = nums[1];
        auto t = parse_tuple(weight);
        if (t.size() != 2) throw CLI::ValidationError("--weight", "expected \"lambda;mu\"");
        auto res = bott_gl(n, r, t[0], t[1]);
        out = {{"space", space}, {"lambda", t[0]}, {"mu", t[1]}};
        if (res) out.update({{"degree", res->degree}, {"weight", res->weight}, {"vanishes", false}});
        else out["vanishes"] = true;
    } else {
        SimpleType st = parse_simple_type(space);
        RootSystem rs(st);
        auto w = detail::parse_ints(weight);
        if ((int)w.size() != rs.rank()) throw CLI::ValidationError("--weight", "weight length does not match the rank");
        auto res = bott_gb(rs, w);
        out = {{"space", space + "/B"}, {"weight", w}};
        if (res) out.update({{"degree", res->degree}, {"result", res->weight}, {"vanishes", false}});
        else out["vanishes"] = true;
    }
    std::cout << out.dump(2) << "\n";
    return kExitPass;
}

int cmd_verify_paper(std::vector<std::string> names, bool strict, int jobs, const std::string& report_path) {
    // scope: "all", a group ("G2"), or case names; duplicates collapse, catalog order is kept
    std::set<std::string> wanted;
    for (auto n : names) {
        for (char& ch : n) ch = (char)std::toupper((unsigned char)ch);
        if (n == "ALL") n = "all";
        bool hit = false;
        for (const auto& c : case_catalog())
            if (n == "all" || n == c.type.name() || (find_case(n) && find_case(n)->name == c.name)) {
                wanted.insert(c.name);
                hit = true;
            }
        if (!hit) throw CLI::ValidationError("scope", "unknown case or group " + n);
    }
    std::vector<CaseInfo> cases;
    for (const auto& c : case_catalog())
        if (wanted.count(c.name)) cases.push_back(c);
    std::vector<CaseReport> reports(cases.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k; (k = next++) < cases.size();) {
            try {
                reports[k] = verify_case(cases[k], load_fixture(cases[k].name));
            } catch (const std::exception& e) {
                reports[k].name = cases[k].name;
                reports[k].error = e.what();
            }
        }
    };
    jobs = std::max(1, std::min<int>(jobs, (int)cases.size()));
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    auto md = markdown_report(reports, strict);
    if (report_path.empty()) std::cout << md;
    else {
        std::ofstream f(report_path);
        if (!f) throw std::runtime_error("cannot write " + report_path);
        f << md;
    }
    int code = kExitPass;
    for (auto& r : reports) {
        std::cerr << r.name << ": " << (r.pass(strict) ? "pass" : "FAIL") << " (" << r.count(CellStatus::Match)
                  << " match, " << r.count(CellStatus::Mismatch) << " mismatch, " << r.count(CellStatus::Conflict)
                  << " logged conflict, " << r.count(CellStatus::Unproven) << " unproven)\n";
        if (!r.error.empty()) code = kExitFailure;
        else if (!r.pass(strict) && code == kExitPass) code = kExitMismatch;
    }
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Orbits, closures, Hilbert series and syzygy terms for gradings of E6, F4 and G2"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    std::string case_name, dot_path, space, weight, report_path;
    bool verify = false, strict = false, dual = false;
    int orbit = -1, paper_orbit = -1, jobs = (int)std::max(1u, std::thread::hardware_concurrency()), normality = 0;
    std::vector<std::string> cases;

    auto* list = app.add_subcommand("list-cases", "list the ten gradings");
    auto* grade = app.add_subcommand("grade", "graded pieces and g_1 roots");
    grade->add_option("case", case_name, "e.g. E6.4")->required();
    auto* orbits = app.add_subcommand("orbits", "orbit classification");
    orbits->add_option("case", case_name)->required();
    orbits->add_flag("--verify", verify, "compare with the fixture");
    orbits->add_flag("--strict", strict);
    auto* hasse_cmd = app.add_subcommand("hasse", "closure order");
    hasse_cmd->add_option("case", case_name)->required();
    hasse_cmd->add_option("--dot", dot_path, "write a DOT file");
    hasse_cmd->add_flag("--verify", verify);
    hasse_cmd->add_flag("--strict", strict, "fail on fixture edges the toric-limit test cannot certify");
    auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert numerators and degrees");
    hilbert_cmd->add_option("case", case_name)->required();
    auto* o1 = hilbert_cmd->add_option("--orbit", orbit, "computed orbit index");
    hilbert_cmd->add_option("--paper-orbit", paper_orbit, "orbit index in the fixture table")->excludes(o1);
    hilbert_cmd->add_flag("--verify", verify);
    auto* resolve = app.add_subcommand("resolve", "Euler-level terms of the syzygy complex");
    resolve->add_option("case", case_name)->required();
    auto* o2 = resolve->add_option("--orbit", orbit, "computed orbit index");
    auto* p2 = resolve->add_option("--paper-orbit", paper_orbit, "orbit index in the fixture table")->excludes(o2);
    resolve->add_flag("--dual", dual, "twist giving the dual complex");
    resolve->add_option("--normality", normality, "run the normality evidence check up to this j");
    auto* bott = app.add_subcommand("bott", "Bott's rule");
    bott->add_option("--space", space, "grass:r,n or a simple type such as E6")->required();
    bott->add_option("--weight", weight, "\"lambda;mu\" for grass, fundamental coordinates otherwise")->required();
    auto* verify_paper = app.add_subcommand("verify-paper", "check every fixture table");
    verify_paper->add_option("scope", cases, "all, a group such as G2, or case names")->required();
    verify_paper->add_flag("--strict", strict);
    verify_paper->add_option("--jobs", jobs, "parallel cases")->check(CLI::PositiveNumber);
    verify_paper->add_option("--report", report_path, "write the Markdown report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    if (resolve->parsed() && orbit < 0 && paper_orbit < 0) {
        std::cerr << "resolve: give --orbit or --paper-orbit\n";
        return 1;
    }
    (void)p2;
    try {
        if (list->parsed()) return cmd_list_cases(as_json);
        if (grade->parsed()) return cmd_grade(case_name, as_json);
        if (orbits->parsed()) return cmd_orbits(case_name, as_json, verify, strict);
        if (hasse_cmd->parsed()) return cmd_hasse(case_name, as_json, dot_path, verify, strict);
        if (hilbert_cmd->parsed()) return cmd_hilbert(case_name, orbit, paper_orbit, as_json, verify);
        if (resolve->parsed()) return cmd_resolve(case_name, orbit, paper_orbit, dual, normality, as_json);
        if (bott->parsed()) return cmd_bott(space, weight);
        if (verify_paper->parsed()) return cmd_verify_paper(cases, strict, jobs, report_path);
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitPass;
}
