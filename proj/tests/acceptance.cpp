// End-to-end acceptance run: one PASS/FAIL line per criterion, followed by indented
// analysis lines. Exit status is nonzero when any criterion fails.

#include "vinberg/verify.hpp"

#include <chrono>
#include <iostream>

using namespace vinberg;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Loaded {
    std::unique_ptr<CaseModel> model;
    json fx;
    OrbitMatch match;
};

std::map<std::string, Loaded> g_cases;
double g_classify_seconds = 0;

Loaded& get(const std::string& name) { return g_cases.at(name); }

struct Criterion {
    int id;
    bool pass = true;
    std::vector<std::string> notes;
    void fail(const std::string& why) {
        pass = false;
        notes.push_back("FAIL " + why);
    }
    void note(const std::string& s) { notes.push_back(s); }
    void expect(bool ok, const std::string& what) {
        if (!ok) fail(what);
    }
};

std::string ms(std::multiset<int> s) {
    std::string out = "{";
    for (int x : s) out += (out.size() > 1 ? "," : "") + std::to_string(x);
    return out + "}";
}

int computed(const std::string& name, int paper_index) {
    auto& c = get(name);
    return computed_index(c.fx, c.match, paper_index);
}

BigInt binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// ---- criteria ----

void criterion_orbits(Criterion& c) {
    const std::map<std::string, std::multiset<int>> dims{
        {"E6.1", {0, 11, 16}},        {"E6.2", {0, 10, 15, 19, 20}}, {"E6.3", {0, 8, 11, 12, 15, 16, 18, 20}},
        {"F4.1", {0, 7, 10, 13, 14}}, {"F4.3", {0, 4, 6}},           {"F4.4", {0, 7, 8}},
        {"G2.1", {0, 2}},             {"G2.2", {0, 2, 3, 4}}};
    for (auto& [name, L] : g_cases) {
        std::multiset<int> have, want;
        for (auto& o : L.model->orbits()) have.insert(o.dim);
        for (auto& row : L.fx["orbits"]) want.insert(row["dim"].get<int>());
        if (dims.count(name) && dims.at(name) != want) c.fail(name + " fixture dims disagree with the expected list");
        if (have != want || L.model->orbits().size() != L.fx["orbits"].size()) {
            c.fail(name + ": expected " + std::to_string(want.size()) + " orbits " + ms(want) + ", computed " +
                   std::to_string(have.size()) + " " + ms(have));
            if (auto conf = conflict_for(L.fx, "orbits")) c.note("  logged: " + (*conf)["detail"].get<std::string>());
        }
    }
    // the tie pattern of the 18-orbit case
    std::map<int, int> mult;
    for (auto& o : get("E6.4").model->orbits()) ++mult[o.dim];
    c.expect(get("E6.4").model->orbits().size() == 18 && mult[8] == 2 && mult[13] == 2 && mult[14] == 4,
             "E6.4 orbit count or dimension ties");
    c.expect(get("F4.2").fx["orbits"].size() == 11, "F4.2 fixture row count");
    c.note("classification of all 10 cases: " + std::to_string(g_classify_seconds) + " s (target < 60 s)");
    c.expect(g_classify_seconds < 60, "classification runtime");
}

void criterion_labels(Criterion& c) {
    int checked = 0;
    for (auto& [name, L] : g_cases) {
        CaseReport r;
        verify_orbits(*L.model, L.fx, L.match, r);
        for (auto& cell : r.cells) {
            if (cell.key.size() < 5 || cell.key.substr(cell.key.size() - 5) != ".type") continue;
            ++checked;
            if (cell.status != CellStatus::Match)
                c.fail(name + " row " + cell.key + ": expected " + cell.expected + ", computed " + cell.computed);
        }
    }
    auto label = [](const std::string& n, int paper) { return get(n).model->orbits()[computed(n, paper)].label; };
    c.expect(label("E6.4", 17) == "D4(a1)", "E6.4 orbit 17 label");
    c.expect(label("F4.2", 9) == "C3(a1)", "F4.2 orbit 9 label");
    c.expect(label("F4.2", 10) == "F4(a3)", "F4.2 orbit 10 label");
    c.note(std::to_string(checked) + " labelled fixture rows compared");
}

void criterion_hasse(Criterion& c, bool strict) {
    int certified = 0, flagged = 0;
    for (const char* name : {"E6.1", "E6.2", "E6.3", "E6.4", "F4.1", "F4.2"}) {
        auto& L = get(name);
        const auto& h = L.model->hasse_diagram();
        std::vector<std::pair<int, int>> mapped;
        for (auto& e : L.fx["hasse_edges"]) mapped.emplace_back(computed(name, e[0]), computed(name, e[1]));
        for (auto [a, b] : mapped) {
            if (a < 0 || b < 0) continue;
            if (h.rel[a][b] == Relation::Proven) ++certified;
            else {
                ++flagged;
                c.note(std::string(name) + " fixture edge " + std::to_string(a) + "-" + std::to_string(b) +
                       (h.rel[a][b] == Relation::Excluded ? " excluded by the signature test" : " not certified"));
            }
        }
        auto rec = reconcile(h, mapped);
        if (!rec.equal()) {
            c.fail(std::string(name) + " covers differ (computed indices): missing " + edges_string(rec.missing) +
                   ", extra " + edges_string(rec.extra));
            CaseReport r;
            verify_hasse(*L.model, L.fx, L.match, r);
            for (auto& cell : r.cells)
                if (cell.key == "induced order")
                    c.note(std::string("  order induced on the matched orbits: ") + cell.computed);
            if (auto conf = conflict_for(L.fx, "hasse")) c.note("  logged: " + (*conf)["detail"].get<std::string>());
        }
    }
    const int a = computed("E6.4", 9), b = computed("E6.4", 11);
    auto& h = get("E6.4").model->hasse_diagram();
    c.expect(std::count(h.edges.begin(), h.edges.end(), std::pair{a, b}) == 1, "E6.4 edge 9-11");
    c.note(std::to_string(certified) + " fixture edges certified by toric limits, " + std::to_string(flagged) + " flagged");
    if (strict) c.expect(flagged == 0, "unflagged edges under --strict");
}

void criterion_hilbert(Criterion& c) {
    const std::map<std::string, int> rows{{"E6.1", 3}, {"E6.2", 5}, {"E6.3", 8}, {"E6.4", 18}, {"F4.1", 5}, {"F4.2", 11}};
    auto t0 = Clock::now();
    bool o15_reported = false;
    for (auto [name, n] : rows) {
        auto& L = get(name);
        c.expect((int)L.fx["hilbert"].size() == n, name + " row count");
        CaseReport r;
        verify_hilbert(*L.model, L.fx, L.match, r);
        for (auto& cell : r.cells) {
            if (cell.status == CellStatus::Conflict) {
                c.note(name + " " + cell.key + ": printed " + cell.expected + ", computed " + cell.computed +
                       " (logged " + cell.note + ")");
                if (cell.note == "E6.4-O15-degree") o15_reported = true;
                else c.fail(name + " " + cell.key + " differs beyond the single permitted exception");
            } else if (cell.status != CellStatus::Match)
                c.fail(name + " " + cell.key + ": expected " + cell.expected + ", computed " + cell.computed);
        }
    }
    c.expect(o15_reported, "O15 degree conflict was not reported");
    c.note("Hilbert rows: " + std::to_string(seconds_since(t0)) + " s (target < 600 s)");
}

void criterion_grassmannian(Criterion& c) {
    // standard Young tableaux of the 3 x 3 box via hook lengths
    BigInt f = 1, hooks = 1;
    for (int i = 2; i <= 9; ++i) f *= i;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) hooks *= (3 - i) + (3 - j) - 1;
    const BigInt oracle = f / hooks;
    auto d = get("E6.2").model->desingularization(computed("E6.2", 1));
    c.expect(d && d->hilbert.degree == 42, "pipeline degree of the Gr(3,6) cone");
    c.expect(oracle == 42, "hook-length oracle");
    c.note("pipeline " + (d ? d->hilbert.degree.str() : std::string("none")) + ", hook-length oracle " + oracle.str());
}

void criterion_complexes(Criterion& c) {
    auto check = [&](const std::string& name, const std::string& cx_name) {
        auto& L = get(name);
        for (auto& cx : L.fx["complexes"]) {
            if (cx["name"] != cx_name) continue;
            const ComplexTerms* ct = L.model->complex(computed(name, cx["orbit"]));
            if (!ct) return c.fail(name + " " + cx_name + " not computed");
            auto cc = compare_complex(*L.model, L.fx, cx, *ct);
            c.expect(cc.euler, name + " " + cx_name + " Euler class");
            c.note(name + " " + cx_name + ": Euler class " + (cc.euler ? "equal" : "differs") + ", terms " +
                   (cc.exact ? "equal" : "differ"));
            return;
        }
        c.fail(name + " " + cx_name + " missing from the fixture");
    };
    auto ranks = [&](const std::string& name, int paper, std::vector<long long> want) {
        auto& L = get(name);
        auto b = betti_ranks(L.model->levi(), *L.model->complex(computed(name, paper)));
        std::vector<long long> got;
        for (auto& x : b) got.push_back((long long)x);
        std::string s;
        for (auto x : got) s += (s.empty() ? "" : ",") + std::to_string(x);
        c.expect(got == want, name + " O" + std::to_string(paper) + " ranks " + s);
        c.note(name + " O" + std::to_string(paper) + " ranks (" + s + ")");
    };
    check("E6.4", "F(16)");
    check("E6.4", "F(15)");
    ranks("E6.2", 2, {1, 20, 35, 35, 20, 1});
    ranks("E6.1", 1, {1, 10, 16, 16, 10, 1});
    check("F4.1", "F(2)");
    check("F4.1", "F(1)");
    check("G2.2", "F(1)");
    // Eagon-Northcott shape of the twisted cubic
    auto& g = get("G2.2");
    const auto* en = g.model->complex(computed("G2.2", 1));
    std::set<std::string> got;
    for (auto& s : en->summands) got.insert("F" + std::to_string(s.i) + " " + g.model->irrep_string(s.irrep) + " d" + std::to_string(s.d));
    c.expect(got.count("F1 (4,2) d2") && got.count("F2 (5,4) d3") && got.size() == 3, "G2.2 Eagon-Northcott terms");
}

void criterion_invariants(Criterion& c) {
    const std::vector<std::pair<std::string, int>> want{{"E6.4", 12}, {"F4.1", 4}, {"F4.4", 2}, {"G2.2", 4}, {"F4.2", 12}};
    for (auto& [name, deg] : want) {
        auto& L = get(name);
        auto spec = hyperdiscriminant_bundle(L.model->graded());
        auto h = hilbert_series(L.model->levi(), spec);
        const int orbit = generic_orbit(L.model->context(), L.model->orbits(), spec.eta);
        int fixture_orbit = -1;
        for (auto& inv : L.fx["invariants"])
            if (inv["kind"] == "hyperdiscriminant") fixture_orbit = computed(name, inv["orbit"]);
        c.expect(h.degree == deg, name + " hyperdiscriminant degree " + h.degree.str());
        c.expect(orbit == fixture_orbit, name + " hyperdiscriminant orbit");
        c.note(name + ": degree " + h.degree.str() + " on computed O" + std::to_string(orbit) + " (dim " +
               std::to_string(L.model->orbits()[orbit].dim) + ")");
    }
}

void criterion_properties(Criterion& c) {
    // roots and brackets
    for (const char* t : {"G2", "F4", "E6"}) {
        RootSystem rs(parse_simple_type(t));
        bool closed = true;
        for (int a = 0; a < rs.num_roots(); ++a)
            for (int b = 0; b < rs.num_roots(); ++b) {
                IntVec s = rs.root(a);
                for (int k = 0; k < rs.rank(); ++k) s[k] += rs.root(b)[k];
                if ((rs.sum_index(a, b) >= 0) != rs.is_root(s)) closed = false;
            }
        c.expect(closed, std::string(t) + " root closure");
        std::mt19937 rng(5);
        const int dim = rs.rank() + rs.num_roots();
        bool jacobi = true;
        for (int s = 0; s < 3000; ++s) {
            LieVec x{{(int)(rng() % dim), 1}}, y{{(int)(rng() % dim), 1}}, z{{(int)(rng() % dim), 1}};
            LieVec sum;
            for (auto& [k, v] : bracket(rs, x, bracket(rs, y, z))) lie_add(sum, k, v);
            for (auto& [k, v] : bracket(rs, y, bracket(rs, z, x))) lie_add(sum, k, v);
            for (auto& [k, v] : bracket(rs, z, bracket(rs, x, y))) lie_add(sum, k, v);
            if (!sum.empty()) jacobi = false;
        }
        c.expect(jacobi, std::string(t) + " Jacobi identity");
    }
    for (auto [t, order] : std::vector<std::pair<const char*, std::size_t>>{{"G2", 12}, {"F4", 1152}, {"E6", 51840}})
        c.expect(weyl_group_order(RootSystem(parse_simple_type(t))) == order, std::string("|W(") + t + ")|");

    // Bott: single degree and Serre duality, Grass(3,6) and G/B
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> coef(-5, 5);
    int grass_ok = 0;
    for (int t = 0; t < 1000; ++t) {
        Partition l(3), m(3);
        for (auto& x : l) x = coef(rng);
        for (auto& x : m) x = coef(rng);
        std::sort(l.rbegin(), l.rend());
        std::sort(m.rbegin(), m.rend());
        auto r = bott_gl(6, 3, l, m);
        auto [l2, m2] = grass_serre_dual(6, 3, l, m);
        auto d = bott_gl(6, 3, l2, m2);
        bool ok = r.has_value() == d.has_value();
        if (r && d) {
            Partition neg(r->weight.rbegin(), r->weight.rend());
            for (int& v : neg) v = -v;
            ok = ok && r->degree + d->degree == 9 && d->weight == neg && is_partition(r->weight);
        }
        grass_ok += ok;
    }
    c.expect(grass_ok == 1000, "Grass(3,6) Bott/Serre on random weights: " + std::to_string(grass_ok) + "/1000");
    for (const char* t : {"G2", "F4", "E6"}) {
        RootSystem rs(parse_simple_type(t));
        int ok_count = 0;
        for (int s = 0; s < 1000; ++s) {
            std::vector<int> w(rs.rank()), dw(rs.rank());
            for (int i = 0; i < rs.rank(); ++i) {
                w[i] = coef(rng);
                dw[i] = -w[i] - 2;
            }
            auto r = bott_gb(rs, w), d = bott_gb(rs, dw);
            bool ok = r.has_value() == d.has_value();
            if (r && d)
                ok = ok && r->degree + d->degree == rs.num_positive() &&
                     weyl_dim(rs.stype(), r->weight) == weyl_dim(rs.stype(), d->weight) &&
                     std::all_of(r->weight.begin(), r->weight.end(), [](int x) { return x >= 0; });
            ok_count += ok;
        }
        c.expect(ok_count == 1000, std::string(t) + "/B Bott/Serre on random weights: " + std::to_string(ok_count) + "/1000");
    }
    c.note("roots, brackets, Weyl orders and 4000 Bott/Serre samples checked");

    // dimension bookkeeping of every exterior and symmetric power the pipeline decomposes
    int bags = 0;
    for (auto& [name, L] : g_cases) {
        const auto& lv = L.model->levi();
        const int n = L.model->graded().dim_g1();
        const Mask all = (Mask{1} << n) - 1;
        auto ext = ext_weights(lv, all);
        auto sym = sym_weights(lv, all, 6);
        auto total = [&](const std::unordered_map<std::uint64_t, unsigned long long>& layer) {
            BigInt s = 0;
            for (auto& [w, mult] : layer)
                if (auto r = lv.dot(detail::unpack(w, lv.size()))) {
                    BigInt v = lv.dim(r->weight) * mult;
                    s += (r->degree % 2 ? -v : v);
                }
            return s;
        };
        // the weight multisets are full characters; their dotted-Weyl sums are the dimensions
        // of the dual modules, so they must equal binomial counts
        for (int k = 0; k <= n; ++k) {
            c.expect(total(ext[k]) == binom(n, k), name + " wedge^" + std::to_string(k) + " dimension");
            ++bags;
        }
        for (int k = 0; k <= 6; ++k) {
            c.expect(total(sym[k]) == binom(n + k - 1, k), name + " S^" + std::to_string(k) + " dimension");
            ++bags;
        }
    }
    for (auto dims : std::vector<std::vector<int>>{{2, 3, 3}, {2, 3}, {3, 2}, {2, 5}})
        for (int k = 0; k <= 6; ++k) {
            int n = 1;
            for (int x : dims) n *= x;
            c.expect(ext_power_decompose(dims, k).dimension() == binom(n, k), "CharacterBag wedge dimension");
            c.expect(sym_power_decompose(dims, k).dimension() == binom(n + k - 1, k), "CharacterBag sym dimension");
            bags += 2;
        }
    c.note(std::to_string(bags) + " character dimension identities");

    // palindromic term lists exactly for the orbits the fixture marks Gorenstein
    int gor = 0, nongor = 0;
    for (auto& [name, L] : g_cases) {
        for (auto& row : L.fx["orbits"]) {
            const int pi = row["i"];
            auto g = normalization_gorenstein(L.fx, pi);
            if (!g) continue;
            const int j = computed(name, pi);
            const ComplexTerms* ct = j >= 0 ? L.model->complex(j) : nullptr;
            if (!ct) continue;
            const bool pal = is_palindromic(L.model->levi(), *ct);
            (*g ? gor : nongor)++;
            if (pal != *g) {
                const std::string row_id = std::to_string(pi);
                const bool normal = fixture_flag(L.fx, row_id, "normal").value_or(true);
                const std::string cell = "singularities." + (normal ? row_id : "n(" + row_id + ")") + ".Gorenstein";
                std::string why = name + " O" + std::to_string(pi) + ": fixture Gorenstein=" + (*g ? "yes" : "no") +
                                  ", term list " + (pal ? "palindromic" : "not palindromic");
                if (auto conf = conflict_for(L.fx, cell)) why += " (logged " + (*conf)["id"].get<std::string>() + ")";
                c.fail(why);
            }
        }
    }
    c.note("Gorenstein check over " + std::to_string(gor) + " Gorenstein and " + std::to_string(nongor) +
           " non-Gorenstein fixture orbits");
}

void criterion_normality(Criterion& c) {
    auto run = [&](const std::string& name, int paper) {
        auto& L = get(name);
        const int j = computed(name, paper);
        auto d = L.model->desingularization(j);
        return prop38_check(L.model->levi(), d->spec, 4);
    };
    for (auto& row : get("E6.2").fx["orbits"]) {
        const int pi = row["i"];
        auto rep = run("E6.2", pi);
        const bool normal = fixture_flag(get("E6.2").fx, std::to_string(pi), "normal").value_or(true);
        if (normal) c.expect(rep.normal_clean() && rep.f0_positive.empty(), "E6.2 O" + std::to_string(pi) + " should be clean");
    }
    c.note("E6.2: all " + std::to_string(get("E6.2").fx["orbits"].size()) + " orbits checked for j <= 4");
    for (auto& row : get("G2.2").fx["orbits"]) {
        const int pi = row["i"];
        auto rep = run("G2.2", pi);
        if (pi == 2) {
            c.expect(!rep.f0_positive.empty(), "G2.2 O2 positive-degree F0 summand");
            for (auto& s : rep.f0_positive)
                c.note("G2.2 O2: F0 contains " + get("G2.2").model->irrep_string(s.irrep) + " in degree " + std::to_string(s.d));
        } else
            c.expect(rep.normal_clean() && rep.f0_positive.empty(), "G2.2 O" + std::to_string(pi) + " should be clean");
    }
    auto f = run("F4.2", 5);
    c.expect(!f.f0_positive.empty(), "F4.2 O5 positive-degree F0 summand");
    for (auto& s : f.f0_positive)
        c.note("F4.2 O5 (computed O" + std::to_string(computed("F4.2", 5)) + "): F0 contains " +
               get("F4.2").model->irrep_string(s.irrep) + " in degree " + std::to_string(s.d));
}

}  // namespace

int main(int argc, char** argv) {
    const bool strict = argc > 1 && std::string(argv[1]) == "--strict";
    auto t0 = Clock::now();
    for (const auto& info : case_catalog()) {
        auto t = Clock::now();
        Loaded L;
        L.model = std::make_unique<CaseModel>(info);
        g_classify_seconds += seconds_since(t);
        L.fx = load_fixture(info.name);
        L.match = match_orbits(*L.model, L.fx);
        g_cases.emplace(info.name, std::move(L));
    }

    std::vector<std::pair<const char*, void (*)(Criterion&)>> plan{
        {"orbit counts and dimension multisets", criterion_orbits},
        {"support-type labels", criterion_labels},
        {"closure diagrams", nullptr},
        {"Hilbert numerators and degrees", criterion_hilbert},
        {"Grassmannian degree against the hook-length oracle", criterion_grassmannian},
        {"Euler-level complexes", criterion_complexes},
        {"hyperdiscriminant degrees", criterion_invariants},
        {"property suites", criterion_properties},
        {"normality evidence for j <= 4", criterion_normality},
    };
    int failed = 0;
    for (std::size_t k = 0; k < plan.size(); ++k) {
        Criterion c{(int)k + 1};
        try {
            if (plan[k].second) plan[k].second(c);
            else criterion_hasse(c, strict);
        } catch (const std::exception& e) {
            c.fail(std::string("exception: ") + e.what());
        }
        std::cout << "CRITERION " << c.id << " " << (c.pass ? "PASS" : "FAIL") << ": " << plan[k].first << "\n";
        for (auto& n : c.notes) std::cout << "    " << n << "\n";
        failed += !c.pass;
    }
    std::cout << "total " << seconds_since(t0) << " s, " << failed << " of " << plan.size() << " criteria failed\n";
    return failed ? 1 : 0;
}
