#pragma once
/** @file verify.hpp
 *  @brief Cell-by-cell comparison of the pipeline against a case fixture, and the
 *         Markdown report for it.
 */

#include "vinberg/fixtures.hpp"

#include <chrono>
#include <climits>

namespace vinberg {

enum class CellStatus { Match, Mismatch, Conflict, Unproven };

inline const char* status_name(CellStatus s) {
    switch (s) {
        case CellStatus::Match: return "match";
        case CellStatus::Mismatch: return "MISMATCH";
        case CellStatus::Conflict: return "logged-conflict";
        case CellStatus::Unproven: return "unproven";
    }
    return "?";
}

struct Cell {
    std::string table, key, expected, computed;
    CellStatus status = CellStatus::Match;
    std::string note;
};

struct CaseReport {
    std::string name;
    std::vector<Cell> cells;
    std::string error;  // computational failure
    double seconds = 0;
    int count(CellStatus s) const {
        return (int)std::count_if(cells.begin(), cells.end(), [s](const Cell& c) { return c.status == s; });
    }
    /// Strict mode also rejects relations the toric-limit test could not certify.
    bool pass(bool strict) const {
        if (!error.empty() || count(CellStatus::Mismatch)) return false;
        return !strict || count(CellStatus::Unproven) == 0;
    }
};

/// Conflict entry whose "cell" field lists `cell` (comma separated).
inline const json* conflict_for(const json& fx, const std::string& cell) {
    if (!fx.contains("conflicts")) return nullptr;
    for (const auto& c : fx["conflicts"]) {
        std::stringstream ss(c.value("cell", std::string{}));
        std::string part;
        while (std::getline(ss, part, ',')) {
            while (!part.empty() && part.front() == ' ') part.erase(part.begin());
            if (part == cell) return &c;
        }
    }
    return nullptr;
}

/// "A1+~A1" and "~A1+A1" compare equal.
inline std::string canonical_type(const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string p;
    while (std::getline(ss, p, '+')) parts.push_back(p);
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (auto& q : parts) out += (out.empty() ? "" : "+") + q;
    return out;
}

inline std::string numerator_string(const std::vector<BigInt>& p) { return poly_string(p); }

inline std::string edges_string(const std::vector<std::pair<int, int>>& e) {
    std::string s;
    for (auto [a, b] : e) s += (s.empty() ? "" : " ") + std::to_string(a) + "-" + std::to_string(b);
    return s.empty() ? "(none)" : s;
}

/// Strict order (transitive closure) of a cover list on n vertices.
inline std::vector<std::vector<bool>> order_of(int n, const std::vector<std::pair<int, int>>& covers) {
    std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
    for (auto [a, b] : covers) lt[a][b] = true;
    return transitive_closure(lt);
}

namespace detail {

inline void add(CaseReport& r, std::string table, std::string key, std::string expected, std::string computed,
                bool ok, const json& fx, const std::string& cell, std::string note = {}) {
    Cell c{std::move(table), std::move(key), std::move(expected), std::move(computed), CellStatus::Match, std::move(note)};
    if (!ok) {
        if (auto conf = conflict_for(fx, cell)) {
            c.status = CellStatus::Conflict;
            c.note = (*conf)["id"].get<std::string>();
        } else
            c.status = CellStatus::Mismatch;
    }
    r.cells.push_back(std::move(c));
}

}  // namespace detail

inline void verify_orbits(CaseModel& m, const json& fx, const OrbitMatch& om, CaseReport& r) {
    const auto& orbits = m.orbits();
    const auto& rows = fx["orbits"];
    detail::add(r, "orbits", "count", std::to_string(rows.size()), std::to_string(orbits.size()),
                rows.size() == orbits.size(), fx, "orbits");
    std::multiset<int> want, have;
    for (const auto& row : rows) want.insert(row["dim"].get<int>());
    for (const auto& o : orbits) have.insert(o.dim);
    auto ms = [](const std::multiset<int>& s) {
        std::string out;
        for (int d : s) out += (out.empty() ? "" : ",") + std::to_string(d);
        return "{" + out + "}";
    };
    detail::add(r, "orbits", "dimensions", ms(want), ms(have), want == have, fx, "orbits");
    for (const auto& p : om.problems) detail::add(r, "orbits", "representative", "", p, false, fx, "orbits.rep");
    for (std::size_t k = 0; k < rows.size(); ++k) {
        const auto& row = rows[k];
        const int i = row["i"], j = om.to_computed[k];
        const std::string key = std::to_string(i);
        if (j < 0) {
            detail::add(r, "orbits", key + ".match", "an orbit", "none", false, fx, "orbits." + key + ".rep");
            continue;
        }
        detail::add(r, "orbits", key + ".dim", std::to_string(row["dim"].get<int>()), std::to_string(orbits[j].dim),
                    row["dim"].get<int>() == orbits[j].dim, fx, "orbits." + key + ".dim", "computed O" + std::to_string(j));
        if (row.contains("type")) {
            const std::string t = row["type"];
            detail::add(r, "orbits", key + ".type", t, orbits[j].label,
                        canonical_type(t) == canonical_type(orbits[j].label), fx, "orbits." + key + ".type");
        }
    }
    for (int u : om.unmatched((int)orbits.size()))
        detail::add(r, "orbits", "computed O" + std::to_string(u), "(absent)",
                    orbits[u].label + " dim " + std::to_string(orbits[u].dim), false, fx, "orbits");
}

inline void verify_hasse(CaseModel& m, const json& fx, const OrbitMatch& om, CaseReport& r) {
    if (!fx.contains("hasse_edges")) return;
    const auto& h = m.hasse_diagram();
    const int n = (int)m.orbits().size();
    std::vector<std::pair<int, int>> mapped;
    bool mappable = true;
    for (const auto& e : fx["hasse_edges"]) {
        int a = om.to_computed.at(e[0].get<int>()), b = om.to_computed.at(e[1].get<int>());
        if (a < 0 || b < 0) mappable = false;
        else mapped.emplace_back(a, b);
    }
    if (!mappable) {
        detail::add(r, "hasse", "edges", "all endpoints matched", "unmatched endpoint", false, fx, "hasse");
        return;
    }
    auto rec = reconcile(h, mapped);
    std::sort(mapped.begin(), mapped.end());
    // order induced on the orbits the fixture knows about
    auto mine = order_of(n, h.edges), theirs = order_of(n, mapped);
    bool induced = true;
    for (int a : om.to_computed)
        for (int b : om.to_computed)
            if (mine[a][b] != theirs[a][b]) induced = false;
    detail::add(r, "hasse", "induced order", "fixture order", induced ? "equal" : "differs", induced, fx, "hasse");
    std::string diff = rec.equal() ? "equal"
                                   : "missing " + edges_string(rec.missing) + "; extra " + edges_string(rec.extra);
    detail::add(r, "hasse", "covers", edges_string(mapped), diff, rec.equal(), fx, "hasse", "computed indices");
    for (auto e : mapped) {
        auto st = h.rel[e.first][e.second];
        Cell c{"hasse", "edge " + std::to_string(e.first) + "-" + std::to_string(e.second), "closure relation",
               st == Relation::Proven ? "certified" : st == Relation::Open ? "not certified" : "excluded",
               st == Relation::Proven ? CellStatus::Match
                                      : st == Relation::Open ? CellStatus::Unproven : CellStatus::Mismatch,
               ""};
        r.cells.push_back(c);
    }
}

inline void verify_hilbert(CaseModel& m, const json& fx, const OrbitMatch& om, CaseReport& r) {
    if (!fx.contains("hilbert")) return;
    for (const auto& row : fx["hilbert"]) {
        const int i = row["i"];
        const std::string key = std::to_string(i);
        int j = -1;
        for (std::size_t k = 0; k < fx["orbits"].size(); ++k)
            if (fx["orbits"][k]["i"] == i) j = om.to_computed[k];
        if (j < 0) {
            detail::add(r, "hilbert", key, "row", "no matching orbit", false, fx, "hilbert." + key);
            continue;
        }
        auto d = m.desingularization(j);
        if (!d) {
            detail::add(r, "hilbert", key, "numerator", "no desingularization found", false, fx, "hilbert." + key);
            continue;
        }
        auto want = parse_numerator(row);
        const auto& got = d->hilbert.numerator;
        detail::add(r, "hilbert", key + ".numerator", numerator_string(want), numerator_string(got), want == got, fx,
                    "hilbert." + key + ".numerator");
        BigInt wsum = 0;
        for (auto& c : want) wsum += c;
        const long long printed = row["degree"];
        detail::add(r, "hilbert", key + ".degree", std::to_string(printed), d->hilbert.degree.str(),
                    d->hilbert.degree == printed, fx, "hilbert." + key + ".degree");
        detail::add(r, "hilbert", key + ".degree=numerator(1)", std::to_string(printed), wsum.str(), wsum == printed,
                    fx, "hilbert." + key + ".degree");
        if (row.contains("prose_degree")) {
            const long long prose = row["prose_degree"];
            detail::add(r, "hilbert", key + ".prose degree", std::to_string(prose), d->hilbert.degree.str(),
                        d->hilbert.degree == prose, fx, "hilbert." + key + ".degree");
        }
    }
}

inline int computed_index(const json& fx, const OrbitMatch& om, int paper_index) {
    for (std::size_t k = 0; k < fx["orbits"].size(); ++k)
        if (fx["orbits"][k]["i"] == paper_index) return om.to_computed[k];
    return -1;
}

inline void verify_complexes(CaseModel& m, const json& fx, const OrbitMatch& om, CaseReport& r) {
    if (!fx.contains("complexes")) return;
    for (const auto& cx : fx["complexes"]) {
        const std::string name = cx["name"];
        const int j = computed_index(fx, om, cx["orbit"]);
        const ComplexTerms* ct = j >= 0 ? m.complex(j) : nullptr;
        if (!ct) {
            detail::add(r, "complexes", name, "terms", "not computed", false, fx, "complexes." + name);
            continue;
        }
        ComplexComparison cc;
        try {
            cc = compare_complex(m, fx, cx, *ct);
        } catch (const std::invalid_argument& e) {
            // a printed weight that is not a weight of G_0 is a fixture problem, not a failure
            detail::add(r, "complexes", name + " terms", "as printed", std::string("unreadable: ") + e.what(), false, fx,
                        "complexes." + name);
            continue;
        }
        std::string diff;
        for (auto& s : cc.missing) diff += (diff.empty() ? "" : "; ") + std::string("missing ") + s;
        for (auto& s : cc.extra) diff += (diff.empty() ? "" : "; ") + std::string("extra ") + s;
        detail::add(r, "complexes", name + " terms", "as printed", cc.exact ? "equal" : diff, cc.exact, fx,
                    "complexes." + name);
        detail::add(r, "complexes", name + " euler class", "as printed", cc.euler ? "equal" : "differs", cc.euler, fx,
                    "complexes." + name);
        for (auto& s : cc.degree_mismatch)
            detail::add(r, "complexes", name + " degree", "grade of weight", s, false, fx, "complexes." + name);
        if (cx.contains("ranks")) {
            auto b = betti_ranks(m.levi(), *ct);
            std::string want, got;
            for (auto& x : cx["ranks"]) want += (want.empty() ? "" : ",") + std::to_string(x.get<long long>());
            for (auto& x : b) got += (got.empty() ? "" : ",") + x.str();
            detail::add(r, "complexes", name + " ranks", want, got, want == got, fx, "complexes." + name);
        }
    }
}

/// Printed dual complexes (Hom into the canonical module) against the duality twist of the
/// computed desingularization. Both sides are normalized by their lowest internal degree,
/// and the twist by a character of G_0 only moves the grade, so it is compared as a constant.
inline void verify_dual_complexes(CaseModel& m, const json& fx, const OrbitMatch& om, CaseReport& r) {
    if (!fx.contains("dual_complexes")) return;
    for (const auto& dx : fx["dual_complexes"]) {
        const std::string name = dx["name"];
        const json* src = nullptr;
        for (const auto& cx : fx["complexes"])
            if (cx["name"] == dx["of"]) src = &cx;
        const int j = src ? computed_index(fx, om, (*src)["orbit"]) : -1;
        const Desingularization* d = j >= 0 ? m.desingularization(j) : nullptr;
        if (!d) {
            detail::add(r, "complexes", name, "terms", "not computed", false, fx, "complexes." + name);
            continue;
        }
        auto ct = complex_terms(m.levi(), d->spec, duality_twist(m.levi(), d->spec));
        auto normalize = [](const std::vector<Summand>& v, bool& constant_shift) {
            int dmin = INT_MAX;
            for (auto& s : v) dmin = std::min(dmin, s.d);
            std::map<std::tuple<int, int, std::vector<int>>, long long> out;
            std::set<int> shifts;
            for (auto& s : v) {
                out[{s.i, s.d - dmin, s.irrep.hw}] += s.mult;
                shifts.insert(s.irrep.grade - s.d);
            }
            constant_shift = shifts.size() <= 1;
            return out;
        };
        bool c1 = false, c2 = false;
        std::vector<Summand> printed;
        try {
            printed = fixture_summands(m, fx, dx);
        } catch (const std::invalid_argument& e) {
            detail::add(r, "complexes", name + " terms", "as printed", std::string("unreadable: ") + e.what(), false, fx,
                        "complexes." + name);
            continue;
        }
        auto want = normalize(printed, c1);
        auto got = normalize(ct.summands, c2);
        const bool ok = want == got && c1 && c2;
        detail::add(r, "complexes", name + " terms", "as printed up to a character twist",
                    ok ? "equal" : "differs", ok, fx, "complexes." + name);
    }
}

/// Orbits whose computed ring the fixture marks Gorenstein must have self-dual term lists.
inline void verify_gorenstein(CaseModel& m, const json& fx, const OrbitMatch& om, CaseReport& r) {
    if (!fx.contains("singularities")) return;
    for (const auto& row : fx["orbits"]) {
        const int i = row["i"];
        auto g = normalization_gorenstein(fx, i);
        if (!g || !*g) continue;
        const int j = computed_index(fx, om, i);
        const ComplexTerms* ct = j >= 0 ? m.complex(j) : nullptr;
        if (!ct) continue;
        const bool normal = fixture_flag(fx, std::to_string(i), "normal").value_or(true);
        const std::string row_name = normal ? std::to_string(i) : "n(" + std::to_string(i) + ")";
        bool pal = is_palindromic(m.levi(), *ct);
        detail::add(r, "gorenstein", row_name, "self-dual terms", pal ? "self-dual" : "not self-dual", pal, fx,
                    "singularities." + row_name + ".Gorenstein");
    }
}

inline void verify_invariants(CaseModel& m, const json& fx, const OrbitMatch& om, CaseReport& r) {
    if (!fx.contains("invariants")) return;
    for (const auto& inv : fx["invariants"]) {
        if (inv["kind"] != "hyperdiscriminant") continue;
        const int i = inv["orbit"];
        const std::string key = "hyperdiscriminant O" + std::to_string(i);
        auto spec = hyperdiscriminant_bundle(m.graded());
        auto hs = hilbert_series(m.levi(), spec);
        const long long deg = inv["degree"];
        detail::add(r, "invariants", key + " degree", std::to_string(deg), hs.degree.str(), hs.degree == deg, fx,
                    "invariants." + std::to_string(i));
        const int j = computed_index(fx, om, i);
        const int got = generic_orbit(m.context(), m.orbits(), spec.eta);
        detail::add(r, "invariants", key + " orbit", "computed O" + std::to_string(j), "computed O" + std::to_string(got),
                    got == j, fx, "invariants." + std::to_string(i));
    }
}

inline CaseReport verify_case(const CaseInfo& info, const json& fx) {
    CaseReport r;
    r.name = info.name;
    auto t0 = std::chrono::steady_clock::now();
    try {
        CaseModel m(info);
        auto om = match_orbits(m, fx);
        verify_orbits(m, fx, om, r);
        verify_hasse(m, fx, om, r);
        verify_hilbert(m, fx, om, r);
        verify_complexes(m, fx, om, r);
        verify_dual_complexes(m, fx, om, r);
        verify_gorenstein(m, fx, om, r);
        verify_invariants(m, fx, om, r);
    } catch (const std::exception& e) {
        r.error = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

inline std::string markdown_report(const std::vector<CaseReport>& reports, bool strict) {
    std::ostringstream os;
    os << "# Fixture verification\n\n";
    os << "| case | cells | match | mismatch | logged conflict | unproven | result |\n";
    os << "|---|---|---|---|---|---|---|\n";
    for (const auto& r : reports)
        os << "| " << r.name << " | " << r.cells.size() << " | " << r.count(CellStatus::Match) << " | "
           << r.count(CellStatus::Mismatch) << " | " << r.count(CellStatus::Conflict) << " | "
           << r.count(CellStatus::Unproven) << " | " << (r.pass(strict) ? "pass" : "FAIL") << " |\n";
    for (const auto& r : reports) {
        os << "\n## " << r.name << "\n\n";
        if (!r.error.empty()) os << "Computational failure: " << r.error << "\n\n";
        os << "| table | cell | expected | computed | status | note |\n|---|---|---|---|---|---|\n";
        for (const auto& c : r.cells)
            os << "| " << c.table << " | " << c.key << " | " << c.expected << " | " << c.computed << " | "
               << status_name(c.status) << " | " << c.note << " |\n";
    }
    return os.str();
}

}  // namespace vinberg
