#pragma once
/** @file fixtures.hpp
 *  @brief Case catalog, per-case pipeline model, fixture loading and the parsers that
 *         turn printed representatives and weights into pipeline objects.
 */

#include "vinberg/geomtech.hpp"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#ifndef VINBERG_DEFAULT_FIXTURE_DIR
#define VINBERG_DEFAULT_FIXTURE_DIR "data/fixtures"
#endif

namespace vinberg {

using json = nlohmann::json;

struct CaseInfo {
    std::string name;  // "E6.4" = E6 graded by node 4
    SimpleType type;
    int node;
};

inline const std::vector<CaseInfo>& case_catalog() {
    static const std::vector<CaseInfo> cases = {
        {"E6.1", {'E', 6}, 1}, {"E6.2", {'E', 6}, 2}, {"E6.3", {'E', 6}, 3}, {"E6.4", {'E', 6}, 4},
        {"F4.1", {'F', 4}, 1}, {"F4.2", {'F', 4}, 2}, {"F4.3", {'F', 4}, 3}, {"F4.4", {'F', 4}, 4},
        {"G2.1", {'G', 2}, 1}, {"G2.2", {'G', 2}, 2},
    };
    return cases;
}

/// Accepts "E6.4", "e6.4" and "E6:4".
inline std::optional<CaseInfo> find_case(std::string name) {
    for (char& c : name) {
        if (c == ':') c = '.';
        c = (char)std::toupper((unsigned char)c);
    }
    for (const auto& c : case_catalog())
        if (c.name == name) return c;
    return std::nullopt;
}

/// All pipeline stages for one case, computed on first use and cached.
/// Not thread-safe; use one model per thread.
class CaseModel {
public:
    explicit CaseModel(const CaseInfo& info)
        : info_(info),
          rs_(std::make_shared<const RootSystem>(build_root_system(info.type))),
          gl_(std::make_unique<GradedLie>(rs_, info.node)),
          ctx_(std::make_unique<OrbitContext>(*gl_)),
          orbits_(classify(*ctx_)),
          levi_(std::make_unique<LeviData>(*gl_)),
          glst_(gl_structure(*levi_)) {}

    const CaseInfo& info() const { return info_; }
    const RootSystem& rs() const { return *rs_; }
    const GradedLie& graded() const { return *gl_; }
    const OrbitContext& context() const { return *ctx_; }
    const std::vector<OrbitRecord>& orbits() const { return orbits_; }
    const LeviData& levi() const { return *levi_; }
    const GLStructure& gl_labels() const { return glst_; }

    const UpSetTable& upsets() {
        if (!ups_) ups_ = upset_table(*ctx_, orbits_);
        return *ups_;
    }
    const HasseDiagram& hasse_diagram() {
        if (!hasse_) hasse_ = hasse(*ctx_, orbits_, upsets());
        return *hasse_;
    }
    /// Chosen desingularization of an orbit closure; nullptr when no up-set works.
    const Desingularization* desingularization(int orbit) {
        auto it = desing_.find(orbit);
        if (it == desing_.end())
            it = desing_.emplace(orbit, choose_desingularization(*levi_, upsets(), orbit, orbits_.at(orbit).dim)).first;
        return it->second ? &*it->second : nullptr;
    }
    const ComplexTerms* complex(int orbit) {
        auto it = complexes_.find(orbit);
        if (it == complexes_.end()) {
            std::optional<ComplexTerms> ct;
            if (auto d = desingularization(orbit)) ct = complex_terms(*levi_, d->spec);
            it = complexes_.emplace(orbit, std::move(ct)).first;
        }
        return it->second ? &*it->second : nullptr;
    }

    /// Human-readable name of an irreducible G_0-module: a GL tuple when every Levi factor
    /// is of type A, else the grade and the Levi highest weight.
    std::string irrep_string(const LeviIrrep& v) const {
        if (auto t = to_gl_tuple(glst_, v)) return tuple_string(*t);
        std::string s = "g" + std::to_string(v.grade) + "[";
        for (std::size_t j = 0; j < v.hw.size(); ++j) s += (j ? "," : "") + std::to_string(v.hw[j]);
        return s + "]";
    }

private:
    CaseInfo info_;
    std::shared_ptr<const RootSystem> rs_;
    std::unique_ptr<GradedLie> gl_;
    std::unique_ptr<OrbitContext> ctx_;
    std::vector<OrbitRecord> orbits_;
    std::unique_ptr<LeviData> levi_;
    GLStructure glst_;
    std::optional<UpSetTable> ups_;
    std::optional<HasseDiagram> hasse_;
    std::map<int, std::optional<Desingularization>> desing_;
    std::map<int, std::optional<ComplexTerms>> complexes_;
};

// ---- fixture files ----

inline std::filesystem::path fixture_dir() {
    if (const char* env = std::getenv("VINBERG_FIXTURE_DIR"); env && *env) return env;
    return VINBERG_DEFAULT_FIXTURE_DIR;
}

inline json load_fixture(const std::string& case_name) {
    auto path = fixture_dir() / (case_name + ".json");
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture " + path.string());
    return json::parse(in);
}

/// Flag from the singularities table; row is "7" or "n(7)".
inline std::optional<bool> fixture_flag(const json& fx, const std::string& row, const std::string& column) {
    if (!fx.contains("singularities")) return std::nullopt;
    const auto& cols = fx["singularities"]["columns"];
    int c = -1;
    for (std::size_t k = 0; k < cols.size(); ++k)
        if (cols[k] == column) c = (int)k;
    if (c < 0) return std::nullopt;
    for (const auto& r : fx["singularities"]["rows"])
        if (r["row"] == row) return r["flags"][c] == "yes";
    return std::nullopt;
}

/// Gorenstein flag of the ring the pipeline computes: the orbit closure when it is
/// normal, its normalization (the n(i) row) otherwise.
inline std::optional<bool> normalization_gorenstein(const json& fx, int paper_index) {
    const auto row = std::to_string(paper_index);
    auto normal = fixture_flag(fx, row, "normal");
    if (!normal) return std::nullopt;
    return fixture_flag(fx, *normal ? row : "n(" + row + ")", "Gorenstein");
}

inline bool has_conflict(const json& fx, const std::string& id) {
    if (!fx.contains("conflicts")) return false;
    for (const auto& c : fx["conflicts"])
        if (c["id"] == id) return true;
    return false;
}

// ---- representatives ----

/// A point of g_1 (coefficients on g_1 positions), or the generic point of a span.
struct Representative {
    std::vector<long long> coeffs;
    Mask span = 0;
    bool is_span = false;
};

namespace detail {

inline std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    std::string num;
    for (char c : s) {
        if (c == '-' || std::isdigit((unsigned char)c)) num += c;
        else if (!num.empty()) {
            out.push_back(std::stoi(num));
            num.clear();
        }
    }
    if (!num.empty()) out.push_back(std::stoi(num));
    return out;
}

inline int g1_position_of_root(const CaseModel& m, const std::string& term) {
    auto v = parse_ints(term);
    if ((int)v.size() != m.rs().rank()) throw std::invalid_argument("root " + term + " has the wrong length");
    int r = m.rs().index_of(IntVec(v.begin(), v.end()));
    if (r < 0 || m.graded().degree(r) != 1) throw std::invalid_argument(term + " is not a root of degree 1");
    return m.graded().g1_position(r);
}

/// "[1;2;3]": one group of basis indices per GL factor.
inline int g1_position_of_label(const CaseModel& m, const std::string& term) {
    const auto& st = m.gl_labels();
    if (!st.all_type_a) throw std::invalid_argument("bracket labels need a type A Levi");
    GLWeightTuple want;
    std::string body = term.substr(1, term.size() - 2);
    std::stringstream ss(body);
    std::string group;
    std::size_t f = 0;
    while (std::getline(ss, group, ';')) {
        if (f >= st.chains.size()) throw std::invalid_argument("label " + term + " has too many groups");
        Partition x(st.chains[f].size() + 1, 0);
        for (char c : group) {
            if (!std::isdigit((unsigned char)c)) continue;
            int k = c - '1';
            if (k < 0 || k >= (int)x.size()) throw std::invalid_argument("index out of range in " + term);
            ++x[k];
        }
        want.push_back(x);
        ++f;
    }
    const auto& L = m.levi();
    for (int p = 0; p < m.graded().dim_g1(); ++p) {
        auto t = to_gl_tuple(st, LeviIrrep{1, L.g1_coords()[p]});
        if (t && *t == want) return p;
    }
    throw std::invalid_argument("no weight of g_1 matches " + term);
}

}  // namespace detail

/// Parses "0", "(1,0,0,0)+(1,2,3,1)", "[1;1;1]-[2;2;2]" and "<(0,1,0,0),(0,1,1,0)>".
inline Representative parse_representative(const CaseModel& m, const std::string& text) {
    Representative rep;
    rep.coeffs.assign(m.graded().dim_g1(), 0);
    std::string s;
    for (char c : text)
        if (!std::isspace((unsigned char)c)) s += c;
    if (s.empty() || s == "0") return rep;
    if (s.front() == '<') {
        rep.is_span = true;
        std::size_t k = 1;
        while (k < s.size()) {
            auto open = s.find('(', k);
            if (open == std::string::npos) break;
            auto close = s.find(')', open);
            rep.span |= Mask{1} << detail::g1_position_of_root(m, s.substr(open, close - open + 1));
            k = close + 1;
        }
        return rep;
    }
    std::size_t k = 0;
    while (k < s.size()) {
        long long sign = 1;
        while (k < s.size() && (s[k] == '+' || s[k] == '-')) {
            if (s[k] == '-') sign = -sign;
            ++k;
        }
        if (k >= s.size()) break;
        const char open = s[k], close = open == '(' ? ')' : ']';
        if (open != '(' && open != '[') throw std::invalid_argument("cannot parse representative " + text);
        auto end = s.find(close, k);
        if (end == std::string::npos) throw std::invalid_argument("unbalanced representative " + text);
        auto term = s.substr(k, end - k + 1);
        int p = open == '(' ? detail::g1_position_of_root(m, term) : detail::g1_position_of_label(m, term);
        rep.coeffs[p] += sign;
        k = end + 1;
    }
    return rep;
}

struct Identification {
    int orbit = -1;
    int exact_dim = -1;  // of the given point; the orbit's dimension for a span
};

inline Identification identify(const CaseModel& m, const Representative& rep) {
    Identification id;
    const auto& orbits = m.orbits();
    if (rep.is_span) {
        id.orbit = generic_orbit(m.context(), orbits, rep.span);
        if (id.orbit >= 0) id.exact_dim = orbits[id.orbit].dim;
        return id;
    }
    bool zero = std::all_of(rep.coeffs.begin(), rep.coeffs.end(), [](long long c) { return c == 0; });
    if (zero) return {0, 0};
    id.exact_dim = orbit_dimension(m.context(), rep.coeffs);
    id.orbit = identify_orbit(m.context(), orbits, to_mod(rep.coeffs));
    return id;
}

/// Fixture orbit index -> computed orbit index (-1 when unmatched).
struct OrbitMatch {
    std::vector<int> to_computed;
    std::vector<std::string> problems;
    bool injective() const {
        std::set<int> seen;
        for (int v : to_computed)
            if (v < 0 || !seen.insert(v).second) return false;
        return true;
    }
    /// Computed orbits no fixture row maps to.
    std::vector<int> unmatched(int computed_count) const {
        std::vector<int> out;
        for (int i = 0; i < computed_count; ++i)
            if (std::find(to_computed.begin(), to_computed.end(), i) == to_computed.end()) out.push_back(i);
        return out;
    }
};

inline OrbitMatch match_orbits(const CaseModel& m, const json& fx) {
    OrbitMatch om;
    const auto& rows = fx["orbits"];
    const auto& orbits = m.orbits();
    for (const auto& row : rows) {
        const int i = row["i"], dim = row["dim"];
        int found = -1;
        if (row.contains("rep")) {
            try {
                auto id = identify(m, parse_representative(m, row["rep"]));
                found = id.orbit;
                if (id.exact_dim != dim)
                    om.problems.push_back("row " + std::to_string(i) + ": representative has orbit dimension " +
                                          std::to_string(id.exact_dim) + ", table says " + std::to_string(dim));
            } catch (const std::exception& e) {
                om.problems.push_back("row " + std::to_string(i) + ": " + e.what());
            }
        } else {
            // no representative printed: match by dimension when it is unique
            std::vector<int> c;
            for (const auto& o : orbits)
                if (o.dim == dim) c.push_back(o.index);
            if (c.size() == 1) found = c[0];
            else om.problems.push_back("row " + std::to_string(i) + ": no representative and dimension is not unique");
        }
        om.to_computed.push_back(found);
    }
    return om;
}

// ---- printed weights ----

/// Irreducible named by a fixture complex term: a GL tuple string, or fundamental-weight
/// coefficients mapped to Levi nodes by weight_basis.omega_nodes (grade taken from d).
inline LeviIrrep fixture_irrep(const CaseModel& m, const json& fx, const json& term) {
    const auto& w = term["w"];
    if (w.is_string()) return from_gl_tuple(m.gl_labels(), m.levi(), parse_tuple(w.get<std::string>()));
    const auto& nodes = fx["weight_basis"]["omega_nodes"];
    LeviIrrep v;
    v.grade = term.at("d");
    v.hw.assign(m.levi().size(), 0);
    if (w.size() != nodes.size()) throw std::invalid_argument("omega weight has the wrong length");
    for (std::size_t k = 0; k < w.size(); ++k) {
        int node = nodes[k].get<int>() - 1;
        auto idx = m.levi().indices_of({node});
        if (idx[0] >= m.levi().size()) throw std::invalid_argument("omega node is not in the Levi");
        v.hw[idx[0]] = w[k];
    }
    return v;
}

/// Fixture complex as summands; d defaults to the grade of the weight.
inline std::vector<Summand> fixture_summands(const CaseModel& m, const json& fx, const json& cx) {
    std::vector<Summand> out;
    for (const auto& t : cx["terms"]) {
        auto v = fixture_irrep(m, fx, t);
        int d = t.contains("d") ? t["d"].get<int>() : v.grade;
        out.push_back({t["i"], d, v, t.value("mult", 1LL)});
    }
    std::sort(out.begin(), out.end(), [](const Summand& a, const Summand& b) {
        return std::tie(a.i, a.d, a.irrep) < std::tie(b.i, b.d, b.irrep);
    });
    return out;
}

struct ComplexComparison {
    bool exact = false;  // same terms in the same homological degrees
    bool euler = false;  // same alternating class
    std::vector<std::string> missing, extra;  // term differences, rendered
    std::vector<std::string> degree_mismatch;  // printed d that disagrees with the weight
};

inline ComplexComparison compare_complex(CaseModel& m, const json& fx, const json& cx, const ComplexTerms& ct) {
    ComplexComparison cc;
    auto want = fixture_summands(m, fx, cx);
    for (const auto& s : want)
        if (s.d != s.irrep.grade)
            cc.degree_mismatch.push_back(m.irrep_string(s.irrep) + " printed in degree " + std::to_string(s.d));
    auto key = [](const Summand& s) { return std::make_tuple(s.i, s.d, s.irrep); };
    std::map<std::tuple<int, int, LeviIrrep>, long long> a, b;
    for (const auto& s : want) a[key(s)] += s.mult;
    for (const auto& s : ct.summands) b[key(s)] += s.mult;
    auto render = [&](const std::tuple<int, int, LeviIrrep>& k, long long n) {
        return "F" + std::to_string(std::get<0>(k)) + " " + (n > 1 ? std::to_string(n) + "*" : "") +
               m.irrep_string(std::get<2>(k)) + " d" + std::to_string(std::get<1>(k));
    };
    for (auto& [k, n] : a) {
        long long have = b.count(k) ? b[k] : 0;
        if (have < n) cc.missing.push_back(render(k, n - have));
    }
    for (auto& [k, n] : b) {
        long long have = a.count(k) ? a[k] : 0;
        if (have < n) cc.extra.push_back(render(k, n - have));
    }
    cc.exact = cc.missing.empty() && cc.extra.empty();
    ComplexTerms wct;
    wct.summands = want;
    cc.euler = euler_class(wct) == euler_class(ct);
    return cc;
}

inline std::vector<BigInt> parse_numerator(const json& row) {
    std::vector<BigInt> out;
    for (const auto& c : row["numerator"]) out.push_back(BigInt(c.get<long long>()));
    return out;
}

}  // namespace vinberg
