#pragma once
/** @file geomtech.hpp
 *  @brief Geometric technique on G_0/B_0: desingularizations by B_0-stable subspaces,
 *         Hilbert series of the normalization, Euler-level syzygy terms and the
 *         normality evidence checks.
 *
 *  Weights are handled as "labels": a label is a sum of g_1 roots, stored as
 *  (grade, Levi coordinates). The line bundle it names has character minus the label,
 *  so its cohomology is the dual of the module Bott's rule produces. Everything below is
 *  computed on the associated graded bundles (sums of line bundles).
 */

#include "vinberg/bott.hpp"
#include "vinberg/closure.hpp"

#include <set>
#include <unordered_map>

namespace vinberg {

/// eta = span of the up-set U (the subbundle S); xi lives on the complement.
struct BundleSpec {
    Mask eta = 0;
    std::vector<int> parabolic;  // Levi nodes of P
    int base_dim = 0;            // dim G_0/P
    int eta_rank() const { return popcount(eta); }
    /// dim of the total space Z.
    int dim() const { return eta_rank() + base_dim; }
};

inline BundleSpec bundle_for(const GradedLie& gl, Mask eta) {
    BundleSpec s;
    s.eta = eta;
    s.parabolic = gl.parabolic_nodes(eta);
    s.base_dim = gl.flag_dimension(s.parabolic);
    return s;
}

inline Mask complement(const GradedLie& gl, Mask m) {
    const Mask all = gl.dim_g1() == 64 ? ~Mask{0} : (Mask{1} << gl.dim_g1()) - 1;
    return all & ~m;
}

/// Up-sets whose generic orbit is O_i and whose collapsing has the orbit's dimension.
inline std::vector<BundleSpec> candidate_desingularizations(const GradedLie& gl, const UpSetTable& ups,
                                                            int orbit, int orbit_dim) {
    std::vector<BundleSpec> out;
    for (std::size_t k = 0; k < ups.upsets.size(); ++k) {
        if (ups.orbit[k] != orbit) continue;
        auto s = bundle_for(gl, ups.upsets[k]);
        if (s.dim() == orbit_dim) out.push_back(s);
    }
    return out;
}

// ---- weight bookkeeping ----

namespace detail {
constexpr int kBits = 12;
constexpr int kOffset = 1 << (kBits - 1);

inline std::uint64_t pack(const std::vector<int>& a) {
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const int v = a[i] + kOffset;
        if (v < 0 || v >= (1 << kBits)) throw std::overflow_error("Levi coordinate out of packing range");
        k |= std::uint64_t(v) << (kBits * i);
    }
    return k;
}
inline std::vector<int> unpack(std::uint64_t k, int m) {
    std::vector<int> a(m);
    for (int i = 0; i < m; ++i) a[i] = int((k >> (kBits * i)) & ((1u << kBits) - 1)) - kOffset;
    return a;
}
inline std::uint64_t packed_delta(const std::vector<int>& a) {
    // adding a packed delta works because every field stays in range
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < a.size(); ++i) k += std::uint64_t(std::int64_t(a[i])) << (kBits * i);
    return k;
}
}  // namespace detail

inline std::vector<std::vector<int>> mask_coords(const LeviData& L, Mask m) {
    std::vector<std::vector<int>> out;
    for (int p = 0; p < L.graded().dim_g1(); ++p)
        if (m >> p & 1) out.push_back(L.g1_coords()[p]);
    return out;
}

/// Weight multiset of Sym^k of the span, for k = 0..K (packed Levi coordinates -> count).
inline std::vector<std::unordered_map<std::uint64_t, unsigned long long>> sym_weights(const LeviData& L, Mask m, int K) {
    if (L.size() * detail::kBits > 64) throw std::length_error("Levi rank too large for packed weights");
    std::vector<std::unordered_map<std::uint64_t, unsigned long long>> layer(K + 1);
    layer[0][detail::pack(std::vector<int>(L.size(), 0))] = 1;
    for (auto& c : mask_coords(L, m)) {
        const auto d = detail::packed_delta(c);
        for (int j = 1; j <= K; ++j)
            for (auto& [w, n] : layer[j - 1]) layer[j][w + d] += n;
    }
    return layer;
}

/// Weight multiset of Lambda^d of the span, all d, keyed by packed coordinates.
inline std::vector<std::unordered_map<std::uint64_t, unsigned long long>> ext_weights(const LeviData& L, Mask m) {
    const auto items = mask_coords(L, m);
    const int t = (int)items.size();
    std::vector<std::unordered_map<std::uint64_t, unsigned long long>> layer(t + 1);
    layer[0][detail::pack(std::vector<int>(L.size(), 0))] = 1;
    for (int s = 0; s < t; ++s) {
        const auto d = detail::packed_delta(items[s]);
        for (int j = s + 1; j >= 1; --j)
            for (auto& [w, n] : layer[j - 1]) layer[j][w + d] += n;
    }
    return layer;
}

// ---- Hilbert series ----

struct HilbertData {
    int dim = 0;    // Krull dimension; exponent of (1-t) in the denominator
    int codim = 0;  // in g_1
    std::vector<BigInt> numerator;
    BigInt degree = 0;
    int terms_used = 0;
    std::vector<std::string> flags;
};

/// h(k) = Euler characteristic of Sym^k eta' on G_0/B_0, k = 0..K-1.
inline std::vector<BigInt> hilbert_function(const LeviData& L, Mask eta, int K) {
    auto layers = sym_weights(L, eta, K - 1);
    std::vector<BigInt> h(K);
    for (int k = 0; k < K; ++k) {
        BigInt s = 0;
        for (auto& [w, n] : layers[k]) s += L.dim_numerator(detail::unpack(w, L.size())) * BigInt(n);
        h[k] = s / L.dim_denominator();
    }
    return h;
}

/// Truncation of (sum h_k t^k)(1-t)^e to the first h.size() coefficients.
inline std::vector<BigInt> times_one_minus_t(std::vector<BigInt> h, int e) {
    for (int r = 0; r < e; ++r)
        for (int k = (int)h.size() - 1; k >= 1; --k) h[k] -= h[k - 1];
    return h;
}

/// Numerator of the Hilbert series of H^0(Sym eta) (the normalization when Z is birational).
/// Higher cohomology of Sym eta is assumed to vanish.
inline HilbertData hilbert_series(const LeviData& L, const BundleSpec& spec, int K0 = 12) {
    const auto& gl = L.graded();
    HilbertData hd;
    hd.dim = spec.dim();
    hd.codim = gl.dim_g1() - hd.dim;
    hd.flags = {"euler-level", "vanishing-assumed"};
    for (int K = K0; K <= 256; K *= 2) {
        auto num = times_one_minus_t(hilbert_function(L, spec.eta, K), hd.dim);
        int last = -1;
        for (int k = 0; k < K; ++k)
            if (num[k] != 0) last = k;
        if (last + 3 < K) {
            num.resize(last + 1);
            hd.numerator = num;
            hd.terms_used = K;
            hd.degree = 0;
            for (auto& c : num) hd.degree += c;
            return hd;
        }
    }
    throw std::runtime_error("Hilbert numerator did not stabilize");
}

inline std::string poly_string(const std::vector<BigInt>& p) {
    std::string s;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k] == 0) continue;
        std::string c = p[k].str();
        if (!s.empty()) s += c[0] == '-' ? "" : "+";
        if (k == 0) s += c;
        else {
            if (p[k] == 1) c = "";
            else if (p[k] == -1) c = "-";
            s += c + "t" + (k > 1 ? "^" + std::to_string(k) : "");
        }
    }
    return s.empty() ? "0" : s;
}

/// Desingularization used for an orbit: the candidate of least degree. A generically
/// finite collapsing of degree m multiplies the degree by m, so the least one is the
/// birational one whenever a birational candidate exists.
struct Desingularization {
    BundleSpec spec;
    HilbertData hilbert;
    int candidates = 0;
};

inline std::optional<Desingularization> choose_desingularization(const LeviData& L, const UpSetTable& ups, int orbit,
                                                                 int orbit_dim) {
    auto cands = candidate_desingularizations(L.graded(), ups, orbit, orbit_dim);
    std::optional<Desingularization> best;
    for (auto& c : cands) {
        auto h = hilbert_series(L, c);
        if (!best || h.degree < best->hilbert.degree ||
            (h.degree == best->hilbert.degree && c.eta < best->spec.eta))
            best = Desingularization{c, h, 0};
    }
    if (best) best->candidates = (int)cands.size();
    return best;
}

// ---- complexes ----

struct Summand {
    int i = 0;  // homological degree
    int d = 0;  // internal degree
    LeviIrrep irrep;
    long long mult = 0;
    auto operator<=>(const Summand&) const = default;
};

struct ComplexTerms {
    std::vector<Summand> summands;  // sorted by (i, d, irrep)
    std::vector<std::string> flags{"euler-level"};
    bool cancelled = false;  // some (d, irrep) appeared in more than one cohomological degree
    /// (d, irrep) keys whose homological degree is a parity guess after cancellation
    std::set<std::pair<int, LeviIrrep>> ambiguous;
    int min_i() const {
        int m = 0;
        for (auto& s : summands) m = std::min(m, s.i);
        return m;
    }
    int max_i() const {
        int m = 0;
        for (auto& s : summands) m = std::max(m, s.i);
        return m;
    }
};

/// Twist label: added to every exterior-power label (grade, Levi coordinates).
struct Label {
    int grade = 0;
    std::vector<int> coords;
};

/// F_i = sum_j H^j(Lambda^{i+j} xi (x) twist). Lambda^d xi is first split into irreducibles
/// of the Levi of P by its character, then each irreducible bundle on G_0/P goes through
/// Bott. Equal (d, irrep) contributions in degrees of opposite parity are cancelled and
/// what survives is kept in the highest cohomological degree allowed by its sign.
inline ComplexTerms complex_terms(const LeviData& L, const BundleSpec& spec, const std::optional<Label>& twist = {}) {
    const auto& gl = L.graded();
    const Mask xi = complement(gl, spec.eta);
    auto layers = ext_weights(L, xi);
    std::vector<int> tw = twist ? twist->coords : std::vector<int>(L.size(), 0);
    const int tgrade = twist ? twist->grade : 0;
    const auto pnodes = L.indices_of(spec.parabolic);
    // (d, irrep) -> cohomological degree -> multiplicity
    std::map<std::pair<int, LeviIrrep>, std::map<int, long long>> acc;
    for (int d = 0; d < (int)layers.size(); ++d) {
        std::map<std::vector<int>, long long> levi_p;
        for (auto& [w, n] : layers[d]) {
            auto a = detail::unpack(w, L.size());
            for (int j = 0; j < L.size(); ++j) a[j] += tw[j];
            auto r = L.dot_within(a, pnodes);
            if (!r) continue;
            auto& v = levi_p[r->weight];
            v += (r->degree % 2 ? -(long long)n : (long long)n);
        }
        for (auto& [hw, m] : levi_p) {
            if (m == 0) continue;
            if (m < 0) throw std::logic_error("negative multiplicity in a character decomposition");
            auto r = L.dot(hw);
            if (!r) continue;
            acc[{d, LeviIrrep{d + tgrade, r->weight}}][r->degree] += m;
        }
    }
    ComplexTerms ct;
    for (auto& [key, byl] : acc) {
        long long chi = 0;
        for (auto& [l, m] : byl) chi += (l % 2 ? -m : m);
        if (byl.size() > 1) ct.cancelled = true;
        if (chi == 0) continue;
        if (byl.size() > 1) ct.ambiguous.insert(key);
        // the surplus stays in the highest cohomological degree of matching parity, preferring
        // one that keeps the homological degree i = d - l nonnegative
        int keep = -1, keep_nonneg = -1;
        for (auto& [l, m] : byl)
            if ((l % 2 == 0) == (chi > 0)) {
                keep = l;
                if (l <= key.first) keep_nonneg = l;
            }
        if (keep_nonneg >= 0) keep = keep_nonneg;
        ct.summands.push_back({key.first - keep, key.first, key.second, chi > 0 ? chi : -chi});
    }
    std::sort(ct.summands.begin(), ct.summands.end());
    return ct;
}

/// Signed class sum_i (-1)^i F_i keyed by (internal degree, irrep).
inline std::map<std::pair<int, LeviIrrep>, long long> euler_class(const ComplexTerms& ct) {
    std::map<std::pair<int, LeviIrrep>, long long> out;
    for (auto& s : ct.summands) {
        auto& v = out[{s.d, s.irrep}];
        v += (s.i % 2 ? -s.mult : s.mult);
        if (v == 0) out.erase({s.d, s.irrep});
    }
    return out;
}

/// Total rank of each F_i, from min_i() to max_i().
inline std::vector<BigInt> betti_ranks(const LeviData& L, const ComplexTerms& ct) {
    const int lo = ct.min_i(), hi = ct.max_i();
    std::vector<BigInt> out(hi - lo + 1, 0);
    for (auto& s : ct.summands) out[s.i - lo] += L.dim(s.irrep.hw) * s.mult;
    return out;
}

/// sum_i (-1)^i sum dim * t^d; equals numerator * (1-t)^codim at the level of characters.
inline std::vector<BigInt> complex_k_polynomial(const LeviData& L, const ComplexTerms& ct) {
    std::vector<BigInt> p;
    for (auto& s : ct.summands) {
        if ((int)p.size() <= s.d) p.resize(s.d + 1, 0);
        BigInt v = L.dim(s.irrep.hw) * s.mult;
        p[s.d] += (s.i % 2 ? -v : v);
    }
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

/// Term list symmetric under (i, d) -> (c - i, D - d), c and D the extreme degrees,
/// comparing ranks.
inline bool is_palindromic(const LeviData& L, const ComplexTerms& ct) {
    if (ct.summands.empty()) return true;
    int c = ct.max_i(), D = 0;
    for (auto& s : ct.summands) D = std::max(D, s.d);
    std::map<std::pair<int, int>, BigInt> m;
    for (auto& s : ct.summands) m[{s.i, s.d}] += L.dim(s.irrep.hw) * s.mult;
    for (auto& [k, v] : m) {
        auto it = m.find({c - k.first, D - k.second});
        if (it == m.end() || it->second != v) return false;
    }
    return true;
}

/// Twist giving the dual complex: label K - sigma(xi) - label(V), K the canonical class of
/// G_0/P (minus the g_0 roots outside the Levi of P). On G_0/B this is -2rho_0.
inline Label duality_twist(const LeviData& L, const BundleSpec& spec, const Label& v = {}) {
    const auto& gl = L.graded();
    const Mask xi = complement(gl, spec.eta);
    Label out{-popcount(xi) - v.grade, std::vector<int>(L.size(), 0)};
    for (int r : gl.levi_positive()) {
        const IntVec& root = gl.rs().root(r);
        bool in_p_levi = true;
        for (int k = 0; k < (int)root.size(); ++k)
            if (root[k] != 0 && std::find(spec.parabolic.begin(), spec.parabolic.end(), k) == spec.parabolic.end())
                in_p_levi = false;
        if (in_p_levi) continue;
        auto c = L.coords(root);
        for (int j = 0; j < L.size(); ++j) out.coords[j] -= c[j];
    }
    for (auto& c : mask_coords(L, xi))
        for (int j = 0; j < L.size(); ++j) out.coords[j] -= c[j];
    if (!v.coords.empty())
        for (int j = 0; j < L.size(); ++j) out.coords[j] -= v.coords[j];
    return out;
}

// ---- normality evidence ----

struct NormalityReport {
    /// irreps in H^i(Lambda^j xi') with i > j (resp. i >= j) also in H^*(S_j eta').
    std::map<int, std::set<LeviIrrep>> rational_hits, normal_hits;
    /// F_0 summands in positive internal degree whose placement is forced, and those whose
    /// placement is only a parity guess after cancellation (not evidence either way).
    std::vector<Summand> f0_positive, f0_ambiguous;
    bool rational_clean() const {
        for (auto& [j, s] : rational_hits)
            if (!s.empty()) return false;
        return true;
    }
    bool normal_clean() const {
        for (auto& [j, s] : normal_hits)
            if (!s.empty()) return false;
        return true;
    }
};

inline NormalityReport prop38_check(const LeviData& L, const BundleSpec& spec, int jmax) {
    const auto& gl = L.graded();
    NormalityReport rep;
    auto ext = ext_weights(L, complement(gl, spec.eta));
    auto sym = sym_weights(L, spec.eta, jmax);
    for (int j = 1; j <= jmax; ++j) {
        std::set<LeviIrrep> symset, gt, ge;
        for (auto& [w, n] : sym[j])
            if (auto r = L.dot(detail::unpack(w, L.size()))) symset.insert({j, r->weight});
        if (j < (int)ext.size())
            for (auto& [w, n] : ext[j])
                if (auto r = L.dot(detail::unpack(w, L.size()))) {
                    LeviIrrep v{j, r->weight};
                    if (!symset.count(v)) continue;
                    if (r->degree > j) gt.insert(v);
                    if (r->degree >= j) ge.insert(v);
                }
        rep.rational_hits[j] = gt;
        rep.normal_hits[j] = ge;
    }
    auto ct = complex_terms(L, spec);
    for (auto& s : ct.summands)
        if (s.i == 0 && s.d > 0) (ct.ambiguous.count({s.d, s.irrep}) ? rep.f0_ambiguous : rep.f0_positive).push_back(s);
    return rep;
}

// ---- hyperdiscriminant ----

/// eta = g_1 minus the lowest weight and its first raisings under g_0 (the 1-jets).
inline BundleSpec hyperdiscriminant_bundle(const GradedLie& gl) {
    const auto& rs = gl.rs();
    const int low = gl.g1().front();  // g1() is height-ordered
    Mask jets = Mask{1} << 0;
    for (int a : gl.levi_positive()) {
        IntVec v = rs.root(low);
        for (int k = 0; k < rs.rank(); ++k) v[k] += rs.root(a)[k];
        int q = rs.index_of(v);
        if (q >= 0 && gl.degree(q) == 1) jets |= Mask{1} << gl.g1_position(q);
    }
    Mask eta = complement(gl, jets);
    if (!is_up_set(weight_poset(gl), eta)) throw std::logic_error("1-jet complement is not B_0-stable");
    return bundle_for(gl, eta);
}

// ---- GL(n) labels for type A Levi factors ----

/// Factors = type A components of the Levi, ordered by rank then by smallest node, each
/// written as a chain oriented so that the highest g_1 weight starts as early as possible.
struct GLStructure {
    std::vector<std::vector<int>> chains;  // indices into the Levi node list
    std::vector<int> size_per_grade;       // |x| of the highest g_1 weight per factor
    bool all_type_a = true;
};

inline GLStructure gl_structure(const LeviData& L) {
    const auto& gl = L.graded();
    const auto& rs = gl.rs();
    GLStructure st;
    auto comps = gl.levi_components();
    std::stable_sort(comps.begin(), comps.end(), [](auto& a, auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.front() < b.front();
    });
    const auto& top = L.g1_coords().back();
    auto levi_index = [&](int node) {
        return (int)(std::find(L.nodes().begin(), L.nodes().end(), node) - L.nodes().begin());
    };
    for (auto& c : comps) {
        // type A: a path with simply-laced bonds
        int ends = 0;
        bool ok = true;
        for (int u : c) {
            int deg = 0;
            for (int v : c)
                if (u != v && rs.cartan()[u][v] != 0) {
                    ++deg;
                    if (rs.cartan()[u][v] != -1 || rs.cartan()[v][u] != -1) ok = false;
                }
            if (deg > 2) ok = false;
            if (deg <= 1) ++ends;
        }
        if (!ok || (c.size() > 1 && ends != 2)) {
            st.all_type_a = false;
            st.chains.push_back({});
            st.size_per_grade.push_back(0);
            continue;
        }
        auto walk = [&](int start) {
            std::vector<int> path{start};
            int prev = -1, cur = start;
            for (;;) {
                int nxt = -1;
                for (int v : c)
                    if (v != cur && v != prev && rs.cartan()[cur][v] != 0) nxt = v;
                if (nxt < 0) break;
                path.push_back(nxt);
                prev = cur;
                cur = nxt;
            }
            return path;
        };
        std::vector<std::vector<int>> options;
        for (int u : c) {
            int deg = 0;
            for (int v : c)
                if (u != v && rs.cartan()[u][v] != 0) ++deg;
            if (deg <= 1) options.push_back(walk(u));
        }
        auto first_nonzero = [&](const std::vector<int>& path) {
            for (std::size_t k = 0; k < path.size(); ++k)
                if (top[levi_index(path[k])] != 0) return (int)k;
            return (int)path.size();
        };
        std::sort(options.begin(), options.end(), [&](auto& a, auto& b) {
            int fa = first_nonzero(a), fb = first_nonzero(b);
            if (fa != fb) return fa < fb;
            return a < b;
        });
        std::vector<int> chain;
        for (int node : options.front()) chain.push_back(levi_index(node));
        int m = 0;
        for (std::size_t k = 0; k < chain.size(); ++k) m += int(k + 1) * top[chain[k]];
        st.chains.push_back(chain);
        st.size_per_grade.push_back(m);
    }
    return st;
}

/// GL weight tuple of the irreducible with the given grade and Levi highest weight.
inline std::optional<GLWeightTuple> to_gl_tuple(const GLStructure& st, const LeviIrrep& v) {
    if (!st.all_type_a) return std::nullopt;
    GLWeightTuple out;
    for (std::size_t f = 0; f < st.chains.size(); ++f) {
        const auto& ch = st.chains[f];
        const int n = (int)ch.size() + 1;
        int s = 0;
        for (std::size_t k = 0; k < ch.size(); ++k) s += int(k + 1) * v.hw[ch[k]];
        const int num = v.grade * st.size_per_grade[f] - s;
        if (num % n != 0) return std::nullopt;
        Partition x(n);
        x[n - 1] = num / n;
        for (int i = n - 2; i >= 0; --i) x[i] = x[i + 1] + v.hw[ch[i]];
        out.push_back(x);
    }
    return out;
}

/// Inverse of to_gl_tuple.
inline LeviIrrep from_gl_tuple(const GLStructure& st, const LeviData& L, const GLWeightTuple& t) {
    LeviIrrep v;
    v.hw.assign(L.size(), 0);
    for (std::size_t f = 0; f < st.chains.size(); ++f) {
        const auto& ch = st.chains[f];
        if (t.at(f).size() != ch.size() + 1) throw std::invalid_argument("tuple factor has the wrong length");
        for (std::size_t k = 0; k < ch.size(); ++k) v.hw[ch[k]] = t[f][k] - t[f][k + 1];
        if (st.size_per_grade[f] == 0) throw std::invalid_argument("factor does not meet g_1");
        const int sz = size_of(t[f]);
        if (sz % st.size_per_grade[f] != 0) throw std::invalid_argument("tuple size is not a multiple of the g_1 size");
        v.grade = sz / st.size_per_grade[f];
    }
    return v;
}

}  // namespace vinberg
