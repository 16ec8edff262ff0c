#pragma once
/** @file vinberg.hpp
 *  @brief Classification of G_0-orbits of nilpotent elements in g_1 through their
 *         support subalgebras: graded semisimple regular subalgebras that are
 *         complete and locally flat.
 */

#include "vinberg/adjoint.hpp"

#include <numeric>
#include <sstream>

namespace vinberg {

/// One simple factor of a support algebra with its degree labels.
struct SupportFactor {
    SimpleType type;
    std::vector<int> degrees;  // per node, 0 or 1
    std::string label;         // e.g. "A2", "D4(a1)"
    bool operator==(const SupportFactor&) const = default;
};

struct SupportType {
    std::vector<SupportFactor> factors;
    int rank() const {
        int r = 0;
        for (auto& f : factors) r += f.type.rank;
        return r;
    }
    std::string name() const {
        std::string s;
        for (auto& f : factors) s += (s.empty() ? "" : "+") + f.label;
        return s;
    }
};

inline int coxeter_number(const SimpleType& t) {
    switch (t.family) {
        case 'A': return t.rank + 1;
        case 'B':
        case 'C': return 2 * t.rank;
        case 'D': return 2 * t.rank - 2;
        case 'E': return t.rank == 6 ? 12 : t.rank == 7 ? 18 : 30;
        case 'F': return 12;
        case 'G': return 6;
    }
    return 0;
}

inline SupportFactor principal_factor(SimpleType t) {
    return {t, std::vector<int>(t.rank, 1), t.name()};
}

/// Distinguished non-principal gradings, halves of weighted Dynkin diagrams.
inline std::vector<SupportFactor> distinguished_factors() {
    return {
        {{'C', 3}, {1, 0, 1}, "C3(a1)"},
        {{'D', 4}, {1, 0, 1, 1}, "D4(a1)"},
        {{'F', 4}, {0, 1, 0, 0}, "F4(a3)"},
        {{'G', 2}, {0, 1}, "G2(a1)"},
    };
}

/// Largest degree of a root of the factor under its grading.
inline int factor_top_degree(const SupportFactor& f) {
    RootSystem rs(f.type);
    int top = 0;
    for (int r = 0; r < rs.num_positive(); ++r) {
        int d = 0;
        for (int i = 0; i < f.type.rank; ++i) d += rs.root(r)[i] * f.degrees[i];
        top = std::max(top, d);
    }
    return top;
}

/// Catalog of support types that can occur in g_1 of `gl`: sums of principal factors
/// and at most one distinguished non-principal factor, total rank <= rank(g), pruned by
/// the top degree each factor needs.
inline std::vector<SupportType> support_catalog(const GradedLie& gl) {
    const int maxdeg = gl.max_degree();
    const int rk = gl.rs().rank();
    const char fam = gl.rs().stype().family;
    const bool simply_laced = fam == 'A' || fam == 'D' || fam == 'E';
    std::vector<SupportFactor> principal;
    for (int k = 1; k <= rk; ++k) principal.push_back(principal_factor({'A', k}));
    if (!simply_laced) {
        for (int k = 2; k <= rk; ++k) principal.push_back(principal_factor({'B', k}));
        for (int k = 3; k <= rk; ++k) principal.push_back(principal_factor({'C', k}));
        if (rk >= 4) principal.push_back(principal_factor({'F', 4}));
        principal.push_back(principal_factor({'G', 2}));
    }
    for (int k = 4; k <= rk; ++k) principal.push_back(principal_factor({'D', k}));
    if (fam == 'E') principal.push_back(principal_factor({'E', 6}));
    std::vector<SupportFactor> usable;
    for (auto& f : principal)
        if (f.type.rank <= rk && coxeter_number(f.type) - 1 <= maxdeg) usable.push_back(f);
    std::vector<SupportFactor> special;
    for (auto& f : distinguished_factors()) {
        char ff = f.type.family;
        bool nsl = ff == 'B' || ff == 'C' || ff == 'F' || ff == 'G';
        if (nsl && simply_laced) continue;
        if (f.type.rank <= rk && factor_top_degree(f) <= maxdeg) special.push_back(f);
    }
    std::vector<SupportType> out;
    std::vector<SupportFactor> cur;
    std::function<void(int, int)> rec = [&](int start, int rank_left) {
        if (!cur.empty()) out.push_back({cur});
        for (int i = start; i < (int)usable.size(); ++i) {
            if (usable[i].type.rank > rank_left) continue;
            cur.push_back(usable[i]);
            rec(i, rank_left - usable[i].type.rank);
            cur.pop_back();
        }
    };
    rec(0, rk);
    for (auto& s : special) {
        cur = {s};
        rec(0, rk - s.type.rank);
    }
    return out;
}

struct SupportMap {
    SupportType stype;
    std::vector<int> images;  // root index per simple root of s (factors concatenated)
};

/// All maps satisfying: Gram ratios of s, pairwise differences not roots, degrees respected.
inline std::vector<SupportMap> enumerate_support_maps(const GradedLie& gl, const SupportType& st) {
    const auto& rs = gl.rs();
    std::vector<int> node_factor, node_local, node_deg;
    std::vector<std::vector<std::vector<Rational>>> forms;
    for (int f = 0; f < (int)st.factors.size(); ++f) {
        forms.push_back(dynkin_form(st.factors[f].type));
        for (int i = 0; i < st.factors[f].type.rank; ++i) {
            node_factor.push_back(f);
            node_local.push_back(i);
            node_deg.push_back(st.factors[f].degrees[i]);
        }
    }
    const int m = (int)node_factor.size();
    std::vector<int> pool0, pool1;
    for (int r = 0; r < rs.num_roots(); ++r) {
        if (gl.degree(r) == 0) pool0.push_back(r);
        if (gl.degree(r) == 1) pool1.push_back(r);
    }
    std::vector<int> first_node(st.factors.size());
    for (int i = m - 1; i >= 0; --i) first_node[node_factor[i]] = i;
    std::vector<SupportMap> out;
    std::vector<int> img(m, -1);
    std::function<void(int)> rec = [&](int i) {
        if (i == m) {
            out.push_back({st, img});
            return;
        }
        const int f = node_factor[i], li = node_local[i];
        const auto& pool = node_deg[i] == 0 ? pool0 : pool1;
        for (int r : pool) {
            // identical consecutive factors: first images increasing
            if (li == 0 && f > 0 && st.factors[f] == st.factors[f - 1] && r <= img[first_node[f - 1]]) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) {
                int q = img[j];
                if (q == r || rs.sum_index(r, rs.negative(q)) >= 0) {
                    ok = false;
                    break;
                }
                const Rational ip = rs.inner(r, q);
                if (node_factor[j] != f) {
                    ok = ip == 0LL;
                } else {
                    const auto& B = forms[f];
                    const int lj = node_local[j];
                    ok = ip * B[li][li] == rs.length2(r) * B[li][lj] && ip * B[lj][lj] == rs.length2(q) * B[li][lj];
                }
            }
            if (!ok) continue;
            img[i] = r;
            rec(i + 1);
        }
        img[i] = -1;
    };
    rec(0);
    return out;
}

/// Root subsystem generated by a set of roots (closure under their reflections), sorted.
inline std::vector<int> generated_subsystem(const RootSystem& rs, const std::vector<int>& gens) {
    std::set<int> seen(gens.begin(), gens.end());
    std::vector<int> stack(gens.begin(), gens.end());
    while (!stack.empty()) {
        int r = stack.back();
        stack.pop_back();
        for (int g : gens) {
            int s = rs.reflection_perm(g)[r];
            if (seen.insert(s).second) stack.push_back(s);
        }
    }
    return {seen.begin(), seen.end()};
}

inline std::pair<int, int> graded_dims(const GradedLie& gl, const std::vector<int>& subsystem, int rank) {
    int s0 = rank, s1 = 0;
    for (int r : subsystem) {
        if (gl.degree(r) == 0) ++s0;
        if (gl.degree(r) == 1) ++s1;
    }
    return {s0, s1};
}

inline bool is_locally_flat(const GradedLie& gl, const SupportMap& sm) {
    auto sub = generated_subsystem(gl.rs(), sm.images);
    auto [s0, s1] = graded_dims(gl, sub, (int)sm.images.size());
    return s0 == s1;
}

/// Whether some Weyl element of g sends the images into the simple roots of g.
/// A point x = M v + u is moved to the dominant chamber, v generic orthogonal to the
/// images and u dual to them; the images end up simple exactly when the set is complete.
inline bool is_complete(const GradedLie& gl, const SupportMap& sm, std::vector<int>* moved = nullptr) {
    const auto& rs = gl.rs();
    const int n = rs.rank();
    const int m = (int)sm.images.size();
    std::vector<std::vector<Rational>> vecs(m, std::vector<Rational>(n));
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < n; ++k) vecs[i][k] = rs.root(sm.images[i])[k];
    auto form_row = [&](const std::vector<Rational>& v) {
        std::vector<Rational> row(n, 0);
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j) row[k] += v[j] * rs.form()[j][k];
        return row;
    };
    auto ip = [&](const std::vector<Rational>& a, const IntVec& b) {
        Rational s = 0;
        auto row = form_row(a);
        for (int k = 0; k < n; ++k) s += row[k] * b[k];
        return s;
    };
    // u = sum c_i f_i with (u, f_j) = 1
    std::vector<std::vector<Rational>> gram(m, std::vector<Rational>(m + 1));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) gram[i][j] = rs.inner(sm.images[i], sm.images[j]);
        gram[i][m] = 1;
    }
    for (int c = 0; c < m; ++c) {
        int piv = c;
        while (gram[piv][c] == 0LL) ++piv;
        std::swap(gram[piv], gram[c]);
        for (int i = 0; i < m; ++i) {
            if (i == c || gram[i][c] == 0LL) continue;
            Rational f = gram[i][c] / gram[c][c];
            for (int j = c; j <= m; ++j) gram[i][j] -= f * gram[c][j];
        }
    }
    std::vector<Rational> u(n, 0);
    for (int i = 0; i < m; ++i) {
        Rational ci = gram[i][m] / gram[i][i];
        for (int k = 0; k < n; ++k) u[k] += ci * vecs[i][k];
    }
    std::vector<std::vector<Rational>> rows;
    for (auto& v : vecs) rows.push_back(form_row(v));
    auto perp = null_space(rows, n);
    std::vector<Rational> v(n, 0);
    std::vector<int> outside;
    for (int r = 0; r < rs.num_positive(); ++r) {
        bool zero = true;
        for (auto& b : perp)
            if (ip(b, rs.root(r)) != 0LL) zero = false;
        if (!zero) outside.push_back(r);
    }
    long long salt = 1;
    for (int attempt = 0;; ++attempt) {
        std::fill(v.begin(), v.end(), 0);
        long long c = 1;
        for (auto& b : perp) {
            for (int k = 0; k < n; ++k) v[k] += Rational(c) * b[k];
            c = c * (7 + 2 * salt) + 1;
        }
        bool generic = true;
        for (int r : outside)
            if (ip(v, rs.root(r)) == 0LL) generic = false;
        if (generic) break;
        ++salt;
        if (attempt > 50) throw std::runtime_error("no generic vector found");
    }
    Rational vmin = -1, umax = 0;
    for (int r : outside) {
        Rational a = abs(ip(v, rs.root(r)));
        if (vmin < 0LL || a < vmin) vmin = a;
    }
    for (int r = 0; r < rs.num_positive(); ++r) umax = std::max(umax, Rational(abs(ip(u, rs.root(r)))));
    Rational M = vmin > 0LL ? umax / vmin + 1 : Rational(0);
    std::vector<Rational> x(n);
    for (int k = 0; k < n; ++k) x[k] = M * v[k] + u[k];
    std::vector<int> cur = sm.images;
    while (true) {
        int neg = -1;
        for (int k = 0; k < n; ++k)
            if (ip(x, rs.root(rs.simple_index(k))) < 0LL) {
                neg = k;
                break;
            }
        if (neg < 0) break;
        int s = rs.simple_index(neg);
        x = rs.reflect(s, x);
        for (auto& r : cur) r = rs.reflection_perm(s)[r];
    }
    if (moved) *moved = cur;
    for (int r : cur)
        if (rs.height(r) != 1 || !rs.is_positive(r)) return false;
    return true;
}

/// Display label of a factor: short-root A_k in a non-simply-laced g gets a "~".
inline std::string factor_label(const GradedLie& gl, const SupportFactor& f, int image_root) {
    const auto& rs = gl.rs();
    if (f.type.family == 'A' && !rs.is_long(image_root)) return "~" + f.label;
    return f.label;
}

/// Combined label, components sorted by rank (desc), long before short, multiplicities grouped.
inline std::string support_label(const GradedLie& gl, const SupportMap& sm) {
    std::vector<std::tuple<int, int, std::string>> parts;
    int pos = 0;
    for (auto& f : sm.stype.factors) {
        std::string l = factor_label(gl, f, sm.images[pos]);
        parts.push_back({-f.type.rank, l[0] == '~' ? 1 : 0, l});
        pos += f.type.rank;
    }
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && std::get<2>(parts[j]) == std::get<2>(parts[i])) ++j;
        if (!out.empty()) out += "+";
        if (j - i > 1) out += std::to_string(j - i);
        out += std::get<2>(parts[i]);
        i = j;
    }
    return out.empty() ? "0" : out;
}

struct OrbitRecord {
    int index = 0;
    std::string label = "0";
    std::vector<int> simple_images;           // f(Pi(s))
    std::vector<int> subsystem;               // R(s)
    std::vector<int> s1;                      // degree-1 roots of R(s)
    std::vector<int> key;                     // W(g_0)-canonical form of R(s)
    std::vector<long long> rep;               // coefficients on g_1 positions
    int dim = 0;
    std::vector<int> signature;
    Mask s1_mask = 0;                         // generic orbit of span(s1) is this orbit
    Mask support_mask() const {
        Mask m = 0;
        for (std::size_t p = 0; p < rep.size(); ++p)
            if (rep[p] != 0) m |= Mask{1} << p;
        return m;
    }
};

/// Lexicographically smallest sorted image of a root set over W(g_0).
inline std::vector<int> canonical_form(const GradedLie& gl, const std::vector<int>& roots) {
    std::vector<int> best;
    std::vector<int> img(roots.size());
    for (const auto& w : gl.weyl_levi()) {
        for (std::size_t i = 0; i < roots.size(); ++i) img[i] = w[roots[i]];
        std::sort(img.begin(), img.end());
        if (best.empty() || img < best) best = img;
    }
    if (roots.empty()) return {};
    return best;
}

struct OrbitContext {
    const GradedLie* gl;
    GradedBasis basis;
    explicit OrbitContext(const GradedLie& g) : gl(&g), basis(g) {}
};

/// Exact rank of g_0 -> g_1 at e.
inline int orbit_dimension(const OrbitContext& ctx, const std::vector<long long>& rep) {
    return ad_rank_exact(ctx.basis, rep);
}

/// Generic signature on the coordinate subspace spanned by `mask`.
inline std::vector<int> generic_signature(const OrbitContext& ctx, Mask mask, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto c = random_point_mod(ctx.gl->dim_g1(), mask, rng);
    return orbit_signature(ctx.basis, c);
}

/// Generic rank of g_0 -> g_1 on span(mask), realised by an exact integer point.
/// Returns the point and its exact rank.
inline std::pair<std::vector<long long>, int> generic_exact_point(const OrbitContext& ctx, Mask mask,
                                                                  std::vector<long long> start, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int target = ad_rank_mod(ctx.basis, random_point_mod(ctx.gl->dim_g1(), mask, rng));
    int best = orbit_dimension(ctx, start);
    auto point = start;
    for (int attempt = 0; best < target && attempt < 200; ++attempt) {
        std::vector<long long> c(start.size(), 0);
        for (std::size_t p = 0; p < c.size(); ++p) {
            if (!(mask >> p & 1)) continue;
            if (attempt < 20)
                c[p] = (rng() & 1) ? 1 : -1;
            else
                c[p] = (long long)(rng() % 3) + 1 - (rng() & 1 ? 0 : 4);
        }
        int r = orbit_dimension(ctx, c);
        if (r > best) {
            best = r;
            point = c;
        }
    }
    return {point, best};
}

/// Full classification: enumerate, keep complete and locally flat maps, deduplicate.
inline std::vector<OrbitRecord> classify(const OrbitContext& ctx) {
    const auto& gl = *ctx.gl;
    if (gl.dim_g1() > 32) throw std::length_error("g_1 too large for classification");
    std::map<std::vector<int>, OrbitRecord> classes;
    std::set<std::vector<int>> seen_subsystems;
    for (const auto& st : support_catalog(gl)) {
        for (const auto& sm : enumerate_support_maps(gl, st)) {
            auto sub = generated_subsystem(gl.rs(), sm.images);
            if (!seen_subsystems.insert(sub).second) continue;
            auto [s0, s1] = graded_dims(gl, sub, (int)sm.images.size());
            if (s0 != s1) continue;
            if (!is_complete(gl, sm)) continue;
            auto key = canonical_form(gl, sub);
            if (classes.count(key)) continue;
            OrbitRecord rec;
            rec.label = support_label(gl, sm);
            rec.simple_images = sm.images;
            rec.subsystem = sub;
            rec.key = key;
            for (int r : sub)
                if (gl.degree(r) == 1) rec.s1.push_back(r);
            classes.emplace(key, rec);
        }
    }
    std::vector<OrbitRecord> out;
    OrbitRecord zero;
    zero.rep.assign(gl.dim_g1(), 0);
    out.push_back(zero);
    for (auto& [key, rec] : classes) {
        Mask m = 0;
        for (int r : rec.s1) m |= Mask{1} << gl.g1_position(r);
        std::vector<long long> ones(gl.dim_g1(), 0);
        for (int r : rec.s1) ones[gl.g1_position(r)] = 1;
        auto [pt, d] = generic_exact_point(ctx, m, ones, 0x5eed + key.size());
        rec.s1_mask = m;
        rec.rep = pt;
        rec.dim = d;
        out.push_back(rec);
    }
    for (auto& rec : out) rec.signature = generic_signature(ctx, rec.s1_mask, 0xC0FFEE);
    std::stable_sort(out.begin(), out.end(), [](const OrbitRecord& a, const OrbitRecord& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.key < b.key;
    });
    for (int i = 0; i < (int)out.size(); ++i) out[i].index = i;
    return out;
}

}  // namespace vinberg
