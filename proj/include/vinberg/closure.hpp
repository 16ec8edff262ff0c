#pragma once
/** @file closure.hpp
 *  @brief Degeneration order on the orbits of g_1.
 *
 *  Sufficient test: O_j lies in the closure of O_i when a W(g_0)-translate of a
 *  coordinate subspace with generic orbit O_j sits inside a coordinate subspace whose
 *  generic orbit is O_i (the inclusion is a limit under a one-parameter subgroup of the
 *  torus killing the extra coordinates).
 *  Necessary test: every entry of the rank signature is lower semicontinuous.
 */

#include "vinberg/vinberg.hpp"

#include <ostream>
#include <sstream>

namespace vinberg {

/// Which orbit contains a point given mod p; -1 if no signature matches.
inline int identify_orbit(const OrbitContext& ctx, const std::vector<OrbitRecord>& orbits,
                          const std::vector<std::uint64_t>& point) {
    const int d = ad_rank_mod(ctx.basis, point);
    std::vector<int> cand;
    for (auto& o : orbits)
        if (o.dim == d) cand.push_back(o.index);
    if (cand.size() == 1) return cand[0];
    auto sig = orbit_signature(ctx.basis, point);
    for (int i : cand)
        if (orbits[i].signature == sig) return i;
    return -1;
}

inline std::vector<std::uint64_t> to_mod(const std::vector<long long>& c) {
    std::vector<std::uint64_t> out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) out[i] = ModP::from(c[i]);
    return out;
}

/// Orbit of a generic point of span(mask).
inline int generic_orbit(const OrbitContext& ctx, const std::vector<OrbitRecord>& orbits, Mask mask,
                         std::uint64_t seed = 0x0B5E55ED) {
    std::mt19937_64 rng(seed ^ mask);
    return identify_orbit(ctx, orbits, random_point_mod(ctx.gl->dim_g1(), mask, rng));
}

/// Every up-set of the weight poset with the orbit of its generic point.
struct UpSetTable {
    std::vector<Mask> upsets;
    std::vector<int> orbit;
};

inline UpSetTable upset_table(const OrbitContext& ctx, const std::vector<OrbitRecord>& orbits) {
    UpSetTable t;
    t.upsets = b_stable_subsets(weight_poset(*ctx.gl));
    t.orbit.reserve(t.upsets.size());
    for (Mask m : t.upsets) t.orbit.push_back(m == 0 ? 0 : generic_orbit(ctx, orbits, m));
    return t;
}

enum class Relation { Proven, Excluded, Open };

struct HasseDiagram {
    std::vector<int> dims;
    std::vector<std::pair<int, int>> edges;  // (lower, upper) covers of the proven order
    /// rel[j][i] for j != i: status of "O_j lies in the closure of O_i".
    std::vector<std::vector<Relation>> rel;
};

inline std::vector<std::vector<bool>> transitive_closure(std::vector<std::vector<bool>> m) {
    const int n = (int)m.size();
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (m[i][k])
                for (int j = 0; j < n; ++j)
                    if (m[k][j]) m[i][j] = true;
    return m;
}

/// Cover relations of a (transitively closed, strict) order given as le[j][i] = j < i.
inline std::vector<std::pair<int, int>> transitive_reduction(const std::vector<std::vector<bool>>& lt) {
    const int n = (int)lt.size();
    std::vector<std::pair<int, int>> out;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            if (!lt[j][i]) continue;
            bool cover = true;
            for (int k = 0; k < n && cover; ++k)
                if (lt[j][k] && lt[k][i]) cover = false;
            if (cover) out.emplace_back(j, i);
        }
    std::sort(out.begin(), out.end());
    return out;
}

/// Pairs that dimensions alone allow: j strictly below i only if dim_j < dim_i.
inline std::vector<std::vector<bool>> dimension_filter(const std::vector<OrbitRecord>& orbits) {
    const int n = (int)orbits.size();
    std::vector<std::vector<bool>> ok(n, std::vector<bool>(n, false));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) ok[j][i] = orbits[j].dim < orbits[i].dim;
    return ok;
}

inline bool signature_below(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] > b[k]) return false;
    return true;
}

inline HasseDiagram hasse(const OrbitContext& ctx, const std::vector<OrbitRecord>& orbits, const UpSetTable& ups) {
    const auto& gl = *ctx.gl;
    const int n = (int)orbits.size();
    HasseDiagram h;
    for (auto& o : orbits) h.dims.push_back(o.dim);
    // subspaces known to be generic in each orbit
    std::vector<std::vector<Mask>> family(n);
    for (std::size_t k = 0; k < ups.upsets.size(); ++k)
        if (ups.orbit[k] >= 0) family[ups.orbit[k]].push_back(ups.upsets[k]);
    std::vector<std::vector<Mask>> translates(n);
    for (int i = 0; i < n; ++i) {
        translates[i] = gl.mask_orbit(orbits[i].s1_mask);
        for (Mask m : translates[i]) family[i].push_back(m);
    }
    auto filt = dimension_filter(orbits);
    std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            if (!filt[j][i]) continue;
            bool found = j == 0;
            for (Mask small : translates[j]) {
                for (Mask big : family[i])
                    if ((small & ~big) == 0) {
                        found = true;
                        break;
                    }
                if (found) break;
            }
            lt[j][i] = found;
        }
    lt = transitive_closure(lt);
    h.rel.assign(n, std::vector<Relation>(n, Relation::Excluded));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            if (i == j) continue;
            if (lt[j][i])
                h.rel[j][i] = Relation::Proven;
            else if (filt[j][i] && signature_below(orbits[j].signature, orbits[i].signature))
                h.rel[j][i] = Relation::Open;
        }
    h.edges = transitive_reduction(lt);
    return h;
}

/// Comparison of the computed order against a reference list of cover edges.
struct HasseReconciliation {
    std::vector<std::pair<int, int>> missing;     // reference covers absent from computed covers
    std::vector<std::pair<int, int>> extra;       // computed covers absent from reference covers
    std::vector<std::pair<int, int>> unproven;    // reference relations not certified
    std::vector<std::pair<int, int>> contradicted;  // reference relations the necessary test rules out
    bool equal() const { return missing.empty() && extra.empty(); }
};

inline HasseReconciliation reconcile(const HasseDiagram& h, const std::vector<std::pair<int, int>>& ref_edges) {
    const int n = (int)h.dims.size();
    HasseReconciliation r;
    std::vector<std::vector<bool>> ref(n, std::vector<bool>(n, false));
    for (auto [a, b] : ref_edges) ref[a][b] = true;
    auto ref_lt = transitive_closure(ref);
    auto ref_cov = transitive_reduction(ref_lt);
    std::set<std::pair<int, int>> mine(h.edges.begin(), h.edges.end()), theirs(ref_cov.begin(), ref_cov.end());
    for (auto e : theirs)
        if (!mine.count(e)) r.missing.push_back(e);
    for (auto e : mine)
        if (!theirs.count(e)) r.extra.push_back(e);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            if (!ref_lt[j][i]) continue;
            if (h.rel[j][i] == Relation::Excluded) r.contradicted.emplace_back(j, i);
            else if (h.rel[j][i] == Relation::Open) r.unproven.emplace_back(j, i);
        }
    return r;
}

/// DOT rendering, nodes in index order, one edge per cover.
inline std::string hasse_dot(const HasseDiagram& h, const std::string& name) {
    std::ostringstream os;
    os << "graph \"" << name << "\" {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < h.dims.size(); ++i)
        os << "  O" << i << " [label=\"O" << i << " (dim " << h.dims[i] << ")\"];\n";
    for (auto [a, b] : h.edges) os << "  O" << a << " -- O" << b << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace vinberg
