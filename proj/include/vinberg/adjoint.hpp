#pragma once
/** @file adjoint.hpp
 *  @brief Matrices of ad(e) between graded pieces, for e in g_1; exact and mod-p ranks.
 */

#include "vinberg/grading.hpp"

#include <random>

namespace vinberg {

/// Basis of each graded piece of g as Chevalley-basis indices (h_i < rank <= e_r).
class GradedBasis {
public:
    explicit GradedBasis(const GradedLie& gl) : gl_(&gl) {
        const int n = gl.rs().rank();
        const int R = gl.rs().num_roots();
        for (int i = 0; i < n; ++i) pieces_[0].push_back(i);
        for (int r = 0; r < R; ++r) pieces_[gl.degree(r)].push_back(n + r);
        for (auto& [d, v] : pieces_) {
            auto& pos = position_[d];
            for (int k = 0; k < (int)v.size(); ++k) pos[v[k]] = k;
        }
        // [e_b, x] for each g_1 root b and every basis element x
        const int dim = n + R;
        table_.assign(gl.dim_g1(), std::vector<LieVec>(dim));
        for (int p = 0; p < gl.dim_g1(); ++p)
            for (int x = 0; x < dim; ++x) table_[p][x] = bracket_basis(gl.rs(), n + gl.g1()[p], x);
    }

    const std::vector<int>& piece(int d) const {
        static const std::vector<int> empty;
        auto it = pieces_.find(d);
        return it == pieces_.end() ? empty : it->second;
    }
    int position(int d, int basis_index) const { return position_.at(d).at(basis_index); }
    int min_degree() const { return pieces_.begin()->first; }
    int max_degree() const { return pieces_.rbegin()->first; }
    const LieVec& bracket_with(int g1pos, int x) const { return table_[g1pos][x]; }
    const GradedLie& graded() const { return *gl_; }

    /// Integer matrix of ad(e): columns = `sources` (basis indices of g_d), rows = g_{d+1}.
    IntMatrix ad_matrix(const std::vector<long long>& coeffs, const std::vector<int>& sources, int d) const {
        const auto& tgt = piece(d + 1);
        IntMatrix m(tgt.size(), std::vector<long long>(sources.size(), 0));
        for (int c = 0; c < (int)sources.size(); ++c)
            for (int p = 0; p < (int)coeffs.size(); ++p) {
                if (coeffs[p] == 0) continue;
                for (auto [k, v] : table_[p][sources[c]]) m[position(d + 1, k)][c] += coeffs[p] * v;
            }
        return m;
    }
    ModMatrix ad_matrix_mod(const std::vector<std::uint64_t>& coeffs, const std::vector<int>& sources, int d) const {
        const auto& tgt = piece(d + 1);
        ModMatrix m(tgt.size(), std::vector<std::uint64_t>(sources.size(), 0));
        for (int c = 0; c < (int)sources.size(); ++c)
            for (int p = 0; p < (int)coeffs.size(); ++p) {
                if (coeffs[p] == 0) continue;
                for (auto [k, v] : table_[p][sources[c]]) {
                    auto& cell = m[position(d + 1, k)][c];
                    cell = ModP::add(cell, ModP::mul(coeffs[p], ModP::from(v)));
                }
            }
        return m;
    }

private:
    const GradedLie* gl_;
    std::map<int, std::vector<int>> pieces_;
    std::map<int, std::map<int, int>> position_;
    std::vector<std::vector<LieVec>> table_;
};

inline ModMatrix mat_mul_mod(const ModMatrix& a, const ModMatrix& b) {
    if (a.empty() || b.empty()) return {};
    const std::size_t n = a.size(), k = b.size(), m = b[0].size();
    ModMatrix c(n, std::vector<std::uint64_t>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) c[i][j] = ModP::add(c[i][j], ModP::mul(a[i][t], b[t][j]));
        }
    return c;
}

/// Rank over Q of u -> [u, e], g_0 -> g_1.
inline int ad_rank_exact(const GradedBasis& gb, const std::vector<long long>& coeffs) {
    return rank_exact(gb.ad_matrix(coeffs, gb.piece(0), 0));
}

inline int ad_rank_mod(const GradedBasis& gb, const std::vector<std::uint64_t>& coeffs) {
    return rank_mod(gb.ad_matrix_mod(coeffs, gb.piece(0), 0));
}

/// Random coefficients mod p on the positions in `mask` (zero elsewhere).
inline std::vector<std::uint64_t> random_point_mod(int dim_g1, Mask mask, std::mt19937_64& rng) {
    std::vector<std::uint64_t> c(dim_g1, 0);
    for (int p = 0; p < dim_g1; ++p)
        if (mask >> p & 1) c[p] = 1 + rng() % (ModP::P - 1);
    return c;
}

/// G_0-invariant rank data of e in g_1:
///  - ranks of [I, e] and [I + z, e] for every ideal I sum of simple Levi factors (z = centre);
///  - ranks of ad(e)^k : g_d -> g_{d+k} for all d, k.
/// Equal orbits give equal signatures.
inline std::vector<int> orbit_signature(const GradedBasis& gb, const std::vector<std::uint64_t>& coeffs) {
    const auto& gl = gb.graded();
    const auto& rs = gl.rs();
    const int n = rs.rank();
    std::vector<int> sig;
    const auto& comps = gl.levi_components();
    const int m = (int)comps.size();
    for (int S = 0; S < (1 << m); ++S) {
        std::vector<int> src;
        for (int c = 0; c < m; ++c) {
            if (!(S >> c & 1)) continue;
            for (int k : comps[c]) src.push_back(k);
            for (int r : gl.piece(0)) {
                bool in = true;
                for (int j = 0; j < n; ++j)
                    if (rs.root(r)[j] != 0 && std::find(comps[c].begin(), comps[c].end(), j) == comps[c].end()) in = false;
                if (in) src.push_back(n + r);
            }
        }
        ModMatrix a = gb.ad_matrix_mod(coeffs, src, 0);
        if (a.empty()) a.assign(gl.dim_g1(), {});
        int r0 = src.empty() ? 0 : rank_mod(a);
        for (int p = 0; p < gl.dim_g1(); ++p) a[p].push_back(coeffs[p]);
        int r1 = rank_mod(a);
        sig.push_back(r0);
        sig.push_back(r1);
    }
    const int lo = gb.min_degree(), hi = gb.max_degree();
    std::map<int, ModMatrix> step;
    for (int d = lo; d < hi; ++d) step[d] = gb.ad_matrix_mod(coeffs, gb.piece(d), d);
    for (int d = lo; d < hi; ++d) {
        ModMatrix acc = step[d];
        sig.push_back(rank_mod(acc));
        for (int e = d + 1; e < hi; ++e) {
            acc = mat_mul_mod(step[e], acc);
            sig.push_back(rank_mod(acc));
        }
    }
    return sig;
}

}  // namespace vinberg
