#pragma once
/** @file grading.hpp
 *  @brief Z-grading of g by one marked node: pieces g_i, the Levi g_0, the weight
 *         poset of g_1 and its up-sets (B_0-stable subspaces).
 */

#include "vinberg/rootsys.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <stdexcept>

namespace vinberg {

using Mask = std::uint64_t;

inline int popcount(Mask m) { return __builtin_popcountll(m); }

class GradedLie {
public:
    /// node is 1-based (Bourbaki).
    GradedLie(std::shared_ptr<const RootSystem> rs, int node) : rs_(std::move(rs)), node_(node - 1) {
        if (node < 1 || node > rs_->rank()) throw std::out_of_range("marked node out of range");
        const int R = rs_->num_roots();
        for (int r = 0; r < R; ++r) pieces_[degree(r)].push_back(r);
        g1_ = pieces_[1];
        pos_in_g1_.assign(R, -1);
        for (int i = 0; i < (int)g1_.size(); ++i) pos_in_g1_[g1_[i]] = i;
        for (int r : pieces_[0])
            if (rs_->is_positive(r)) levi_pos_.push_back(r);
        for (int k = 0; k < rs_->rank(); ++k)
            if (k != node_) levi_nodes_.push_back(k);
        // connected components of the Levi diagram
        std::vector<int> comp(rs_->rank(), -1);
        for (int k : levi_nodes_) {
            if (comp[k] >= 0) continue;
            std::vector<int> c{k}, stack{k};
            comp[k] = (int)components_.size();
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int v : levi_nodes_)
                    if (comp[v] < 0 && rs_->cartan()[u][v] != 0) {
                        comp[v] = comp[k];
                        c.push_back(v);
                        stack.push_back(v);
                    }
            }
            std::sort(c.begin(), c.end());
            components_.push_back(c);
        }
        build_weyl_group();
    }

    const RootSystem& rs() const { return *rs_; }
    std::shared_ptr<const RootSystem> rs_ptr() const { return rs_; }
    int node() const { return node_ + 1; }
    int node0() const { return node_; }
    int degree(int r) const { return rs_->root(r)[node_]; }
    int degree_vec(const IntVec& v) const { return v[node_]; }
    const std::vector<int>& piece(int i) const {
        static const std::vector<int> empty;
        auto it = pieces_.find(i);
        return it == pieces_.end() ? empty : it->second;
    }
    std::map<int, int> dims() const {
        std::map<int, int> d;
        for (auto& [i, v] : pieces_) d[i] = (int)v.size() + (i == 0 ? rs_->rank() : 0);
        return d;
    }
    int max_degree() const { return pieces_.rbegin()->first; }
    int dim_g0() const { return rs_->rank() + (int)piece(0).size(); }
    int dim_g1() const { return (int)g1_.size(); }
    /// g_1 roots, ordered by height.
    const std::vector<int>& g1() const { return g1_; }
    int g1_position(int r) const { return pos_in_g1_[r]; }
    const std::vector<int>& levi_positive() const { return levi_pos_; }
    const std::vector<int>& levi_nodes() const { return levi_nodes_; }
    /// Simple-root node sets of the simple factors of the Levi.
    const std::vector<std::vector<int>>& levi_components() const { return components_; }
    /// W(g_0) as permutations of all root indices.
    const std::vector<std::vector<int>>& weyl_levi() const { return weyl_; }
    /// Image of a g_1 position mask under w in W(g_0).
    Mask act(const std::vector<int>& w, Mask m) const {
        Mask out = 0;
        for (int p = 0; p < dim_g1(); ++p)
            if (m >> p & 1) out |= Mask{1} << pos_in_g1_[w[g1_[p]]];
        return out;
    }
    /// W(g_0)-orbit of a mask, sorted and deduplicated.
    std::vector<Mask> mask_orbit(Mask m) const {
        std::vector<Mask> out;
        out.reserve(weyl_.size());
        for (const auto& w : weyl_) out.push_back(act(w, m));
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    /// Nodes j of the Levi whose lowering operator preserves span(U): the Levi of P_U.
    std::vector<int> parabolic_nodes(Mask up) const {
        std::vector<int> out;
        for (int j : levi_nodes_) {
            bool ok = true;
            for (int p = 0; p < dim_g1() && ok; ++p) {
                if (!(up >> p & 1)) continue;
                IntVec d = rs_->root(g1_[p]);
                d[j] -= 1;
                int q = rs_->index_of(d);
                if (q >= 0 && !(up >> pos_in_g1_[q] & 1)) ok = false;
            }
            if (ok) out.push_back(j);
        }
        return out;
    }
    /// dim G_0/P for the parabolic with Levi nodes `nodes`.
    int flag_dimension(const std::vector<int>& nodes) const {
        int c = 0;
        for (int r : levi_pos_) {
            bool inside = true;
            for (int k = 0; k < rs_->rank(); ++k)
                if (rs_->root(r)[k] != 0 && std::find(nodes.begin(), nodes.end(), k) == nodes.end()) inside = false;
            if (!inside) ++c;
        }
        return c;
    }

private:
    void build_weyl_group() {
        const int R = rs_->num_roots();
        std::vector<int> id(R);
        for (int i = 0; i < R; ++i) id[i] = i;
        std::set<std::vector<int>> seen{id};
        std::vector<std::vector<int>> frontier{id};
        weyl_.push_back(id);
        while (!frontier.empty()) {
            std::vector<std::vector<int>> next;
            for (auto& w : frontier)
                for (int k : levi_nodes_) {
                    const auto& s = rs_->reflection_perm(rs_->simple_index(k));
                    std::vector<int> sw(R);
                    for (int i = 0; i < R; ++i) sw[i] = s[w[i]];
                    if (seen.insert(sw).second) {
                        weyl_.push_back(sw);
                        next.push_back(std::move(sw));
                    }
                }
            frontier = std::move(next);
        }
    }

    std::shared_ptr<const RootSystem> rs_;
    int node_;
    std::map<int, std::vector<int>> pieces_;
    std::vector<int> g1_, pos_in_g1_, levi_pos_, levi_nodes_;
    std::vector<std::vector<int>> components_;
    std::vector<std::vector<int>> weyl_;
};

inline GradedLie grade_by_node(std::shared_ptr<const RootSystem> rs, int k) { return GradedLie(std::move(rs), k); }

struct WeightPoset {
    int size = 0;
    std::vector<std::vector<int>> up;    // upper covers by simple Levi roots
    std::vector<std::vector<int>> down;  // lower covers
    std::vector<Mask> above;             // strict up-closure
};

inline WeightPoset weight_poset(const GradedLie& gl) {
    WeightPoset wp;
    const auto& rs = gl.rs();
    wp.size = gl.dim_g1();
    wp.up.resize(wp.size);
    wp.down.resize(wp.size);
    for (int p = 0; p < wp.size; ++p)
        for (int j : gl.levi_nodes()) {
            IntVec v = rs.root(gl.g1()[p]);
            v[j] += 1;
            int q = rs.index_of(v);
            if (q >= 0) {
                wp.up[p].push_back(gl.g1_position(q));
                wp.down[gl.g1_position(q)].push_back(p);
            }
        }
    wp.above.assign(wp.size, 0);
    // g1() is ordered by height, so process from the top.
    for (int p = wp.size - 1; p >= 0; --p)
        for (int q : wp.up[p]) wp.above[p] |= (Mask{1} << q) | wp.above[q];
    return wp;
}

inline bool is_up_set(const WeightPoset& wp, Mask m) {
    for (int p = 0; p < wp.size; ++p)
        if ((m >> p & 1) && (wp.above[p] & ~m)) return false;
    return true;
}

/// All up-sets, as bitmasks over g_1 positions.
inline std::vector<Mask> b_stable_subsets(const WeightPoset& wp) {
    if (wp.size > 32) throw std::length_error("weight poset too large for up-set enumeration");
    std::vector<Mask> out;
    // decide elements from the top of the height order down
    std::function<void(int, Mask)> rec = [&](int p, Mask cur) {
        if (p < 0) {
            out.push_back(cur);
            return;
        }
        rec(p - 1, cur);
        bool ok = true;
        for (int q : wp.up[p])
            if (!(cur >> q & 1)) ok = false;
        if (ok) rec(p - 1, cur | (Mask{1} << p));
    };
    rec(wp.size - 1, 0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace vinberg
