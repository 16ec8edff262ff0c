#pragma once
/** @file bott.hpp
 *  @brief Borel-Weil-Bott: the shift-and-sort rule on Grassmannians, the dotted Weyl
 *         action on G/B, and the Levi version on G_0/B_0 used by the geometric pipeline.
 */

#include "vinberg/grading.hpp"
#include "vinberg/schur.hpp"

#include <optional>

namespace vinberg {

/// Nonzero cohomology of an irreducible bundle: H^degree = V_weight. Empty = all zero.
struct BottResult {
    int degree = 0;
    std::vector<int> weight;
    bool operator==(const BottResult&) const = default;
};

/// S_lambda Q (x) S_mu R on Grass(r, n): lambda has n-r parts, mu has r parts.
inline std::optional<BottResult> bott_gl(int n, int r, const Partition& lambda, const Partition& mu) {
    if ((int)lambda.size() != n - r || (int)mu.size() != r) throw std::invalid_argument("bott_gl: lengths do not match Grass(r,n)");
    std::vector<int> x(lambda);
    x.insert(x.end(), mu.begin(), mu.end());
    BottResult res;
    if (!gl_dot_sort(x, res.weight, res.degree)) return std::nullopt;
    return res;
}

/// Serre-dual input: H^i(S_l Q (x) S_m R) = H^{dim-i}(dual (x) omega)^*, omega = det Q^{-r} (x) det R^{n-r}.
inline std::pair<Partition, Partition> grass_serre_dual(int n, int r, const Partition& lambda, const Partition& mu) {
    Partition l2(lambda.rbegin(), lambda.rend()), m2(mu.rbegin(), mu.rend());
    for (int& v : l2) v = -v - r;
    for (int& v : m2) v = -v + (n - r);
    return {l2, m2};
}

/// Dotted action on G/B for a simple type; weight in fundamental coordinates.
/// Returns H^l = V_nu (convention: dominant weights have H^0 = V_lambda).
inline std::optional<BottResult> bott_gb(const RootSystem& rs, const std::vector<int>& weight) {
    const int n = rs.rank();
    std::vector<long long> b(n);
    for (int i = 0; i < n; ++i) b[i] = weight[i] + 1;
    int len = 0;
    for (;;) {
        int j = -1;
        for (int i = 0; i < n; ++i) {
            if (b[i] == 0) return std::nullopt;
            if (b[i] < 0 && j < 0) j = i;
        }
        if (j < 0) break;
        const long long bj = b[j];
        for (int k = 0; k < n; ++k) b[k] -= bj * rs.cartan()[j][k];
        ++len;
    }
    BottResult res{len, std::vector<int>(n)};
    for (int i = 0; i < n; ++i) res.weight[i] = static_cast<int>(b[i] - 1);
    return res;
}

/// Weyl group order by closure of simple reflections on a regular weight.
inline std::size_t weyl_group_order(const RootSystem& rs) {
    const int n = rs.rank();
    std::set<std::vector<long long>> seen;
    std::vector<std::vector<long long>> stack{std::vector<long long>(n, 1)};
    seen.insert(stack.back());
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (int j = 0; j < n; ++j) {
            auto w = v;
            for (int k = 0; k < n; ++k) w[k] -= v[j] * rs.cartan()[j][k];
            if (seen.insert(w).second) stack.push_back(w);
        }
    }
    return seen.size();
}

/// Levi of a grading, with weights recorded as (grade, <lambda, a_j^vee> for Levi nodes j).
/// A weight here is always a sum of g_1 roots ("weight-sum" label); the bundle it labels
/// on G_0/B_0 has character minus that weight, so H^l = (V_nu)^* for the Bott output nu.
class LeviData {
public:
    explicit LeviData(const GradedLie& gl) : gl_(&gl) {
        const auto& rs = gl.rs();
        nodes_ = gl.levi_nodes();
        const int m = (int)nodes_.size();
        cartan_.assign(m, std::vector<int>(m));
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) cartan_[a][b] = rs.cartan()[nodes_[a]][nodes_[b]];
        for (int r : gl.levi_positive()) {
            IntVec cv = rs.coroot(r);
            std::vector<int> c(m);
            int h = 0;
            for (int a = 0; a < m; ++a) {
                c[a] = cv[nodes_[a]];
                h += c[a];
            }
            coroots_.push_back(c);
            rho_pair_.push_back(h);
        }
        for (int a = 0; a < m; ++a) all_.push_back(a);
        den_ = 1;
        for (int h : rho_pair_) den_ *= h;
        for (int r : gl.g1()) g1_coords_.push_back(coords(rs.root(r)));
    }

    const GradedLie& graded() const { return *gl_; }
    int size() const { return (int)nodes_.size(); }
    const std::vector<int>& nodes() const { return nodes_; }
    int num_positive() const { return (int)coroots_.size(); }
    /// Levi coordinates of the g_1 root at each g_1 position.
    const std::vector<std::vector<int>>& g1_coords() const { return g1_coords_; }

    /// Levi indices of a set of nodes.
    std::vector<int> indices_of(const std::vector<int>& nodes) const {
        std::vector<int> out;
        for (int n : nodes) out.push_back((int)(std::find(nodes_.begin(), nodes_.end(), n) - nodes_.begin()));
        return out;
    }

    std::vector<int> coords(const IntVec& v) const {
        const auto& rs = gl_->rs();
        std::vector<int> a(nodes_.size(), 0);
        for (std::size_t j = 0; j < nodes_.size(); ++j)
            for (int k = 0; k < rs.rank(); ++k) a[j] += v[k] * rs.cartan()[k][nodes_[j]];
        return a;
    }
    /// Fundamental coordinates of 2 rho_0.
    std::vector<int> two_rho() const { return std::vector<int>(nodes_.size(), 2); }

    /// Dotted sort within the Levi Weyl group.
    std::optional<BottResult> dot(const std::vector<int>& a) const { return dot_within(a, all_); }

    /// Dotted sort within the Weyl group of a sub-Levi given by Levi indices.
    std::optional<BottResult> dot_within(const std::vector<int>& a, const std::vector<int>& sub) const {
        const int m = size();
        std::vector<bool> use(m, false);
        for (int i : sub) use[i] = true;
        std::vector<long long> b(m);
        for (int i = 0; i < m; ++i) b[i] = a[i] + 1;
        int len = 0;
        for (;;) {
            int j = -1;
            for (int i = 0; i < m; ++i) {
                if (!use[i]) continue;
                if (b[i] == 0) return std::nullopt;
                if (b[i] < 0 && j < 0) j = i;
            }
            if (j < 0) break;
            const long long bj = b[j];
            for (int k = 0; k < m; ++k) b[k] -= bj * cartan_[j][k];
            ++len;
        }
        BottResult res{len, std::vector<int>(m)};
        for (int i = 0; i < m; ++i) res.weight[i] = static_cast<int>(b[i] - 1);
        return res;
    }

    /// prod <a + rho, alpha^vee>: the Weyl dimension times dim_denominator(); signed
    /// (it is the Euler characteristic up to that constant).
    BigInt dim_numerator(const std::vector<int>& a) const {
        BigInt p = 1;
        for (std::size_t r = 0; r < coroots_.size(); ++r) {
            long long s = 0;
            for (std::size_t j = 0; j < a.size(); ++j) s += (long long)coroots_[r][j] * (a[j] + 1);
            if (s == 0) return 0;
            p *= s;
        }
        return p;
    }
    const BigInt& dim_denominator() const { return den_; }
    BigInt dim(const std::vector<int>& a) const { return dim_numerator(a) / den_; }

    /// Highest weight of the dual: -w0(nu).
    std::vector<int> dual(const std::vector<int>& nu) const {
        std::vector<int> lowest = nu;
        for (int& x : lowest) x = -x;
        auto r = dot_plain(lowest);
        return r;
    }

private:
    // plain (undotted) move to the dominant chamber
    std::vector<int> dot_plain(std::vector<int> a) const {
        const int m = size();
        for (;;) {
            int j = -1;
            for (int i = 0; i < m; ++i)
                if (a[i] < 0) {
                    j = i;
                    break;
                }
            if (j < 0) return a;
            const int aj = a[j];
            for (int k = 0; k < m; ++k) a[k] -= aj * cartan_[j][k];
        }
    }

    const GradedLie* gl_;
    std::vector<int> nodes_, all_;
    std::vector<std::vector<int>> cartan_;
    std::vector<std::vector<int>> coroots_;
    std::vector<int> rho_pair_;
    BigInt den_;
    std::vector<std::vector<int>> g1_coords_;
};

/// Irreducible G_0-module: grade (central character) and Levi highest weight.
struct LeviIrrep {
    int grade = 0;
    std::vector<int> hw;
    auto operator<=>(const LeviIrrep&) const = default;
};

/// Signed sum of Bott results over a multiset of weight-sum labels (K-theory level).
/// Keys are (cohomological degree, irreducible), values signed multiplicities are all positive.
inline std::map<std::pair<int, LeviIrrep>, long long> euler_char_line_bundles(
    const LeviData& L, const std::map<std::pair<int, std::vector<int>>, long long>& bag) {
    std::map<std::pair<int, LeviIrrep>, long long> out;
    for (auto& [key, m] : bag) {
        auto r = L.dot(key.second);
        if (!r) continue;
        out[{r->degree, LeviIrrep{key.first, r->weight}}] += m;
    }
    return out;
}

}  // namespace vinberg
