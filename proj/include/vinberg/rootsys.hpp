#pragma once
/** @file rootsys.hpp
 *  @brief Root systems of types A-G (Bourbaki numbering), invariant form, Weyl group
 *         actions and Chevalley structure constants.
 */

#include "vinberg/numeric.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace vinberg {

struct SimpleType {
    char family = 'A';
    int rank = 1;

    bool valid() const {
        switch (family) {
            case 'A': return rank >= 1;
            case 'B': return rank >= 2;
            case 'C': return rank >= 2;
            case 'D': return rank >= 4;
            case 'E': return rank >= 6 && rank <= 8;
            case 'F': return rank == 4;
            case 'G': return rank == 2;
            default: return false;
        }
    }
    std::string name() const { return std::string(1, family) + std::to_string(rank); }
    bool operator==(const SimpleType&) const = default;
};

inline SimpleType parse_simple_type(const std::string& s) {
    if (s.size() < 2) throw std::invalid_argument("bad Dynkin type: " + s);
    SimpleType t{s[0], std::stoi(s.substr(1))};
    if (!t.valid()) throw std::invalid_argument("invalid Dynkin type: " + s);
    return t;
}

/// Symmetric form on simple roots, long roots of squared length 2.
inline std::vector<std::vector<Rational>> dynkin_form(const SimpleType& t) {
    if (!t.valid()) throw std::invalid_argument("invalid Dynkin type: " + t.name());
    const int n = t.rank;
    std::vector<std::vector<Rational>> b(n, std::vector<Rational>(n, 0));
    std::vector<Rational> len(n, 2);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    switch (t.family) {
        case 'A': break;
        case 'B': len[n - 1] = 1; break;
        case 'C':
            for (int i = 0; i < n - 1; ++i) len[i] = 1;
            break;
        case 'D':
            edges.pop_back();
            edges.push_back({n - 3, n - 1});
            break;
        case 'E':
            // 1-3-4-5-6(-7-8), 2-4
            edges.clear();
            edges.push_back({0, 2});
            edges.push_back({1, 3});
            for (int i = 2; i + 1 < n; ++i) edges.push_back({i, i + 1});
            break;
        case 'F': len[2] = len[3] = 1; break;
        case 'G': len[0] = Rational(2, 3); break;
    }
    for (int i = 0; i < n; ++i) b[i][i] = len[i];
    for (auto [i, j] : edges) {
        // (a_i, a_j) = -max(len)/2 for a simple bond, -1 for double/triple bonds to a long root
        Rational v = -std::min(len[i], len[j]) / 2;
        if (len[i] != len[j]) v = -std::max(len[i], len[j]) / 2;
        b[i][j] = b[j][i] = v;
    }
    return b;
}

class RootSystem {
public:
    explicit RootSystem(SimpleType t) : stype_(t), form_(dynkin_form(t)) {
        const int n = t.rank;
        cartan_.assign(n, std::vector<int>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Rational c = 2 * form_[i][j] / form_[j][j];
                cartan_[i][j] = static_cast<int>(to_ll(c));
            }
        build_roots();
        build_structure_constants();
    }

    const SimpleType& stype() const { return stype_; }
    int rank() const { return stype_.rank; }
    int num_roots() const { return static_cast<int>(roots_.size()); }
    int num_positive() const { return num_pos_; }
    const IntVec& root(int i) const { return roots_[i]; }
    const std::vector<IntVec>& roots() const { return roots_; }
    /// cartan[i][j] = <a_i, a_j^vee>
    const std::vector<std::vector<int>>& cartan() const { return cartan_; }
    const std::vector<std::vector<Rational>>& form() const { return form_; }

    int index_of(const IntVec& v) const {
        auto it = index_.find(v);
        return it == index_.end() ? -1 : it->second;
    }
    bool is_root(const IntVec& v) const { return index_.count(v) > 0; }
    int negative(int i) const { return neg_[i]; }
    bool is_positive(int i) const { return i < num_pos_; }
    int simple_index(int k) const { return simple_[k]; }
    int height(int i) const {
        int h = 0;
        for (int c : roots_[i]) h += c;
        return h;
    }

    template <class V1, class V2>
    Rational inner_vec(const V1& a, const V2& b) const {
        Rational s = 0;
        const int n = rank();
        for (int i = 0; i < n; ++i) {
            if (a[i] == 0LL) continue;
            for (int j = 0; j < n; ++j)
                if (b[j] != 0LL) s += Rational(a[i]) * Rational(b[j]) * form_[i][j];
        }
        return s;
    }
    Rational inner(int a, int b) const { return ip_[a][b]; }
    Rational length2(int a) const { return ip_[a][a]; }
    bool is_long(int a) const { return ip_[a][a] == max_len_; }
    /// <lambda, alpha^vee> for an integral vector lambda in root coordinates.
    int pair_coroot(const IntVec& lambda, int alpha) const {
        Rational r = 2 * inner_vec(lambda, roots_[alpha]) / ip_[alpha][alpha];
        return static_cast<int>(to_ll(r));
    }
    int pair_roots(int b, int a) const { return pairing_[b][a]; }

    /// Coroot of root a in the basis of simple coroots.
    IntVec coroot(int a) const {
        IntVec c(rank());
        for (int i = 0; i < rank(); ++i) {
            Rational v = Rational(roots_[a][i]) * form_[i][i] / ip_[a][a];
            c[i] = static_cast<int>(to_ll(v));
        }
        return c;
    }

    /// s_alpha(lambda) = lambda - <lambda, alpha^vee> alpha, on rational vectors.
    std::vector<Rational> reflect(int alpha, const std::vector<Rational>& lambda) const {
        Rational c = 2 * inner_vec(lambda, roots_[alpha]) / ip_[alpha][alpha];
        std::vector<Rational> out = lambda;
        for (int i = 0; i < rank(); ++i) out[i] -= c * roots_[alpha][i];
        return out;
    }
    IntVec reflect_int(int alpha, const IntVec& lambda) const {
        int c = pair_coroot(lambda, alpha);
        IntVec out = lambda;
        for (int i = 0; i < rank(); ++i) out[i] -= c * roots_[alpha][i];
        return out;
    }
    /// Permutation of root indices induced by the reflection in root alpha.
    const std::vector<int>& reflection_perm(int alpha) const { return refl_perm_[alpha]; }

    /// N_{a,b}: [e_a, e_b] = N_{a,b} e_{a+b}; zero if a+b is not a root.
    int N(int a, int b) const { return nab_[a][b]; }
    /// Index of the root a+b or -1.
    int sum_index(int a, int b) const { return sum_[a][b]; }

    /// Orbit of a rational weight under the Weyl group.
    std::set<std::vector<Rational>> weyl_orbit(const std::vector<Rational>& w) const {
        std::set<std::vector<Rational>> seen{w};
        std::vector<std::vector<Rational>> stack{w};
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (int k = 0; k < rank(); ++k) {
                auto r = reflect(simple_[k], v);
                if (seen.insert(r).second) stack.push_back(r);
            }
        }
        return seen;
    }

private:
    void build_roots() {
        const int n = rank();
        std::set<IntVec> pos;
        std::vector<std::vector<IntVec>> by_height(1);
        for (int i = 0; i < n; ++i) {
            IntVec v(n, 0);
            v[i] = 1;
            by_height[0].push_back(v);
            pos.insert(v);
        }
        auto pair_simple = [&](const IntVec& v, int i) {
            Rational s = 0;
            for (int j = 0; j < n; ++j) s += Rational(v[j]) * form_[j][i];
            Rational c = 2 * s / form_[i][i];
            return static_cast<int>(to_ll(c));
        };
        for (std::size_t h = 0; h < by_height.size(); ++h) {
            std::set<IntVec> next;
            for (const auto& b : by_height[h]) {
                for (int i = 0; i < n; ++i) {
                    int p = 0;
                    IntVec d = b;
                    while (true) {
                        d[i] -= 1;
                        if (!pos.count(d)) break;
                        ++p;
                    }
                    int q = p - pair_simple(b, i);
                    if (q > 0) {
                        IntVec up = b;
                        up[i] += 1;
                        next.insert(up);
                    }
                }
            }
            if (next.empty()) break;
            by_height.emplace_back(next.begin(), next.end());
            for (auto& v : next) pos.insert(v);
        }
        for (auto& layer : by_height)
            for (auto& v : layer) roots_.push_back(v);
        num_pos_ = static_cast<int>(roots_.size());
        for (int i = 0; i < num_pos_; ++i) {
            IntVec m = roots_[i];
            for (auto& c : m) c = -c;
            roots_.push_back(m);
        }
        for (int i = 0; i < num_roots(); ++i) index_[roots_[i]] = i;
        neg_.resize(num_roots());
        for (int i = 0; i < num_roots(); ++i) neg_[i] = i < num_pos_ ? i + num_pos_ : i - num_pos_;
        simple_.resize(n);
        for (int k = 0; k < n; ++k) {
            IntVec v(n, 0);
            v[k] = 1;
            simple_[k] = index_.at(v);
        }
        const int R = num_roots();
        ip_.assign(R, std::vector<Rational>(R));
        for (int a = 0; a < R; ++a)
            for (int b = 0; b < R; ++b) ip_[a][b] = inner_vec(roots_[a], roots_[b]);
        max_len_ = 0;
        for (int a = 0; a < R; ++a) max_len_ = std::max(max_len_, ip_[a][a]);
        pairing_.assign(R, std::vector<int>(R));
        for (int a = 0; a < R; ++a)
            for (int b = 0; b < R; ++b) {
                Rational c = 2 * ip_[b][a] / ip_[a][a];
                pairing_[b][a] = static_cast<int>(to_ll(c));
            }
        sum_.assign(R, std::vector<int>(R, -1));
        for (int a = 0; a < R; ++a)
            for (int b = 0; b < R; ++b) {
                IntVec s = roots_[a];
                for (int i = 0; i < n; ++i) s[i] += roots_[b][i];
                sum_[a][b] = index_of(s);
            }
        refl_perm_.assign(R, std::vector<int>(R));
        for (int a = 0; a < R; ++a)
            for (int b = 0; b < R; ++b) refl_perm_[a][b] = index_.at(reflect_int(a, roots_[b]));
    }

    // Structure constants from extraspecial pairs (all signs +), extended by the
    // standard identities for N_{a,b} with N_{-a,-b} = -N_{a,b}.
    void build_structure_constants() {
        const int R = num_roots();
        const int P = num_pos_;
        auto p_plus_one = [&](int a, int b) {
            int p = 0;
            IntVec d = roots_[b];
            while (true) {
                for (int i = 0; i < rank(); ++i) d[i] -= roots_[a][i];
                if (!is_root(d)) break;
                ++p;
            }
            return p + 1;
        };
        std::vector<std::vector<int>> npos(P, std::vector<int>(P, 0));
        std::vector<bool> done_sum(P, false);
        std::vector<std::pair<int, int>> extraspecial(P, {-1, -1});
        for (int x = 0; x < P; ++x) {
            for (int a = 0; a < P; ++a) {
                int b = -1;
                IntVec d = roots_[x];
                for (int i = 0; i < rank(); ++i) d[i] -= roots_[a][i];
                b = index_of(d);
                if (b >= 0 && b < P && a < b) {
                    extraspecial[x] = {a, b};
                    break;
                }
            }
        }
        std::function<int(int, int)> Ngen = [&](int x, int y) -> int {
            int s = sum_[x][y];
            if (s < 0) return 0;
            bool px = x < P, py = y < P;
            if (px && py) return x < y ? npos[x][y] : -npos[y][x];
            if (!px && !py) return -Ngen(neg_[x], neg_[y]);
            if (!px && py) return -Ngen(y, x);
            int z = neg_[s];
            if (s < P) {
                // x + y positive, y and z negative
                Rational v = -ip_[z][z] / ip_[x][x] * Ngen(neg_[y], neg_[z]);
                return static_cast<int>(to_ll(v));
            }
            Rational v = ip_[z][z] / ip_[y][y] * Ngen(z, x);
            return static_cast<int>(to_ll(v));
        };
        std::vector<int> order(P);
        for (int i = 0; i < P; ++i) order[i] = i;  // already sorted by height
        for (int x : order) {
            auto [g, d] = extraspecial[x];
            if (g < 0) continue;
            npos[g][d] = p_plus_one(g, d);
            for (int a = 0; a < P; ++a) {
                IntVec diff = roots_[x];
                for (int i = 0; i < rank(); ++i) diff[i] -= roots_[a][i];
                int b = index_of(diff);
                if (b < 0 || b >= P || !(a < b) || a == g) continue;
                Rational t = 0;
                int bg = sum_[b][neg_[g]];
                if (bg >= 0) t += Rational(Ngen(b, neg_[g]) * Ngen(a, neg_[d])) / ip_[bg][bg];
                int ag = sum_[a][neg_[g]];
                if (ag >= 0) t += Rational(Ngen(neg_[g], a) * Ngen(b, neg_[d])) / ip_[ag][ag];
                Rational v = ip_[x][x] / Rational(npos[g][d]) * t;
                npos[a][b] = static_cast<int>(to_ll(v));
            }
            done_sum[x] = true;
        }
        nab_.assign(R, std::vector<int>(R, 0));
        for (int a = 0; a < R; ++a)
            for (int b = 0; b < R; ++b) nab_[a][b] = Ngen(a, b);
    }

    SimpleType stype_;
    std::vector<std::vector<Rational>> form_;
    std::vector<std::vector<int>> cartan_;
    std::vector<IntVec> roots_;
    std::map<IntVec, int> index_;
    std::vector<int> neg_, simple_;
    int num_pos_ = 0;
    std::vector<std::vector<Rational>> ip_;
    Rational max_len_;
    std::vector<std::vector<int>> pairing_;
    std::vector<std::vector<int>> sum_;
    std::vector<std::vector<int>> refl_perm_;
    std::vector<std::vector<int>> nab_;
};

inline RootSystem build_root_system(const SimpleType& t) {
    if (!t.valid()) throw std::invalid_argument("invalid Dynkin type: " + t.name());
    return RootSystem(t);
}

/// Sparse element of g in the Chevalley basis: indices < rank are simple coroots h_i,
/// index rank + r is the root vector e_r.
using LieVec = std::map<int, long long>;

inline void lie_add(LieVec& v, int idx, long long c) {
    if (c == 0) return;
    auto& x = v[idx];
    x += c;
    if (x == 0) v.erase(idx);
}

/// Bracket of two basis elements.
inline LieVec bracket_basis(const RootSystem& rs, int x, int y) {
    const int n = rs.rank();
    LieVec out;
    bool hx = x < n, hy = y < n;
    if (hx && hy) return out;
    if (hx) {
        int r = y - n;
        lie_add(out, y, rs.pair_roots(r, rs.simple_index(x)));
        return out;
    }
    if (hy) {
        int r = x - n;
        lie_add(out, x, -rs.pair_roots(r, rs.simple_index(y)));
        return out;
    }
    int a = x - n, b = y - n;
    if (rs.negative(a) == b) {
        IntVec c = rs.coroot(a);
        for (int i = 0; i < n; ++i) lie_add(out, i, c[i]);
        return out;
    }
    int s = rs.sum_index(a, b);
    if (s >= 0) lie_add(out, n + s, rs.N(a, b));
    return out;
}

inline LieVec bracket(const RootSystem& rs, const LieVec& u, const LieVec& v) {
    LieVec out;
    for (auto [i, a] : u)
        for (auto [j, b] : v)
            for (auto [k, c] : bracket_basis(rs, i, j)) lie_add(out, k, a * b * c);
    return out;
}

}  // namespace vinberg
