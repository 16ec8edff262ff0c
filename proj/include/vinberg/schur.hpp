#pragma once
/** @file schur.hpp
 *  @brief Partitions, Littlewood-Richardson numbers, Weyl dimensions and GL-character
 *         bags for exterior and symmetric powers of tensor products.
 */

#include "vinberg/rootsys.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace vinberg {

/// Weakly decreasing integer sequence; entries may be negative (GL weights).
using Partition = std::vector<int>;
/// One partition per tensor factor, e.g. (a,b;c,d,e;f,g,h).
using GLWeightTuple = std::vector<Partition>;

inline bool is_partition(const Partition& p) {
    for (std::size_t i = 1; i < p.size(); ++i)
        if (p[i] > p[i - 1]) return false;
    return true;
}

inline int size_of(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

inline std::string tuple_string(const GLWeightTuple& t) {
    std::string s = "(";
    for (std::size_t f = 0; f < t.size(); ++f) {
        if (f) s += ";";
        for (std::size_t i = 0; i < t[f].size(); ++i) s += (i ? "," : "") + std::to_string(t[f][i]);
    }
    return s + ")";
}

/// Parses "(4,2;2,2,2;2,2,2)" (parentheses optional).
inline GLWeightTuple parse_tuple(std::string s) {
    GLWeightTuple t(1);
    std::string num;
    auto flush = [&] {
        if (!num.empty()) t.back().push_back(std::stoi(num));
        num.clear();
    };
    for (char c : s) {
        if (c == '(' || c == ')' || c == ' ') continue;
        if (c == ',') flush();
        else if (c == ';') {
            flush();
            t.emplace_back();
        } else
            num += c;
    }
    flush();
    return t;
}

// ---- dotted sorting for GL(n) ----

/// Sorts x + rho (rho = (n-1,...,0)) into decreasing order. Returns false if there is
/// a repetition; otherwise `nu` = sorted - rho and `len` the number of inversions.
inline bool gl_dot_sort(const std::vector<int>& x, std::vector<int>& nu, int& len) {
    const int n = (int)x.size();
    std::vector<int> y(n);
    for (int i = 0; i < n; ++i) y[i] = x[i] + (n - 1 - i);
    len = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (y[i] == y[j]) return false;
            if (y[i] < y[j]) ++len;
        }
    std::sort(y.begin(), y.end(), std::greater<int>());
    nu.resize(n);
    for (int i = 0; i < n; ++i) nu[i] = y[i] - (n - 1 - i);
    return true;
}

/// dim S_lambda C^n (any weakly decreasing integer lambda).
inline BigInt gl_dim(const Partition& l) {
    const int n = (int)l.size();
    BigInt num = 1, den = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            num *= (l[i] - l[j] + j - i);
            den *= (j - i);
        }
    return num / den;
}

inline BigInt tuple_dim(const GLWeightTuple& t) {
    BigInt d = 1;
    for (auto& p : t) d *= gl_dim(p);
    return d;
}

/// Multiset of GL-irreducibles of a product of general linear groups.
struct CharacterBag {
    std::map<GLWeightTuple, long long> terms;
    void add(const GLWeightTuple& t, long long m) {
        auto& v = terms[t];
        v += m;
        if (v == 0) terms.erase(t);
    }
    BigInt dimension() const {
        BigInt d = 0;
        for (auto& [t, m] : terms) d += tuple_dim(t) * m;
        return d;
    }
    bool operator==(const CharacterBag&) const = default;
};

/// Weight multiset (keyed by per-factor weight vectors) to irreducibles, by dotted sorting
/// each factor: the multiplicity of nu is the signed count of weights landing on nu.
inline CharacterBag decompose_weights(const std::map<GLWeightTuple, long long>& weights) {
    CharacterBag bag;
    for (auto& [w, m] : weights) {
        GLWeightTuple nu(w.size());
        int sign = 1;
        bool zero = false;
        for (std::size_t f = 0; f < w.size() && !zero; ++f) {
            int len;
            if (!gl_dot_sort(w[f], nu[f], len)) zero = true;
            else if (len & 1) sign = -sign;
        }
        if (!zero) bag.add(nu, sign * m);
    }
    return bag;
}

/// Weights of the standard representation of a product of GL(dims[f]) acting on the tensor product.
inline std::vector<GLWeightTuple> tensor_weights(const std::vector<int>& dims) {
    std::vector<GLWeightTuple> out{GLWeightTuple{}};
    for (int n : dims) {
        std::vector<GLWeightTuple> next;
        for (auto& w : out)
            for (int i = 0; i < n; ++i) {
                auto v = w;
                Partition e(n, 0);
                e[i] = 1;
                v.push_back(e);
                next.push_back(v);
            }
        out = std::move(next);
    }
    return out;
}

inline GLWeightTuple tuple_add(GLWeightTuple a, const GLWeightTuple& b) {
    for (std::size_t f = 0; f < a.size(); ++f)
        for (std::size_t i = 0; i < a[f].size(); ++i) a[f][i] += b[f][i];
    return a;
}

/// Lambda^k of the tensor product of standard representations of GL(dims[f]).
inline CharacterBag ext_power_decompose(const std::vector<int>& dims, int k) {
    auto items = tensor_weights(dims);
    GLWeightTuple zero;
    for (int n : dims) zero.push_back(Partition(n, 0));
    std::vector<std::map<GLWeightTuple, long long>> layer(k + 1);
    layer[0][zero] = 1;
    for (auto& it : items)
        for (int j = k; j >= 1; --j)
            for (auto& [w, m] : layer[j - 1]) layer[j][tuple_add(w, it)] += m;
    return decompose_weights(layer[k]);
}

/// S^k of the tensor product of standard representations of GL(dims[f]).
inline CharacterBag sym_power_decompose(const std::vector<int>& dims, int k) {
    auto items = tensor_weights(dims);
    GLWeightTuple zero;
    for (int n : dims) zero.push_back(Partition(n, 0));
    std::vector<std::map<GLWeightTuple, long long>> layer(k + 1);
    layer[0][zero] = 1;
    for (auto& it : items)
        for (int j = 1; j <= k; ++j)
            for (auto& [w, m] : layer[j - 1]) layer[j][tuple_add(w, it)] += m;
    return decompose_weights(layer[k]);
}

/// Littlewood-Richardson coefficient c^nu_{lambda,mu}: skew tableaux of shape nu/lambda,
/// content mu, whose reverse reading word is a lattice word.
inline long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    auto strip = [](Partition p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
        return p;
    };
    Partition l = strip(lambda), m = strip(mu), n = strip(nu);
    if (size_of(l) + size_of(m) != size_of(n)) return 0;
    if (l.size() > n.size()) return 0;
    l.resize(n.size(), 0);
    for (std::size_t i = 0; i < n.size(); ++i)
        if (l[i] > n[i]) return 0;
    const int rows = (int)n.size();
    // fill row by row, each row right to left (reverse reading order)
    std::vector<std::vector<int>> tab(rows);
    for (int r = 0; r < rows; ++r) tab[r].assign(n[r], 0);
    std::vector<int> used(m.size(), 0);
    long long count = 0;
    std::function<void(int, int)> rec = [&](int r, int c) {
        if (r == rows) {
            ++count;
            return;
        }
        if (c < l[r]) {
            rec(r + 1, r + 1 < rows ? n[r + 1] - 1 : 0);
            return;
        }
        for (int v = 1; v <= (int)m.size(); ++v) {
            if (used[v - 1] >= m[v - 1]) continue;
            if (c + 1 < n[r] && tab[r][c + 1] != 0 && tab[r][c + 1] < v) continue;  // rows weakly increase
            if (r > 0 && c < n[r - 1] && c >= l[r - 1] && tab[r - 1][c] >= v) continue;  // columns strictly increase
            if (v > 1 && used[v - 1] + 1 > used[v - 2]) continue;  // lattice condition
            tab[r][c] = v;
            ++used[v - 1];
            if (c - 1 >= l[r])
                rec(r, c - 1);
            else
                rec(r + 1, r + 1 < rows ? n[r + 1] - 1 : 0);
            --used[v - 1];
            tab[r][c] = 0;
        }
    };
    if (rows == 0) return size_of(m) == 0 ? 1 : 0;
    rec(0, n[0] - 1);
    return count;
}

/// Weyl dimension of the irreducible of a simple type with highest weight given in
/// fundamental coordinates (Bourbaki numbering).
inline BigInt weyl_dim(const SimpleType& t, const std::vector<int>& hw) {
    if ((int)hw.size() != t.rank) throw std::invalid_argument("weight length does not match rank");
    for (int a : hw)
        if (a < 0) throw std::invalid_argument("weight is not dominant");
    RootSystem rs(t);
    Rational num = 1, den = 1;
    for (int r = 0; r < rs.num_positive(); ++r) {
        // <lambda + rho, alpha^vee> with alpha^vee = sum c_j (a_j, a_j)/(alpha, alpha) a_j^vee
        Rational a = 0, b = 0;
        for (int j = 0; j < t.rank; ++j) {
            Rational cj = Rational(rs.root(r)[j]) * rs.form()[j][j] / rs.length2(r);
            a += cj * (hw[j] + 1);
            b += cj;
        }
        num *= a;
        den *= b;
    }
    Rational q = num / den;
    return boost::multiprecision::numerator(q);
}

}  // namespace vinberg
