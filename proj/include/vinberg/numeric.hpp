#pragma once
/** @file numeric.hpp
 *  @brief Exact scalars and matrix rank (integer Bareiss, and a prime-field variant for sweeps).
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace vinberg {

using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::cpp_int;

/// Value of an integral rational.
inline long long to_ll(const Rational& r) {
    return static_cast<long long>(boost::multiprecision::numerator(r) / boost::multiprecision::denominator(r));
}
using IntVec = std::vector<int>;
using IntMatrix = std::vector<std::vector<long long>>;

/// Rank over Q of an integer matrix, fraction-free elimination.
inline int rank_exact(const IntMatrix& m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = m[i][j];
    BigInt prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

/// Arithmetic modulo the Mersenne prime 2^61 - 1.
struct ModP {
    static constexpr std::uint64_t P = (std::uint64_t{1} << 61) - 1;
    static std::uint64_t reduce(__uint128_t x) {
        std::uint64_t lo = static_cast<std::uint64_t>(x & P);
        std::uint64_t hi = static_cast<std::uint64_t>(x >> 61);
        std::uint64_t s = lo + hi;
        if (s >= P) s -= P;
        return s;
    }
    static std::uint64_t mul(std::uint64_t a, std::uint64_t b) { return reduce(__uint128_t(a) * b); }
    static std::uint64_t add(std::uint64_t a, std::uint64_t b) {
        std::uint64_t s = a + b;
        return s >= P ? s - P : s;
    }
    static std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + P - b; }
    static std::uint64_t from(long long v) {
        long long r = v % static_cast<long long>(P);
        if (r < 0) r += static_cast<long long>(P);
        return static_cast<std::uint64_t>(r);
    }
    static std::uint64_t pow(std::uint64_t a, std::uint64_t e) {
        std::uint64_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    static std::uint64_t inv(std::uint64_t a) { return pow(a, P - 2); }
};

using ModMatrix = std::vector<std::vector<std::uint64_t>>;

/// Rank over F_p, p = 2^61 - 1. Destroys its argument.
inline int rank_mod(ModMatrix a) {
    if (a.empty()) return 0;
    const std::size_t rows = a.size(), cols = a[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        const std::uint64_t inv = ModP::inv(a[r][c]);
        for (std::size_t j = c; j < cols; ++j) a[r][j] = ModP::mul(a[r][j], inv);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const std::uint64_t f = a[i][c];
            if (f == 0) continue;
            for (std::size_t j = c; j < cols; ++j) a[i][j] = ModP::sub(a[i][j], ModP::mul(f, a[r][j]));
        }
        ++r;
    }
    return static_cast<int>(r);
}

/// Null space basis over Q of a rational matrix (rows x cols); returns vectors of length cols.
inline std::vector<std::vector<Rational>> null_space(std::vector<std::vector<Rational>> a, std::size_t cols) {
    const std::size_t rows = a.size();
    std::vector<int> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0LL) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        Rational inv = 1 / a[r][c];
        for (auto& x : a[r]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0LL) continue;
            Rational f = a[i][c];
            for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_col.push_back(static_cast<int>(c));
        ++r;
    }
    std::vector<bool> is_piv(cols, false);
    for (int c : pivot_col) is_piv[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        std::vector<Rational> v(cols, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -a[i][f];
        basis.push_back(v);
    }
    return basis;
}

}  // namespace vinberg
