#pragma once
// Shared helpers: one CaseModel per case for the whole test binary (E6 builds are slow).

#include "vinberg/verify.hpp"

#include <doctest.h>

namespace testutil {

inline vinberg::CaseModel& model(const std::string& name) {
    static std::map<std::string, std::unique_ptr<vinberg::CaseModel>> cache;
    auto& p = cache[name];
    if (!p) p = std::make_unique<vinberg::CaseModel>(*vinberg::find_case(name));
    return *p;
}

inline vinberg::BigInt binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    vinberg::BigInt r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// All partitions of k with at most `rows` rows and at most `cols` columns.
inline std::vector<vinberg::Partition> partitions(int k, int rows, int cols) {
    std::vector<vinberg::Partition> out;
    vinberg::Partition cur;
    std::function<void(int, int)> rec = [&](int left, int maxpart) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        if ((int)cur.size() == rows) return;
        for (int p = std::min(left, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(k, cols);
    return out;
}

inline vinberg::Partition conjugate(const vinberg::Partition& l) {
    vinberg::Partition c;
    for (int j = 0; !l.empty() && j < l[0]; ++j) {
        int n = 0;
        for (int x : l)
            if (x > j) ++n;
        c.push_back(n);
    }
    return c;
}

inline vinberg::Partition pad(vinberg::Partition p, int n) {
    p.resize(n, 0);
    return p;
}

}  // namespace testutil
