#include "common.hpp"

using namespace vinberg;
using testutil::model;

namespace {

std::multiset<int> dims_of(const CaseModel& m) {
    std::multiset<int> d;
    for (auto& o : m.orbits()) d.insert(o.dim);
    return d;
}

}  // namespace

TEST_CASE("binary cubics and 3x2 matrices") {
    // S^3 C^2: zero, x^3, x^2 y, generic
    CHECK(dims_of(model("G2.2")) == std::multiset<int>{0, 2, 3, 4});
    // C^3 (x) C^2 under GL3 x GL2: rank r matrices form an orbit of dimension r(3 + 2 - r)
    std::multiset<int> ranks;
    for (int r = 0; r <= 2; ++r) ranks.insert(r * (5 - r));
    CHECK(dims_of(model("F4.3")) == ranks);
    CHECK(dims_of(model("G2.1")) == std::multiset<int>{0, 2});
}

TEST_CASE("generic orbit dimensions of the prehomogeneous E6 modules") {
    // both modules are prehomogeneous; wedge^3 C^6 also has the quartic hypersurface below the open orbit
    CHECK(model("E6.1").orbits().back().dim == 16);
    const auto& o = model("E6.2").orbits();
    CHECK(o.back().dim == 20);
    CHECK(o[o.size() - 2].dim == 19);
}

TEST_CASE("orbit records are self-consistent") {
    for (const char* name : {"G2.1", "G2.2", "F4.1", "F4.2", "F4.3", "F4.4", "E6.2"}) {
        CAPTURE(name);
        auto& m = model(name);
        const auto& orbits = m.orbits();
        CHECK(orbits.front().dim == 0);
        std::mt19937 gen(11);
        std::vector<long long> random_point(m.graded().dim_g1());
        for (auto& c : random_point) c = (long long)(gen() % 97) - 48;
        CHECK(orbits.back().dim == orbit_dimension(m.context(), random_point));
        std::set<std::vector<int>> sigs;
        for (std::size_t i = 0; i < orbits.size(); ++i) {
            const auto& o = orbits[i];
            CAPTURE(o.label);
            CHECK(o.index == (int)i);
            if (i) CHECK(orbits[i - 1].dim <= o.dim);
            CHECK(orbit_dimension(m.context(), o.rep) == o.dim);
            CHECK(identify_orbit(m.context(), orbits, to_mod(o.rep)) == o.index);
            CHECK(sigs.insert(o.signature).second);
            // translates of the support span by W(g_0) stay generic in the same orbit
            if (o.index > 0) {
                std::mt19937 rng(o.index);
                const auto& W = m.graded().weyl_levi();
                for (int t = 0; t < 5; ++t) {
                    Mask w = m.graded().act(W[rng() % W.size()], o.s1_mask);
                    CHECK(generic_orbit(m.context(), orbits, w) == o.index);
                }
            }
        }
    }
}

TEST_CASE("closure order is a partial order compatible with dimension") {
    for (const char* name : {"G2.2", "F4.2", "F4.3", "F4.4", "E6.1"}) {
        CAPTURE(name);
        auto& m = model(name);
        const auto& h = m.hasse_diagram();
        const int n = (int)m.orbits().size();
        for (auto [a, b] : h.edges) CHECK(h.dims[a] < h.dims[b]);
        std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
        for (auto [a, b] : h.edges) lt[a][b] = true;
        lt = transitive_closure(lt);
        for (int i = 0; i < n; ++i) {
            CHECK_FALSE(lt[i][i]);
            if (i) CHECK(lt[0][i]);
            if (i + 1 < n) CHECK(lt[i][n - 1]);
        }
        // every proven relation is in the cover closure; every excluded pair is not
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i)
                if (i != j) {
                    if (h.rel[j][i] == Relation::Proven) CHECK(lt[j][i]);
                    if (h.rel[j][i] == Relation::Excluded) CHECK_FALSE(lt[j][i]);
                }
    }
    // orbits of binary cubics and of 3x2 matrices form chains
    for (const char* name : {"G2.2", "F4.3"}) {
        auto& h = model(name).hasse_diagram();
        for (int i = 0; i + 1 < (int)h.dims.size(); ++i) CHECK(std::count(h.edges.begin(), h.edges.end(), std::pair{i, i + 1}) == 1);
        CHECK(h.edges.size() + 1 == h.dims.size());
    }
}
