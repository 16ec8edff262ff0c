#include "common.hpp"

using namespace vinberg;

namespace {

// Brute force: a subset of g_1 is B_0-stable when adding any simple Levi root to a member
// lands in the subset or leaves the root system.
std::set<Mask> upsets_brute(const GradedLie& gl) {
    const auto& rs = gl.rs();
    const int n = gl.dim_g1();
    std::set<Mask> out;
    for (Mask m = 0; m < (Mask{1} << n); ++m) {
        bool ok = true;
        for (int p = 0; p < n && ok; ++p) {
            if (!(m >> p & 1)) continue;
            for (int j : gl.levi_nodes()) {
                IntVec v = rs.root(gl.g1()[p]);
                v[j] += 1;
                int q = rs.index_of(v);
                if (q >= 0 && !(m >> gl.g1_position(q) & 1)) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) out.insert(m);
    }
    return out;
}

}  // namespace

TEST_CASE("graded pieces") {
    // dim g_1 of each grading, from the module it is (spinor 16, wedge^3 C^6, C^2 (x) wedge^2 C^5, ...)
    const std::map<std::string, int> g1{{"E6.1", 16}, {"E6.2", 20}, {"E6.3", 20}, {"E6.4", 18}, {"F4.1", 14},
                                        {"F4.2", 12}, {"F4.3", 6},  {"F4.4", 8},  {"G2.1", 2},  {"G2.2", 4}};
    // |W(g_0)| from the Levi type: D5, A5, A1xA4, A2xA1xA2, C3, A1xA2, A2xA1, B3, A1, A1
    const std::map<std::string, std::size_t> wl{{"E6.1", 1920}, {"E6.2", 720}, {"E6.3", 240}, {"E6.4", 72},
                                                {"F4.1", 48},   {"F4.2", 12},  {"F4.3", 12},  {"F4.4", 48},
                                                {"G2.1", 2},    {"G2.2", 2}};
    for (const auto& c : case_catalog()) {
        CAPTURE(c.name);
        auto rs = std::make_shared<const RootSystem>(build_root_system(c.type));
        GradedLie gl(rs, c.node);
        CHECK(gl.dim_g1() == g1.at(c.name));
        CHECK(gl.weyl_levi().size() == wl.at(c.name));
        int total = 0;
        for (auto [i, d] : gl.dims()) {
            total += d;
            CHECK(gl.dims().at(-i) == d);
        }
        CHECK(total == rs->rank() + rs->num_roots());
        for (std::size_t p = 1; p < gl.g1().size(); ++p) CHECK(rs->height(gl.g1()[p - 1]) <= rs->height(gl.g1()[p]));
    }
}

TEST_CASE("W(g_0) permutes g_1 and preserves sizes") {
    auto rs = std::make_shared<const RootSystem>(build_root_system(parse_simple_type("F4")));
    GradedLie gl(rs, 2);
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        Mask m = rng() & ((Mask{1} << gl.dim_g1()) - 1);
        for (auto& w : gl.weyl_levi()) REQUIRE(popcount(gl.act(w, m)) == popcount(m));
    }
}

TEST_CASE("up-set enumeration matches brute force") {
    for (const char* name : {"G2.1", "G2.2", "F4.1", "F4.2", "F4.3", "F4.4", "E6.1"}) {
        CAPTURE(name);
        auto c = *find_case(name);
        auto rs = std::make_shared<const RootSystem>(build_root_system(c.type));
        GradedLie gl(rs, c.node);
        auto wp = weight_poset(gl);
        auto got = b_stable_subsets(wp);
        std::set<Mask> got_set(got.begin(), got.end());
        CHECK(got_set.size() == got.size());
        CHECK(got_set == upsets_brute(gl));
        for (Mask m : got) CHECK(is_up_set(wp, m));
    }
}
