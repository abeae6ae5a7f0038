#include <doctest.h>

#include <random>

#include "bridge/errors.hpp"
#include "bridge/plat.hpp"
#include "oracles.hpp"

using namespace bridge;

namespace {

SurfaceSpec S(int n) { return SurfaceSpec::make(n); }
McgWord W(int n, const char* s) { return McgWord::parse(S(n), s); }

}  // namespace

TEST_CASE("plat closure examples") {
    auto unlink = plat_closure(McgWord(S(3)), S(3));
    CHECK(unlink.components == 3);
    CHECK(unlink.pd_code.empty());
    CHECK(export_link(unlink, "pd") == "PD[]");
    CHECK(export_link(unlink, "gauss") == "//");

    auto one = plat_closure(W(2, "2"), S(2));
    CHECK(one.components == 1);
    CHECK(one.pd_code.size() == 1);
    // the walk from the first bottom cap reaches the crossing from above on
    // the under-strand
    CHECK(export_link(one, "pd") == "PD[X(2,2,1,1)]");
    CHECK(export_link(one, "gauss") == "-1,1");
    CHECK(export_link(one, "csv") == "\"2\",2,1,1");
    CHECK(plat_csv_header() == "word,n,components,crossings");

    CHECK(plat_closure(W(2, "1"), S(2)).components == 2);
    CHECK_THROWS_AS(export_link(one, "dot"), ConfigError);
}

TEST_CASE("PD golden codes") {
    // sigma_2^3: the usual trefoil code X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]
    // with labels shifted by one
    auto t = plat_closure(W(2, "2 2 2"), S(2));
    CHECK(t.components == 1);
    CHECK(export_link(t, "pd") == "PD[X(2,6,3,5),X(4,2,5,1),X(6,4,1,3)]");
    // alternating three-crossing knot
    auto f = plat_closure(W(2, "2 -1 2"), S(2));
    CHECK(f.components == 1);
    CHECK(export_link(f, "pd") == "PD[X(2,5,3,6),X(6,3,1,4),X(4,1,5,2)]");
    CHECK(export_link(f, "gauss") == "-2,3,-1,2,-3,1");
}

TEST_CASE("orbit components") {
    CHECK(orbit_components(McgWord(S(3)), S(3)) == 3);
    CHECK(orbit_components(W(2, "2"), S(2)) == 1);
    CHECK(orbit_components(W(3, "1 3"), S(3)) == 3);
    CHECK(orbit_components(W(3, "2 4"), S(3)) == 1);
}

TEST_CASE("traversal agrees with orbits on random walks") {
    auto spec = S(3);
    std::mt19937_64 rng(17);
    for (int i = 0; i < 1000; ++i) {
        auto w = oracle::random_word(rng, spec, rng() % 51);
        auto link = plat_closure(w, spec);  // cross-checks internally
        CHECK(link.components == orbit_components(w, spec));
        CHECK(link.pd_code.size() == w.size());
        CHECK(link.labels_paired());
        CHECK(link.gauss.size() == static_cast<std::size_t>(link.components));
        std::size_t visits = 0;
        for (const auto& g : link.gauss) visits += g.size();
        CHECK(visits == 2 * w.size());
        CHECK(plat_closure(w.inverse(), spec).components == link.components);
        CHECK(orbit_components(w * W(3, "1"), spec) == link.components);
        CHECK(orbit_components(W(3, "1") * w, spec) == link.components);
    }
}

TEST_CASE("exports are stable") {
    auto w = W(3, "2 -3 4 -1 2 2 -4");
    auto a = plat_closure(w, S(3)), b = plat_closure(w, S(3));
    for (const char* f : {"pd", "gauss", "csv"}) CHECK(export_link(a, f) == export_link(b, f));
}
