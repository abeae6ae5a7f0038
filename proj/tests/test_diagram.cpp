#include <doctest.h>

#include "bridge/diagram.hpp"
#include "bridge/errors.hpp"
#include "oracles.hpp"

using namespace bridge;

namespace {

SurfaceSpec S3{3};
McgWord W(const char* s, SurfaceSpec spec = S3) { return McgWord::parse(spec, s); }

std::vector<int> counts(const RegionReport& r) {
    std::vector<int> c;
    for (const auto& f : r.faces) c.push_back(static_cast<int>(f.punctures.size()));
    std::sort(c.begin(), c.end());
    return c;
}

// i(X, boundary of a neighborhood of an edge between two punctures) = 2 w_X(edge)
long long edge_formula(const CurveClass& x, int t) {
    Triangulation T(x.spec().disk_punctures());
    int e = (2 * t - 1 < T.m()) ? T.axis(2 * t - 1) : T.right_ray();
    return 2 * static_cast<long long>(x.weights()[e]);
}

CurveClass standard_disk(SurfaceSpec spec, int t) {
    if (2 * t < spec.punctures()) return base_curve(spec, 2 * t - 1, 2 * t);
    return base_curve(spec, 1, spec.disk_punctures() - 1);  // bounds punctures 2n-1, 2n
}

}  // namespace

TEST_CASE("hand-built pair of round curves") {
    auto d = oracle::two_circles({2}, {1}, {3}, {4, 5, 6});
    CHECK(d.crossing_count() == 2);
    CHECK(d.face_count() == 4);
    CHECK_FALSE(d.has_empty_bigon());
    auto r = reduce_to_minimal(d);
    CHECK(r.crossing_count() == 2);
    CHECK(r.regions().puncture_total() == 6);
    CHECK(counts(r.regions()) == std::vector<int>{1, 1, 1, 3});
    // matches the drawn curves
    auto drawn = reduce_to_minimal(joint_diagram(base_curve(S3, 1, 2), base_curve(S3, 2, 3)));
    CHECK(drawn.crossing_count() == 2);
    CHECK(drawn.regions().faces.size() == 4);
    CHECK(counts(drawn.regions()) == counts(r.regions()));
}

TEST_CASE("wiggled disjoint curves") {
    auto d = oracle::two_circles({}, {1, 2}, {3, 4}, {5, 6});
    CHECK(d.crossing_count() == 2);
    CHECK(d.has_empty_bigon());
    auto r = reduce_to_minimal(d);
    CHECK(r.crossing_count() == 0);
    r.validate();
    CHECK(counts(r.regions()) == std::vector<int>{2, 2, 2});
    auto again = reduce_to_minimal(r);
    CHECK(again.dump() == r.dump());
}

TEST_CASE("hand-built maps are checked") {
    CHECK_THROWS(MultiCurveDiagram::from_sequences(6, {std::vector<int>{}, std::vector<int>{}}, {}, {}));
    // a puncture left out
    CHECK_THROWS(oracle::two_circles({2}, {1}, {3}, {4, 5}));
}

TEST_CASE("single curves") {
    auto d = single_diagram(base_curve(S3, 1, 2));
    CHECK(d.crossing_count() == 0);
    CHECK(counts(complementary_regions(d)) == std::vector<int>{2, 4});
    auto e = single_diagram(apply_word(base_curve(S3, 2, 4), W("1 -3 2 2 4")));
    CHECK(e.regions().faces.size() == 2);
    CHECK(counts(e.regions()) == std::vector<int>{3, 3});
}

TEST_CASE("intersection examples") {
    auto d12 = base_curve(S3, 1, 2), d23 = base_curve(S3, 2, 3), d45 = base_curve(S3, 4, 5);
    CHECK(joint_diagram(d12, d45).crossing_count() == 0);
    CHECK(reduce_to_minimal(joint_diagram(d12, d12)).crossing_count() == 0);
    CHECK(intersection_number(d12, d12) == 0);
    CHECK(intersection_number(d12, d45) == 0);
    CHECK(intersection_number(d12, d23) == 2);
    CHECK(joint_diagram(d12, d45).regions().faces.size() == 3);
    CHECK(counts(joint_diagram(d12, d45).regions()) == std::vector<int>{2, 2, 2});
    CHECK_FALSE(fills(d12, d23));
    CHECK_FALSE(fills(d12, d12));
    CHECK_THROWS(fills(d12, base_curve(S3, 1, 5, true)));
}

TEST_CASE("diagram dump is stable") {
    auto d = reduce_to_minimal(joint_diagram(base_curve(S3, 1, 2), base_curve(S3, 2, 3)));
    CHECK(d.dump() ==
          "colors 2 crossings 2 faces 4\n"
          "face 0 sides 2 punctures 1\n"
          "face 1 sides 2 punctures 2\n"
          "face 2 sides 2 punctures 3\n"
          "face 3 sides 2 punctures 4 5 6\n"
          "crossing 0 sign " + std::string(d.sign(d.sequence(0)[0]) > 0 ? "+1" : "-1") + " along1 0\n"
          "crossing 1 sign " + std::string(d.sign(d.sequence(0)[1]) > 0 ? "+1" : "-1") + " along1 1\n");
}

TEST_CASE("intersection with standard disks matches the edge formula") {
    std::mt19937_64 rng(31);
    for (SurfaceSpec spec : {SurfaceSpec{3}, SurfaceSpec{4}}) {
        for (int t = 0; t < 60; ++t) {
            auto x = oracle::random_curve(rng, spec, 12, 3000);
            for (int k = 1; k <= spec.n; ++k) {
                auto b = standard_disk(spec, k);
                CHECK(intersection_number_raw(x, b) == edge_formula(x, k));
                CHECK(intersection_number(x, b) == edge_formula(x, k));
            }
        }
    }
}

TEST_CASE("symmetry, invariance, zero law") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 60; ++t) {
        auto a = oracle::random_curve(rng, S3, 8, 800);
        auto b = oracle::random_curve(rng, S3, 8, 800);
        auto w = oracle::random_word(rng, S3, 1 + rng() % 6);
        long long i = intersection_number_raw(a, b);
        CHECK(intersection_number_raw(b, a) == i);
        CHECK(intersection_number(a, b) == i);
        CHECK(intersection_number(apply_word(a, w), apply_word(b, w)) == i);
        CHECK(intersection_number_raw(a, a) == 0);
        if (i == 0) CHECK_FALSE(fills(a, b));
    }
    auto d12 = base_curve(S3, 1, 2);
    CHECK(intersection_number(d12, apply_word(d12, W("3 -4 1 3 4"))) == 0);
}

TEST_CASE("Euler formula after every reduction step") {
    std::mt19937_64 rng(51);
    for (int t = 0; t < 40; ++t) {
        auto a = oracle::random_curve(rng, S3, 10, 600);
        auto b = oracle::random_curve(rng, S3, 10, 600);
        auto d = joint_diagram(a, b);
        int steps = 0;
        while (d.reduce_step()) {
            d.validate();
            ++steps;
        }
        CHECK_FALSE(d.has_empty_bigon());
        CHECK(d.regions().puncture_total() == 6);
    }
}

TEST_CASE("filling pair from a walk") {
    auto d12 = base_curve(S3, 1, 2);
    auto c = apply_word(d12, W("1 -4 4 -2 3 -1 -2 -2 4 -3 2 -1"));
    CHECK(intersection_number(d12, c) == 8);
    CHECK(intersection_number_raw(d12, c) == 8);
    CHECK(fills(d12, c));
    CHECK(fills(c, d12));
    auto regions = complementary_regions(reduce_to_minimal(joint_diagram(d12, c)));
    CHECK(regions.puncture_total() == 6);
    for (const auto& f : regions.faces) CHECK(f.punctures.size() <= 1);
}
