#include <doctest.h>

#include <random>

#include "bridge/mcg.hpp"
#include "bridge/errors.hpp"

using namespace bridge;

namespace {

SurfaceSpec S3{3};

McgWord W(const char* s, SurfaceSpec spec = S3) { return McgWord::parse(spec, s); }

Pi1Word P(std::vector<int> v, SurfaceSpec spec = S3) { return reduce(spec, std::move(v)); }

Pi1Word random_pi1(std::mt19937_64& rng, SurfaceSpec spec, int len) {
    std::uniform_int_distribution<int> pick(1, spec.disk_punctures());
    std::vector<int> v;
    for (int i = 0; i < len; ++i) v.push_back(rng() & 1 ? pick(rng) : -pick(rng));
    return reduce(spec, v);
}

McgWord random_word(std::mt19937_64& rng, SurfaceSpec spec, int len) {
    auto gens = McgWord::all_generators(spec);
    std::vector<McgGenerator> v;
    for (int i = 0; i < len; ++i) v.push_back(gens[rng() % gens.size()]);
    return McgWord(spec, v);
}

}  // namespace

TEST_CASE("surface spec and words") {
    CHECK_THROWS_AS(SurfaceSpec::make(1), ConfigError);
    CHECK_FALSE(SurfaceSpec::make(2).hyperbolic_range());
    CHECK(SurfaceSpec::make(3).punctures() == 6);
    CHECK(W("2 -1 3").to_string() == "2 -1 3");
    CHECK(W("2 -1 3").inverse().to_string() == "-3 1 -2");
    CHECK_THROWS_AS(W("5"), ConfigError);
    CHECK_THROWS_AS(W("0"), ConfigError);
    CHECK_THROWS_AS(W("x"), ConfigError);
    CHECK(W("").empty());
}

TEST_CASE("sample_walk") {
    auto uni = WalkDistribution::uniform(S3);
    CHECK(uni.support().size() == 8);
    CHECK(sample_walk(uni, 0, 99).empty());
    auto pm = WalkDistribution::point_mass(S3, {1, 1});
    CHECK(sample_walk(pm, 4, 5).to_string() == "1 1 1 1");
    CHECK(sample_walk(uni, 10, 7) == sample_walk(uni, 10, 7));
    CHECK_FALSE(sample_walk(uni, 10, 7) == sample_walk(uni, 10, 8));
    // longer walks extend shorter ones
    CHECK(sample_walk(uni, 20, 7).prefix(10) == sample_walk(uni, 10, 7));
    CHECK_THROWS_AS(WalkDistribution(S3, {}), ConfigError);
    CHECK_THROWS_AS(WalkDistribution(S3, {{{1, 1}, Rational{0, 1}}}), ConfigError);
}

TEST_CASE("walk letters follow the weights") {
    // 3:1 weighting; frequencies over 40000 draws within 1%
    WalkDistribution d(S3, {{{1, 1}, Rational{3, 4}}, {{2, -1}, Rational{1, 4}}});
    auto w = sample_walk(d, 40000, 1);
    int ones = 0;
    for (auto g : w.letters()) ones += g.index == 1;
    CHECK(std::abs(ones / 40000.0 - 0.75) < 0.01);
}

TEST_CASE("support json") {
    auto d = WalkDistribution::from_json_text(S3, R"({"support": [[1, 1, 2], [2, -1, "1/2"], [3, 1, 0.25]]})");
    CHECK(d.integer_weights() == std::vector<std::uint64_t>{8, 2, 1});
    CHECK_THROWS_AS(WalkDistribution::from_json_text(S3, "{}"), ConfigError);
    CHECK_THROWS_AS(WalkDistribution::from_json_text(S3, R"({"support": [[7, 1, 1]]})"), ConfigError);
    CHECK_THROWS_AS(WalkDistribution::from_json_text(S3, "nope"), ConfigError);
}

TEST_CASE("permutation_image") {
    CHECK(permutation_image(W("")).is_identity());
    CHECK(permutation_image(W("1 1")).is_identity());
    CHECK(permutation_image(W("1 3")).cycle_string() == "(1 2)(3 4)");
    std::mt19937_64 rng(3);
    for (int t = 0; t < 100; ++t) {
        auto w = random_word(rng, S3, 1 + t % 17);
        CHECK(permutation_image(w * w.inverse()).is_identity());
        CHECK(permutation_image(w.inverse()) == permutation_image(w).inverse());
    }
}

TEST_CASE("reduce") {
    CHECK(P({1, -1}).empty());
    CHECK(P({2, 1, -1, 3}).letters() == std::vector<int>{2, 3});
    CHECK(P({1, 2, -1}).letters() == std::vector<int>{2});
    // canonical rotation: x1 < x1^-1 < x2 < ...
    CHECK(P({3, -1, 2}).letters() == std::vector<int>{-1, 2, 3});
    CHECK(P({-1, 2, 1, 3}).letters() == std::vector<int>{1, 3, -1, 2});
    // x_6 = (x_1 ... x_5)^-1
    CHECK(P({1, 2, 3, 4, 5, 6}).empty());
    std::mt19937_64 rng(5);
    for (int t = 0; t < 300; ++t) {
        std::vector<int> raw;
        for (int i = 0; i < 20; ++i) raw.push_back(int(rng() % 5 + 1) * (rng() & 1 ? 1 : -1));
        auto r = reduce(S3, raw);
        CHECK(reduce(S3, r.letters()) == r);
        CHECK(r.size() <= raw.size());
        // every rotation has the same canonical form
        std::vector<int> rot(r.letters());
        if (!rot.empty()) std::rotate(rot.begin(), rot.begin() + rng() % rot.size(), rot.end());
        CHECK(reduce(S3, rot) == r);
    }
}

TEST_CASE("act_pi1") {
    CHECK(act_pi1(W("1"), P({1})) == P({1, 2, -1}));
    CHECK(act_generator_raw({1, 1}, {1}) == std::vector<int>{1, 2, -1});
    CHECK(act_pi1(W("2"), P({5})) == P({5}));
    CHECK(act_pi1(W("1 2 1"), P({1})) == act_pi1(W("2 1 2"), P({1})));

    std::mt19937_64 rng(11);
    for (SurfaceSpec spec : {SurfaceSpec{3}, SurfaceSpec{4}}) {
        const int top = spec.max_generator();
        for (int t = 0; t < 1000; ++t) {
            auto u = random_pi1(rng, spec, 1 + t % 12);
            int i = 1 + rng() % (top - 1);
            std::string s1 = std::to_string(i) + " " + std::to_string(i + 1) + " " + std::to_string(i);
            std::string s2 = std::to_string(i + 1) + " " + std::to_string(i) + " " + std::to_string(i + 1);
            CHECK(act_pi1(W(s1.c_str(), spec), u) == act_pi1(W(s2.c_str(), spec), u));
            int a = 1 + rng() % top, b = 1 + rng() % top;
            if (std::abs(a - b) >= 2) {
                McgWord ab(spec, {{a, 1}, {b, -1}}), ba(spec, {{b, -1}, {a, 1}});
                CHECK(act_pi1(ab, u) == act_pi1(ba, u));
            }
            auto w = random_word(rng, spec, 1 + t % 9);
            CHECK(act_pi1(w.inverse(), act_pi1(w, u)) == u);
            auto v = random_word(rng, spec, 3);
            CHECK(act_pi1(v * w, u) == act_pi1(v, act_pi1(w, u)));
        }
    }
}

TEST_CASE("orbit_count") {
    auto e = Permutation::standard_pairing(4);
    CHECK(orbit_count({e}) == 2);
    CHECK(orbit_count({e, Permutation({3, 4, 1, 2})}) == 1);
}
