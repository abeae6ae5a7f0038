#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace bridge {

// Sphere with 2n punctures, modeled as a disk with punctures 1..2n-1 on a
// horizontal line; the outer boundary is puncture 2n.
struct SurfaceSpec {
    int n = 3;

    static SurfaceSpec make(int n);

    int punctures() const { return 2 * n; }
    int disk_punctures() const { return 2 * n - 1; }
    int max_generator() const { return 2 * n - 2; }
    bool hyperbolic_range() const { return n >= 3; }

    bool operator==(const SurfaceSpec&) const = default;
};

// Half-twist sigma_index^sign exchanging punctures index and index+1.
struct McgGenerator {
    int index = 1;
    int sign = 1;

    McgGenerator inverse() const { return {index, -sign}; }
    bool operator==(const McgGenerator&) const = default;
};

class McgWord {
public:
    explicit McgWord(SurfaceSpec spec = {}, std::vector<McgGenerator> letters = {});

    static McgWord parse(SurfaceSpec spec, const std::string& text);
    // All 2(2n-2) generators in the order sigma_1, sigma_1^-1, sigma_2, ...
    static std::vector<McgGenerator> all_generators(SurfaceSpec spec);

    const SurfaceSpec& spec() const { return spec_; }
    const std::vector<McgGenerator>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    McgWord inverse() const;
    McgWord operator*(const McgWord& rhs) const;
    McgWord prepend(McgGenerator g) const;
    McgWord prefix(std::size_t len) const;

    // "2 -1 3" for sigma_2 sigma_1^-1 sigma_3
    std::string to_string() const;

    bool operator==(const McgWord&) const = default;

private:
    SurfaceSpec spec_;
    std::vector<McgGenerator> letters_;
};

struct Rational {
    std::int64_t num = 1;
    std::int64_t den = 1;
};

class WalkDistribution {
public:
    WalkDistribution(SurfaceSpec spec, std::vector<std::pair<McgGenerator, Rational>> support);

    static WalkDistribution uniform(SurfaceSpec spec);
    static WalkDistribution point_mass(SurfaceSpec spec, McgGenerator g);
    // {"support": [[index, sign, weight], ...]}; weight is an integer, a
    // decimal, or a "p/q" string.
    static WalkDistribution from_json_text(SurfaceSpec spec, const std::string& text);

    const SurfaceSpec& spec() const { return spec_; }
    const std::vector<std::pair<McgGenerator, Rational>>& support() const { return support_; }
    // Weights scaled to a common denominator.
    const std::vector<std::uint64_t>& integer_weights() const { return int_weights_; }
    std::uint64_t total_weight() const { return total_; }

    McgGenerator draw(std::uint64_t seed, std::uint64_t sample, std::uint64_t step) const;

private:
    SurfaceSpec spec_;
    std::vector<std::pair<McgGenerator, Rational>> support_;
    std::vector<std::uint64_t> int_weights_;
    std::uint64_t total_ = 0;
};

// Counter-based stream: a pure function of its key.
std::uint64_t stream_word(std::uint64_t seed, std::uint64_t sample, std::uint64_t step,
                          std::uint64_t attempt = 0);
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t sample);

McgWord sample_walk(const WalkDistribution& dist, std::size_t k, std::uint64_t seed);

class Permutation {
public:
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int size);
    static Permutation transposition(int size, int a, int b);
    // Fixed-point-free involution (1 2)(3 4)...
    static Permutation standard_pairing(int size);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int x) const { return images_[x - 1]; }
    const std::vector<int>& images() const { return images_; }

    // (p * q)(x) = p(q(x))
    Permutation operator*(const Permutation& q) const;
    Permutation inverse() const;
    bool is_identity() const;
    std::string cycle_string() const;

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

// Product of the transpositions (i, i+1) in word order, as a map from bottom
// positions to top positions of the braid picture.
Permutation permutation_image(const McgWord& w);

// Number of orbits of the group generated by the given permutations.
int orbit_count(const std::vector<Permutation>& gens);

// Conjugacy class in the free group on x_1..x_{2n-1}; letter +k is x_k,
// -k is x_k^-1.
class Pi1Word {
public:
    Pi1Word() = default;
    const std::vector<int>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    int rank() const { return rank_; }
    std::string to_string() const;
    Pi1Word inverse() const;

    bool operator==(const Pi1Word&) const = default;

private:
    friend Pi1Word reduce(SurfaceSpec spec, std::vector<int> raw);
    std::vector<int> letters_;
    int rank_ = 0;
};

std::vector<int> free_reduce(const std::vector<int>& raw);
std::vector<int> cyclic_reduce(const std::vector<int>& raw);
// Lexicographically least rotation under x1 < x1^-1 < x2 < ...
std::vector<int> least_rotation(const std::vector<int>& w);

// Letters with |k| = 2n are rewritten through x_1...x_{2n} = 1.
Pi1Word reduce(SurfaceSpec spec, std::vector<int> raw);

// Artin action: sigma_i sends x_i to x_i x_{i+1} x_i^-1 and x_{i+1} to x_i.
// Words act on the left: act(vw, u) = act(v, act(w, u)).
Pi1Word act_pi1(const McgWord& w, const Pi1Word& u);
std::vector<int> act_generator_raw(McgGenerator g, const std::vector<int>& u);

}  // namespace bridge
