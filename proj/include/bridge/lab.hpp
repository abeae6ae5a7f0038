#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bridge/mcg.hpp"
#include "bridge/tangle.hpp"

namespace bridge {

struct ExperimentConfig {
    int n = 3;
    std::vector<int> k_values{10};
    int samples = 100;
    std::uint64_t seed = 1;
    std::optional<WalkDistribution> distribution;  // uniform when unset
    int bound = 6;
    std::string out;
    int workers = 1;
    long long fill_norm_cap = CertificateOptions{}.fill_norm_cap;

    // {"n": 3, "k": [4, 8], "samples": 500, "seed": 1, "bound": 6,
    //  "support": [[1, 1, 1], ...] or "path.json", "out": "x.csv",
    //  "workers": 4, "fill_norm_cap": 200000}; every key is optional.
    static ExperimentConfig from_json_text(const std::string& text);
    // Throws ConfigError.
    void validate() const;
    SurfaceSpec spec() const { return SurfaceSpec::make(n); }
    WalkDistribution walk_distribution() const;
};

// Walk for one sample. The seed depends on the sample only, so walks of
// different lengths for the same sample share prefixes.
McgWord sample_word(const ExperimentConfig& cfg, int k, int sample);

// Runs fn(i) for i in [0, count) on up to `workers` threads; the first
// exception is rethrown after all threads stop.
void parallel_for(int count, int workers, const std::function<void(int)>& fn);

std::string no_witness_note(int bound);

struct WalkRow {
    int k;
    int sample;
    McgWord word;
};
std::vector<WalkRow> run_walks(const ExperimentConfig& cfg);
std::string walks_csv(const std::vector<WalkRow>& rows, const ExperimentConfig& cfg);

// E[orbits of <eps, pi eps pi^-1>] after k steps, by the exact chain on the
// symmetric group; nullopt for n > 4.
std::optional<double> exact_mean_components(const WalkDistribution& dist, int k);

struct ComponentRow {
    int k;
    int sample;
    int components;
};
struct ComponentSummary {
    int k;
    double mean;
    double variance;  // sample variance (n - 1)
    std::optional<double> exact_mean;
};
struct ComponentsReport {
    std::vector<ComponentRow> rows;
    std::vector<ComponentSummary> summary;
    std::vector<std::string> notices;
    std::string csv(const ExperimentConfig& cfg) const;
};
ComponentsReport run_components_experiment(const ExperimentConfig& cfg);

struct ProxyRow {
    int k;
    int sample;
    DistanceCertificate cert;
};
struct ProxySummary {
    int k;
    std::array<double, 4> fraction;  // indexed by CertificateStatus
    double witness_rate() const { return 1.0 - fraction[3]; }
};
struct ProxyReport {
    std::vector<ProxyRow> rows;
    std::vector<ProxySummary> summary;
    std::size_t disk_set_size = 0;
    std::string csv(const ExperimentConfig& cfg) const;
};
std::string interpretation(CertificateStatus s, int bound);
ProxyReport run_hyperbolicity_proxy(const ExperimentConfig& cfg);

struct GrowthRow {
    int k;
    int sample;
    BigInt intersection;  // i(delta_12, w delta_12)
    double log2_i;
    long long upper_bound;
    bool flagged;  // i = 0, excluded from the fit
};
struct GrowthSummary {
    std::vector<int> k;
    std::vector<double> mean_log2_i;
    std::vector<int> used;
    std::optional<double> slope, intercept;
};
struct GrowthReport {
    std::vector<GrowthRow> rows;
    GrowthSummary summary;
    std::string csv(const ExperimentConfig& cfg) const;
};
GrowthReport run_distance_growth(const ExperimentConfig& cfg);

// Least squares y = slope x + intercept; nullopt with fewer than 2 distinct x.
std::optional<std::pair<double, double>> least_squares(const std::vector<double>& x, const std::vector<double>& y);

// %.17g
std::string fmt_double(double v);

}  // namespace bridge
