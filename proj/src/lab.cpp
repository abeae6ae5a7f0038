#include "bridge/lab.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "bridge/errors.hpp"
#include "bridge/plat.hpp"

namespace bridge {

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

template <class T>
T get_as(const json& j, const char* key) {
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw ConfigError(std::string("bad value for \"") + key + "\"");
    }
}

}  // namespace

ExperimentConfig ExperimentConfig::from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config is not JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    static const std::vector<std::string> keys{"n",     "k",   "samples", "seed",         "support",
                                               "bound", "out", "workers", "fill_norm_cap"};
    for (auto it = j.begin(); it != j.end(); ++it)
        if (std::find(keys.begin(), keys.end(), it.key()) == keys.end())
            throw ConfigError("unknown config key: " + it.key());

    ExperimentConfig cfg;
    if (j.contains("n")) cfg.n = get_as<int>(j, "n");
    if (j.contains("k")) {
        if (j["k"].is_array())
            cfg.k_values = get_as<std::vector<int>>(j, "k");
        else
            cfg.k_values = {get_as<int>(j, "k")};
    }
    if (j.contains("samples")) cfg.samples = get_as<int>(j, "samples");
    if (j.contains("seed")) cfg.seed = get_as<std::uint64_t>(j, "seed");
    if (j.contains("bound")) cfg.bound = get_as<int>(j, "bound");
    if (j.contains("out")) cfg.out = get_as<std::string>(j, "out");
    if (j.contains("workers")) cfg.workers = get_as<int>(j, "workers");
    if (j.contains("fill_norm_cap")) cfg.fill_norm_cap = get_as<long long>(j, "fill_norm_cap");
    if (j.contains("support")) {
        auto spec = SurfaceSpec::make(cfg.n);
        const auto& s = j["support"];
        if (s.is_string())
            cfg.distribution = WalkDistribution::from_json_text(spec, read_file(s.get<std::string>()));
        else
            cfg.distribution = WalkDistribution::from_json_text(spec, json{{"support", s}}.dump());
    }
    cfg.validate();
    return cfg;
}

void ExperimentConfig::validate() const {
    SurfaceSpec::make(n);
    if (samples < 1) throw ConfigError("samples must be >= 1");
    if (k_values.empty()) throw ConfigError("k list is empty");
    for (int k : k_values)
        if (k < 0) throw ConfigError("walk lengths must be >= 0");
    if (bound < 0) throw ConfigError("bound must be >= 0");
    if (workers < 1) throw ConfigError("workers must be >= 1");
    if (fill_norm_cap < 1) throw ConfigError("fill_norm_cap must be >= 1");
    if (distribution && distribution->spec().n != n) throw ConfigError("support was built for another n");
}

WalkDistribution ExperimentConfig::walk_distribution() const {
    return distribution ? *distribution : WalkDistribution::uniform(spec());
}

McgWord sample_word(const ExperimentConfig& cfg, int k, int sample) {
    return sample_walk(cfg.walk_distribution(), static_cast<std::size_t>(k),
                       derive_seed(cfg.seed, static_cast<std::uint64_t>(sample)));
}

void parallel_for(int count, int workers, const std::function<void(int)>& fn) {
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex mu;
    auto body = [&] {
        while (true) {
            int i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!failure) failure = std::current_exception();
                next = count;
                return;
            }
        }
    };
    int t = std::max(1, std::min(workers, count));
    if (t == 1) {
        body();
    } else {
        std::vector<std::thread> pool;
        for (int k = 0; k < t; ++k) pool.emplace_back(body);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string no_witness_note(int bound) {
    return "# NO_WITNESS means no pair at distance <= 2 among disks reached by words of length <= " +
           std::to_string(bound) + "; it is evidence for d >= 3, never a proof";
}

namespace {

std::string config_line(const ExperimentConfig& cfg) {
    std::ostringstream os;
    os << "# n=" << cfg.n << " samples=" << cfg.samples << " seed=" << cfg.seed << " bound=" << cfg.bound << " k=";
    for (std::size_t i = 0; i < cfg.k_values.size(); ++i) os << (i ? "," : "") << cfg.k_values[i];
    os << " support=";
    auto dist = cfg.walk_distribution();
    for (std::size_t i = 0; i < dist.support().size(); ++i) {
        const auto& [g, w] = dist.support()[i];
        os << (i ? ";" : "") << g.sign * g.index << ':' << w.num << '/' << w.den;
    }
    return os.str();
}

// Index pairs (k position, sample) in output order.
struct Grid {
    const ExperimentConfig& cfg;
    int size() const { return static_cast<int>(cfg.k_values.size()) * cfg.samples; }
    int k(int i) const { return cfg.k_values[i / cfg.samples]; }
    int sample(int i) const { return i % cfg.samples; }
};

ExperimentConfig sorted(ExperimentConfig cfg) {
    std::sort(cfg.k_values.begin(), cfg.k_values.end());
    cfg.k_values.erase(std::unique(cfg.k_values.begin(), cfg.k_values.end()), cfg.k_values.end());
    return cfg;
}

}  // namespace

std::vector<WalkRow> run_walks(const ExperimentConfig& cfg0) {
    cfg0.validate();
    auto cfg = sorted(cfg0);
    Grid g{cfg};
    std::vector<WalkRow> rows(g.size(), WalkRow{0, 0, McgWord(cfg.spec())});
    parallel_for(g.size(), cfg.workers,
                 [&](int i) { rows[i] = {g.k(i), g.sample(i), sample_word(cfg, g.k(i), g.sample(i))}; });
    return rows;
}

std::string walks_csv(const std::vector<WalkRow>& rows, const ExperimentConfig& cfg) {
    std::ostringstream os;
    os << config_line(cfg) << "\nk,sample_id,word\n";
    for (const auto& r : rows) os << r.k << ',' << r.sample << ",\"" << r.word.to_string() << "\"\n";
    return os.str();
}

std::optional<double> exact_mean_components(const WalkDistribution& dist, int k) {
    const SurfaceSpec spec = dist.spec();
    if (spec.n > 4) return std::nullopt;
    const int P = spec.punctures();
    // transposition (i, i+1) probabilities; both signs give the same swap
    std::vector<double> p(P, 0.0);
    for (std::size_t s = 0; s < dist.support().size(); ++s)
        p[dist.support()[s].first.index] +=
            static_cast<double>(dist.integer_weights()[s]) / static_cast<double>(dist.total_weight());

    std::map<std::vector<int>, int> id;
    std::vector<std::vector<int>> states;
    auto intern = [&](const std::vector<int>& v) {
        auto [it, fresh] = id.emplace(v, static_cast<int>(states.size()));
        if (fresh) states.push_back(v);
        return it->second;
    };
    intern(Permutation::identity(P).images());
    std::vector<std::vector<std::pair<int, double>>> moves;
    for (std::size_t s = 0; s < states.size(); ++s) {
        std::vector<std::pair<int, double>> out;
        for (int i = 1; i < P; ++i) {
            if (p[i] == 0.0) continue;
            auto v = states[s];
            std::swap(v[i - 1], v[i]);
            out.push_back({intern(v), p[i]});
        }
        moves.push_back(std::move(out));
    }
    std::vector<double> mass(states.size(), 0.0), next(states.size());
    mass[0] = 1.0;
    for (int step = 0; step < k; ++step) {
        std::fill(next.begin(), next.end(), 0.0);
        for (std::size_t s = 0; s < states.size(); ++s)
            if (mass[s] != 0.0)
                for (auto [t, q] : moves[s]) next[t] += mass[s] * q;
        mass.swap(next);
    }
    auto eps = Permutation::standard_pairing(P);
    double mean = 0.0;
    for (std::size_t s = 0; s < states.size(); ++s) {
        if (mass[s] == 0.0) continue;
        Permutation pi(states[s]);
        mean += mass[s] * orbit_count({eps, pi * eps * pi.inverse()});
    }
    return mean;
}

ComponentsReport run_components_experiment(const ExperimentConfig& cfg0) {
    cfg0.validate();
    auto cfg = sorted(cfg0);
    Grid g{cfg};
    ComponentsReport rep;
    rep.rows.resize(g.size());
    const auto spec = cfg.spec();
    parallel_for(g.size(), cfg.workers, [&](int i) {
        auto w = sample_word(cfg, g.k(i), g.sample(i));
        rep.rows[i] = {g.k(i), g.sample(i), plat_closure(w, spec).components};
    });
    const auto dist = cfg.walk_distribution();
    if (cfg.n > 4) rep.notices.push_back("# exact oracle skipped: the symmetric-group chain is only run for n <= 4");
    for (std::size_t kk = 0; kk < cfg.k_values.size(); ++kk) {
        double sum = 0;
        for (int s = 0; s < cfg.samples; ++s) sum += rep.rows[kk * cfg.samples + s].components;
        double mean = sum / cfg.samples;
        double ss = 0;
        for (int s = 0; s < cfg.samples; ++s) {
            double d = rep.rows[kk * cfg.samples + s].components - mean;
            ss += d * d;
        }
        double var = cfg.samples > 1 ? ss / (cfg.samples - 1) : 0.0;
        rep.summary.push_back({cfg.k_values[kk], mean, var, exact_mean_components(dist, cfg.k_values[kk])});
    }
    return rep;
}

std::string ComponentsReport::csv(const ExperimentConfig& cfg) const {
    std::ostringstream os;
    os << config_line(cfg) << '\n' << no_witness_note(cfg.bound) << '\n';
    for (const auto& n : notices) os << n << '\n';
    os << "k,sample_id,components\n";
    for (const auto& r : rows) os << r.k << ',' << r.sample << ',' << r.components << '\n';
    os << "\nk,mean,variance,exact_mean\n";
    for (const auto& s : summary)
        os << s.k << ',' << fmt_double(s.mean) << ',' << fmt_double(s.variance) << ','
           << (s.exact_mean ? fmt_double(*s.exact_mean) : "") << '\n';
    return os.str();
}

std::string interpretation(CertificateStatus s, int bound) {
    if (s == CertificateStatus::NoWitness)
        return "consistent with d >= 3 (hyperbolic) up to bound L=" + std::to_string(bound);
    return "d <= 2 established; hyperbolicity undetermined";
}

ProxyReport run_hyperbolicity_proxy(const ExperimentConfig& cfg0) {
    cfg0.validate();
    auto cfg = sorted(cfg0);
    Grid g{cfg};
    ProxyReport rep;
    const DiskSetSample D = enumerate_disks(cfg.spec(), cfg.bound);
    rep.disk_set_size = D.curves.size();
    CertificateOptions opt;
    opt.fill_norm_cap = cfg.fill_norm_cap;
    rep.rows.resize(g.size());
    parallel_for(g.size(), cfg.workers, [&](int i) {
        auto w = sample_word(cfg, g.k(i), g.sample(i));
        rep.rows[i] = {g.k(i), g.sample(i), distance_certificate(w, D, opt)};
    });
    for (std::size_t kk = 0; kk < cfg.k_values.size(); ++kk) {
        std::array<int, 4> count{};
        for (int s = 0; s < cfg.samples; ++s) ++count[static_cast<int>(rep.rows[kk * cfg.samples + s].cert.status)];
        ProxySummary sum{cfg.k_values[kk], {}};
        for (int t = 0; t < 4; ++t) sum.fraction[t] = static_cast<double>(count[t]) / cfg.samples;
        rep.summary.push_back(sum);
    }
    return rep;
}

std::string ProxyReport::csv(const ExperimentConfig& cfg) const {
    std::ostringstream os;
    os << config_line(cfg) << '\n' << no_witness_note(cfg.bound) << '\n';
    os << "# disk set size " << disk_set_size << '\n';
    os << "k,sample_id,status,L,witness_a,witness_b,verified,pairs_skipped\n";
    for (const auto& r : rows) {
        os << r.k << ',' << r.sample << ',' << status_name(r.cert.status) << ',' << r.cert.bound << ',';
        if (r.cert.witness)
            os << r.cert.witness->first << ',' << r.cert.witness->second;
        else
            os << ',';
        os << ',' << (r.cert.verified ? 1 : 0) << ',' << r.cert.pairs_skipped << '\n';
    }
    os << "\nk,status,fraction,interpretation\n";
    for (const auto& s : summary)
        for (int t = 0; t < 4; ++t) {
            auto st = static_cast<CertificateStatus>(t);
            os << s.k << ',' << status_name(st) << ',' << fmt_double(s.fraction[t]) << ",\""
               << interpretation(st, cfg.bound) << "\"\n";
        }
    os << "\nk,witness_rate\n";
    for (const auto& s : summary) os << s.k << ',' << fmt_double(s.witness_rate()) << '\n';
    return os.str();
}

std::optional<std::pair<double, double>> least_squares(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t N = x.size();
    if (N < 2 || y.size() != N) return std::nullopt;
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < N; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= N;
    my /= N;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < N; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0) return std::nullopt;
    double slope = sxy / sxx;
    return std::pair{slope, my - slope * mx};
}

namespace {

long long bound_from(const BigInt& i) {
    if (i <= 1) return 2;
    BigInt m = i - 1;
    long long bits = static_cast<long long>(boost::multiprecision::msb(m)) + 1;
    return 2 + 2 * bits;
}

}  // namespace

GrowthReport run_distance_growth(const ExperimentConfig& cfg0) {
    cfg0.validate();
    auto cfg = sorted(cfg0);
    if (cfg.k_values.size() < 2) throw ConfigError("growth needs at least two walk lengths");
    Grid g{cfg};
    GrowthReport rep;
    rep.rows.resize(g.size());
    const auto spec = cfg.spec();
    const Weights d12 = base_weights(spec, 1, 2);
    const Triangulation T(spec.disk_punctures());
    parallel_for(g.size(), cfg.workers, [&](int i) {
        auto w = sample_word(cfg, g.k(i), g.sample(i));
        // delta_12 bounds a neighbourhood of e_1: i = 2 w(e_1)
        BigInt inter = 2 * apply_word(spec, d12, w)[T.axis(1)];
        GrowthRow r{g.k(i), g.sample(i), inter, 0.0, 0, inter == 0};
        if (!r.flagged) {
            r.log2_i = std::log2(inter.convert_to<double>());
            r.upper_bound = bound_from(inter);
        }
        rep.rows[i] = std::move(r);
    });
    std::vector<double> xs, ys;
    for (std::size_t kk = 0; kk < cfg.k_values.size(); ++kk) {
        double sum = 0;
        int used = 0;
        for (int s = 0; s < cfg.samples; ++s) {
            const auto& r = rep.rows[kk * cfg.samples + s];
            if (r.flagged) continue;
            sum += r.log2_i;
            ++used;
        }
        rep.summary.k.push_back(cfg.k_values[kk]);
        rep.summary.used.push_back(used);
        double mean = used ? sum / used : std::nan("");
        rep.summary.mean_log2_i.push_back(mean);
        if (used) {
            xs.push_back(cfg.k_values[kk]);
            ys.push_back(mean);
        }
    }
    if (auto fit = least_squares(xs, ys)) {
        rep.summary.slope = fit->first;
        rep.summary.intercept = fit->second;
    }
    return rep;
}

std::string GrowthReport::csv(const ExperimentConfig& cfg) const {
    std::ostringstream os;
    os << config_line(cfg) << '\n' << no_witness_note(cfg.bound) << '\n';
    os << "# upper_bound = 2 + 2 ceil(log2 i) bounds the distance from delta_12 to w delta_12; rows with i = 0 "
          "are flagged and left out of the fit\n";
    os << "# walk distances are expected in [b k, a k] for constants a >= b >= 0; only the slope is estimated\n";
    os << "k,sample_id,i,log2_i,upper_bound,flagged\n";
    for (const auto& r : rows) {
        os << r.k << ',' << r.sample << ',' << r.intersection << ',';
        if (r.flagged)
            os << ",,1\n";
        else
            os << fmt_double(r.log2_i) << ',' << r.upper_bound << ",0\n";
    }
    os << "\nk,mean_log2_i,used\n";
    for (std::size_t i = 0; i < summary.k.size(); ++i)
        os << summary.k[i] << ',' << (summary.used[i] ? fmt_double(summary.mean_log2_i[i]) : "") << ','
           << summary.used[i] << '\n';
    os << "\nslope,intercept\n";
    if (summary.slope)
        os << fmt_double(*summary.slope) << ',' << fmt_double(*summary.intercept) << '\n';
    else
        os << ",\n";
    return os.str();
}

}  // namespace bridge
