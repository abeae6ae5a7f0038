// bridgelab: random bridge-presentation experiments from the command line.
// Exit codes: 0 success, 2 configuration error, 3 internal invariant violation.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bridge/errors.hpp"
#include "bridge/lab.hpp"
#include "bridge/plat.hpp"
#include "bridge/tangle.hpp"

using namespace bridge;

namespace {

struct Flags {
    std::string config;
    int n = 0;
    std::string k;
    int samples = 0;
    std::uint64_t seed = 0;
    std::string support;
    int bound = -1;
    std::string out;
    int workers = 0;
    std::string word;
    std::string format = "pd";
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<int> parse_k(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ConfigError("bad --k entry: " + item);
        }
    }
    return out;
}

ExperimentConfig build_config(const Flags& f, const CLI::App& sub) {
    ExperimentConfig cfg = f.config.empty() ? ExperimentConfig{} : ExperimentConfig::from_json_text(slurp(f.config));
    auto given = [&](const char* name) { return sub.count(name) > 0; };
    if (given("--n")) {
        cfg.n = f.n;
        if (cfg.distribution && cfg.distribution->spec().n != cfg.n) cfg.distribution.reset();
    }
    if (given("--k")) cfg.k_values = parse_k(f.k);
    if (given("--samples")) cfg.samples = f.samples;
    if (given("--seed")) cfg.seed = f.seed;
    if (given("--bound")) cfg.bound = f.bound;
    if (given("--out")) cfg.out = f.out;
    if (given("--workers")) cfg.workers = f.workers;
    if (given("--support")) cfg.distribution = WalkDistribution::from_json_text(SurfaceSpec::make(cfg.n), slurp(f.support));
    cfg.validate();
    return cfg;
}

void emit(const ExperimentConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out);
    if (!f) throw ConfigError("cannot write " + cfg.out);
    f << text;
}

void add_shared(CLI::App* sub, Flags& f) {
    sub->add_option("--config", f.config, "JSON experiment config");
    sub->add_option("--n", f.n, "bridge number");
    sub->add_option("--k", f.k, "walk lengths, comma separated");
    sub->add_option("--samples", f.samples, "samples per walk length");
    sub->add_option("--seed", f.seed, "master seed");
    sub->add_option("--support", f.support, "JSON file with the step distribution");
    sub->add_option("--bound", f.bound, "disk enumeration bound L");
    sub->add_option("--out", f.out, "output file (default stdout)");
    sub->add_option("--workers", f.workers, "worker threads");
}

int run(int argc, char** argv) {
    CLI::App app{"bridgelab: random links from bridge presentations"};
    app.require_subcommand(1);
    Flags f;

    auto* walk = app.add_subcommand("walk", "sample walk words");
    auto* comps = app.add_subcommand("components", "component counts of plat closures, with the exact mean");
    auto* proxy = app.add_subcommand("hyperproxy", "distance certificates per sample");
    auto* growth = app.add_subcommand("growth", "growth of log2 i(delta_12, w delta_12)");
    auto* disks = app.add_subcommand("disks", "enumerate disk curves up to word length --bound");
    auto* cert = app.add_subcommand("cert", "distance certificate for one word");
    auto* plat = app.add_subcommand("plat", "export the plat closure of one word");
    for (auto* s : {walk, comps, proxy, growth, disks, cert, plat}) add_shared(s, f);
    cert->add_option("--word", f.word, "generator word, e.g. \"2 -1 3\"")->required();
    plat->add_option("--word", f.word, "generator word, e.g. \"2 -1 3\"")->required();
    plat->add_option("--format", f.format, "pd, gauss or csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    CLI::App* sub = app.get_subcommands().front();
    ExperimentConfig cfg = build_config(f, *sub);

    if (sub == walk) {
        emit(cfg, walks_csv(run_walks(cfg), cfg));
    } else if (sub == comps) {
        emit(cfg, run_components_experiment(cfg).csv(cfg));
    } else if (sub == proxy) {
        emit(cfg, run_hyperbolicity_proxy(cfg).csv(cfg));
    } else if (sub == growth) {
        emit(cfg, run_distance_growth(cfg).csv(cfg));
    } else if (sub == disks) {
        auto D = enumerate_disks(cfg.spec(), cfg.bound);
        std::ostringstream os;
        os << "# " << D.curves.size() << " disks among " << D.visited << " curves reached\n";
        os << "index,depth,history,base,coords\n";
        for (std::size_t i = 0; i < D.curves.size(); ++i) {
            const auto& c = D.curves[i];
            os << i << ',' << D.depth[i] << ",\"" << c.history()->to_string() << "\",\"" << c.base()->first << ' '
               << c.base()->second << "\",\"" << c.coords().to_string() << "\"\n";
        }
        emit(cfg, os.str());
    } else if (sub == cert) {
        auto w = McgWord::parse(cfg.spec(), f.word);
        CertificateOptions opt;
        opt.fill_norm_cap = cfg.fill_norm_cap;
        auto c = distance_certificate(w, enumerate_disks(cfg.spec(), cfg.bound), opt);
        std::ostringstream os;
        os << no_witness_note(cfg.bound) << '\n';
        os << "# " << status_name(c.status) << ": " << status_meaning(c.status) << '\n';
        os << DistanceCertificate::csv_header() << '\n' << c.csv_row() << '\n';
        emit(cfg, os.str());
    } else if (sub == plat) {
        auto w = McgWord::parse(cfg.spec(), f.word);
        auto link = plat_closure(w, cfg.spec());
        std::string text = export_link(link, f.format);
        if (f.format == "csv") text = plat_csv_header() + "\n" + text;
        emit(cfg, text + "\n");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const InvariantViolation& e) {
        std::cerr << "internal invariant violated: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
}
