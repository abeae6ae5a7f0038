#include "bridge/plat.hpp"

#include <map>
#include <sstream>

#include "bridge/errors.hpp"

namespace bridge {

namespace {

// Port ids: 4c + {0 SW, 1 SE, 2 NE, 3 NW} for crossing c; then a bottom and
// a top cap end per position.
struct Wiring {
    int crossings;
    int positions;
    std::vector<int> outside;  // link along a strand segment or a cap

    int bottom(int p) const { return 4 * crossings + (p - 1); }
    int top(int p) const { return 4 * crossings + positions + (p - 1); }
    bool is_port(int id) const { return id < 4 * crossings; }
    // the other end inside a crossing or across a cap
    int through(int id) const {
        if (is_port(id)) return 4 * (id / 4) + (id % 4 + 2) % 4;
        int p = (id - 4 * crossings) % positions + 1;
        int q = p % 2 ? p + 1 : p - 1;
        return id < 4 * crossings + positions ? bottom(q) : top(q);
    }
};

Wiring wire(const McgWord& w, int positions) {
    Wiring g{static_cast<int>(w.size()), positions, {}};
    g.outside.assign(4 * g.crossings + 2 * positions, -1);
    std::vector<int> open(positions + 1);  // lowest unmatched end at each position
    for (int p = 1; p <= positions; ++p) open[p] = g.bottom(p);
    auto join = [&](int a, int b) {
        g.outside[a] = b;
        g.outside[b] = a;
    };
    for (int c = 0; c < g.crossings; ++c) {
        int i = w.letters()[c].index;
        join(open[i], 4 * c + 0);
        join(open[i + 1], 4 * c + 1);
        // strand from SW leaves NE (position i+1), strand from SE leaves NW
        open[i] = 4 * c + 3;
        open[i + 1] = 4 * c + 2;
    }
    for (int p = 1; p <= positions; ++p) join(open[p], g.top(p));
    return g;
}

}  // namespace

bool PlatLink::labels_paired() const {
    std::map<int, int> seen;
    for (const auto& x : pd_code)
        for (int l : x.labels) ++seen[l];
    for (auto [l, k] : seen)
        if (k != 2) return false;
    return true;
}

int orbit_components(const McgWord& w, SurfaceSpec spec) {
    auto eps = Permutation::standard_pairing(spec.punctures());
    auto pi = permutation_image(w);
    return orbit_count({eps, pi * eps * pi.inverse()});
}

PlatLink plat_closure(const McgWord& w, SurfaceSpec spec) {
    if (w.spec().n != spec.n) throw ConfigError("word and surface disagree on n");
    const int P = spec.punctures();
    Wiring g = wire(w, P);
    PlatLink link;
    link.n = spec.n;
    link.source_word = w;
    link.pd_code.resize(g.crossings);

    std::vector<char> seen(g.outside.size(), 0);
    std::vector<int> label(4 * g.crossings, 0);
    std::vector<int> entered(4 * g.crossings, 0);  // 1 where the strand enters
    int next_label = 0;
    for (int p = 1; p <= P; ++p) {
        if (seen[g.bottom(p)]) continue;
        ++link.components;
        // walk up from the bottom cap at p: the list of ends in order
        std::vector<int> walk;
        int id = g.bottom(p);
        do {
            walk.push_back(id);
            int in = g.outside[id];
            walk.push_back(in);
            id = g.through(in);
        } while (id != g.bottom(p));
        for (int v : walk) seen[v] = 1;

        std::vector<int> ports;
        for (int v : walk)
            if (g.is_port(v)) ports.push_back(v);
        link.gauss.emplace_back();
        if (ports.empty()) continue;
        // ports alternate enter, exit; start labelling at the first exit
        for (std::size_t k = 0; k < ports.size(); k += 2) entered[ports[k]] = 1;
        const std::size_t K = ports.size();
        for (std::size_t k = 0; k < K; k += 2) {
            int in = ports[k];
            int c = in / 4;
            bool over = (in % 2 == 0) == (w.letters()[c].sign > 0);
            link.gauss.back().push_back(over ? c + 1 : -(c + 1));
        }
        for (std::size_t k = 1; k < K; k += 2) {
            ++next_label;
            label[ports[k]] = next_label;
            label[ports[(k + 1) % K]] = next_label;
        }
    }

    for (int c = 0; c < g.crossings; ++c) {
        int sign = w.letters()[c].sign;
        // under pair: SE-NW for a positive letter, SW-NE otherwise
        int a = sign > 0 ? 1 : 0;
        int start = entered[4 * c + a] ? a : a + 2;
        auto& x = link.pd_code[c];
        x.sign = sign;
        for (int k = 0; k < 4; ++k) x.labels[k] = label[4 * c + (start + k) % 4];
    }
    check(link.labels_paired(), "PD labels are not paired");
    check(link.components == orbit_components(w, spec), "PD traversal disagrees with the orbit count");
    return link;
}

std::string plat_csv_header() { return "word,n,components,crossings"; }

std::string export_link(const PlatLink& link, const std::string& format) {
    std::ostringstream os;
    if (format == "pd") {
        os << "PD[";
        for (std::size_t c = 0; c < link.pd_code.size(); ++c) {
            const auto& l = link.pd_code[c].labels;
            os << (c ? "," : "") << "X(" << l[0] << ',' << l[1] << ',' << l[2] << ',' << l[3] << ')';
        }
        os << ']';
    } else if (format == "gauss") {
        for (std::size_t k = 0; k < link.gauss.size(); ++k) {
            if (k) os << '/';
            for (std::size_t j = 0; j < link.gauss[k].size(); ++j) os << (j ? "," : "") << link.gauss[k][j];
        }
    } else if (format == "csv") {
        os << '"' << link.source_word.to_string() << "\"," << link.n << ',' << link.components << ','
           << link.pd_code.size();
    } else {
        throw ConfigError("unknown export format: " + format);
    }
    return os.str();
}

}  // namespace bridge
