#include "bridge/tangle.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>

#include <boost/container_hash/hash.hpp>

#include "bridge/errors.hpp"
#include "bridge/normal_curve.hpp"

namespace bridge {

TanglePairing TanglePairing::standard(SurfaceSpec spec) {
    std::vector<int> partner(spec.punctures());
    for (int p = 1; p <= spec.punctures(); ++p) partner[p - 1] = p % 2 ? p + 1 : p - 1;
    return from_partners(std::move(partner));
}

TanglePairing TanglePairing::from_partners(std::vector<int> partner) {
    const int size = static_cast<int>(partner.size());
    if (size < 4 || size % 2) throw ConfigError("pairing needs an even number (>= 4) of punctures");
    for (int p = 1; p <= size; ++p) {
        int q = partner[p - 1];
        if (q < 1 || q > size || q == p || partner[q - 1] != p)
            throw ConfigError("pairing is not a fixed-point-free involution");
    }
    TanglePairing out;
    out.partner_ = std::move(partner);
    return out;
}

bool TanglePairing::is_standard() const {
    for (int p = 1; p <= size(); ++p)
        if (partner(p) != (p % 2 ? p + 1 : p - 1)) return false;
    return true;
}

std::string MeridianWord::to_string() const {
    if (letters.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i) os << ' ';
        os << 'c' << std::abs(letters[i]);
        if (letters[i] < 0) os << "^-1";
    }
    return os.str();
}

namespace {

int arc_edge(const Triangulation& T, int n, int i) { return i < n ? T.axis(2 * i - 1) : T.right_ray(); }

MeridianWord substitute(const Pi1Word& u) {
    std::vector<int> raw;
    raw.reserve(u.size());
    for (int x : u.letters()) {
        int k = std::abs(x);
        int c = (k + 1) / 2;
        int s = k % 2 ? 1 : -1;
        raw.push_back(x > 0 ? s * c : -s * c);
    }
    return MeridianWord{cyclic_reduce(raw)};
}

}  // namespace

int AdmissibleSystem::standard_edge(int i) const {
    Triangulation T(spec_.disk_punctures());
    return arc_edge(T, spec_.n, i);
}

std::vector<std::vector<int>> AdmissibleSystem::duality_matrix() const {
    // c_j is the small loop around the odd endpoint 2j-1; it meets an arc
    // once for each end at that puncture.
    const int n = arc_count();
    std::vector<std::vector<int>> M(n, std::vector<int>(n, 0));
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= n; ++i) {
            auto [p, q] = ends_[i - 1];
            M[j - 1][i - 1] = (p == 2 * j - 1) + (q == 2 * j - 1);
        }
    return M;
}

std::vector<AdmissibleSystem::Crossing> AdmissibleSystem::pattern() const {
    std::vector<Crossing> out;
    int start = -1;
    for (std::size_t x = 0; x < alive_.size() && start < 0; ++x)
        if (alive_[x]) start = static_cast<int>(x);
    if (start < 0) return out;
    int x = start;
    do {
        out.push_back(cross_[x]);
        x = next_[x];
    } while (x != start);
    return out;
}

AdmissibleSystem standard_admissible_system(SurfaceSpec spec) {
    AdmissibleSystem A;
    A.spec_ = spec;
    for (int i = 1; i <= spec.n; ++i) A.ends_.push_back({2 * i - 1, 2 * i});
    return A;
}

MeridianWord meridian_word(const CurveClass& c, const TanglePairing& p) {
    if (!p.is_standard()) throw std::invalid_argument("meridian_word expects the standard pairing");
    if (p.size() != c.spec().punctures()) throw std::invalid_argument("pairing size does not match the surface");
    return substitute(c.word());
}

bool is_disk(const CurveClass& c, const TanglePairing& p) {
    if (!is_essential(c)) throw std::invalid_argument("disk test needs an essential curve");
    return meridian_word(c, p).empty();
}

bool is_disk(const CurveClass& c) { return is_disk(c, TanglePairing::standard(c.spec())); }

class SurgeryEngine {
public:
    static void attach(AdmissibleSystem& A, const CurveClass& c) {
        const SurfaceSpec spec = A.spec_;
        Triangulation T(spec.disk_punctures());
        auto ws = small_weights(c.weights());
        EdgePath P = trace_curve(T, ws);
        std::vector<int> arc_of(T.edge_count(), 0);
        for (int i = 1; i <= spec.n; ++i) arc_of[arc_edge(T, spec.n, i)] = i;

        std::vector<std::vector<std::pair<long long, int>>> along(spec.n + 1);
        for (const auto& q : P) {
            int a = arc_of[q.edge];
            if (!a) continue;
            int id = static_cast<int>(A.cross_.size());
            A.cross_.push_back({a, q.dir});
            along[a].push_back({q.pos, id});
        }
        const int N = static_cast<int>(A.cross_.size());
        A.next_.resize(N);
        A.prev_.resize(N);
        A.arc_next_.assign(N, -1);
        A.arc_prev_.assign(N, -1);
        A.alive_.assign(N, 1);
        for (int x = 0; x < N; ++x) {
            A.next_[x] = (x + 1) % N;
            A.prev_[x] = (x + N - 1) % N;
        }
        for (auto& lst : along) {
            std::sort(lst.begin(), lst.end());
            for (std::size_t k = 0; k + 1 < lst.size(); ++k) {
                A.arc_next_[lst[k].second] = lst[k + 1].second;
                A.arc_prev_[lst[k + 1].second] = lst[k].second;
            }
        }
        A.live_ = N;
        A.tracked_ = c.weights();
    }

    static bool returning(const AdmissibleSystem& A, int x) {
        if (!A.alive_[x]) return false;
        int y = A.next_[x];
        if (y == x) return false;
        const auto& cx = A.cross_[x];
        const auto& cy = A.cross_[y];
        return cx.arc == cy.arc && cx.dir == -cy.dir && (A.arc_next_[x] == y || A.arc_prev_[x] == y);
    }

    // Removes the pair (x, next x); returns crossings whose pairs may have
    // become returning.
    static std::vector<int> cut(AdmissibleSystem& A, int x) {
        int y = A.next_[x];
        A.provenance_.push_back({A.cross_[x].arc, A.live_});
        int p = A.prev_[x], q = A.next_[y];
        std::vector<int> touched;
        if (A.live_ > 2) {
            A.next_[p] = q;
            A.prev_[q] = p;
            touched.push_back(p);
        }
        // the pair occupies two adjacent slots on its arc
        int lo = A.arc_next_[x] == y ? x : y;
        int hi = lo == x ? y : x;
        int a1 = A.arc_prev_[lo], a2 = A.arc_next_[hi];
        if (a1 >= 0) A.arc_next_[a1] = a2;
        if (a2 >= 0) A.arc_prev_[a2] = a1;
        for (int z : {x, y}) {
            A.alive_[z] = 0;
            A.arc_next_[z] = A.arc_prev_[z] = -1;
        }
        A.live_ -= 2;
        for (int a : {a1, a2})
            if (a >= 0) {
                touched.push_back(a);
                touched.push_back(A.prev_[a]);
            }
        return touched;
    }

    static bool step(AdmissibleSystem& A) {
        for (std::size_t x = 0; x < A.alive_.size(); ++x)
            if (returning(A, static_cast<int>(x))) {
                cut(A, static_cast<int>(x));
                return true;
            }
        return false;
    }

    static GeometricDiskRun run(AdmissibleSystem& A) {
        GeometricDiskRun out;
        std::vector<int> work(A.alive_.size());
        for (std::size_t x = 0; x < work.size(); ++x) work[x] = static_cast<int>(work.size() - 1 - x);
        out.counts.push_back(A.live_);
        while (A.live_ > 0 && !work.empty()) {
            int x = work.back();
            work.pop_back();
            if (!returning(A, x)) continue;
            for (int z : cut(A, x)) work.push_back(z);
            out.counts.push_back(A.live_);
        }
        out.disk = A.live_ == 0;
        return out;
    }
};

std::pair<AdmissibleSystem, long long> returning_arc_surgery(const CurveClass& c, const AdmissibleSystem& A) {
    if (A.spec().n != c.spec().n) throw std::invalid_argument("system and curve live on different surfaces");
    AdmissibleSystem B = A;
    if (!B.tracked()) {
        SurgeryEngine::attach(B, c);
    } else if (*B.tracked() != c.weights()) {
        throw std::invalid_argument("system tracks a different curve");
    }
    if (B.intersection_count() == 0) throw std::invalid_argument("curve is disjoint from the arc system");
    if (!SurgeryEngine::step(B)) throw NotADisk("no returning arc");
    long long left = B.intersection_count();
    return {std::move(B), left};
}

GeometricDiskRun run_disk_surgeries(const CurveClass& c) {
    if (!is_essential(c)) throw std::invalid_argument("disk test needs an essential curve");
    AdmissibleSystem A = standard_admissible_system(c.spec());
    SurgeryEngine::attach(A, c);
    return SurgeryEngine::run(A);
}

bool is_disk_geometric(const CurveClass& c) { return run_disk_surgeries(c).disk; }

namespace {

struct KeyHash {
    std::size_t operator()(const std::vector<long long>& v) const { return boost::hash_range(v.begin(), v.end()); }
};

std::vector<long long> key_of(const Weights& w) { return small_weights(w, 1LL << 62); }

// Edge E with c = boundary of a neighbourhood of E, for round curves.
std::optional<int> round_edge(SurfaceSpec spec, std::pair<int, int> base) {
    const int m = spec.disk_punctures();
    Triangulation T(m);
    auto [i, j] = base;
    if (j == i + 1) return T.axis(i);
    if (i == 1 && j == m - 1) return T.right_ray();
    return std::nullopt;
}

}  // namespace

DiskSetSample enumerate_disks(SurfaceSpec spec, int L) {
    if (L < 0) throw ConfigError("enumeration bound must be >= 0");
    DiskSetSample out;
    out.spec = spec;
    out.bound = L;
    const auto gens = McgWord::all_generators(spec);
    const int m = spec.disk_punctures();

    std::unordered_map<std::vector<long long>, int, KeyHash> seen;
    std::deque<std::pair<CurveClass, int>> queue;
    for (int t = 1; t <= spec.n; ++t) {
        CurveClass c = t < spec.n ? base_curve(spec, 2 * t - 1, 2 * t) : base_curve(spec, 1, m - 1);
        if (seen.emplace(key_of(c.weights()), 0).second) queue.push_back({std::move(c), 0});
    }
    while (!queue.empty()) {
        auto [c, d] = std::move(queue.front());
        queue.pop_front();
        if (d < L)
            for (auto g : gens) {
                CurveClass h = apply_generator(c, g);
                if (seen.emplace(key_of(h.weights()), d + 1).second) queue.push_back({std::move(h), d + 1});
            }
        if (is_disk(c)) {
            out.curves.push_back(std::move(c));
            out.depth.push_back(d);
        }
    }
    out.visited = seen.size();
    return out;
}

std::string status_name(CertificateStatus s) {
    switch (s) {
        case CertificateStatus::CommonDisk: return "COMMON_DISK";
        case CertificateStatus::DisjointPair: return "DISJOINT_PAIR";
        case CertificateStatus::NonFillingPair: return "NON_FILLING_PAIR";
        case CertificateStatus::NoWitness: return "NO_WITNESS";
    }
    return "?";
}

std::string status_meaning(CertificateStatus s) {
    switch (s) {
        case CertificateStatus::CommonDisk: return "d(D, wD) = 0";
        case CertificateStatus::DisjointPair: return "d(D, wD) <= 1";
        case CertificateStatus::NonFillingPair: return "d(D, wD) <= 2";
        case CertificateStatus::NoWitness:
            return "no pair at distance <= 2 among enumerated disks (evidence, not a proof of d >= 3)";
    }
    return "?";
}

std::string DistanceCertificate::csv_header() { return "word,L,status,witness_a,witness_b,verified,pairs_skipped"; }

std::string DistanceCertificate::csv_row() const {
    std::ostringstream os;
    os << '"' << word.to_string() << "\"," << bound << ',' << status_name(status) << ',';
    if (witness)
        os << witness->first << ',' << witness->second;
    else
        os << ',';
    os << ',' << (verified ? 1 : 0) << ',' << pairs_skipped;
    return os.str();
}

DistanceCertificate distance_certificate(const McgWord& w, int L) {
    return distance_certificate(w, enumerate_disks(w.spec(), L));
}

DistanceCertificate distance_certificate(const McgWord& w, const DiskSetSample& D, const CertificateOptions& opt) {
    const SurfaceSpec spec = D.spec;
    if (w.spec().n != spec.n) throw std::invalid_argument("word and disk set live on different surfaces");
    DistanceCertificate cert;
    cert.word = w;
    cert.bound = D.bound;
    const std::size_t K = D.curves.size();

    std::vector<Weights> image(K);
    for (std::size_t b = 0; b < K; ++b) image[b] = apply_word(spec, D.curves[b].weights(), w);

    std::unordered_map<std::vector<long long>, std::size_t, KeyHash> index;
    for (std::size_t a = 0; a < K; ++a) index.emplace(key_of(D.curves[a].weights()), a);
    for (std::size_t b = 0; b < K; ++b) {
        auto it = index.find(key_of(image[b]));
        if (it == index.end()) continue;
        std::pair<std::size_t, std::size_t> cand{it->second, b};
        if (!cert.witness || cand < *cert.witness) cert.witness = cand;
    }
    if (cert.witness) {
        cert.status = CertificateStatus::CommonDisk;
        auto [a, b] = *cert.witness;
        CurveClass moved = apply_word(D.curves[b], w);
        cert.verified = moved.coords() == D.curves[a].coords();
        return cert;
    }

    // Frame of a: Y = v_a^-1 w v_b delta_b meets the round curve delta_a in
    // 2 w_Y(E_a) points.
    std::vector<McgWord> undo(K);
    std::vector<int> edge(K);
    for (std::size_t a = 0; a < K; ++a) {
        undo[a] = D.curves[a].history()->inverse();
        edge[a] = *round_edge(spec, *D.curves[a].base());
    }
    auto framed = [&](std::size_t a, std::size_t b) { return apply_word(spec, image[b], undo[a]); };

    for (std::size_t a = 0; a < K && !cert.witness; ++a)
        for (std::size_t b = 0; b < K; ++b) {
            if (framed(a, b)[edge[a]] == 0) {
                cert.witness = {a, b};
                break;
            }
        }
    if (cert.witness) {
        cert.status = CertificateStatus::DisjointPair;
        auto [a, b] = *cert.witness;
        // diagram in the frame of the image curve
        CurveClass moved = apply_word(D.curves[b], w);
        try {
            cert.verified = intersection_number(D.curves[a], moved) == 0;
        } catch (const std::length_error&) {
            cert.verified = false;
        }
        return cert;
    }

    const BigInt cap = opt.fill_norm_cap;
    for (std::size_t a = 0; a < K && !cert.witness; ++a) {
        Weights round = base_weights(spec, D.curves[a].base()->first, D.curves[a].base()->second);
        for (std::size_t b = 0; b < K; ++b) {
            Weights Y = framed(a, b);
            if (norm(Y) > cap) {
                ++cert.pairs_skipped;
                continue;
            }
            if (!fills_weights(spec, round, Y)) {
                cert.witness = {a, b};
                break;
            }
        }
    }
    if (cert.witness) {
        cert.status = CertificateStatus::NonFillingPair;
        auto [a, b] = *cert.witness;
        // frame of the image curve, else the raw frame, whichever is smaller
        McgWord back = (w * *D.curves[b].history()).inverse();
        Weights X = apply_word(spec, D.curves[a].weights(), back);
        Weights dB = base_weights(spec, D.curves[b].base()->first, D.curves[b].base()->second);
        bool use_x = norm(X) <= norm(D.curves[a].weights()) + norm(image[b]);
        try {
            cert.verified = use_x ? !fills_weights(spec, X, dB)
                                  : !fills_weights(spec, D.curves[a].weights(), image[b]);
        } catch (const std::length_error&) {
            cert.verified = false;
        }
        return cert;
    }
    cert.status = CertificateStatus::NoWitness;
    cert.verified = true;
    return cert;
}

namespace {

struct WaveCandidate {
    std::vector<Step> steps;
    bool preferred;
    std::size_t order;
};

// Crossings met by a short arc around vertex v from the triangle on one side
// of E to the triangle on the other, not crossing E.
std::vector<Step> around_vertex(const Triangulation& T, int E, int v, bool from_left) {
    std::vector<Step> out;
    int tri = from_left ? T.left(E).triangle : T.right(E).triangle;
    int stop = from_left ? T.right(E).triangle : T.left(E).triangle;
    int came = E;
    for (int guard = 0; guard <= 2 * T.edge_count(); ++guard) {
        int next = -1;
        for (const auto& sd : T.sides(tri))
            if (sd.edge != came && (T.from(sd.edge) == v || T.to(sd.edge) == v)) next = sd.edge;
        check(next >= 0, "vertex walk lost its corner");
        if (next == E) {
            check(tri == stop, "vertex walk ended in the wrong triangle");
            return out;
        }
        int dir = T.right(next).triangle == tri ? +1 : -1;
        out.push_back({next, dir});
        tri = dir > 0 ? T.left(next).triangle : T.right(next).triangle;
        came = next;
    }
    throw InvariantViolation("vertex walk does not close");
}

// Curves made of one arc of the curve and one wave of the boundary of a
// neighbourhood of E.
std::vector<WaveCandidate> wave_candidates(const Triangulation& T, const std::vector<long long>& w, int E) {
    EdgePath P = trace_curve(T, w);
    const long long N = static_cast<long long>(P.size());
    const long long wE = w[E];
    std::vector<long long> at(wE);
    for (long long j = 0; j < N; ++j)
        if (P[j].edge == E) at[P[j].pos] = j;
    auto side = vertex_sides(T, w, P);
    const char home = side[1];
    const char s0 = side[T.from(E)];

    // half-position of the point beside strand k on the given side
    auto half = [&](long long k, bool left) {
        long long j = at[k];
        bool after = (P[j].dir > 0) == left;
        return ((after ? 2 * j + 1 : 2 * j - 1) + 2 * N) % (2 * N);
    };
    auto arc = [&](long long hx, long long hy) {
        std::vector<Step> out;
        long long cnt = ((hy - hx) % (2 * N) + 2 * N) % (2 * N) / 2;
        long long j0 = (hx + 1) / 2;
        for (long long t = 0; t < cnt; ++t) {
            const auto& q = P[(j0 + t) % N];
            out.push_back({q.edge, q.dir});
        }
        return out;
    };

    struct Wave {
        long long kx;
        bool lx;
        long long ky;
        bool ly;
        int vertex;  // 0 for side waves
        char region;
    };
    std::vector<Wave> waves;
    waves.push_back({0, true, 0, false, T.from(E), s0});
    for (int l = 1; l >= 0; --l)
        for (long long k = 0; k + 1 < wE; ++k)
            waves.push_back({k, l == 1, k + 1, l == 1, 0, static_cast<char>(s0 ^ ((k + 1) & 1))});
    waves.push_back({wE - 1, true, wE - 1, false, T.to(E), side[T.to(E)]});

    std::vector<WaveCandidate> out;
    for (const auto& wv : waves) {
        long long hx = half(wv.kx, wv.lx), hy = half(wv.ky, wv.ly);
        for (int flip = 0; flip < 2; ++flip) {
            // arc from p to q along the curve, then the wave back from q to p
            long long hp = flip ? hy : hx, hq = flip ? hx : hy;
            bool lq = flip ? wv.lx : wv.ly;
            auto st = arc(hp, hq);
            if (wv.vertex) {
                auto back = around_vertex(T, E, wv.vertex, lq);
                st.insert(st.end(), back.begin(), back.end());
            }
            out.push_back({tighten(st), wv.region == home, out.size()});
        }
    }
    return out;
}

}  // namespace

std::vector<CurveClass> disk_path(const CurveClass& a, const CurveClass& b) {
    const SurfaceSpec spec = a.spec();
    if (b.spec().n != spec.n) throw std::invalid_argument("curves live on different surfaces");
    if (!is_disk(a) || !is_disk(b)) throw std::invalid_argument("disk_path needs two disk curves");
    std::optional<int> E = b.base() ? round_edge(spec, *b.base()) : std::nullopt;
    if (!E) throw std::invalid_argument("disk_path needs b given as a moved round curve around adjacent punctures");
    const McgWord h = b.history() ? *b.history() : McgWord(spec);
    const McgWord hinv = h.inverse();
    const Weights target = base_weights(spec, b.base()->first, b.base()->second);
    Triangulation T(spec.disk_punctures());

    std::vector<CurveClass> path{a};
    Weights cur = apply_word(spec, a.weights(), hinv);
    while (true) {
        if (cur[*E] == 0) {
            if (cur != target) path.push_back(b);
            return path;
        }
        auto ws = small_weights(cur);
        struct Best {
            bool preferred;
            BigInt size;
            Weights frame;
            CurveClass curve;
        };
        std::optional<Best> best;
        for (auto& cand : wave_candidates(T, ws, *E)) {
            if (cand.steps.empty()) continue;
            auto tw = weights_of(T, cand.steps);
            if (tw[*E] >= ws[*E]) continue;
            Weights fw(tw.begin(), tw.end());
            if (!is_essential(spec, fw) || component_count(T, tw) != 1) continue;
            Pi1Word word = act_pi1(h, word_of_path(spec, T, cand.steps));
            if (!substitute(word).empty()) continue;
            Weights orig = apply_word(spec, fw, h);
            BigInt size = norm(orig);
            // candidates arrive in wave order, so ties keep the earlier one
            if (best && (best->preferred != cand.preferred ? best->preferred : !(size < best->size))) continue;
            best = Best{cand.preferred, size, fw, CurveClass::with_word(spec, std::move(orig), word)};
        }
        check(best.has_value(), "no wave reduces the intersection with b");
        path.push_back(best->curve);
        cur = best->frame;
    }
}

long long distance_upper_bound_log(long long i) {
    if (i < 1) throw std::invalid_argument("bound needs intersection number >= 1");
    long long bits = 0;
    while ((1LL << bits) < i) ++bits;
    return 2 + 2 * bits;
}

long long distance_upper_bound_log(const CurveClass& c1, const CurveClass& c2) {
    return distance_upper_bound_log(intersection_number(c1, c2));
}

}  // namespace bridge
