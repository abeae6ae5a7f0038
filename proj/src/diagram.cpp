#include "bridge/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "bridge/errors.hpp"
#include "bridge/normal_curve.hpp"

namespace bridge {

namespace {

using Dir = std::pair<int, int>;  // (color, +1 forward / -1 backward)

// Counterclockwise order of the four half-edges at a crossing.
std::array<Dir, 4> rotation(int sign) {
    if (sign > 0) return {Dir{0, 1}, Dir{1, 1}, Dir{0, -1}, Dir{1, -1}};
    return {Dir{0, 1}, Dir{1, -1}, Dir{0, -1}, Dir{1, 1}};
}

}  // namespace

int RegionReport::puncture_total() const {
    int t = 0;
    for (const auto& f : faces) t += static_cast<int>(f.punctures.size());
    return t;
}

// ---- storage and faces -----------------------------------------------------

void MultiCurveDiagram::init_storage(int V) {
    alive_.assign(V, 1);
    sign_.assign(V, 0);
    for (int c = 0; c < 2; ++c) {
        next_[c].assign(V, -1);
        prev_[c].assign(V, -1);
        left_[c].assign(V, -1);
        right_[c].assign(V, -1);
    }
    live_crossings_ = V;
}

int MultiCurveDiagram::add_face() {
    int id = static_cast<int>(fparent_.size());
    fparent_.push_back(id);
    fsize_.push_back(1);
    fsides_.push_back(0);
    fpunct_.emplace_back();
    falive_.push_back(1);
    ++live_faces_;
    return id;
}

int MultiCurveDiagram::find(int f) const {
    while (fparent_[f] != f) f = fparent_[f];
    return f;
}

int MultiCurveDiagram::unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return a;
    if (fsize_[a] < fsize_[b]) std::swap(a, b);
    fparent_[b] = a;
    fsize_[a] += fsize_[b];
    fsides_[a] += fsides_[b];
    fpunct_[a].insert(fpunct_[a].end(), fpunct_[b].begin(), fpunct_[b].end());
    fpunct_[b].clear();
    falive_[b] = 0;
    --live_faces_;
    return a;
}

int MultiCurveDiagram::edge_face(int color, int x, bool left) const {
    return find(left ? left_[color][x] : right_[color][x]);
}

void MultiCurveDiagram::trace_faces() {
    const int V = static_cast<int>(alive_.size());
    std::vector<char> seen(static_cast<std::size_t>(V) * 4, 0);
    auto dart_id = [&](int c, int x, int d) { return (x * 2 + c) * 2 + (d > 0 ? 1 : 0); };
    for (int x = 0; x < V; ++x) {
        if (!alive_[x]) continue;
        for (int c = 0; c < 2; ++c)
            for (int d : {1, -1}) {
                if (seen[dart_id(c, x, d)]) continue;
                int f = add_face();
                int cc = c, xx = x, dd = d;
                while (!seen[dart_id(cc, xx, dd)]) {
                    seen[dart_id(cc, xx, dd)] = 1;
                    ++fsides_[f];
                    int y;
                    if (dd > 0) {
                        left_[cc][xx] = f;
                        y = next_[cc][xx];
                    } else {
                        y = prev_[cc][xx];
                        right_[cc][y] = f;
                    }
                    auto rot = rotation(sign_[y]);
                    int k = 0;
                    while (!(rot[k].first == cc && rot[k].second == -dd)) ++k;
                    auto nd = rot[(k + 3) % 4];
                    cc = nd.first;
                    xx = y;
                    dd = nd.second;
                }
                check(cc == c && xx == x && dd == d, "face boundary does not close");
            }
    }
}

MultiCurveDiagram MultiCurveDiagram::from_sequences(int total_punctures, std::array<std::vector<int>, 2> order,
                                                    std::vector<int> signs, std::vector<PunctureSpot> spots) {
    const int V = static_cast<int>(signs.size());
    if (V == 0 || order[0].size() != std::size_t(V) || order[1].size() != std::size_t(V))
        throw std::invalid_argument("hand-built diagram needs both colors through every crossing");
    MultiCurveDiagram d;
    d.colors_ = 2;
    d.punctures_ = total_punctures;
    d.init_storage(V);
    for (int c = 0; c < 2; ++c) {
        std::vector<char> seen(V, 0);
        for (int i = 0; i < V; ++i) {
            int x = order[c][i], y = order[c][(i + 1) % V];
            if (x < 0 || x >= V || seen[x]) throw std::invalid_argument("bad crossing order");
            seen[x] = 1;
            d.next_[c][x] = y;
            d.prev_[c][y] = x;
        }
    }
    for (int x = 0; x < V; ++x) {
        if (signs[x] != 1 && signs[x] != -1) throw std::invalid_argument("crossing signs are +-1");
        d.sign_[x] = signs[x];
    }
    d.trace_faces();
    std::vector<int> placed(total_punctures + 1, 0);
    for (const auto& s : spots) {
        if (s.puncture < 1 || s.puncture > total_punctures || placed[s.puncture]++)
            throw std::invalid_argument("puncture placed twice or out of range");
        d.fpunct_[d.edge_face(s.color, s.crossing, s.left)].push_back(s.puncture);
    }
    for (int p = 1; p <= total_punctures; ++p)
        if (!placed[p]) throw std::invalid_argument("puncture not placed");
    d.validate();
    return d;
}

std::vector<int> MultiCurveDiagram::sequence(int color) const {
    std::vector<int> out;
    if (live_crossings_ == 0) return out;
    int start = 0;
    while (!alive_[start]) ++start;
    int x = start;
    do {
        out.push_back(x);
        x = next_[color][x];
    } while (x != start && out.size() <= alive_.size());
    return out;
}

void MultiCurveDiagram::validate() const {
    const int V = static_cast<int>(alive_.size());
    // live faces and puncture census
    std::vector<int> roots;
    for (int f = 0; f < static_cast<int>(fparent_.size()); ++f)
        if (falive_[f]) {
            check(find(f) == f, "live face is not a root");
            roots.push_back(f);
        }
    check(static_cast<int>(roots.size()) == live_faces_, "live face count drifted");
    std::vector<int> seen_p(punctures_ + 1, 0);
    for (int f : roots)
        for (int p : fpunct_[f]) {
            check(p >= 1 && p <= punctures_ && !seen_p[p], "puncture census broken");
            seen_p[p] = 1;
        }
    for (int p = 1; p <= punctures_; ++p) check(seen_p[p] == 1, "puncture missing from faces");

    if (live_crossings_ == 0) {
        check(live_faces_ == colors_ + 1, "loop diagram has wrong face count");
        std::map<int, int> sides;
        for (int c = 0; c < colors_; ++c) {
            ++sides[find(loop_left_[c])];
            ++sides[find(loop_right_[c])];
            check(find(loop_left_[c]) != find(loop_right_[c]), "loop with one face");
        }
        for (int f : roots) check(fsides_[f] == sides[f], "loop face side count drifted");
        return;
    }

    check(colors_ == 2, "crossings need two colors");
    for (int c = 0; c < 2; ++c) {
        check(static_cast<int>(sequence(c).size()) == live_crossings_, "color class is not one closed curve");
        for (int x = 0; x < V; ++x)
            if (alive_[x]) check(prev_[c][next_[c][x]] == x, "next/prev mismatch");
    }
    // Recompute faces from the rotation system.
    std::vector<char> seen(static_cast<std::size_t>(V) * 4, 0);
    auto dart_id = [&](int c, int x, int d) { return (x * 2 + c) * 2 + (d > 0 ? 1 : 0); };
    std::set<int> cycle_roots;
    int cycles = 0;
    for (int x = 0; x < V; ++x) {
        if (!alive_[x]) continue;
        for (int c = 0; c < 2; ++c)
            for (int d : {1, -1}) {
                if (seen[dart_id(c, x, d)]) continue;
                ++cycles;
                int root = -1, len = 0;
                int cc = c, xx = x, dd = d;
                while (!seen[dart_id(cc, xx, dd)]) {
                    seen[dart_id(cc, xx, dd)] = 1;
                    ++len;
                    int y, f;
                    if (dd > 0) {
                        f = edge_face(cc, xx, true);
                        y = next_[cc][xx];
                    } else {
                        y = prev_[cc][xx];
                        f = edge_face(cc, y, false);
                    }
                    if (root < 0) root = f;
                    check(root == f, "one face boundary carries two face ids");
                    auto rot = rotation(sign_[y]);
                    int k = 0;
                    while (!(rot[k].first == cc && rot[k].second == -dd)) ++k;
                    auto nd = rot[(k + 3) % 4];
                    cc = nd.first;
                    xx = y;
                    dd = nd.second;
                }
                check(cycle_roots.insert(root).second, "two face boundaries share an id");
                check(falive_[root] && fsides_[root] == len, "face side count drifted");
            }
    }
    check(cycles == live_faces_, "face count drifted");
    // V - E + F = 2 with E = 2V
    check(live_crossings_ - 2 * live_crossings_ + cycles == 2, "Euler characteristic is not 2");
}

// ---- bigon removal ---------------------------------------------------------

bool MultiCurveDiagram::bigon_at(int color, int x, int& oc, int& os, int& face) const {
    if (!alive_[x]) return false;
    const int y = next_[color][x];
    oc = 1 - color;
    int cands[2] = {-1, -1};
    if (next_[oc][x] == y) cands[0] = x;
    if (prev_[oc][x] == y) cands[1] = y;
    const int fl = edge_face(color, x, true), fr = edge_face(color, x, false);
    for (int s : cands) {
        if (s < 0) continue;
        const int gl = edge_face(oc, s, true), gr = edge_face(oc, s, false);
        for (int f : {fl, fr})
            if ((f == gl || f == gr) && fsides_[f] == 2 && fpunct_[f].empty()) {
                os = s;
                face = f;
                return true;
            }
    }
    return false;
}

void MultiCurveDiagram::remove_bigon(int color, int x, int oc, int os, int B) {
    const int y = next_[color][x];
    if (live_crossings_ == 2) {
        // The two curves separate into disjoint loops; each keeps the faces
        // on the sides of its edge that did not bound the bigon.
        for (int k : {color, oc}) {
            const int e = k == color ? y : next_[oc][os];
            loop_left_[k] = edge_face(k, e, true);
            loop_right_[k] = edge_face(k, e, false);
        }
        falive_[B] = 0;
        --live_faces_;
        alive_[x] = alive_[y] = 0;
        live_crossings_ = 0;
        for (std::size_t f = 0; f < fparent_.size(); ++f)
            if (falive_[f]) fsides_[f] = 0;
        for (int k = 0; k < 2; ++k) {
            ++fsides_[find(loop_left_[k])];
            ++fsides_[find(loop_right_[k])];
        }
        return;
    }

    struct Col {
        int k, s, t, a, b, La, Lt, Ra, Rt;
    };
    Col cols[2];
    int starts[2] = {x, os};
    int ks[2] = {color, oc};
    for (int i = 0; i < 2; ++i) {
        Col& C = cols[i];
        C.k = ks[i];
        C.s = starts[i];
        C.t = next_[C.k][C.s];
        C.a = prev_[C.k][C.s];
        C.b = next_[C.k][C.t];
        check(C.a != C.t && C.b != C.s, "bigon removal on a too-short curve");
        for (int e : {C.a, C.s, C.t}) {
            --fsides_[edge_face(C.k, e, true)];
            --fsides_[edge_face(C.k, e, false)];
        }
        C.La = left_[C.k][C.a];
        C.Lt = left_[C.k][C.t];
        C.Ra = right_[C.k][C.a];
        C.Rt = right_[C.k][C.t];
    }
    check(fsides_[B] == 0 && fpunct_[B].empty(), "bigon face still has sides");
    falive_[B] = 0;
    --live_faces_;
    for (auto& C : cols) {
        int nl = unite(C.La, C.Lt);
        int nr = unite(C.Ra, C.Rt);
        next_[C.k][C.a] = C.b;
        prev_[C.k][C.b] = C.a;
        left_[C.k][C.a] = nl;
        right_[C.k][C.a] = nr;
    }
    for (auto& C : cols) {
        ++fsides_[edge_face(C.k, C.a, true)];
        ++fsides_[edge_face(C.k, C.a, false)];
        work_.push_back({C.k, C.a});
    }
    alive_[x] = alive_[y] = 0;
    live_crossings_ -= 2;
}

bool MultiCurveDiagram::reduce_step() {
    if (live_crossings_ == 0) return false;
    if (!work_seeded_) {
        work_seeded_ = true;
        for (int x = static_cast<int>(alive_.size()) - 1; x >= 0; --x)
            if (alive_[x]) {
                work_.push_back({1, x});
                work_.push_back({0, x});
            }
    }
    while (!work_.empty()) {
        auto [c, x] = work_.back();
        work_.pop_back();
        int oc, os, face;
        if (bigon_at(c, x, oc, os, face)) {
            remove_bigon(c, x, oc, os, face);
            return true;
        }
    }
    return false;
}

bool MultiCurveDiagram::has_empty_bigon() const {
    for (int x = 0; x < static_cast<int>(alive_.size()); ++x) {
        int oc, os, face;
        if (alive_[x] && bigon_at(0, x, oc, os, face)) return true;
    }
    return false;
}

RegionReport MultiCurveDiagram::regions() const {
    RegionReport r;
    for (int f = 0; f < static_cast<int>(fparent_.size()); ++f) {
        if (!falive_[f]) continue;
        FaceRecord rec;
        rec.sides = fsides_[f];
        rec.punctures = fpunct_[f];
        std::sort(rec.punctures.begin(), rec.punctures.end());
        r.faces.push_back(std::move(rec));
    }
    std::sort(r.faces.begin(), r.faces.end(), [](const FaceRecord& a, const FaceRecord& b) {
        if (a.punctures != b.punctures) return a.punctures < b.punctures;
        return a.sides < b.sides;
    });
    return r;
}

std::string MultiCurveDiagram::dump() const {
    std::ostringstream os;
    os << "colors " << colors_ << " crossings " << live_crossings_ << " faces " << live_faces_ << "\n";
    auto reg = regions();
    for (std::size_t i = 0; i < reg.faces.size(); ++i) {
        os << "face " << i << " sides " << reg.faces[i].sides << " punctures";
        for (int p : reg.faces[i].punctures) os << ' ' << p;
        os << "\n";
    }
    if (live_crossings_ > 0) {
        auto s0 = sequence(0), s1 = sequence(1);
        std::map<int, int> pos1;
        for (std::size_t i = 0; i < s1.size(); ++i) pos1[s1[i]] = static_cast<int>(i);
        for (std::size_t i = 0; i < s0.size(); ++i)
            os << "crossing " << i << " sign " << (sign_[s0[i]] > 0 ? "+1" : "-1") << " along1 " << pos1[s0[i]]
               << "\n";
    }
    return os.str();
}

// ---- drawing normal curves -------------------------------------------------

MultiCurveDiagram draw_curves(SurfaceSpec spec, const std::vector<Weights>& curves) {
    const int ncol = static_cast<int>(curves.size());
    if (ncol < 1 || ncol > 2) throw std::invalid_argument("a diagram holds one or two curves");
    Triangulation T(spec.disk_punctures());
    const int E = T.edge_count();

    std::vector<std::vector<long long>> w(2, std::vector<long long>(E, 0));
    std::vector<EdgePath> P(2);
    for (int c = 0; c < ncol; ++c) {
        w[c] = small_weights(curves[c], 20000000LL);
        P[c] = trace_curve(T, w[c]);
    }

    // merged[c][e][pos]: index of that strand among all strands on edge e
    std::vector<std::vector<std::vector<long long>>> merged(2, std::vector<std::vector<long long>>(E));
    std::vector<std::vector<std::pair<int, long long>>> owner(E);
    std::vector<long long> W(E);
    for (int e = 0; e < E; ++e) {
        const long long w0 = w[0][e], w1 = w[1][e];
        W[e] = w0 + w1;
        merged[0][e].resize(w0);
        merged[1][e].resize(w1);
        owner[e].resize(W[e]);
        long long i0 = 0, i1 = 0, q = 0;
        while (i0 < w0 || i1 < w1) {
            bool take0;
            if (i0 == w0)
                take0 = false;
            else if (i1 == w1)
                take0 = true;
            else
                take0 = static_cast<__int128>(2 * i0 + 1) * w1 <= static_cast<__int128>(2 * i1 + 1) * w0;
            if (take0) {
                owner[e][q] = {0, i0};
                merged[0][e][i0++] = q++;
            } else {
                owner[e][q] = {1, i1};
                merged[1][e][i1++] = q++;
            }
        }
    }
    // path index of each strand
    std::vector<std::vector<std::vector<long long>>> pidx(2, std::vector<std::vector<long long>>(E));
    for (int c = 0; c < ncol; ++c) {
        for (int e = 0; e < E; ++e) pidx[c][e].assign(w[c][e], -1);
        for (std::size_t j = 0; j < P[c].size(); ++j) pidx[c][P[c][j].edge][P[c][j].pos] = static_cast<long long>(j);
    }

    struct Chord {
        long long a, b;
        long long j;
    };
    const int NT = T.triangle_count();
    std::vector<std::array<long long, 3>> off(NT);
    std::vector<long long> perim(NT);
    for (int t = 0; t < NT; ++t) {
        long long acc = 0;
        for (int k = 0; k < 3; ++k) {
            off[t][k] = acc;
            acc += W[T.sides(t)[k].edge];
        }
        perim[t] = acc;
    }
    auto cyc = [&](int t, int e, long long q) {
        const auto& sd = T.sides(t);
        for (int k = 0; k < 3; ++k)
            if (sd[k].edge == e) return off[t][k] + (sd[k].forward ? q : W[e] - 1 - q);
        throw InvariantViolation("strand endpoint is not on the triangle");
    };
    std::vector<std::array<std::vector<Chord>, 2>> chords(NT);
    for (int c = 0; c < ncol; ++c) {
        const auto& path = P[c];
        const std::size_t N = path.size();
        for (std::size_t j = 0; j < N; ++j) {
            const auto& p = path[j];
            const auto& q = path[(j + 1) % N];
            int t = entered_triangle(T, p);
            chords[t][c].push_back({cyc(t, p.edge, merged[c][p.edge][p.pos]), cyc(t, q.edge, merged[c][q.edge][q.pos]),
                                    static_cast<long long>(j)});
        }
    }

    // crossings inside each triangle from endpoint interleaving
    std::vector<int> signs;
    std::array<std::vector<std::vector<std::pair<long long, int>>>, 2> along;
    for (int c = 0; c < ncol; ++c) along[c].assign(P[c].size(), {});
    if (ncol == 2) {
        for (int t = 0; t < NT; ++t) {
            const long long Pm = perim[t];
            auto dist = [Pm](long long from, long long x) { return ((x - from) % Pm + Pm) % Pm; };
            for (const auto& A : chords[t][0]) {
                const long long spanA = dist(A.a, A.b);
                for (const auto& B : chords[t][1]) {
                    const long long d1 = dist(A.a, B.a), d2 = dist(A.a, B.b);
                    const bool in1 = d1 < spanA, in2 = d2 < spanA;
                    if (in1 == in2) continue;
                    const int id = static_cast<int>(signs.size());
                    signs.push_back(in1 ? 1 : -1);
                    along[0][A.j].push_back({in1 ? d1 : d2, id});
                    const long long spanB = dist(B.a, B.b);
                    const long long e1 = dist(B.a, A.a), e2 = dist(B.a, A.b);
                    along[1][B.j].push_back({e1 < spanB ? e1 : e2, id});
                }
            }
        }
    }
    const int V = static_cast<int>(signs.size());

    MultiCurveDiagram d;
    d.colors_ = ncol;
    d.punctures_ = spec.punctures();
    const int nv = T.m() + 1;  // vertices 1..m+1, vertex m+1 is puncture 2n
    std::vector<int> vface(nv + 1, -1);

    if (V > 0) {
        d.init_storage(V);
        for (int x = 0; x < V; ++x) d.sign_[x] = signs[x];
        std::array<std::vector<int>, 2> prev_cross;
        for (int c = 0; c < 2; ++c) {
            std::vector<int> seq;
            prev_cross[c].assign(P[c].size(), -1);
            for (std::size_t j = 0; j < P[c].size(); ++j) {
                prev_cross[c][j] = seq.empty() ? -1 : seq.back();
                auto& lst = along[c][j];
                std::sort(lst.begin(), lst.end());
                for (auto& [key, id] : lst) seq.push_back(id);
            }
            check(static_cast<int>(seq.size()) == V, "crossing missing from a curve");
            for (auto& pc : prev_cross[c])
                if (pc < 0) pc = seq.back();
            for (int i = 0; i < V; ++i) {
                d.next_[c][seq[i]] = seq[(i + 1) % V];
                d.prev_[c][seq[(i + 1) % V]] = seq[i];
            }
        }
        d.trace_faces();
        for (int v = 1; v <= nv; ++v)
            for (int e : T.incident(v)) {
                if (W[e] == 0) continue;
                const bool at_from = T.from(e) == v;
                auto [c, pos] = owner[e][at_from ? 0 : W[e] - 1];
                const long long j = pidx[c][e][pos];
                const bool on_left = (P[c][j].dir > 0) == at_from;
                vface[v] = d.edge_face(c, prev_cross[c][j], on_left);
                break;
            }
        for (bool changed = true; changed;) {
            changed = false;
            for (int v = 1; v <= nv; ++v) {
                if (vface[v] >= 0) continue;
                for (int e : T.incident(v)) {
                    int u = T.from(e) == v ? T.to(e) : T.from(e);
                    if (W[e] == 0 && vface[u] >= 0) {
                        vface[v] = vface[u];
                        changed = true;
                        break;
                    }
                }
            }
        }
        for (int v = 1; v <= nv; ++v) {
            check(vface[v] >= 0, "puncture not located");
            d.fpunct_[d.find(vface[v])].push_back(v);
        }
    } else {
        // Loops only. Side of each vertex relative to each loop by parity
        // of crossings along edges of the triangulation.
        std::array<std::vector<char>, 2> side;
        for (int c = 0; c < ncol; ++c) side[c] = vertex_sides(T, w[c], P[c]);
        if (ncol == 1) {
            int fl = d.add_face(), fr = d.add_face();
            d.loop_left_[0] = fl;
            d.loop_right_[0] = fr;
            d.fsides_[fl] = d.fsides_[fr] = 1;
            for (int v = 1; v <= nv; ++v) d.fpunct_[side[0][v] ? fl : fr].push_back(v);
        } else {
            // side (1 = left) of loop `other` relative to loop c
            auto side_of_loop = [&](int c, int other) -> int {
                const auto& p = P[other][0];
                const long long q = merged[other][p.edge][p.pos];
                const auto& mc = merged[c][p.edge];
                long long before = std::lower_bound(mc.begin(), mc.end(), q) - mc.begin();
                return side[c][T.from(p.edge)] ^ static_cast<int>(before & 1);
            };
            const int S0 = side_of_loop(0, 1), S1 = side_of_loop(1, 0);
            int fa = d.add_face(), fb = d.add_face(), fc = d.add_face();
            d.loop_left_[0] = S0 ? fc : fa;
            d.loop_right_[0] = S0 ? fa : fc;
            d.loop_left_[1] = S1 ? fc : fb;
            d.loop_right_[1] = S1 ? fb : fc;
            d.fsides_[fa] = 1;
            d.fsides_[fb] = 1;
            d.fsides_[fc] = 2;
            for (int v = 1; v <= nv; ++v) {
                int f = side[0][v] != S0 ? fa : (side[1][v] != S1 ? fb : fc);
                d.fpunct_[f].push_back(v);
            }
        }
    }
    d.validate();
    return d;
}

// ---- curve-level operations ------------------------------------------------

MultiCurveDiagram single_diagram(const CurveClass& c) { return draw_curves(c.spec(), {c.weights()}); }

MultiCurveDiagram joint_diagram(const CurveClass& c1, const CurveClass& c2) {
    if (!(c1.spec() == c2.spec())) throw std::invalid_argument("curves on different surfaces");
    return draw_curves(c1.spec(), {c1.weights(), c2.weights()});
}

MultiCurveDiagram reduce_to_minimal(MultiCurveDiagram d) {
    while (d.reduce_step()) {
    }
    return d;
}

RegionReport complementary_regions(const MultiCurveDiagram& d) { return d.regions(); }

namespace {

// Moves the pair by the inverse of a history so one curve becomes round.
std::pair<Weights, Weights> normalized_pair(const CurveClass& c1, const CurveClass& c2) {
    const SurfaceSpec spec = c1.spec();
    if (c2.base() && c2.history() && !c2.history()->empty())
        return {apply_word(spec, c1.weights(), c2.history()->inverse()),
                base_weights(spec, c2.base()->first, c2.base()->second)};
    if (c1.base() && c1.history() && !c1.history()->empty())
        return {base_weights(spec, c1.base()->first, c1.base()->second),
                apply_word(spec, c2.weights(), c1.history()->inverse())};
    return {c1.weights(), c2.weights()};
}

}  // namespace

long long intersection_weights(SurfaceSpec spec, const Weights& a, const Weights& b) {
    return reduce_to_minimal(draw_curves(spec, {a, b})).crossing_count();
}

bool fills_weights(SurfaceSpec spec, const Weights& a, const Weights& b) {
    auto d = reduce_to_minimal(draw_curves(spec, {a, b}));
    if (d.crossing_count() == 0) return false;
    for (const auto& f : d.regions().faces)
        if (f.punctures.size() > 1) return false;
    return true;
}

long long intersection_number(const CurveClass& c1, const CurveClass& c2) {
    if (!(c1.spec() == c2.spec())) throw std::invalid_argument("curves on different surfaces");
    auto [a, b] = normalized_pair(c1, c2);
    return intersection_weights(c1.spec(), a, b);
}

long long intersection_number_raw(const CurveClass& c1, const CurveClass& c2) {
    return reduce_to_minimal(joint_diagram(c1, c2)).crossing_count();
}

bool fills(const CurveClass& c1, const CurveClass& c2) {
    if (!is_essential(c1) || !is_essential(c2)) throw std::invalid_argument("fills needs essential curves");
    if (!(c1.spec() == c2.spec())) throw std::invalid_argument("curves on different surfaces");
    auto [a, b] = normalized_pair(c1, c2);
    return fills_weights(c1.spec(), a, b);
}

}  // namespace bridge
