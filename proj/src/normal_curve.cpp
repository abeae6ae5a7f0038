#include "bridge/normal_curve.hpp"

#include "bridge/errors.hpp"

namespace bridge {

CornerHit normal_partner(const Triangulation& T, const std::vector<long long>& w, int tri, int side,
                         long long t) {
    const auto& sd = T.sides(tri);
    const long long w0 = w[sd[side].edge];
    const long long wn = w[sd[(side + 1) % 3].edge];
    const long long wp = w[sd[(side + 2) % 3].edge];
    // arcs cutting the corner at the end of this side (shared with the next side)
    const long long c_end = (w0 + wn - wp) / 2;
    if (t >= w0 - c_end) return {(side + 1) % 3, w0 - 1 - t};
    return {(side + 2) % 3, wp - 1 - t};
}

namespace {

struct Tracer {
    const Triangulation& T;
    const std::vector<long long>& w;
    std::vector<long long> offset;
    std::vector<char> seen;

    Tracer(const Triangulation& T_, const std::vector<long long>& w_) : T(T_), w(w_) {
        offset.assign(T.edge_count() + 1, 0);
        for (int e = 0; e < T.edge_count(); ++e) offset[e + 1] = offset[e] + w[e];
        seen.assign(offset.back(), 0);
    }

    EdgePath trace_from(int edge, long long pos) {
        EdgePath path;
        PathPoint cur{edge, pos, +1};
        while (true) {
            char& mark = seen[offset[cur.edge] + cur.pos];
            if (mark) {
                check(cur.edge == edge && cur.pos == pos && cur.dir == +1, "normal curve trace is not closed");
                break;
            }
            mark = 1;
            path.push_back(cur);
            auto inc = cur.dir > 0 ? T.left(cur.edge) : T.right(cur.edge);
            const auto& sd = T.sides(inc.triangle);
            long long t = sd[inc.side].forward ? cur.pos : w[cur.edge] - 1 - cur.pos;
            auto hit = normal_partner(T, w, inc.triangle, inc.side, t);
            const auto& out = sd[hit.side];
            long long p = out.forward ? hit.t : w[out.edge] - 1 - hit.t;
            check(p >= 0 && p < w[out.edge], "normal arc leaves the edge");
            cur = PathPoint{out.edge, p, out.forward ? -1 : +1};
        }
        return path;
    }
};

void check_corners(const Triangulation& T, const std::vector<long long>& w) {
    for (int t = 0; t < T.triangle_count(); ++t) {
        const auto& sd = T.sides(t);
        for (int s = 0; s < 3; ++s) {
            long long c = w[sd[s].edge] + w[sd[(s + 1) % 3].edge] - w[sd[(s + 2) % 3].edge];
            if (c < 0 || c % 2) throw std::invalid_argument("weights are not normal coordinates");
        }
    }
}

}  // namespace

std::vector<EdgePath> trace_components(const Triangulation& T, const std::vector<long long>& w) {
    check_corners(T, w);
    Tracer tr(T, w);
    std::vector<EdgePath> out;
    for (int e = 0; e < T.edge_count(); ++e)
        for (long long p = 0; p < w[e]; ++p)
            if (!tr.seen[tr.offset[e] + p]) out.push_back(tr.trace_from(e, p));
    return out;
}

int component_count(const Triangulation& T, const std::vector<long long>& w) {
    return static_cast<int>(trace_components(T, w).size());
}

EdgePath trace_curve(const Triangulation& T, const std::vector<long long>& w) {
    check_corners(T, w);
    int start = -1;
    for (int e = 0; e < T.edge_count() && start < 0; ++e)
        if (w[e] > 0) start = e;
    if (start < 0) throw std::invalid_argument("empty lamination has no curve");
    Tracer tr(T, w);
    EdgePath p = tr.trace_from(start, 0);
    long long total = tr.offset.back();
    check(static_cast<long long>(p.size()) == total, "weights describe a multicurve");
    return p;
}

std::vector<char> vertex_sides(const Triangulation& T, const std::vector<long long>& w, const EdgePath& p) {
    std::vector<char> side(T.m() + 2, -1);
    // p[0] sits at position 0, the strand nearest the start vertex of its edge
    check(!p.empty() && p[0].pos == 0, "path must start at a position-0 strand");
    side[T.from(p[0].edge)] = p[0].dir > 0 ? 1 : 0;
    for (bool changed = true; changed;) {
        changed = false;
        for (int e = 0; e < T.edge_count(); ++e) {
            int a = T.from(e), b = T.to(e);
            char flip = static_cast<char>(w[e] & 1);
            if (side[a] >= 0 && side[b] < 0) {
                side[b] = side[a] ^ flip;
                changed = true;
            } else if (side[b] >= 0 && side[a] < 0) {
                side[a] = side[b] ^ flip;
                changed = true;
            }
        }
    }
    return side;
}

std::vector<Step> steps_of(const EdgePath& p) {
    std::vector<Step> out;
    out.reserve(p.size());
    for (const auto& q : p) out.push_back({q.edge, q.dir});
    return out;
}

std::vector<Step> tighten(const std::vector<Step>& cyc) {
    std::vector<Step> st;
    st.reserve(cyc.size());
    for (const auto& s : cyc) {
        if (!st.empty() && st.back().edge == s.edge && st.back().dir == -s.dir)
            st.pop_back();
        else
            st.push_back(s);
    }
    std::size_t lo = 0, hi = st.size();
    while (hi - lo >= 2 && st[lo].edge == st[hi - 1].edge && st[lo].dir == -st[hi - 1].dir) {
        ++lo;
        --hi;
    }
    return std::vector<Step>(st.begin() + lo, st.begin() + hi);
}

std::vector<long long> weights_of(const Triangulation& T, const std::vector<Step>& cyc) {
    std::vector<long long> w(T.edge_count(), 0);
    for (const auto& s : cyc) ++w[s.edge];
    return w;
}

std::vector<int> pi1_letters(const Triangulation& T, const std::vector<Step>& cyc) {
    std::vector<int> out;
    for (const auto& s : cyc)
        if (int k = T.up_puncture(s.edge)) out.push_back(-s.dir * k);
    return out;
}

Pi1Word word_of_path(SurfaceSpec spec, const Triangulation& T, const std::vector<Step>& cyc) {
    return reduce(spec, pi1_letters(T, cyc));
}

}  // namespace bridge
