#pragma once

#include <vector>

#include "bridge/mcg.hpp"
#include "bridge/triangulation.hpp"

namespace bridge {

// One transverse crossing of a normal curve with an edge. pos counts from
// the edge's start vertex; dir = +1 crosses from the right triangle into the
// left one.
struct PathPoint {
    int edge;
    long long pos;
    int dir;
};

// Cyclic sequence of crossings. Between point j and point j+1 the curve runs
// through entered_triangle(T, path[j]).
using EdgePath = std::vector<PathPoint>;

inline int entered_triangle(const Triangulation& T, const PathPoint& p) {
    return p.dir > 0 ? T.left(p.edge).triangle : T.right(p.edge).triangle;
}

// The normal arc leaving ccw-position t of side s of triangle tri; returns
// the side and ccw-position of its other end.
struct CornerHit {
    int side;
    long long t;
};
CornerHit normal_partner(const Triangulation& T, const std::vector<long long>& w, int tri, int side,
                         long long t);

std::vector<EdgePath> trace_components(const Triangulation& T, const std::vector<long long>& w);
int component_count(const Triangulation& T, const std::vector<long long>& w);
// The single component; throws InvariantViolation for multicurves.
EdgePath trace_curve(const Triangulation& T, const std::vector<long long>& w);

// Side of every vertex (1..m+1) relative to the oriented curve: 1 = left.
// Parity of strands along edges propagates the side from the first strand.
std::vector<char> vertex_sides(const Triangulation& T, const std::vector<long long>& w, const EdgePath& p);

// Combinatorial path: edge crossings without positions.
struct Step {
    int edge;
    int dir;
    bool operator==(const Step&) const = default;
};

std::vector<Step> steps_of(const EdgePath& p);
// Cyclically cancels immediate back-and-forth crossings of one edge.
std::vector<Step> tighten(const std::vector<Step>& cyc);
std::vector<long long> weights_of(const Triangulation& T, const std::vector<Step>& cyc);
// x_k letters read off crossings with the rays l, u_2..u_{m-1}, r; the loop
// x_k crosses its ray with dir = -1.
std::vector<int> pi1_letters(const Triangulation& T, const std::vector<Step>& cyc);
Pi1Word word_of_path(SurfaceSpec spec, const Triangulation& T, const std::vector<Step>& cyc);

}  // namespace bridge
