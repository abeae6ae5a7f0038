#pragma once

#include <array>
#include <string>
#include <vector>

#include "bridge/lamination.hpp"

namespace bridge {

struct FaceRecord {
    int sides = 0;
    std::vector<int> punctures;  // sorted
};

struct RegionReport {
    std::vector<FaceRecord> faces;  // sorted by (punctures, sides)
    int puncture_total() const;
};

// Planar map of one or two simple closed curves on the punctured sphere.
// Crossings are 4-valent vertices where color 1 crosses color 0; sign +1
// means color 1 passes from the right of color 0 to its left. A color with
// no crossings is a loop. Faces carry their punctures and side counts.
class MultiCurveDiagram {
public:
    // A puncture sitting on one side of the color's edge that starts at
    // crossing `crossing`.
    struct PunctureSpot {
        int color;
        int crossing;
        bool left;
        int puncture;
    };

    // Hand-built map: crossing ids 0..V-1, each color's cyclic order of
    // crossings, and one sign per crossing. Every puncture 1..total must be
    // placed. Both colors must meet at least once.
    static MultiCurveDiagram from_sequences(int total_punctures, std::array<std::vector<int>, 2> order,
                                            std::vector<int> signs, std::vector<PunctureSpot> spots);

    int colors() const { return colors_; }
    int crossing_count() const { return live_crossings_; }
    int face_count() const { return live_faces_; }
    int puncture_total() const { return punctures_; }
    // Crossing ids along a color, starting from the smallest live id.
    std::vector<int> sequence(int color) const;
    int sign(int crossing) const { return sign_[crossing]; }

    // Recomputes faces from the rotation system and compares with the
    // tracked face data: Euler formula, side counts, puncture census,
    // connectedness of each color. Throws InvariantViolation.
    void validate() const;
    bool has_empty_bigon() const;
    // Removes one empty bigon; false when there is none.
    bool reduce_step();

    RegionReport regions() const;
    std::string dump() const;

private:
    friend MultiCurveDiagram draw_curves(SurfaceSpec, const std::vector<Weights>&);

    MultiCurveDiagram() = default;
    void init_storage(int V);
    void trace_faces();  // initial faces from darts (needs crossings)
    int add_face();
    int find(int f) const;
    int unite(int a, int b);
    int edge_face(int color, int x, bool left) const;
    bool bigon_at(int color, int x, int& other_color, int& other_start, int& face) const;
    void remove_bigon(int color, int x, int other_color, int other_start, int face);

    int colors_ = 0;
    int punctures_ = 0;
    int live_crossings_ = 0;
    int live_faces_ = 0;

    std::vector<char> alive_;
    std::vector<int> sign_;
    std::array<std::vector<int>, 2> next_, prev_;
    std::array<std::vector<int>, 2> left_, right_;
    std::array<int, 2> loop_left_{-1, -1}, loop_right_{-1, -1};

    std::vector<int> fparent_;
    std::vector<int> fsize_, fsides_;
    std::vector<std::vector<int>> fpunct_;
    std::vector<char> falive_;

    std::vector<std::pair<int, int>> work_;  // (color, edge start) to inspect
    bool work_seeded_ = false;
};

// Draws normal curves (one or two) jointly: strands of both colors on each
// edge are interleaved proportionally (ties: color 0 first) and joined by
// straight normal arcs inside each triangle.
MultiCurveDiagram draw_curves(SurfaceSpec spec, const std::vector<Weights>& curves);

MultiCurveDiagram single_diagram(const CurveClass& c);
MultiCurveDiagram joint_diagram(const CurveClass& c1, const CurveClass& c2);
MultiCurveDiagram reduce_to_minimal(MultiCurveDiagram d);
RegionReport complementary_regions(const MultiCurveDiagram& d);

// Geometric intersection number. The pair is first moved by the inverse of
// one curve's history so that curve is round; intersection_number_raw draws
// the curves as given.
long long intersection_number(const CurveClass& c1, const CurveClass& c2);
long long intersection_number_raw(const CurveClass& c1, const CurveClass& c2);
// Every complementary region of the minimal pair is a disk with at most one
// puncture.
bool fills(const CurveClass& c1, const CurveClass& c2);
bool fills_weights(SurfaceSpec spec, const Weights& a, const Weights& b);
long long intersection_weights(SurfaceSpec spec, const Weights& a, const Weights& b);

}  // namespace bridge
