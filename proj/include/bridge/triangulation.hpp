#pragma once

#include <array>
#include <vector>

namespace bridge {

// Fixed ideal triangulation of the sphere with vertices p_1..p_m on the
// horizontal axis and p_inf = p_{m+1} (the outer boundary of the disk model).
//
//   e_i  (i = 1..m-1)  axis segment p_i -> p_{i+1}
//   u_k, d_k (k = 2..m-1)  rays p_k -> p_inf leaving upward / downward
//   l = u_1 = d_1  ray p_1 -> p_inf leaving left
//   r = u_m = d_m  ray p_m -> p_inf leaving right
//
// Triangles, sides listed counterclockwise:
//   upper_i = (p_i, p_{i+1}, p_inf): e_i, u_{i+1}, u_i reversed
//   lower_i = (p_i, p_inf, p_{i+1}): d_i, d_{i+1} reversed, e_i reversed
//
// An edge's left triangle is the one whose boundary runs along the edge's
// orientation. Crossing direction +1 means passing from the right triangle
// into the left one.
class Triangulation {
public:
    struct Side {
        int edge;
        bool forward;
    };
    struct Incidence {
        int triangle;
        int side;
    };

    explicit Triangulation(int m);

    int m() const { return m_; }
    int infinity() const { return m_ + 1; }
    int edge_count() const { return 3 * m_ - 3; }
    int triangle_count() const { return 2 * (m_ - 1); }

    int axis(int i) const { return i - 1; }
    int up(int k) const;
    int down(int k) const;
    int left_ray() const { return m_ - 1; }
    int right_ray() const { return m_; }

    int from(int e) const { return from_[e]; }
    int to(int e) const { return to_[e]; }
    const std::array<Side, 3>& sides(int t) const { return sides_[t]; }
    Incidence left(int e) const { return left_[e]; }
    Incidence right(int e) const { return right_[e]; }
    // For rays p_k -> p_inf seen from above (l, u_2..u_{m-1}, r): k, else 0.
    int up_puncture(int e) const { return up_puncture_[e]; }
    // Edges incident to vertex v (1..m+1).
    const std::vector<int>& incident(int v) const { return incident_[v]; }

private:
    int m_;
    std::vector<int> from_, to_, up_puncture_;
    std::vector<std::array<Side, 3>> sides_;
    std::vector<Incidence> left_, right_;
    std::vector<std::vector<int>> incident_;
};

}  // namespace bridge
