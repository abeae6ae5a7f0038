#include "bridge/triangulation.hpp"

#include <stdexcept>

namespace bridge {

Triangulation::Triangulation(int m) : m_(m) {
    if (m < 3) throw std::invalid_argument("triangulation needs at least 3 disk punctures");
    const int E = edge_count();
    from_.assign(E, 0);
    to_.assign(E, 0);
    up_puncture_.assign(E, 0);
    left_.assign(E, {-1, -1});
    right_.assign(E, {-1, -1});
    incident_.assign(m + 2, {});

    for (int i = 1; i <= m - 1; ++i) {
        from_[axis(i)] = i;
        to_[axis(i)] = i + 1;
    }
    for (int k = 1; k <= m; ++k) {
        from_[up(k)] = k;
        to_[up(k)] = infinity();
        from_[down(k)] = k;
        to_[down(k)] = infinity();
        up_puncture_[up(k)] = k;
    }

    sides_.resize(triangle_count());
    for (int i = 1; i <= m - 1; ++i) {
        sides_[i - 1] = {Side{axis(i), true}, Side{up(i + 1), true}, Side{up(i), false}};
        sides_[m - 1 + i - 1] = {Side{down(i), true}, Side{down(i + 1), false}, Side{axis(i), false}};
    }
    for (int t = 0; t < triangle_count(); ++t)
        for (int s = 0; s < 3; ++s) {
            const auto& sd = sides_[t][s];
            auto& slot = sd.forward ? left_[sd.edge] : right_[sd.edge];
            if (slot.triangle != -1) throw std::logic_error("edge used twice on one side");
            slot = {t, s};
        }
    for (int e = 0; e < E; ++e) {
        if (left_[e].triangle < 0 || right_[e].triangle < 0)
            throw std::logic_error("edge missing a triangle");
        incident_[from_[e]].push_back(e);
        incident_[to_[e]].push_back(e);
    }
}

int Triangulation::up(int k) const {
    if (k == 1) return left_ray();
    if (k == m_) return right_ray();
    return m_ + 1 + (k - 2);
}

int Triangulation::down(int k) const {
    if (k == 1) return left_ray();
    if (k == m_) return right_ray();
    return m_ + 1 + (m_ - 2) + (k - 2);
}

}  // namespace bridge
