#pragma once

#include <vector>

#include "mpg/triangulation.hpp"

namespace fixtures {

inline mpg::Triangulation k4() {
    std::vector<std::pair<int, int>> e = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    return mpg::Triangulation::from_edge_list(4, e);
}

// 0 and 5 antipodal, rim 1-2-3-4
inline mpg::Triangulation octahedron() {
    std::vector<std::vector<int>> rot = {
        {1, 2, 3, 4},
        {0, 4, 5, 2},
        {0, 1, 5, 3},
        {0, 2, 5, 4},
        {0, 3, 5, 1},
        {1, 4, 3, 2},
    };
    return mpg::Triangulation::from_rotation(6, rot);
}

inline mpg::Triangulation octahedron_from_edges() {
    std::vector<std::pair<int, int>> e = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3},
                                          {3, 4}, {4, 1}, {5, 1}, {5, 2}, {5, 3}, {5, 4}};
    return mpg::Triangulation::from_edge_list(6, e);
}

inline mpg::Triangulation icosahedron() {
    // standard gyroelongated bipyramid labeling: apex 0, upper ring 1..5,
    // lower ring 6..10, apex 11
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= 5; ++i) e.push_back({0, i});
    for (int i = 1; i <= 5; ++i) e.push_back({i, i % 5 + 1});
    for (int i = 6; i <= 10; ++i) e.push_back({i, (i - 5) % 5 + 6});
    for (int i = 1; i <= 5; ++i) {
        e.push_back({i, i + 5});
        e.push_back({i, i % 5 + 6});
    }
    for (int i = 6; i <= 10; ++i) e.push_back({11, i});
    return mpg::Triangulation::from_edge_list(12, e);
}

// the unique order-5 maximal planar graph: wheel W4 plus one diagonal
inline mpg::Triangulation mpg5() {
    std::vector<std::pair<int, int>> e = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2},
                                          {2, 3}, {3, 4}, {4, 1}, {1, 3}};
    return mpg::Triangulation::from_edge_list(5, e);
}

// pentagonal bipyramid: the unique order-7 MPG with min degree 4
inline mpg::Triangulation bipyramid7() {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= 5; ++i) {
        e.push_back({0, i});
        e.push_back({6, i});
        e.push_back({i, i % 5 + 1});
    }
    return mpg::Triangulation::from_edge_list(7, e);
}

} // namespace fixtures
