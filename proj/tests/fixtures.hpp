#pragma once

#include <string>
#include <vector>

#include "kac/labeling.hpp"

namespace kac::testing {

// E7 Kac 2-labelings q1..q6 in global order (p_1, ..., p_7, p_0).
inline const std::vector<KacLabeling> e7_q = {
    {{0, 0, 0, 0, 0, 0, 0, 2}, 2},  // q1
    {{2, 0, 0, 0, 0, 0, 0, 0}, 2},  // q2
    {{1, 0, 0, 0, 0, 0, 0, 1}, 2},  // q3
    {{0, 1, 0, 0, 0, 0, 0, 0}, 2},  // q4
    {{0, 0, 0, 0, 0, 1, 0, 0}, 2},  // q5
    {{0, 0, 0, 0, 0, 0, 1, 0}, 2},  // q6
};

// The same labelings in display form, rows {1,2,3} / {4,7} / {5,6,0}.
inline const std::vector<std::string> e7_q_display = {"000/00/002", "200/00/000", "100/00/001",
                                                      "010/00/000", "000/00/010", "000/01/000"};

// D6 with the half-spin lattice: representatives of the classes for even and
// odd twists, global order (p_1, ..., p_6, p_0).
inline const std::vector<KacLabeling> d6_even = {
    {{0, 0, 0, 0, 1, 0, 1}, 2},  // p0 = p5 = 1
    {{1, 0, 0, 0, 0, 1, 0}, 2},  // p1 = p6 = 1
    {{0, 0, 0, 0, 0, 0, 2}, 2},  // p0 = 2
    {{2, 0, 0, 0, 0, 0, 0}, 2},  // p1 = 2
    {{0, 1, 0, 0, 0, 0, 0}, 2},  // p2 = 1
};
inline const std::vector<KacLabeling> d6_odd = {
    {{1, 0, 0, 0, 0, 0, 1}, 2},  // p0 = p1 = 1
    {{0, 0, 0, 0, 0, 1, 1}, 2},  // p0 = p6 = 1
    {{0, 0, 1, 0, 0, 0, 0}, 2},  // p3 = 1
};

}  // namespace kac::testing
