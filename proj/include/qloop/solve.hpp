#pragma once

#include <cstdint>
#include <vector>

#include "qloop/module.hpp"

namespace qloop {

enum class Strategy { Exact, Specialized, Auto };

struct SolveOptions {
    Strategy strategy = Strategy::Exact;
    std::uint64_t seed = 1;
    int count = 3;
};

struct SolveResult {
    int unknowns = 0;
    int equations = 0;
    // exact nullity, or the minimum over specialization points
    int nullity = 0;
    std::vector<int> point_nullity;
    // exact basis (Strategy::Exact only); T maps A to B
    std::vector<Mat> basis;
    // every solution vanishes on top(A) -> top(B)
    bool top_forced_zero = false;
    bool exact = false;
};

// q^(1/2), u, a, v drawn from the fixed pool
std::vector<Point> draw_points(std::uint64_t seed, int count);
Point draw_point(std::uint64_t& state);

SolveResult solve_intertwiners(const ModuleModel& a, const ModuleModel& b, const SolveOptions& opt = {});

// nullspace over Q at one point; throws PoleAtPoint
std::vector<Mat> nullspace_at(const ModuleModel& a, const ModuleModel& b, const Point& p);

}  // namespace qloop
