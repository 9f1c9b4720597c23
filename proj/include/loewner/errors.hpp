#pragma once

#include <stdexcept>
#include <string>

namespace loewner {

/// Forward composition stepped too close to the current driving value:
/// the start point was inside (or numerically touching) the hull.
struct HullCollisionError : std::runtime_error {
    explicit HullCollisionError(const std::string& what, std::size_t step)
        : std::runtime_error(what), step_index(step) {}
    std::size_t step_index;
};

/// Curve handed to the zipper is self-intersecting or touches the real
/// axis: some vertex image lost its positive imaginary part before its
/// own consumption step.
struct GeometryError : std::runtime_error {
    explicit GeometryError(const std::string& what, std::size_t vertex)
        : std::runtime_error(what), vertex_index(vertex) {}
    std::size_t vertex_index;
};

/// Singular-solution march broke the branch ordering f2 < lambda < f1.
struct BranchOrderError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bound-sequence seed or refinement produced a nonpositive denominator.
struct DivergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace loewner
