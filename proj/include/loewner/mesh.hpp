#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace loewner {

/// Partition 0 = t_0 < t_1 < ... < t_N = T of a capacity-time interval.
/// Graded meshes carry their grading exponent; meshes assembled from
/// explicit nodes (zipper output) do not.
class TimeMesh {
public:
    static TimeMesh graded(double T, std::size_t N, double grading_exponent);
    static TimeMesh from_nodes(std::vector<double> nodes);

    const std::vector<double>& nodes() const { return nodes_; }
    std::size_t num_intervals() const { return nodes_.size() - 1; }
    double node(std::size_t j) const { return nodes_[j]; }
    double delta(std::size_t j) const { return nodes_[j + 1] - nodes_[j]; }
    double total_time() const { return nodes_.back(); }
    std::optional<double> grading_exponent() const { return grading_exponent_; }

    /// Index of the node closest to t.
    std::size_t nearest_node(double t) const;

private:
    TimeMesh() = default;
    std::vector<double> nodes_;
    std::optional<double> grading_exponent_;
};

/// Nodes t_j = T (j/N)^grading_exponent. Exponent 2 makes sqrt(t_j)
/// uniformly spaced, which is the natural scale for everything here.
TimeMesh make_graded_mesh(double T, std::size_t N, double grading_exponent = 2.0);

} // namespace loewner
