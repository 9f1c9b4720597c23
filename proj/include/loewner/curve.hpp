#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace loewner {

/// Polyline in the closed upper half-plane: starts at 0, every later
/// vertex strictly above the real axis, no repeated consecutive vertices.
/// Carries cumulative arclength alongside the vertices.
class Curve {
public:
    explicit Curve(std::vector<std::complex<double>> points);

    const std::vector<std::complex<double>>& points() const { return points_; }
    const std::vector<double>& cumulative_arclength() const { return arclength_; }
    std::size_t size() const { return points_.size(); }
    double total_arclength() const { return arclength_.back(); }

    /// Largest vertex-to-vertex distance to another polyline (symmetric).
    double hausdorff_distance(const Curve& other) const;

private:
    std::vector<std::complex<double>> points_;
    std::vector<double> arclength_;
};

} // namespace loewner
