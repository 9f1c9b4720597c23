#pragma once

#include <string>
#include <utility>
#include <vector>

#include "loewner/mesh.hpp"

namespace loewner {

/// Continuous driving term lambda(t) with lambda(0) = 0.
///
/// Closed forms: Zero, SqrtCoeff (c sqrt t) and PowerLaw (A t^alpha with
/// alpha in (1/2, 4]). Sampled terms are the zipper's staircase output:
/// piecewise constant, left-closed on its own time grid.
class DrivingTerm {
public:
    enum class Kind { Zero, SqrtCoeff, PowerLaw, Sampled };

    static DrivingTerm zero();
    static DrivingTerm sqrt_coeff(double c);
    static DrivingTerm power_law(double A, double alpha);
    /// points must start at (0, 0) with strictly increasing times.
    /// domain_end extends the last sample's interval; 0 means "last time".
    static DrivingTerm sampled(std::vector<std::pair<double, double>> points,
                               double domain_end = 0.0);

    Kind kind() const { return kind_; }
    double c() const { return c_; }
    double amplitude() const { return A_; }
    double alpha() const { return alpha_; }
    const std::vector<std::pair<double, double>>& samples() const { return samples_; }

    /// End of the domain of definition; +inf for closed forms.
    double domain_end() const;

    double eval(double t) const;

    /// One value per mesh interval, taken at the interval's left endpoint.
    std::vector<double> eval_on_mesh(const TimeMesh& mesh) const;

    /// The driver lambda_n(t) = sqrt(n) lambda(t/n) of the scaling relation.
    DrivingTerm rescaled(double n) const;

    /// Parse {"kind": "zero"|"sqrt"|"power"|"sampled", ...}.
    static DrivingTerm from_json_string(const std::string& text);
    std::string to_json_string() const;

private:
    DrivingTerm() = default;
    Kind kind_ = Kind::Zero;
    double c_ = 0.0;
    double A_ = 0.0;
    double alpha_ = 1.0;
    std::vector<std::pair<double, double>> samples_;
    double domain_end_ = 0.0;
};

} // namespace loewner
