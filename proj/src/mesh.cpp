#include "loewner/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace loewner {

TimeMesh TimeMesh::graded(double T, std::size_t N, double p) {
    if (!(T > 0.0)) throw std::invalid_argument("TimeMesh: T must be positive");
    if (N < 2) throw std::invalid_argument("TimeMesh: need at least 2 intervals");
    if (!(p >= 1.0)) throw std::invalid_argument("TimeMesh: grading exponent must be >= 1");
    TimeMesh m;
    m.nodes_.resize(N + 1);
    for (std::size_t j = 0; j <= N; ++j) {
        m.nodes_[j] = T * std::pow(double(j) / double(N), p);
    }
    m.nodes_[N] = T;
    m.grading_exponent_ = p;
    return m;
}

TimeMesh TimeMesh::from_nodes(std::vector<double> nodes) {
    if (nodes.size() < 2) throw std::invalid_argument("TimeMesh: need at least 2 nodes");
    if (nodes.front() != 0.0) throw std::invalid_argument("TimeMesh: first node must be 0");
    for (std::size_t j = 1; j < nodes.size(); ++j) {
        if (!(nodes[j] > nodes[j - 1])) {
            throw std::invalid_argument("TimeMesh: nodes must be strictly increasing");
        }
    }
    TimeMesh m;
    m.nodes_ = std::move(nodes);
    return m;
}

std::size_t TimeMesh::nearest_node(double t) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), t);
    if (it == nodes_.end()) return nodes_.size() - 1;
    if (it == nodes_.begin()) return 0;
    std::size_t j = std::size_t(it - nodes_.begin());
    return (t - nodes_[j - 1] <= nodes_[j] - t) ? j - 1 : j;
}

TimeMesh make_graded_mesh(double T, std::size_t N, double grading_exponent) {
    return TimeMesh::graded(T, N, grading_exponent);
}

} // namespace loewner
