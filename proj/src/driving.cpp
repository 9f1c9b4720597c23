#include "loewner/driving.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <json.hpp>

namespace loewner {

DrivingTerm DrivingTerm::zero() {
    return DrivingTerm{};
}

DrivingTerm DrivingTerm::sqrt_coeff(double c) {
    DrivingTerm t;
    t.kind_ = Kind::SqrtCoeff;
    t.c_ = c;
    return t;
}

DrivingTerm DrivingTerm::power_law(double A, double alpha) {
    if (!(alpha > 0.5) || !(alpha <= 4.0)) {
        throw std::invalid_argument("DrivingTerm: alpha must lie in (1/2, 4]");
    }
    DrivingTerm t;
    t.kind_ = Kind::PowerLaw;
    t.A_ = A;
    t.alpha_ = alpha;
    return t;
}

DrivingTerm DrivingTerm::sampled(std::vector<std::pair<double, double>> points,
                                 double domain_end) {
    if (points.empty()) throw std::invalid_argument("sampled term: no points");
    if (points.front().first != 0.0 || points.front().second != 0.0) {
        throw std::invalid_argument("sampled term: first point must be (0, 0)");
    }
    for (std::size_t k = 1; k < points.size(); ++k) {
        if (!(points[k].first > points[k - 1].first)) {
            throw std::invalid_argument("sampled term: times must be strictly increasing");
        }
    }
    DrivingTerm t;
    t.kind_ = Kind::Sampled;
    t.domain_end_ = std::max(domain_end, points.back().first);
    t.samples_ = std::move(points);
    return t;
}

double DrivingTerm::domain_end() const {
    if (kind_ == Kind::Sampled) return domain_end_;
    return std::numeric_limits<double>::infinity();
}

double DrivingTerm::eval(double t) const {
    if (t < 0.0) throw std::domain_error("DrivingTerm::eval: negative time");
    switch (kind_) {
        case Kind::Zero:
            return 0.0;
        case Kind::SqrtCoeff:
            return c_ * std::sqrt(t);
        case Kind::PowerLaw:
            return t == 0.0 ? 0.0 : A_ * std::pow(t, alpha_);
        case Kind::Sampled: {
            if (t > domain_end_) {
                throw std::domain_error("DrivingTerm::eval: beyond sampled domain");
            }
            // value of the left-closed interval containing t
            auto it = std::upper_bound(
                samples_.begin(), samples_.end(), t,
                [](double v, const std::pair<double, double>& s) { return v < s.first; });
            return std::prev(it)->second;
        }
    }
    return 0.0;
}

std::vector<double> DrivingTerm::eval_on_mesh(const TimeMesh& mesh) const {
    const std::size_t n = mesh.num_intervals();
    if (n == 0) throw std::invalid_argument("eval_on_mesh: empty mesh");
    if (mesh.total_time() > domain_end()) {
        throw std::domain_error("eval_on_mesh: mesh exceeds sampled domain");
    }
    std::vector<double> out(n);
    for (std::size_t j = 0; j < n; ++j) out[j] = eval(mesh.node(j));
    return out;
}

DrivingTerm DrivingTerm::rescaled(double n) const {
    if (!(n > 0.0)) throw std::invalid_argument("rescaled: n must be positive");
    const double rootn = std::sqrt(n);
    switch (kind_) {
        case Kind::Zero:
            return zero();
        case Kind::SqrtCoeff:
            // sqrt(n) c sqrt(t/n) = c sqrt(t)
            return sqrt_coeff(c_);
        case Kind::PowerLaw:
            return power_law(A_ * rootn * std::pow(n, -alpha_), alpha_);
        case Kind::Sampled: {
            std::vector<std::pair<double, double>> pts;
            pts.reserve(samples_.size());
            for (const auto& [t, lam] : samples_) pts.emplace_back(n * t, rootn * lam);
            return sampled(std::move(pts), n * domain_end_);
        }
    }
    return zero();
}

DrivingTerm DrivingTerm::from_json_string(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "zero") return zero();
    if (kind == "sqrt") return sqrt_coeff(j.at("c").get<double>());
    if (kind == "power") return power_law(j.at("A").get<double>(), j.at("alpha").get<double>());
    if (kind == "sampled") {
        std::vector<std::pair<double, double>> pts;
        for (const auto& p : j.at("points")) {
            pts.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
        }
        double dend = j.value("domain_end", 0.0);
        return sampled(std::move(pts), dend);
    }
    throw std::invalid_argument("DrivingTerm: unknown kind '" + kind + "'");
}

std::string DrivingTerm::to_json_string() const {
    nlohmann::json j;
    switch (kind_) {
        case Kind::Zero:
            j["kind"] = "zero";
            break;
        case Kind::SqrtCoeff:
            j["kind"] = "sqrt";
            j["c"] = c_;
            break;
        case Kind::PowerLaw:
            j["kind"] = "power";
            j["A"] = A_;
            j["alpha"] = alpha_;
            break;
        case Kind::Sampled:
            j["kind"] = "sampled";
            j["points"] = nlohmann::json::array();
            for (const auto& [t, lam] : samples_) j["points"].push_back({t, lam});
            j["domain_end"] = domain_end_;
            break;
    }
    return j.dump();
}

} // namespace loewner
