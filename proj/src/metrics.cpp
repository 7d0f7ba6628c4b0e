#include "djc/metrics.hpp"

#include <cmath>

namespace djc::metrics {

double trace_norm_diff(const QubitState& a, const QubitState& b) {
    const double dp = a.rho11 - b.rho11;
    return 2.0 * std::sqrt(dp * dp + std::norm(a.rho01 - b.rho01));
}

DistanceReport integrated_distance(const Trajectory& a, const Trajectory& b, double horizon) {
    if (a.t.size() != b.t.size() || a.t.empty())
        throw DomainError("metrics", "trajectories must share a common grid");
    for (std::size_t i = 0; i < a.t.size(); ++i)
        if (a.t[i] != b.t[i])
            throw DomainError("metrics", "trajectories must share a common grid");
    if (!(horizon > 0.0) || a.t.back() < horizon - 1e-12 * horizon)
        throw DomainError("metrics", "grid does not cover the horizon [0, T]");

    DistanceReport report;
    report.horizon = horizon;
    report.pointwise.resize(a.t.size());
    for (std::size_t i = 0; i < a.t.size(); ++i) {
        report.pointwise[i] = trace_norm_diff({a.rho11[i], a.rho01[i]}, {b.rho11[i], b.rho01[i]});
    }
    double integral = 0.0;
    for (std::size_t i = 1; i < a.t.size() && a.t[i - 1] < horizon; ++i) {
        const double hi = std::min(a.t[i], horizon);
        const double w = hi - a.t[i - 1];
        integral += 0.5 * w * (report.pointwise[i - 1] + report.pointwise[i]);
    }
    report.integrated = integral / (2.0 * horizon);
    return report;
}

}  // namespace djc::metrics
