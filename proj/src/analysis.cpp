#include "chsh/analysis.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace chsh {

std::string to_string(ViolationClass c) {
    switch (c) {
        case ViolationClass::None: return "NONE";
        case ViolationClass::ModifiedOnly: return "MODIFIED_ONLY";
        case ViolationClass::Both: return "BOTH";
    }
    return "NONE";
}

ViolationClass classify(double delta_standard, double delta_modified) {
    if (delta_standard > kViolationEps) return ViolationClass::Both;
    if (delta_modified > kViolationEps) return ViolationClass::ModifiedOnly;
    return ViolationClass::None;
}

double delta_modified_unbiased(double theta, double eta) {
    PovmParams{0.0, eta}.validate();
    return eta * eta * (std::sqrt(2.0) * (1.0 + std::sin(2.0 * theta)) - 2.0);
}

double delta_standard_biased(double theta, double alpha, double eta) {
    return closed_form_biased(theta, alpha, eta) - 2.0;
}

double delta_modified_biased(double theta, double alpha, double eta) {
    const double s = std::abs(alpha) + eta;
    return closed_form_biased(theta, alpha, eta) - 2.0 * s * s;
}

std::optional<double> critical_eta_standard(double theta, double alpha) {
    if (!(std::abs(alpha) < 1.0)) {
        throw std::invalid_argument("critical_eta_standard: need |alpha| < 1");
    }
    const double eta_max = 1.0 - std::abs(alpha);
    auto delta = [&](double eta) { return delta_standard_biased(theta, alpha, eta); };
    if (!(delta(eta_max) > 0.0)) return std::nullopt;
    // delta(0) = 2 alpha^2 - 2 < 0, so a sign change is bracketed; the
    // expression grows monotonically in eta in the violating regime.
    double lo = 0.0;
    double hi = eta_max;
    while (hi - lo > 1e-9) {
        const double mid = 0.5 * (lo + hi);
        (delta(mid) > 0.0 ? hi : lo) = mid;
    }
    return hi;
}

namespace {

// Does any feasible eta violate the modified bound at this alpha? The eta
// grid includes the alpha + eta = 1 boundary, where the violating window
// ends up as alpha approaches its supremum.
bool modified_violation_exists(double theta, double alpha) {
    if (alpha >= 1.0) return false;
    const int n = 2001;
    const double eta_max = 1.0 - alpha;
    for (int i = 0; i < n; ++i) {
        const double eta = eta_max * static_cast<double>(i) / (n - 1);
        if (delta_modified_biased(theta, alpha, eta) > 0.0) return true;
    }
    return false;
}

}  // namespace

double max_alpha_modified(double theta) {
    if (!modified_violation_exists(theta, 0.0)) return 0.0;
    double lo = 0.0;  // violating
    double hi = 1.0;  // eta forced to 0, delta = 0: not violating
    while (hi - lo > 1e-6) {
        const double mid = 0.5 * (lo + hi);
        (modified_violation_exists(theta, mid) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<ScanCell> scan_region(double theta, int alpha_steps, int eta_steps) {
    if (alpha_steps < 2 || eta_steps < 2) {
        throw std::invalid_argument("scan_region: step counts must be >= 2");
    }
    const double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<ScanCell> cells;
    cells.reserve(static_cast<std::size_t>(alpha_steps) * eta_steps);
    for (int i = 0; i < alpha_steps; ++i) {
        const double alpha = static_cast<double>(i) / (alpha_steps - 1);
        for (int j = 0; j < eta_steps; ++j) {
            const double eta = static_cast<double>(j) / (eta_steps - 1);
            ScanCell cell;
            cell.alpha = alpha;
            cell.eta = eta;
            cell.theta = theta;
            cell.feasible = (alpha + eta <= 1.0 + kParamTol);
            if (cell.feasible) {
                cell.quantum_value = closed_form_biased(theta, alpha, eta);
                const double s = alpha + eta;  // alpha >= 0 on this grid
                cell.modified_bound = 2.0 * s * s;
                cell.delta_standard = cell.quantum_value - cell.standard_bound;
                cell.delta_modified = cell.quantum_value - cell.modified_bound;
                cell.cls = classify(cell.delta_standard, cell.delta_modified);
            } else {
                cell.quantum_value = nan;
                cell.modified_bound = nan;
                cell.delta_standard = nan;
                cell.delta_modified = nan;
                cell.cls = ViolationClass::None;
            }
            cells.push_back(cell);
        }
    }
    return cells;
}

}  // namespace chsh
