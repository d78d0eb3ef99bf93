#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chsh/quantum.hpp"

namespace chsh {

// Class boundary: |delta| <= kViolationEps counts as no violation, so
// float noise on the boundary cannot flip a cell's class.
inline constexpr double kViolationEps = 1e-12;

// A cell violates BOTH bounds, only the sharpness-dependent one, or
// neither. Standard-only is impossible: the modified bound never exceeds
// 2, so delta_modified >= delta_standard always.
enum class ViolationClass { None, ModifiedOnly, Both };

std::string to_string(ViolationClass c);

ViolationClass classify(double delta_standard, double delta_modified);

// One grid point of a (alpha, eta) scan at fixed theta. Cells with
// alpha + eta > 1 are kept (the grid stays rectangular for plotting) but
// carry feasible = false, class None and NaN in the computed columns.
struct ScanCell {
    double alpha = 0.0;
    double eta = 0.0;
    double theta = 0.0;
    double quantum_value = 0.0;
    double standard_bound = 2.0;
    double modified_bound = 0.0;
    double delta_standard = 0.0;
    double delta_modified = 0.0;
    bool feasible = true;
    ViolationClass cls = ViolationClass::None;
};

// eta^2 (sqrt2 (1 + sin 2theta) - 2): quantum value minus the 2 eta^2
// bound for unbiased POVMs. Positive for every eta > 0 whenever the sharp
// settings violate, since the eta^2 factor never changes the sign.
double delta_modified_unbiased(double theta, double eta);

// Quantum value minus the standard bound 2.
double delta_standard_biased(double theta, double alpha, double eta);

// Quantum value minus the modified bound 2 (|alpha| + eta)^2. Always
// >= delta_standard_biased.
double delta_modified_biased(double theta, double alpha, double eta);

// Smallest eta in [0, 1 - |alpha|] with delta_standard_biased > 0, by
// bisection to 1e-9, or nullopt when no feasible eta violates. Requires
// |alpha| < 1.
std::optional<double> critical_eta_standard(double theta, double alpha);

// Supremum of alpha >= 0 for which some feasible eta (alpha + eta <= 1)
// gives delta_modified_biased > 0; bisection on alpha to 1e-6, with the
// eta axis scanned densely including the alpha + eta = 1 boundary.
double max_alpha_modified(double theta);

// Row-major grid (alpha outer, eta inner) over [0,1] x [0,1] with the
// given number of points per axis (>= 2 each).
std::vector<ScanCell> scan_region(double theta, int alpha_steps, int eta_steps);

}  // namespace chsh
