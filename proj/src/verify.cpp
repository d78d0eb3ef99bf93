#include "chsh/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>

#include "chsh/analysis.hpp"
#include "chsh/lhv.hpp"
#include "chsh/povm.hpp"
#include "chsh/quantum.hpp"

namespace chsh {

namespace {

constexpr double kPi = std::numbers::pi;

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

BlochVector random_direction(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const double z = 2.0 * u01(rng) - 1.0;
    const double phi = 2.0 * kPi * u01(rng);
    const double r = std::sqrt(std::max(1.0 - z * z, 0.0));
    return BlochVector(r * std::cos(phi), r * std::sin(phi), z);
}

PovmParams random_params(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const double alpha = 2.0 * u01(rng) - 1.0;
    const double eta = (1.0 - std::abs(alpha)) * u01(rng);
    return PovmParams{alpha, eta};
}

Mat2 random_hermitian2(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Mat2 m;
    for (int i = 0; i < 4; ++i) m.e[i] = cplx(u(rng), u(rng));
    return 0.5 * (m + adjoint(m));
}

// A check reports its worst deviation against a tolerance.
struct Deviation {
    double worst = 0.0;
    double tol = 0.0;
    std::string note;
};

using CheckFn = std::function<Deviation(std::mt19937_64&)>;

CheckResult run_check(const std::string& name, std::mt19937_64& rng, const CheckFn& fn) {
    CheckResult r;
    r.name = name;
    try {
        const Deviation d = fn(rng);
        r.passed = d.worst <= d.tol;
        r.detail = "worst " + sci(d.worst) + " vs tol " + sci(d.tol);
        if (!d.note.empty()) r.detail += "; " + d.note;
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("exception: ") + e.what();
    }
    return r;
}

// ---- linalg ----

Deviation check_observable_involution(std::mt19937_64& rng) {
    Deviation d{0.0, 1e-12, ""};
    const Mat2 id = identity2();
    for (int i = 0; i < 200; ++i) {
        const Mat2 a = bloch_to_observable(random_direction(rng));
        d.worst = std::max(d.worst, max_abs_diff(a * a, id));
    }
    return d;
}

Deviation check_kron_mixed_product(std::mt19937_64& rng) {
    Deviation d{0.0, 1e-12, ""};
    for (int i = 0; i < 200; ++i) {
        const Mat2 m1 = random_hermitian2(rng), m2 = random_hermitian2(rng);
        const Mat2 n1 = random_hermitian2(rng), n2 = random_hermitian2(rng);
        d.worst = std::max(d.worst,
                           max_abs_diff(kron(m1 * m2, n1 * n2), kron(m1, n1) * kron(m2, n2)));
    }
    return d;
}

Deviation check_trace_product_symmetry(std::mt19937_64& rng) {
    Deviation d{0.0, 1e-12, ""};
    for (int i = 0; i < 200; ++i) {
        const Mat4 a = kron(random_hermitian2(rng), random_hermitian2(rng)) +
                       kron(random_hermitian2(rng), random_hermitian2(rng));
        const Mat4 b = kron(random_hermitian2(rng), random_hermitian2(rng));
        d.worst = std::max(d.worst, std::abs(trace_product(a, b) - trace_product(b, a)));
    }
    return d;
}

Deviation check_min_eigenvalue(std::mt19937_64& rng) {
    Deviation d{0.0, 1e-12, ""};
    for (int i = 0; i < 200; ++i) {
        const Mat2 m = random_hermitian2(rng);
        // quadratic recomputed with the entry roles shuffled
        const double tr = m(1, 1).real() + m(0, 0).real();
        const double det = m(1, 1).real() * m(0, 0).real() - std::norm(m(1, 0));
        const double other = 0.5 * (tr - std::sqrt(std::max(tr * tr - 4.0 * det, 0.0)));
        d.worst = std::max(d.worst, std::abs(min_eigenvalue_hermitian2(m) - other));
    }
    return d;
}

// ---- povm ----

Deviation check_povm_forms(std::mt19937_64& rng) {
    Deviation d{0.0, 1e-12, ""};
    const Mat2 id = identity2();
    for (int i = 0; i < 300; ++i) {
        const BlochVector a = random_direction(rng);
        const PovmParams p = random_params(rng);
        const EffectPair eff = biased_povm(a, p);
        const ProjectorPair proj = projectors(a);

        // completeness
        d.worst = std::max(d.worst, max_abs_diff(eff.plus + eff.minus, id));
        // spectral form (1 +- alpha +- eta)/2 P+ + (1 +- alpha -+ eta)/2 P-
        const Mat2 spec_plus = 0.5 * (1.0 + p.alpha + p.eta) * proj.plus +
                               0.5 * (1.0 + p.alpha - p.eta) * proj.minus;
        const Mat2 spec_minus = 0.5 * (1.0 - p.alpha - p.eta) * proj.plus +
                                0.5 * (1.0 - p.alpha + p.eta) * proj.minus;
        d.worst = std::max(d.worst, max_abs_diff(eff.plus, spec_plus));
        d.worst = std::max(d.worst, max_abs_diff(eff.minus, spec_minus));
        // effect difference drives all correlations
        const Mat2 shift = p.alpha * id + p.eta * bloch_to_observable(a);
        d.worst = std::max(d.worst, max_abs_diff(eff.plus - eff.minus, shift));
        // positivity
        d.worst = std::max(d.worst, -min_eigenvalue_hermitian2(eff.plus));
        d.worst = std::max(d.worst, -min_eigenvalue_hermitian2(eff.minus));
    }
    return d;
}

Deviation check_unbiased_reduction(std::mt19937_64& rng) {
    Deviation d{0.0, 0.0, "alpha = 0 must match exactly"};
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const BlochVector a = random_direction(rng);
        const double eta = u01(rng);
        const EffectPair lhs = biased_povm(a, PovmParams{0.0, eta});
        const EffectPair rhs = unbiased_povm(a, eta);
        d.worst = std::max(d.worst, max_abs_diff(lhs.plus, rhs.plus));
        d.worst = std::max(d.worst, max_abs_diff(lhs.minus, rhs.minus));
    }
    return d;
}

// ---- quantum ----

Deviation check_factorization(std::mt19937_64& rng) {
    Deviation d{0.0, 1e-12, "unbiased correlation = etaA etaB x sharp"};
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const DensityMatrix rho = pure_state(2.0 * kPi * u01(rng));
        const BlochVector va = random_direction(rng), vb = random_direction(rng);
        const double ea = u01(rng), eb = u01(rng);
        const double unsharp = correlation(rho, unbiased_povm(va, ea), unbiased_povm(vb, eb));
        const double sharp = correlation(rho, unbiased_povm(va, 1.0), unbiased_povm(vb, 1.0));
        d.worst = std::max(d.worst, std::abs(unsharp - ea * eb * sharp));
    }
    return d;
}

Deviation check_bias_decomposition(std::mt19937_64& rng) {
    Deviation d{0.0, 1e-12, ""};
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const Mat2 id = identity2();
    for (int i = 0; i < 200; ++i) {
        const DensityMatrix rho = pure_state(2.0 * kPi * u01(rng));
        const BlochVector va = random_direction(rng), vb = random_direction(rng);
        const PovmParams pa = random_params(rng), pb = random_params(rng);
        const double full = correlation(rho, biased_povm(va, pa), biased_povm(vb, pb));
        const Mat2 oa = bloch_to_observable(va), ob = bloch_to_observable(vb);
        const double mean_b = trace_product(rho.matrix(), kron(id, ob));
        const double mean_a = trace_product(rho.matrix(), kron(oa, id));
        const double corr_ab = trace_product(rho.matrix(), kron(oa, ob));
        const double expected = pa.alpha * pb.alpha + pa.alpha * pb.eta * mean_b +
                                pa.eta * pb.alpha * mean_a + pa.eta * pb.eta * corr_ab;
        d.worst = std::max(d.worst, std::abs(full - expected));
    }
    return d;
}

Deviation check_closed_form_agreement(std::mt19937_64& rng) {
    Deviation d{0.0, 1e-10, ""};
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const MeasurementSettings settings = canonical_settings();
    for (int i = 0; i < 500; ++i) {
        const double theta = 2.0 * kPi * u01(rng);
        const PovmParams p = random_params(rng);
        const double matrix_path = chsh_value(pure_state(theta), settings, p, p);
        const double closed = closed_form_biased(theta, p.alpha, p.eta);
        d.worst = std::max(d.worst, std::abs(matrix_path - closed));
    }
    return d;
}

Deviation check_tsirelson_ceiling(std::mt19937_64& rng) {
    Deviation d{0.0, 2.0 * std::sqrt(2.0) + 1e-9, "|chsh| over random valid inputs"};
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const MeasurementSettings canonical = canonical_settings();
    for (int i = 0; i < 300; ++i) {
        const MeasurementSettings settings =
            (i % 2 == 0) ? canonical
                         : MeasurementSettings{random_direction(rng), random_direction(rng),
                                               random_direction(rng), random_direction(rng)};
        const DensityMatrix rho = (i % 3 == 0) ? werner_state(u01(rng))
                                               : pure_state(2.0 * kPi * u01(rng));
        const double v = chsh_value(rho, settings, random_params(rng), random_params(rng));
        d.worst = std::max(d.worst, std::abs(v));
    }
    return d;
}

Deviation check_werner_scaling(std::mt19937_64& rng) {
    Deviation d{0.0, 1e-10, ""};
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const MeasurementSettings settings = canonical_settings();
    for (int i = 0; i < 100; ++i) {
        const double p = u01(rng);
        const double eta = u01(rng);
        const double v = chsh_value(werner_state(p), settings, PovmParams{0.0, eta},
                                    PovmParams{0.0, eta});
        d.worst = std::max(d.worst, std::abs(v - p * closed_form_unbiased(kPi / 4.0, eta)));
    }
    return d;
}

// ---- lhv ----

Deviation check_lhv_closed_form_grid(std::mt19937_64&) {
    Deviation d{0.0, 1e-12, "alpha, eta grid step 0.01 over |alpha| + eta <= 1"};
    for (int ia = -100; ia <= 100; ++ia) {
        const double alpha = ia / 100.0;
        for (int ie = 0; ie <= 100; ++ie) {
            const double eta = ie / 100.0;
            if (std::abs(alpha) + eta > 1.0 + 1e-9) continue;
            const LhvBoundResult r = lhv_bound_bruteforce(alpha, eta);
            d.worst = std::max(d.worst, std::abs(r.bound - r.closed_form));
        }
    }
    return d;
}

Deviation check_lhv_reduction(std::mt19937_64&) {
    Deviation d{0.0, 1e-12, "bound(0, eta) = 2 eta^2; bound(0, 1) = 2"};
    for (int ie = 0; ie <= 100; ++ie) {
        const double eta = ie / 100.0;
        d.worst = std::max(d.worst,
                           std::abs(lhv_bound_bruteforce(0.0, eta).bound - 2.0 * eta * eta));
    }
    d.worst = std::max(d.worst, std::abs(lhv_bound_bruteforce(0.0, 1.0).bound - 2.0));
    return d;
}

Deviation check_lhv_sign_symmetry(std::mt19937_64& rng) {
    Deviation d{0.0, 0.0, "bound(-alpha, eta) = bound(alpha, eta) exactly"};
    for (int i = 0; i < 100; ++i) {
        const PovmParams p = random_params(rng);
        const LhvBoundResult pos = lhv_bound_bruteforce(std::abs(p.alpha), p.eta);
        const LhvBoundResult neg = lhv_bound_bruteforce(-std::abs(p.alpha), p.eta);
        d.worst = std::max(d.worst, std::abs(pos.bound - neg.bound));
        // every maximizer maps to a mirrored maximizer with a1 and b1 negated
        for (const DeterministicStrategy& s : pos.maximizing_strategies) {
            const bool found = std::any_of(
                neg.maximizing_strategies.begin(), neg.maximizing_strategies.end(),
                [&](const DeterministicStrategy& t) {
                    return t.a1 == -s.a1 && t.b1 == -s.b1;
                });
            if (!found) d.worst = std::max(d.worst, 1.0);
        }
    }
    return d;
}

Deviation check_lhv_extremality(std::mt19937_64& rng) {
    Deviation d{0.0, 1e-12, "interior response samples vs vertex maximum"};
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int block = 0; block < 20; ++block) {
        const PovmParams p = random_params(rng);
        const double vertex_max = lhv_bound_bruteforce(p.alpha, p.eta).bound;
        for (int i = 0; i < 1000; ++i) {
            const double v =
                response_chsh(u(rng), u(rng), u(rng), u(rng), p.alpha, p.eta);
            d.worst = std::max(d.worst, v - vertex_max);
        }
    }
    return d;
}

Deviation check_lhv_dominance(std::mt19937_64&) {
    Deviation d{0.0, 0.0, "2 (|alpha| + eta)^2 <= 2 on the valid triangle"};
    for (int ia = -100; ia <= 100; ++ia) {
        const double alpha = ia / 100.0;
        for (int ie = 0; ie <= 100; ++ie) {
            const double eta = ie / 100.0;
            if (std::abs(alpha) + eta > 1.0 + 1e-9) continue;
            const double s = std::abs(alpha) + eta;
            d.worst = std::max(d.worst, 2.0 * s * s - 2.0);
        }
    }
    return d;
}

// ---- analysis ----

Deviation check_region_classes(std::mt19937_64&) {
    Deviation d{0.0, 0.0, "no standard-only cell; alpha = 0 split at 2^(-1/4)"};
    const double threshold = std::pow(2.0, -0.25);
    const auto cells = scan_region(kPi / 4.0, 201, 201);
    for (const ScanCell& cell : cells) {
        if (!cell.feasible) continue;
        // standard violation without modified violation is impossible
        if (cell.delta_standard > kViolationEps && !(cell.delta_modified > kViolationEps)) {
            d.worst = 1.0;
        }
        if (cell.delta_modified + kViolationEps < cell.delta_standard) d.worst = 1.0;
        if (cell.alpha == 0.0) {
            const ViolationClass expected =
                cell.eta == 0.0 ? ViolationClass::None
                : cell.eta < threshold ? ViolationClass::ModifiedOnly
                                       : ViolationClass::Both;
            if (cell.cls != expected) d.worst = 1.0;
        }
    }
    return d;
}

Deviation check_critical_eta(std::mt19937_64&) {
    Deviation d{0.0, 1e-8, "critical eta at theta = pi/4, alpha = 0"};
    const auto eta = critical_eta_standard(kPi / 4.0, 0.0);
    d.worst = eta ? std::abs(*eta - std::pow(2.0, -0.25)) : 1.0;
    return d;
}

Deviation check_scan_recompute(std::mt19937_64& rng) {
    Deviation d{0.0, 1e-10, "5% subsample: closed form vs matrix path"};
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const MeasurementSettings settings = canonical_settings();
    const auto cells = scan_region(kPi / 4.0, 101, 101);
    for (const ScanCell& cell : cells) {
        if (!cell.feasible || u01(rng) > 0.05) continue;
        const PovmParams p{cell.alpha, cell.eta};
        const double matrix_path = chsh_value(pure_state(cell.theta), settings, p, p);
        d.worst = std::max(d.worst, std::abs(matrix_path - cell.quantum_value));
        // delta columns must recompute from the value columns
        d.worst = std::max(d.worst, std::abs(cell.delta_standard -
                                             (cell.quantum_value - cell.standard_bound)));
        d.worst = std::max(d.worst, std::abs(cell.delta_modified -
                                             (cell.quantum_value - cell.modified_bound)));
    }
    return d;
}

Deviation check_region_bruteforce_consistency(std::mt19937_64&) {
    Deviation d{0.0, 0.0, "closed-form region = brute-force region, cell for cell"};
    const auto cells = scan_region(kPi / 4.0, 51, 51);
    for (const ScanCell& cell : cells) {
        if (!cell.feasible) continue;
        const double brute = lhv_bound_bruteforce(cell.alpha, cell.eta).bound;
        const bool violates_closed = cell.delta_modified > kViolationEps;
        const bool violates_brute = (cell.quantum_value - brute) > kViolationEps;
        if (violates_closed != violates_brute) d.worst = 1.0;
    }
    return d;
}

}  // namespace

std::vector<CheckResult> run_verification(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::vector<std::pair<std::string, CheckFn>> checks = {
        {"linalg/observable-involution", check_observable_involution},
        {"linalg/kron-mixed-product", check_kron_mixed_product},
        {"linalg/trace-product-symmetry", check_trace_product_symmetry},
        {"linalg/min-eigenvalue-recompute", check_min_eigenvalue},
        {"povm/forms-and-positivity", check_povm_forms},
        {"povm/unbiased-reduction", check_unbiased_reduction},
        {"quantum/factorization", check_factorization},
        {"quantum/bias-decomposition", check_bias_decomposition},
        {"quantum/closed-form-agreement", check_closed_form_agreement},
        {"quantum/tsirelson-ceiling", check_tsirelson_ceiling},
        {"quantum/werner-scaling", check_werner_scaling},
        {"lhv/closed-form-grid", check_lhv_closed_form_grid},
        {"lhv/unbiased-reduction", check_lhv_reduction},
        {"lhv/sign-symmetry", check_lhv_sign_symmetry},
        {"lhv/extremality", check_lhv_extremality},
        {"lhv/dominance", check_lhv_dominance},
        {"analysis/region-classes", check_region_classes},
        {"analysis/critical-eta", check_critical_eta},
        {"analysis/scan-recompute", check_scan_recompute},
        {"analysis/region-bruteforce-consistency", check_region_bruteforce_consistency},
    };
    std::vector<CheckResult> results;
    results.reserve(checks.size());
    for (const auto& [name, fn] : checks) results.push_back(run_check(name, rng, fn));
    return results;
}

}  // namespace chsh
