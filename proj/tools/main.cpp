// Command-line front end: quantum CHSH values for unsharp (biased and
// unbiased) spin POVMs, the matching local-hidden-variable bounds, the
// violation gaps, parameter-region scans and a self-verification suite.
// All quantum values use the canonical settings a1 = z, a2 = x,
// b1 = (z+x)/sqrt2, b2 = (z-x)/sqrt2.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "chsh/analysis.hpp"
#include "chsh/lhv.hpp"
#include "chsh/quantum.hpp"
#include "chsh/verify.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

// 12 significant digits everywhere, enough to re-derive the delta columns
// from the value columns.
std::string g12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string strategy_str(const chsh::DeterministicStrategy& s) {
    auto sign = [](int v) { return v > 0 ? std::string("+1") : std::string("-1"); };
    return "(" + sign(s.a1) + "," + sign(s.a2) + "," + sign(s.b1) + "," + sign(s.b2) + ")";
}

int with_output(const std::string& path, const std::function<void(std::ostream&)>& body) {
    if (path.empty()) {
        body(std::cout);
        return std::cout.good() ? 0 : 1;
    }
    std::ofstream out(path);
    if (!out) {
        std::cerr << "error: cannot open output file: " << path << "\n";
        return 1;
    }
    body(out);
    if (!out.good()) {
        std::cerr << "error: failed writing output file: " << path << "\n";
        return 1;
    }
    return 0;
}

// 16 complex entries as 32 whitespace-separated reals, row-major,
// real/imaginary pairs; validated as a density matrix on load.
chsh::DensityMatrix load_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open state file: " + path);
    std::vector<double> vals;
    double v = 0.0;
    while (in >> v) vals.push_back(v);
    if (!in.eof()) throw std::runtime_error("state file has non-numeric content: " + path);
    if (vals.size() != 32) {
        throw std::runtime_error("state file must hold 32 reals (16 complex entries, "
                                 "row-major, real imag pairs); found " +
                                 std::to_string(vals.size()));
    }
    chsh::Mat4 m;
    for (int i = 0; i < 16; ++i) m.e[i] = chsh::cplx(vals[2 * i], vals[2 * i + 1]);
    return chsh::DensityMatrix(m);
}

void write_scan_csv(std::ostream& out, const std::vector<chsh::ScanCell>& cells) {
    out << "alpha,eta,theta,quantum_value,standard_bound,modified_bound,"
           "delta_standard,delta_modified,feasible,class\n";
    for (const chsh::ScanCell& c : cells) {
        out << g12(c.alpha) << ',' << g12(c.eta) << ',' << g12(c.theta) << ','
            << g12(c.quantum_value) << ',' << g12(c.standard_bound) << ','
            << g12(c.modified_bound) << ',' << g12(c.delta_standard) << ','
            << g12(c.delta_modified) << ',' << (c.feasible ? 1 : 0) << ','
            << chsh::to_string(c.cls) << '\n';
    }
}

void write_scan_summary(std::ostream& out, const std::vector<chsh::ScanCell>& cells,
                        double theta, int steps) {
    int feasible = 0, none = 0, modified_only = 0, both = 0;
    const chsh::ScanCell* best = nullptr;
    for (const chsh::ScanCell& c : cells) {
        if (!c.feasible) continue;
        ++feasible;
        switch (c.cls) {
            case chsh::ViolationClass::None: ++none; break;
            case chsh::ViolationClass::ModifiedOnly: ++modified_only; break;
            case chsh::ViolationClass::Both: ++both; break;
        }
        if (!best || c.delta_modified > best->delta_modified) best = &c;
    }
    out << "scan: theta = " << g12(theta) << ", " << steps << " x " << steps << " grid\n"
        << "feasible cells:      " << feasible << " of " << cells.size() << "\n"
        << "class NONE:          " << none << "\n"
        << "class MODIFIED_ONLY: " << modified_only << "\n"
        << "class BOTH:          " << both << "\n";
    if (best) {
        out << "max delta_modified:  " << g12(best->delta_modified) << " at alpha = "
            << g12(best->alpha) << ", eta = " << g12(best->eta) << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"CHSH values, sharpness-dependent local bounds and violation regions "
                 "for unsharp spin measurements"};
    app.require_subcommand(1);

    double theta = kPi / 4.0;
    double theta_deg = 45.0;
    double alpha = 0.0;
    double eta = 1.0;
    double werner_p = 1.0;
    std::string state_file;
    std::string output_path;
    std::string format = "csv";
    int steps = 101;
    std::uint64_t seed = 20'240'817;

    auto add_theta = [&](CLI::App* sub) {
        auto* t = sub->add_option("--theta", theta, "State angle in radians")
                      ->capture_default_str();
        auto* td = sub->add_option("--theta-deg", theta_deg, "State angle in degrees");
        t->excludes(td);
        td->excludes(t);
        return std::pair{t, td};
    };
    auto add_output = [&](CLI::App* sub) {
        sub->add_option("-o,--output", output_path, "Write the report here instead of stdout");
    };

    CLI::App* value = app.add_subcommand(
        "value", "Quantum CHSH value (matrix path, and closed form for pure states)");
    auto [value_theta, value_theta_deg] = add_theta(value);
    value->add_option("--alpha", alpha, "Biasedness")->capture_default_str();
    value->add_option("--eta", eta, "Sharpness")->capture_default_str();
    auto* value_werner =
        value->add_option("--werner", werner_p, "Use the Werner state with this visibility");
    auto* value_file = value->add_option("--state-file", state_file,
                                         "Load the state from a file of 32 reals");
    value_werner->excludes(value_file)->excludes(value_theta)->excludes(value_theta_deg);
    value_file->excludes(value_werner)->excludes(value_theta)->excludes(value_theta_deg);
    add_output(value);

    CLI::App* bound =
        app.add_subcommand("bound", "Local bound: brute force over the 16 deterministic "
                                    "strategies, against the closed form");
    bound->add_option("--alpha", alpha, "Biasedness")->capture_default_str();
    bound->add_option("--eta", eta, "Sharpness")->capture_default_str();
    add_output(bound);

    CLI::App* delta = app.add_subcommand(
        "delta", "Violation gaps against the standard and modified bounds");
    add_theta(delta);
    delta->add_option("--alpha", alpha, "Biasedness")->capture_default_str();
    delta->add_option("--eta", eta, "Sharpness")->capture_default_str();
    add_output(delta);

    CLI::App* scan = app.add_subcommand(
        "scan", "Classify the (alpha, eta) grid at fixed theta; CSV or a text summary");
    add_theta(scan);
    scan->add_option("--steps", steps, "Grid points per axis")
        ->capture_default_str()
        ->check(CLI::Range(2, 100000));
    scan->add_option("--format", format, "csv | text")
        ->capture_default_str()
        ->check(CLI::IsMember({"csv", "text"}));
    add_output(scan);

    CLI::App* thresholds = app.add_subcommand(
        "thresholds", "Critical sharpness for the standard bound and the largest "
                      "violating biasedness for the modified bound");
    add_theta(thresholds);
    thresholds->add_option("--alpha", alpha, "Biasedness")->capture_default_str();
    add_output(thresholds);

    CLI::App* verify =
        app.add_subcommand("verify", "Run the full invariant suite (exit 2 on failure)");
    verify->add_option("--seed", seed, "Seed for the randomized sweeps")
        ->capture_default_str();
    add_output(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (value->count("--theta-deg") || delta->count("--theta-deg") ||
        scan->count("--theta-deg") || thresholds->count("--theta-deg")) {
        theta = theta_deg * kPi / 180.0;
    }

    try {
        const chsh::PovmParams params{alpha, eta};
        const chsh::MeasurementSettings settings = chsh::canonical_settings();

        if (app.got_subcommand(value)) {
            params.validate();
            const bool is_pure = !(*value_werner) && !(*value_file);
            const chsh::DensityMatrix rho =
                *value_werner ? chsh::werner_state(werner_p)
                : *value_file ? load_state_file(state_file)
                              : chsh::pure_state(theta);
            const double matrix_path = chsh::chsh_value(rho, settings, params, params);
            return with_output(output_path, [&](std::ostream& out) {
                if (*value_werner) {
                    out << "state: werner(p = " << g12(werner_p) << ")\n";
                } else if (*value_file) {
                    out << "state: file " << state_file << "\n";
                } else {
                    out << "state: pure(theta = " << g12(theta) << ")\n";
                }
                out << "povm:  alpha = " << g12(alpha) << ", eta = " << g12(eta) << "\n";
                out << "chsh (matrix path): " << g12(matrix_path) << "\n";
                if (is_pure) {
                    const double closed = chsh::closed_form_biased(theta, alpha, eta);
                    out << "chsh (closed form): " << g12(closed) << "\n";
                    out << "difference:         " << g12(matrix_path - closed) << "\n";
                } else {
                    out << "chsh (closed form): n/a (closed forms cover pure states)\n";
                }
            });
        }

        if (app.got_subcommand(bound)) {
            const chsh::LhvBoundResult r = chsh::lhv_bound_bruteforce(alpha, eta);
            return with_output(output_path, [&](std::ostream& out) {
                out << "lhv bound for alpha = " << g12(alpha) << ", eta = " << g12(eta)
                    << "\n";
                out << "brute force: " << g12(r.bound) << "\n";
                out << "closed form: " << g12(r.closed_form)
                    << "   [2 (|alpha| + eta)^2]\n";
                out << "maximizers (" << r.maximizing_strategies.size()
                    << "), as (a1,a2,b1,b2):";
                for (const auto& s : r.maximizing_strategies) out << " " << strategy_str(s);
                out << "\n";
            });
        }

        if (app.got_subcommand(delta)) {
            const double quantum = chsh::closed_form_biased(theta, alpha, eta);
            const double d_std = chsh::delta_standard_biased(theta, alpha, eta);
            const double d_mod = chsh::delta_modified_biased(theta, alpha, eta);
            return with_output(output_path, [&](std::ostream& out) {
                const double s = std::abs(alpha) + eta;
                out << "theta = " << g12(theta) << ", alpha = " << g12(alpha)
                    << ", eta = " << g12(eta) << "\n";
                out << "quantum value:  " << g12(quantum) << "\n";
                out << "delta standard: " << g12(d_std) << "   (bound 2)\n";
                out << "delta modified: " << g12(d_mod) << "   (bound "
                    << g12(2.0 * s * s) << ")\n";
                out << "class:          " << chsh::to_string(chsh::classify(d_std, d_mod))
                    << "\n";
            });
        }

        if (app.got_subcommand(scan)) {
            const auto cells = chsh::scan_region(theta, steps, steps);
            return with_output(output_path, [&](std::ostream& out) {
                if (format == "csv") {
                    write_scan_csv(out, cells);
                } else {
                    write_scan_summary(out, cells, theta, steps);
                }
            });
        }

        if (app.got_subcommand(thresholds)) {
            const auto eta_crit = chsh::critical_eta_standard(theta, alpha);
            const double alpha_max = chsh::max_alpha_modified(theta);
            return with_output(output_path, [&](std::ostream& out) {
                out << "theta = " << g12(theta) << ", alpha = " << g12(alpha) << "\n";
                out << "critical eta (standard bound): "
                    << (eta_crit ? g12(*eta_crit) : std::string("none")) << "\n";
                out << "max alpha (modified bound):    " << g12(alpha_max) << "\n";
            });
        }

        if (app.got_subcommand(verify)) {
            const auto results = chsh::run_verification(seed);
            int failed = 0;
            const int rc = with_output(output_path, [&](std::ostream& out) {
                for (const chsh::CheckResult& r : results) {
                    if (!r.passed) ++failed;
                    out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.detail
                        << ")\n";
                }
                out << (results.size() - failed) << "/" << results.size()
                    << " checks passed\n";
            });
            if (rc != 0) return rc;
            return failed == 0 ? 0 : 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
