#include "chsh/lhv.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace chsh {

namespace {

int check_sign(int s) {
    if (s != 1 && s != -1) {
        throw std::invalid_argument("strategy sign must be +1 or -1, got " +
                                    std::to_string(s));
    }
    return s;
}

double chsh_of_factors(double fa1, double fa2, double fb1, double fb2) {
    return fa1 * fb1 + fa1 * fb2 + fa2 * fb1 - fa2 * fb2;
}

}  // namespace

DeterministicStrategy DeterministicStrategy::from_index(int i) {
    auto bit = [i](int k) { return ((i >> k) & 1) ? 1 : -1; };
    return DeterministicStrategy{bit(0), bit(1), bit(2), bit(3)};
}

std::vector<DeterministicStrategy> all_strategies() {
    std::vector<DeterministicStrategy> s;
    s.reserve(16);
    for (int i = 0; i < 16; ++i) s.push_back(DeterministicStrategy::from_index(i));
    return s;
}

double strategy_correlation(int s_a, int s_b, double alpha, double eta) {
    PovmParams{alpha, eta}.validate();
    return (alpha + eta * check_sign(s_a)) * (alpha + eta * check_sign(s_b));
}

double strategy_chsh(const DeterministicStrategy& s, double alpha, double eta) {
    PovmParams{alpha, eta}.validate();
    check_sign(s.a1);
    check_sign(s.a2);
    check_sign(s.b1);
    check_sign(s.b2);
    return chsh_of_factors(alpha + eta * s.a1, alpha + eta * s.a2,
                           alpha + eta * s.b1, alpha + eta * s.b2);
}

double response_chsh(double t_a1, double t_a2, double t_b1, double t_b2,
                     double alpha, double eta) {
    PovmParams{alpha, eta}.validate();
    for (double t : {t_a1, t_a2, t_b1, t_b2}) {
        if (!(t >= -1.0 && t <= 1.0)) {
            throw std::invalid_argument("response expectation outside [-1, 1]");
        }
    }
    return chsh_of_factors(alpha + eta * t_a1, alpha + eta * t_a2,
                           alpha + eta * t_b1, alpha + eta * t_b2);
}

VertexMaximum lhv_vertex_maximum(PovmParams alice, PovmParams bob) {
    alice.validate();
    bob.validate();
    VertexMaximum result;
    result.bound = -std::numeric_limits<double>::infinity();
    for (const DeterministicStrategy& s : all_strategies()) {
        const double v = chsh_of_factors(
            alice.alpha + alice.eta * s.a1, alice.alpha + alice.eta * s.a2,
            bob.alpha + bob.eta * s.b1, bob.alpha + bob.eta * s.b2);
        if (v > result.bound) result.bound = v;
    }
    for (const DeterministicStrategy& s : all_strategies()) {
        const double v = chsh_of_factors(
            alice.alpha + alice.eta * s.a1, alice.alpha + alice.eta * s.a2,
            bob.alpha + bob.eta * s.b1, bob.alpha + bob.eta * s.b2);
        if (v >= result.bound - kLhvTol) result.maximizing_strategies.push_back(s);
    }
    return result;
}

LhvBoundResult lhv_bound_bruteforce(double alpha, double eta) {
    const PovmParams params{alpha, eta};
    VertexMaximum vm = lhv_vertex_maximum(params, params);
    const double closed = 2.0 * (std::abs(alpha) + eta) * (std::abs(alpha) + eta);
    if (std::abs(vm.bound - closed) > kLhvTol) {
        // The 16-vertex maximum must reproduce 2(|alpha|+eta)^2; anything
        // else means the strategy model is broken.
        throw std::logic_error("lhv_bound_bruteforce: vertex maximum " +
                               std::to_string(vm.bound) + " != closed form " +
                               std::to_string(closed));
    }
    return LhvBoundResult{vm.bound, std::move(vm.maximizing_strategies), closed};
}

}  // namespace chsh
