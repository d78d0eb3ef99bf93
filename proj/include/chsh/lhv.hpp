#pragma once

#include <vector>

#include "chsh/povm.hpp"

namespace chsh {

inline constexpr double kLhvTol = 1e-12;  // brute force vs closed form slack

// One deterministic local response assignment: a sign per observable.
// Sign +1 means the ontic state answers +1 on the plus projector of that
// observable (and therefore 0 on the minus projector: the pair of
// projector responses is normalized, so a single sign fixes both).
// The POVM response is then the fixed convex combination of these
// projector responses; it is indeterministic for eta < 1 even though the
// underlying projector assignment is deterministic.
struct DeterministicStrategy {
    int a1, a2, b1, b2;

    static DeterministicStrategy from_index(int i);  // i in [0, 16)
    DeterministicStrategy negated() const { return {-a1, -a2, -b1, -b2}; }
};

std::vector<DeterministicStrategy> all_strategies();

struct LhvBoundResult {
    double bound;                                          // vertex maximum
    std::vector<DeterministicStrategy> maximizing_strategies;
    double closed_form;                                    // 2 (|alpha| + eta)^2
};

// Per-ontic-state correlation of one setting pair under a deterministic
// strategy: (alpha + eta s_a)(alpha + eta s_b). The factor alpha + eta s
// is the outcome expectation of the POVM response built from the sign s.
double strategy_correlation(int s_a, int s_b, double alpha, double eta);

// CHSH combination of the four strategy correlations. Expands to
//   eta^2 (s_a1 s_b1 + s_a1 s_b2 + s_a2 s_b1 - s_a2 s_b2)
//   + 2 alpha^2 + 2 alpha eta (s_a1 + s_b1).
double strategy_chsh(const DeterministicStrategy& s, double alpha, double eta);

// Multilinear extension of strategy_chsh to probabilistic projector
// responses: each t is an outcome expectation in [-1, 1] (t = 2q - 1 for
// response probability q). Multilinearity puts the maximum over [-1,1]^4
// at a vertex, so maximizing over the 16 deterministic strategies also
// covers every indeterministic response assignment.
double response_chsh(double t_a1, double t_a2, double t_b1, double t_b2,
                     double alpha, double eta);

// Maximum of strategy_chsh over all 16 strategies, with every maximizer.
// A mixture over ontic states averages strategy values, so its CHSH value
// never exceeds the best single strategy and the 16 vertices are all that
// needs searching. Checks the vertex maximum against the closed form
// 2 (|alpha| + eta)^2 and throws std::logic_error if they disagree beyond
// kLhvTol.
LhvBoundResult lhv_bound_bruteforce(double alpha, double eta);

// Vertex maximum when Alice and Bob use distinct parameters. No closed
// form is attached: none is known for the asymmetric case, so only the
// brute-force value is reported.
struct VertexMaximum {
    double bound;
    std::vector<DeterministicStrategy> maximizing_strategies;
};

VertexMaximum lhv_vertex_maximum(PovmParams alice, PovmParams bob);

}  // namespace chsh
