#pragma once

#include "chsh/linalg.hpp"

namespace chsh {

inline constexpr double kParamTol = 1e-12;  // slack on the |alpha| + eta <= 1 boundary

// Sharpness eta and biasedness alpha of a dichotomic spin POVM
//   Pi(+-) = (I +- (alpha I + eta a.sigma)) / 2.
// Validity needs 0 <= eta <= 1 and |alpha| + eta <= 1; the boundary
// |alpha| + eta = 1 is a valid POVM (one effect eigenvalue is exactly 0).
// Negative alpha is allowed. Validation happens where an EffectPair is
// built, which is the single choke point for the constraint.
struct PovmParams {
    double alpha = 0.0;
    double eta = 1.0;

    void validate() const;  // throws std::invalid_argument
};

// Sharp pair P(+-) = (I +- a.sigma)/2: idempotent, orthogonal, complete.
struct ProjectorPair {
    Mat2 plus;
    Mat2 minus;
    BlochVector direction;
};

// The two effects of a dichotomic POVM along `direction`, together with
// the parameters that produced them. Satisfies plus + minus = I,
// plus - minus = alpha I + eta a.sigma, and both effects positive.
struct EffectPair {
    Mat2 plus;
    Mat2 minus;
    PovmParams params;
    BlochVector direction;
};

ProjectorPair projectors(const BlochVector& a);

// Pi(+-) = (I +- eta a.sigma)/2, equivalently the convex combination
// ((1 +- eta)/2) P+ + ((1 -+ eta)/2) P-.
EffectPair unbiased_povm(const BlochVector& a, double eta);

// Pi(+-) = (I +- (alpha I + eta a.sigma))/2; effect eigenvalues are
// (1 +- alpha +- eta)/2 and (1 +- alpha -+ eta)/2.
EffectPair biased_povm(const BlochVector& a, PovmParams params);

}  // namespace chsh
