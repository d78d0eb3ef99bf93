#include "chsh/povm.hpp"

#include <stdexcept>
#include <string>

namespace chsh {

void PovmParams::validate() const {
    if (!std::isfinite(alpha) || !std::isfinite(eta)) {
        throw std::invalid_argument("PovmParams: parameters must be finite");
    }
    if (eta < 0.0 || eta > 1.0) {
        throw std::invalid_argument("PovmParams: eta = " + std::to_string(eta) +
                                    " outside [0, 1]");
    }
    if (std::abs(alpha) + eta > 1.0 + kParamTol) {
        throw std::invalid_argument("PovmParams: |alpha| + eta = " +
                                    std::to_string(std::abs(alpha) + eta) +
                                    " exceeds 1; effects would not be positive");
    }
}

ProjectorPair projectors(const BlochVector& a) {
    const Mat2 obs = bloch_to_observable(a);
    const Mat2 id = identity2();
    return ProjectorPair{0.5 * (id + obs), 0.5 * (id - obs), a};
}

EffectPair unbiased_povm(const BlochVector& a, double eta) {
    return biased_povm(a, PovmParams{0.0, eta});
}

EffectPair biased_povm(const BlochVector& a, PovmParams params) {
    params.validate();
    const Mat2 id = identity2();
    // alpha I + eta a.sigma, the effect difference that drives every
    // correlation downstream.
    const Mat2 shift = params.alpha * id + params.eta * bloch_to_observable(a);
    return EffectPair{0.5 * (id + shift), 0.5 * (id - shift), params, a};
}

}  // namespace chsh
