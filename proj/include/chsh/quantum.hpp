#pragma once

#include "chsh/linalg.hpp"
#include "chsh/povm.hpp"

namespace chsh {

inline constexpr double kDensityTol = 1e-12;  // Hermiticity and trace slack
inline constexpr double kPsdTol = 1e-10;      // eigenvalues may dip to -kPsdTol

// Two-qubit state. Construction validates Hermiticity, unit trace and
// positive semidefiniteness (via the characteristic-polynomial sign
// conditions), so a DensityMatrix is valid wherever it flows.
class DensityMatrix {
  public:
    explicit DensityMatrix(const Mat4& m);

    const Mat4& matrix() const { return m_; }

  private:
    Mat4 m_;
};

// The four measurement directions of one CHSH run.
struct MeasurementSettings {
    BlochVector a1, a2, b1, b2;
};

// a1 = z, a2 = x, b1 = (z+x)/sqrt2, b2 = (z-x)/sqrt2. All closed forms
// below assume these settings.
MeasurementSettings canonical_settings();

// |psi><psi| with |psi> = cos(theta)|00> + sin(theta)|11>.
DensityMatrix pure_state(double theta);

// p |Bell><Bell| + (1-p) I/4 with the theta = pi/4 Bell state.
DensityMatrix werner_state(double p);

// sum_{a,b = +-1} a b Tr[rho (E_a x F_b)] = Tr[rho (E+ - E-) x (F+ - F-)];
// always in [-1, 1].
double correlation(const DensityMatrix& rho, const EffectPair& alice,
                   const EffectPair& bob);

// <A1B1> + <A1B2> + <A2B1> - <A2B2> with each side measuring POVMs of the
// given parameters along its settings. Alice and Bob may use distinct
// parameters; the closed forms below cover only the symmetric case.
double chsh_value(const DensityMatrix& rho, const MeasurementSettings& settings,
                  PovmParams alice, PovmParams bob);

// sqrt2 eta^2 (1 + sin 2theta): the quantum CHSH value of pure_state(theta)
// at canonical settings with symmetric unbiased POVMs.
double closed_form_unbiased(double theta, double eta);

// sqrt2 eta (alpha cos 2theta + eta sin 2theta + eta)
//   + 2 alpha (alpha + eta cos 2theta): same, with biased POVMs.
double closed_form_biased(double theta, double alpha, double eta);

}  // namespace chsh
