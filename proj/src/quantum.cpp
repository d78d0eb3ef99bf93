#include "chsh/quantum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace chsh {

namespace {

// Determinant of the submatrix picked out by row indices r and column
// indices c (1 to 4 of each), by Laplace expansion along the first row.
cplx det_sub(const Mat4& m, const std::vector<int>& r, const std::vector<int>& c) {
    const std::size_t n = r.size();
    if (n == 1) return m(r[0], c[0]);
    if (n == 2) return m(r[0], c[0]) * m(r[1], c[1]) - m(r[0], c[1]) * m(r[1], c[0]);
    cplx det = 0.0;
    double sign = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<int> rr(r.begin() + 1, r.end());
        std::vector<int> cc;
        for (std::size_t j = 0; j < n; ++j)
            if (j != k) cc.push_back(c[j]);
        det += sign * m(r[0], c[k]) * det_sub(m, rr, cc);
        sign = -sign;
    }
    return det;
}

cplx principal_minor(const Mat4& m, const std::vector<int>& idx) {
    return det_sub(m, idx, idx);
}

// Elementary symmetric functions e1..e4 of the eigenvalues, i.e. the sums
// of principal minors of each order. For a Hermitian matrix all roots are
// real, and then every eigenvalue is >= 0 iff all four are >= 0.
std::array<double, 4> char_poly_coefficients(const Mat4& m) {
    std::array<double, 4> e{};
    for (int i = 0; i < 4; ++i) e[0] += m(i, i).real();
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) e[1] += principal_minor(m, {i, j}).real();
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int k = j + 1; k < 4; ++k) e[2] += principal_minor(m, {i, j, k}).real();
    e[3] = principal_minor(m, {0, 1, 2, 3}).real();
    return e;
}

}  // namespace

DensityMatrix::DensityMatrix(const Mat4& m) : m_(m) {
    if (!is_hermitian(m, kDensityTol)) {
        throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
    }
    const cplx tr = trace(m);
    if (std::abs(tr - cplx(1.0)) > kDensityTol) {
        throw std::invalid_argument("DensityMatrix: trace " + std::to_string(tr.real()) +
                                    " is not 1");
    }
    const auto coeff = char_poly_coefficients(m);
    for (double c : coeff) {
        if (c < -kPsdTol) {
            throw std::invalid_argument(
                "DensityMatrix: matrix is not positive semidefinite "
                "(characteristic-polynomial coefficient " +
                std::to_string(c) + ")");
        }
    }
}

MeasurementSettings canonical_settings() {
    const double s = 1.0 / std::sqrt(2.0);
    return MeasurementSettings{BlochVector(0, 0, 1), BlochVector(1, 0, 0),
                               BlochVector(s, 0, s), BlochVector(-s, 0, s)};
}

DensityMatrix pure_state(double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    Mat4 m;
    m(0, 0) = c * c;
    m(0, 3) = c * s;
    m(3, 0) = c * s;
    m(3, 3) = s * s;
    return DensityMatrix(m);
}

DensityMatrix werner_state(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("werner_state: p = " + std::to_string(p) +
                                    " outside [0, 1]");
    }
    const Mat4 bell = pure_state(std::numbers::pi / 4.0).matrix();
    return DensityMatrix(p * bell + (0.25 * (1.0 - p)) * identity4());
}

double correlation(const DensityMatrix& rho, const EffectPair& alice,
                   const EffectPair& bob) {
    return trace_product(rho.matrix(),
                         kron(alice.plus - alice.minus, bob.plus - bob.minus));
}

double chsh_value(const DensityMatrix& rho, const MeasurementSettings& settings,
                  PovmParams alice, PovmParams bob) {
    const EffectPair a1 = biased_povm(settings.a1, alice);
    const EffectPair a2 = biased_povm(settings.a2, alice);
    const EffectPair b1 = biased_povm(settings.b1, bob);
    const EffectPair b2 = biased_povm(settings.b2, bob);
    return correlation(rho, a1, b1) + correlation(rho, a1, b2) +
           correlation(rho, a2, b1) - correlation(rho, a2, b2);
}

double closed_form_unbiased(double theta, double eta) {
    PovmParams{0.0, eta}.validate();
    return std::sqrt(2.0) * eta * eta * (1.0 + std::sin(2.0 * theta));
}

double closed_form_biased(double theta, double alpha, double eta) {
    PovmParams{alpha, eta}.validate();
    const double c = std::cos(2.0 * theta);
    const double s = std::sin(2.0 * theta);
    return std::sqrt(2.0) * eta * (alpha * c + eta * s + eta) +
           2.0 * alpha * (alpha + eta * c);
}

}  // namespace chsh
