#include "chsh/linalg.hpp"

#include <stdexcept>
#include <string>

namespace chsh {

BlochVector::BlochVector(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {
    const double norm = std::sqrt(x * x + y * y + z * z);
    if (!std::isfinite(norm) || std::abs(norm - 1.0) > kBlochNormTol) {
        throw std::invalid_argument("BlochVector: norm " + std::to_string(norm) +
                                    " is not within " + std::to_string(kBlochNormTol) +
                                    " of 1");
    }
    x /= norm;
    y /= norm;
    z /= norm;
}

Mat2 bloch_to_observable(const BlochVector& a) {
    // a is unit by construction; the result is x sx + y sy + z sz.
    return Mat2{{cplx(a.z), cplx(a.x, -a.y), cplx(a.x, a.y), cplx(-a.z)}};
}

Mat4 kron(const Mat2& m, const Mat2& n) {
    Mat4 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) r(2 * i + k, 2 * j + l) = m(i, j) * n(k, l);
    return r;
}

double trace_product(const Mat4& a, const Mat4& b) {
    cplx t = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) t += a(i, k) * b(k, i);
    if (std::abs(t.imag()) >= kTraceImagTol) {
        throw std::invalid_argument("trace_product: Tr[ab] has imaginary residue " +
                                    std::to_string(t.imag()) +
                                    "; inputs are not both Hermitian");
    }
    return t.real();
}

double min_eigenvalue_hermitian2(const Mat2& m) {
    if (!is_hermitian(m)) {
        throw std::invalid_argument("min_eigenvalue_hermitian2: matrix is not Hermitian");
    }
    const double tr = m(0, 0).real() + m(1, 1).real();
    const double det = m(0, 0).real() * m(1, 1).real() - std::norm(m(0, 1));
    // tr^2 - 4 det = (l1 - l2)^2 >= 0 for Hermitian input; clamp rounding.
    const double disc = std::max(tr * tr - 4.0 * det, 0.0);
    return 0.5 * (tr - std::sqrt(disc));
}

}  // namespace chsh
