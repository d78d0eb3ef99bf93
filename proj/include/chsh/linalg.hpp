#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace chsh {

using cplx = std::complex<double>;

inline constexpr double kHermitianTol = 1e-12;  // entrywise Hermiticity slack
inline constexpr double kTraceImagTol = 1e-10;  // allowed imaginary residue in Tr[ab]
inline constexpr double kBlochNormTol = 1e-6;   // accepted drift of |a| from 1

// Everything in this problem lives in 2x2 (one qubit) or 4x4 (qubit pair)
// complex matrices, so both are fixed-size value types, row-major, copied
// freely. No general N x N machinery.
struct Mat2 {
    std::array<cplx, 4> e{};

    cplx& operator()(int r, int c) { return e[2 * r + c]; }
    const cplx& operator()(int r, int c) const { return e[2 * r + c]; }
};

struct Mat4 {
    std::array<cplx, 16> e{};

    cplx& operator()(int r, int c) { return e[4 * r + c]; }
    const cplx& operator()(int r, int c) const { return e[4 * r + c]; }
};

inline Mat2 operator+(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (int i = 0; i < 4; ++i) r.e[i] = a.e[i] + b.e[i];
    return r;
}

inline Mat2 operator-(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (int i = 0; i < 4; ++i) r.e[i] = a.e[i] - b.e[i];
    return r;
}

inline Mat2 operator*(double s, const Mat2& a) {
    Mat2 r;
    for (int i = 0; i < 4; ++i) r.e[i] = s * a.e[i];
    return r;
}

inline Mat2 operator*(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
    return r;
}

inline Mat4 operator+(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (int i = 0; i < 16; ++i) r.e[i] = a.e[i] + b.e[i];
    return r;
}

inline Mat4 operator-(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (int i = 0; i < 16; ++i) r.e[i] = a.e[i] - b.e[i];
    return r;
}

inline Mat4 operator*(double s, const Mat4& a) {
    Mat4 r;
    for (int i = 0; i < 16; ++i) r.e[i] = s * a.e[i];
    return r;
}

inline Mat4 operator*(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            cplx s = 0.0;
            for (int k = 0; k < 4; ++k) s += a(i, k) * b(k, j);
            r(i, j) = s;
        }
    return r;
}

inline Mat2 adjoint(const Mat2& a) {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r(i, j) = std::conj(a(j, i));
    return r;
}

inline Mat4 adjoint(const Mat4& a) {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r(i, j) = std::conj(a(j, i));
    return r;
}

inline cplx trace(const Mat2& a) { return a(0, 0) + a(1, 1); }

inline cplx trace(const Mat4& a) { return a(0, 0) + a(1, 1) + a(2, 2) + a(3, 3); }

inline double max_abs_diff(const Mat2& a, const Mat2& b) {
    double m = 0.0;
    for (int i = 0; i < 4; ++i) m = std::max(m, std::abs(a.e[i] - b.e[i]));
    return m;
}

inline double max_abs_diff(const Mat4& a, const Mat4& b) {
    double m = 0.0;
    for (int i = 0; i < 16; ++i) m = std::max(m, std::abs(a.e[i] - b.e[i]));
    return m;
}

inline bool is_hermitian(const Mat2& a, double tol = kHermitianTol) {
    return max_abs_diff(a, adjoint(a)) <= tol;
}

inline bool is_hermitian(const Mat4& a, double tol = kHermitianTol) {
    return max_abs_diff(a, adjoint(a)) <= tol;
}

inline Mat2 identity2() { return Mat2{{cplx(1), cplx(0), cplx(0), cplx(1)}}; }

inline Mat4 identity4() {
    Mat4 r;
    for (int i = 0; i < 4; ++i) r(i, i) = 1.0;
    return r;
}

inline Mat2 pauli_x() { return Mat2{{cplx(0), cplx(1), cplx(1), cplx(0)}}; }

inline Mat2 pauli_y() { return Mat2{{cplx(0), cplx(0, -1), cplx(0, 1), cplx(0)}}; }

inline Mat2 pauli_z() { return Mat2{{cplx(1), cplx(0), cplx(0), cplx(-1)}}; }

// Unit vector on the Bloch sphere, fixing the spin observable a.sigma.
// Construction normalizes inputs whose norm drifted from 1 by at most
// kBlochNormTol and rejects anything farther off.
struct BlochVector {
    double x, y, z;

    BlochVector(double x, double y, double z);
};

inline double dot(const BlochVector& a, const BlochVector& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

// a.sigma = x sigma_x + y sigma_y + z sigma_z: Hermitian, traceless,
// eigenvalues +-1.
Mat2 bloch_to_observable(const BlochVector& a);

// Kronecker product; Alice's operator acts on the first tensor factor.
Mat4 kron(const Mat2& m, const Mat2& n);

// Re Tr[a b] for Hermitian a, b. Throws if the imaginary residue of the
// trace exceeds kTraceImagTol, which indicates non-Hermitian input.
double trace_product(const Mat4& a, const Mat4& b);

// Smaller eigenvalue of a Hermitian 2x2 matrix, in closed form as the
// smaller root of lambda^2 - tr lambda + det.
double min_eigenvalue_hermitian2(const Mat2& m);

}  // namespace chsh
