// Complex symmetric 3x3 / 4x4 strain polarization tensors, the
// Hilbert-Schmidt product on the traceless subspace, transverse-traceless
// gauge predicates, and the canonical basis tensors at k = e_z.
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>

namespace gwbundle {

using Complex = std::complex<double>;
using Matrix3c = Eigen::Matrix3cd;
using Matrix4c = Eigen::Matrix4cd;
using Vector3c = Eigen::Vector3cd;
using Vector3r = Eigen::Vector3d;
using Vector4c = Eigen::Vector4cd;
using Vector4r = Eigen::Vector4d;

/// Spatial polarization tensor. Symmetry is enforced on construction;
/// tracelessness and transversality are runtime predicates, see
/// validate_fiber().
class PolTensor {
public:
    PolTensor() : m_(Matrix3c::Zero()) {}
    explicit PolTensor(const Matrix3c& m) : m_(0.5 * (m + m.transpose())) {}

    const Matrix3c& mat() const { return m_; }
    Complex operator()(int i, int j) const { return m_(i, j); }

    PolTensor operator+(const PolTensor& o) const { return PolTensor(m_ + o.m_); }
    PolTensor operator-(const PolTensor& o) const { return PolTensor(m_ - o.m_); }
    PolTensor operator-() const { return PolTensor(-m_); }
    PolTensor operator*(Complex c) const { return PolTensor(Matrix3c(c * m_)); }
    friend PolTensor operator*(Complex c, const PolTensor& t) { return t * c; }

private:
    Matrix3c m_;
};

/// Spacetime polarization tensor, index order (0,1,2,3), signature (-,+,+,+).
class FourPolTensor {
public:
    FourPolTensor() : m_(Matrix4c::Zero()) {}
    explicit FourPolTensor(const Matrix4c& m) : m_(0.5 * (m + m.transpose())) {}

    /// Embed a spatial tensor with vanishing temporal row and column.
    static FourPolTensor embed(const PolTensor& a) {
        Matrix4c m = Matrix4c::Zero();
        m.block<3, 3>(1, 1) = a.mat();
        return FourPolTensor(m);
    }

    const Matrix4c& mat() const { return m_; }
    Complex operator()(int a, int b) const { return m_(a, b); }

    /// Spatial block.
    PolTensor spatial() const { return PolTensor(Matrix3c(m_.block<3, 3>(1, 1))); }

    /// Largest temporal entry, max over row/column 0.
    double temporal_defect() const {
        double d = 0.0;
        for (int a = 0; a < 4; ++a)
            d = std::max({d, std::abs(m_(a, 0)), std::abs(m_(0, a))});
        return d;
    }

private:
    Matrix4c m_;
};

/// Max-norm violations of the gauge conditions at a given wavevector.
struct GaugeReport {
    double symmetric_defect = 0.0;
    double trace_defect = 0.0;
    double transverse_defect = 0.0;
    double temporal_defect = 0.0;

    double max_defect() const {
        return std::max({symmetric_defect, trace_defect, transverse_defect,
                         temporal_defect});
    }
    bool within(double tol) const { return max_defect() <= tol; }
};

/// Positive-definite product (1/2) Tr(A^dagger B) on the traceless symmetric
/// subspace; conjugate-linear in the first argument.
inline Complex hs_inner(const PolTensor& a, const PolTensor& b) {
    return 0.5 * (a.mat().adjoint() * b.mat()).trace();
}

inline double hs_norm(const PolTensor& a) {
    return std::sqrt(std::abs(hs_inner(a, a)));
}

/// Plus polarization tensor at k = e_z: diag(1,-1,0).
inline PolTensor b_plus_z() {
    Matrix3c m = Matrix3c::Zero();
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    return PolTensor(m);
}

/// Cross polarization tensor at k = e_z.
inline PolTensor b_cross_z() {
    Matrix3c m = Matrix3c::Zero();
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return PolTensor(m);
}

/// Circular polarization tensors at k = e_z:
/// a_pm = (b_plus +- i b_cross)/sqrt(2), helicity +-2 eigentensors of
/// rotations about e_z.
inline PolTensor a_circ_z(int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("a_circ_z: sign must be +-1");
    const Complex i(0.0, 1.0);
    const double s = 1.0 / std::sqrt(2.0);
    return PolTensor(Matrix3c(s * (b_plus_z().mat() + double(sign) * i * b_cross_z().mat())));
}

inline PolTensor a_plus_z() { return a_circ_z(+1); }
inline PolTensor a_minus_z() { return a_circ_z(-1); }

struct StandardBases {
    PolTensor b_plus, b_cross, a_plus, a_minus;
};

inline StandardBases standard_bases() {
    return {b_plus_z(), b_cross_z(), a_plus_z(), a_minus_z()};
}

}  // namespace gwbundle
