#pragma once

#include <complex>

#include <Eigen/Core>

namespace magpump {

using cplx = std::complex<double>;

/// Complex matrix with inline storage for up to four ports. Avoids heap
/// traffic in the inner loops where millions of S-matrices are formed.
using PortMatrix =
    Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor, 4, 4>;

/// Port indices, zero-based. A two-port matrix only uses the first two.
enum Port : int { kLeftLead = 0, kRightLead = 1, kProbeA = 2, kProbeB = 3 };

/// Scattering matrix with element (out, in). For two ports the layout is
///
///     | r   t' |
///     | t   r' |
///
/// so s(1,0) is the left-to-right transmission amplitude.
class ScatterMatrix {
public:
    ScatterMatrix() = default;
    explicit ScatterMatrix(int dim) : m_(PortMatrix::Zero(dim, dim)) {}
    explicit ScatterMatrix(PortMatrix m) : m_(std::move(m)) {}

    int dim() const { return static_cast<int>(m_.rows()); }

    cplx operator()(int out, int in) const { return m_(out, in); }
    cplx& operator()(int out, int in) { return m_(out, in); }

    const PortMatrix& matrix() const { return m_; }
    PortMatrix& matrix() { return m_; }

    cplx r() const { return m_(0, 0); }
    cplx t() const { return m_(1, 0); }
    cplx t_prime() const { return m_(0, 1); }
    cplx r_prime() const { return m_(1, 1); }

    /// Probability |s(out,in)|^2.
    double probability(int out, int in) const { return std::norm(m_(out, in)); }

    /// max |(S S^dagger - 1)_ij|
    double unitarity_defect() const {
        const PortMatrix p = m_ * m_.adjoint();
        return (p - PortMatrix::Identity(dim(), dim())).cwiseAbs().maxCoeff();
    }

private:
    PortMatrix m_;
};

}  // namespace magpump
