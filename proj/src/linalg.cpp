#include "sicrank/linalg.hpp"

#include <Eigen/Eigenvalues>

#include <stdexcept>

namespace sicrank {

HermitianEigen hermitian_eigen(const ComplexMatrix& m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("hermitian_eigen: matrix is not square");
    const ComplexMatrix h = (m + m.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("hermitian_eigen: decomposition failed");
    return {es.eigenvalues(), es.eigenvectors()};
}

double max_abs(const ComplexMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double hermiticity_residual(const ComplexMatrix& m) { return max_abs(m - m.adjoint()); }

ComplexMatrix kronecker(const ComplexMatrix& a, const ComplexMatrix& b)
{
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

ComplexMatrix ray_projector(const ComplexVector& v)
{
    const double norm2 = v.squaredNorm();
    if (norm2 == 0.0)
        throw std::invalid_argument("ray_projector: zero vector");
    return v * v.adjoint() / norm2;
}

} // namespace sicrank
