#pragma once

#include <Eigen/Dense>

#include <complex>

namespace sicrank {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;

/// Eigenvalues ascending, eigenvectors as orthonormal columns.
struct HermitianEigen {
    Eigen::VectorXd values;
    ComplexMatrix vectors;
};

/// Spectral decomposition of the Hermitian part of m.
HermitianEigen hermitian_eigen(const ComplexMatrix& m);

double max_abs(const ComplexMatrix& m);
double hermiticity_residual(const ComplexMatrix& m);

ComplexMatrix kronecker(const ComplexMatrix& a, const ComplexMatrix& b);

/// |v><v| / <v|v>.
ComplexMatrix ray_projector(const ComplexVector& v);

} // namespace sicrank
