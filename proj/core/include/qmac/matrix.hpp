#pragma once

#include <Eigen/Dense>
#include <complex>
#include <utility>
#include <vector>

namespace qmac {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// Tolerances used across the matrix engine.
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kSupportCutoff = 1e-12;
// Eigenvalues in [-kNegativeEigTol, 0) are treated as numerically zero.
inline constexpr double kNegativeEigTol = 1e-10;

bool all_finite(const ComplexMatrix& m);

// Max-abs deviation of m from its adjoint; 0 for a 0x0 matrix.
double hermiticity_defect(const ComplexMatrix& m);

// Full spectral decomposition of a Hermitian matrix.
//
// Eigenvalues are sorted descending. Each eigenvector is phase-fixed so that
// its first component of modulus > 1e-12 is real and positive; exact
// eigenvalue ties are broken by lexicographic order of the phase-fixed
// eigenvector entries (compared as (re, im) pairs). The result is therefore
// deterministic for identical input.
struct HermitianEig {
    Eigen::VectorXd eigenvalues;   // descending
    ComplexMatrix eigenvectors;    // orthonormal columns, column k <-> eigenvalues[k]
};

// Throws NotSquareError / NotHermitianError.
HermitianEig eig_hermitian(const ComplexMatrix& m);

enum class MatrixFunc { Log2, Sqrt, InvSqrt };

// Applies f to the eigenvalues of a Hermitian PSD matrix that exceed
// support_cutoff; eigenvalues at or below the cutoff map to 0 for every
// function tag. Eigenvalues below -kNegativeEigTol raise
// NegativeEigenvalueError.
ComplexMatrix func_on_support(const ComplexMatrix& m, MatrixFunc f,
                              double support_cutoff = kSupportCutoff);

// Kronecker product with the row-major composite index convention
// i = i_a * dim_b + i_b.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

enum class Subsystem { A, B };

// Reduction of a Hermitian matrix on a bipartite space of dimensions
// (dims.first, dims.second) to the kept subsystem. Trace preserving.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::pair<int, int> dims,
                            Subsystem keep);

}  // namespace qmac
