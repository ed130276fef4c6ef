#include "qmac/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qmac/errors.hpp"

namespace qmac {

namespace {

constexpr double kPhaseTol = 1e-12;

void require_square(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) {
        throw NotSquareError("matrix is " + std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()) + ", expected square");
    }
}

void require_hermitian(const ComplexMatrix& m) {
    require_square(m);
    const double defect = hermiticity_defect(m);
    if (!(defect <= kHermitianTol)) {
        throw NotHermitianError("hermiticity defect " + std::to_string(defect) +
                                " exceeds tolerance");
    }
}

// Multiplies each column by a unit phase making its first component of
// modulus > kPhaseTol real-positive.
void fix_phases(ComplexMatrix& vectors) {
    for (Eigen::Index c = 0; c < vectors.cols(); ++c) {
        for (Eigen::Index r = 0; r < vectors.rows(); ++r) {
            const Complex z = vectors(r, c);
            if (std::abs(z) > kPhaseTol) {
                vectors.col(c) *= std::conj(z) / std::abs(z);
                break;
            }
        }
    }
}

bool column_lex_less(const ComplexMatrix& vectors, Eigen::Index a, Eigen::Index b) {
    for (Eigen::Index r = 0; r < vectors.rows(); ++r) {
        const Complex za = vectors(r, a);
        const Complex zb = vectors(r, b);
        if (za.real() != zb.real()) return za.real() < zb.real();
        if (za.imag() != zb.imag()) return za.imag() < zb.imag();
    }
    return false;
}

}  // namespace

bool all_finite(const ComplexMatrix& m) {
    return m.allFinite();
}

double hermiticity_defect(const ComplexMatrix& m) {
    if (m.size() == 0) return 0.0;
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

HermitianEig eig_hermitian(const ComplexMatrix& m) {
    require_hermitian(m);
    if (!all_finite(m)) {
        throw NotHermitianError("matrix has non-finite entries");
    }

    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
    if (solver.info() != Eigen::Success) {
        throw ComputationError("eigendecomposition failed to converge");
    }

    ComplexMatrix vectors = solver.eigenvectors();
    fix_phases(vectors);
    const Eigen::VectorXd values = solver.eigenvalues();

    std::vector<Eigen::Index> order(static_cast<size_t>(m.rows()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index a, Eigen::Index b) {
                         if (values[a] != values[b]) return values[a] > values[b];
                         return column_lex_less(vectors, a, b);
                     });

    HermitianEig out;
    out.eigenvalues.resize(m.rows());
    out.eigenvectors.resize(m.rows(), m.cols());
    for (Eigen::Index k = 0; k < m.rows(); ++k) {
        out.eigenvalues[k] = values[order[static_cast<size_t>(k)]];
        out.eigenvectors.col(k) = vectors.col(order[static_cast<size_t>(k)]);
    }
    return out;
}

ComplexMatrix func_on_support(const ComplexMatrix& m, MatrixFunc f,
                              double support_cutoff) {
    if (!(support_cutoff > 0)) {
        throw ComputationError("support_cutoff must be positive");
    }
    const HermitianEig eig = eig_hermitian(m);

    Eigen::VectorXd mapped(eig.eigenvalues.size());
    for (Eigen::Index k = 0; k < eig.eigenvalues.size(); ++k) {
        const double lam = eig.eigenvalues[k];
        if (lam < -kNegativeEigTol) {
            throw NegativeEigenvalueError("eigenvalue " + std::to_string(lam) +
                                          " below PSD tolerance");
        }
        if (lam <= support_cutoff) {
            mapped[k] = 0.0;
            continue;
        }
        switch (f) {
            case MatrixFunc::Log2: mapped[k] = std::log2(lam); break;
            case MatrixFunc::Sqrt: mapped[k] = std::sqrt(lam); break;
            case MatrixFunc::InvSqrt: mapped[k] = 1.0 / std::sqrt(lam); break;
        }
    }
    return eig.eigenvectors * mapped.asDiagonal() * eig.eigenvectors.adjoint();
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::pair<int, int> dims,
                            Subsystem keep) {
    const Eigen::Index da = dims.first;
    const Eigen::Index db = dims.second;
    if (da < 1 || db < 1 || m.rows() != m.cols() || m.rows() != da * db) {
        throw DimensionMismatchError("matrix dimension " + std::to_string(m.rows()) +
                                     " does not factor as " + std::to_string(da) +
                                     "*" + std::to_string(db));
    }
    require_hermitian(m);

    if (keep == Subsystem::A) {
        ComplexMatrix out = ComplexMatrix::Zero(da, da);
        for (Eigen::Index i = 0; i < da; ++i) {
            for (Eigen::Index j = 0; j < da; ++j) {
                Complex sum = 0.0;
                for (Eigen::Index k = 0; k < db; ++k) {
                    sum += m(i * db + k, j * db + k);
                }
                out(i, j) = sum;
            }
        }
        return out;
    }
    ComplexMatrix out = ComplexMatrix::Zero(db, db);
    for (Eigen::Index i = 0; i < db; ++i) {
        for (Eigen::Index j = 0; j < db; ++j) {
            Complex sum = 0.0;
            for (Eigen::Index k = 0; k < da; ++k) {
                sum += m(k * db + i, k * db + j);
            }
            out(i, j) = sum;
        }
    }
    return out;
}

}  // namespace qmac
