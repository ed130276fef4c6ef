#pragma once

#include <string>
#include <vector>

#include "qmac/matrix.hpp"

namespace qmac {

inline constexpr double kUnitNormTol = 1e-10;
inline constexpr double kProbSumTol = 1e-12;
inline constexpr double kDensityTraceTol = 1e-10;

// Hermitian, PSD, unit-trace matrix. The constructor checks hermiticity and
// trace; positivity of the spectrum is checked wherever the matrix is
// eigendecomposed (and by is_valid() in full).
class DensityMatrix {
public:
    explicit DensityMatrix(ComplexMatrix m);

    const ComplexMatrix& mat() const { return mat_; }
    Eigen::Index dim() const { return mat_.rows(); }

    // Full invariant check including the PSD spectrum test.
    bool is_valid() const;

private:
    ComplexMatrix mat_;
};

enum class Sender { Alice, Bob };

// The two-sender signal model: one pure letter state per (alpha, beta) pair
// together with a product distribution p_alpha q_beta.
struct SignalEnsemble {
    std::vector<std::string> alphabet_a;
    std::vector<std::string> alphabet_b;
    int dim = 0;
    // Row-major letter-pair table: states[ia * |B| + ib].
    std::vector<ComplexVector> states;
    std::vector<double> p;
    std::vector<double> q;

    int size_a() const { return static_cast<int>(alphabet_a.size()); }
    int size_b() const { return static_cast<int>(alphabet_b.size()); }
    const ComplexVector& state(int ia, int ib) const {
        return states[static_cast<size_t>(ia) * alphabet_b.size() +
                      static_cast<size_t>(ib)];
    }

    // Throws UnknownLetterError.
    int index_a(const std::string& letter) const;
    int index_b(const std::string& letter) const;
};

// One invariant violation, as data rather than an exception.
struct EnsembleViolation {
    std::string what;
};

// Empty result means the ensemble is valid.
std::vector<EnsembleViolation> validate_ensemble(const SignalEnsemble& e);

void require_valid_ensemble(const SignalEnsemble& e);

// rho = sum_ab p_a q_b |Psi_ab><Psi_ab|
DensityMatrix joint_density(const SignalEnsemble& e);

// fix = Alice: state given Alice sent `letter` (average over Bob's letters).
// fix = Bob: state given Bob sent `letter` (average over Alice's letters).
DensityMatrix conditional_density(const SignalEnsemble& e, Sender fix,
                                  const std::string& letter);
DensityMatrix conditional_density(const SignalEnsemble& e, Sender fix, int letter_index);

}  // namespace qmac
