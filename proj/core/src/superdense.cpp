#include "qmac/superdense.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "qmac/errors.hpp"

namespace qmac {

namespace {

constexpr double kSchmidtNormTol = 1e-12;
constexpr double kUnitaryTol = 1e-10;

ComplexMatrix shift_matrix(int n) {
    ComplexMatrix x = ComplexMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) x((i + 1) % n, i) = 1.0;
    return x;
}

ComplexMatrix phase_matrix(int n) {
    ComplexMatrix z = ComplexMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        const double angle = 2.0 * std::numbers::pi * i / n;
        z(i, i) = Complex(std::cos(angle), std::sin(angle));
    }
    return z;
}

}  // namespace

void require_valid_schmidt(const SchmidtState& s) {
    if (s.amplitudes.empty()) {
        throw InvalidStateError("Schmidt state needs at least one amplitude");
    }
    double norm_sq = 0.0;
    for (double a : s.amplitudes) {
        if (!(a >= 0.0) || !std::isfinite(a)) {
            throw InvalidStateError("Schmidt amplitudes must be finite and nonnegative");
        }
        norm_sq += a * a;
    }
    if (std::abs(norm_sq - 1.0) > kSchmidtNormTol) {
        throw InvalidStateError("Schmidt amplitudes must satisfy sum a_i^2 = 1, got " +
                                std::to_string(norm_sq));
    }
}

void require_valid_unitary_ensemble(const UnitaryEnsemble& ens) {
    if (ens.unitaries.empty()) {
        throw InvalidStateError("unitary ensemble must be nonempty");
    }
    if (ens.weights.size() != ens.unitaries.size()) {
        throw InvalidDistributionError("one weight per unitary required");
    }
    const Eigen::Index n = ens.unitaries.front().rows();
    for (const auto& u : ens.unitaries) {
        if (u.rows() != n || u.cols() != n) {
            throw DimensionMismatchError("all unitaries must share one square dimension");
        }
        const double defect = (u.adjoint() * u - ComplexMatrix::Identity(n, n))
                                  .cwiseAbs()
                                  .maxCoeff();
        if (defect > kUnitaryTol) {
            throw InvalidStateError("matrix fails unitarity by " + std::to_string(defect));
        }
    }
    double total = 0.0;
    for (double w : ens.weights) {
        if (!(w >= 0.0) || !std::isfinite(w)) {
            throw InvalidDistributionError("weights must be finite and nonnegative");
        }
        total += w;
    }
    if (std::abs(total - 1.0) > kProbSumTol) {
        throw InvalidDistributionError("weights must sum to 1, got " + std::to_string(total));
    }
}

double entanglement_entropy(const SchmidtState& s) {
    require_valid_schmidt(s);
    std::vector<double> probs(s.amplitudes.size());
    for (size_t i = 0; i < probs.size(); ++i) probs[i] = s.amplitudes[i] * s.amplitudes[i];
    return shannon_entropy(probs);
}

UnitaryEnsemble pauli_ensemble(int n, bool include_shifts, bool include_phases) {
    if (n < 1) throw InvalidStateError("pauli_ensemble needs n >= 1");
    const ComplexMatrix x = shift_matrix(n);
    const ComplexMatrix z = phase_matrix(n);
    const int n_shift = include_shifts ? n : 1;
    const int n_phase = include_phases ? n : 1;

    UnitaryEnsemble out;
    ComplexMatrix xa = ComplexMatrix::Identity(n, n);
    for (int a = 0; a < n_shift; ++a) {
        ComplexMatrix xazb = xa;
        for (int b = 0; b < n_phase; ++b) {
            out.unitaries.push_back(xazb);
            xazb = xazb * z;
        }
        xa = x * xa;
    }
    out.weights.assign(out.unitaries.size(), 1.0 / static_cast<double>(out.unitaries.size()));
    return out;
}

UnitaryEnsemble permutation_phase_ensemble(int n, bool include_phases) {
    if (n < 1) throw InvalidStateError("permutation_phase_ensemble needs n >= 1");
    const ComplexMatrix z = phase_matrix(n);
    std::vector<int> indices(static_cast<size_t>(n));
    std::iota(indices.begin(), indices.end(), 0);

    UnitaryEnsemble out;
    do {
        ComplexMatrix perm = ComplexMatrix::Zero(n, n);
        for (int i = 0; i < n; ++i) perm(indices[static_cast<size_t>(i)], i) = 1.0;
        ComplexMatrix pzb = perm;
        const int n_phase = include_phases ? n : 1;
        for (int b = 0; b < n_phase; ++b) {
            out.unitaries.push_back(pzb);
            pzb = pzb * z;
        }
    } while (std::next_permutation(indices.begin(), indices.end()));
    out.weights.assign(out.unitaries.size(), 1.0 / static_cast<double>(out.unitaries.size()));
    return out;
}

SignalEnsemble superdense_ensemble(const SchmidtState& s, const UnitaryEnsemble& ens_a,
                                   const UnitaryEnsemble& ens_b) {
    require_valid_schmidt(s);
    require_valid_unitary_ensemble(ens_a);
    require_valid_unitary_ensemble(ens_b);
    const int n = s.local_dim();
    if (ens_a.unitaries.front().rows() != n || ens_b.unitaries.front().rows() != n) {
        throw DimensionMismatchError("unitary dimension must match the Schmidt local dimension");
    }

    SignalEnsemble e;
    e.dim = n * n;
    e.p = ens_a.weights;
    e.q = ens_b.weights;
    for (int a = 0; a < ens_a.size(); ++a) e.alphabet_a.push_back(std::to_string(a));
    for (int b = 0; b < ens_b.size(); ++b) e.alphabet_b.push_back(std::to_string(b));

    // (U (x) V)|psi> with |psi> = sum_i amp_i |i>|i>: column i of U (x) row
    // structure of V, assembled directly in the i*n+j composite index.
    for (const auto& u : ens_a.unitaries) {
        for (const auto& v : ens_b.unitaries) {
            ComplexVector state = ComplexVector::Zero(e.dim);
            for (int i = 0; i < n; ++i) {
                for (int row_a = 0; row_a < n; ++row_a) {
                    for (int row_b = 0; row_b < n; ++row_b) {
                        state(row_a * n + row_b) += s.amplitudes[static_cast<size_t>(i)] *
                                                    u(row_a, i) * v(row_b, i);
                    }
                }
            }
            e.states.push_back(std::move(state));
        }
    }
    require_valid_ensemble(e);
    return e;
}

SuperdenseReport superdense_rate_bounds(const SchmidtState& s, const UnitaryEnsemble& ens_a,
                                        const UnitaryEnsemble& ens_b) {
    const SignalEnsemble e = superdense_ensemble(s, ens_a, ens_b);
    SuperdenseReport out;
    out.profile = conditional_entropies(e);
    out.h_entanglement = entanglement_entropy(s);
    out.log2_n = std::log2(static_cast<double>(s.local_dim()));
    out.bound_single = out.log2_n + out.h_entanglement;
    out.bound_sum = 2.0 * out.log2_n;
    out.slack_alice = out.bound_single - out.profile.h_cond_alice;
    out.slack_bob = out.bound_single - out.profile.h_cond_bob;
    out.slack_sum = out.bound_sum - out.profile.h_joint;
    return out;
}

}  // namespace qmac
