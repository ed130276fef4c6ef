#pragma once

#include <string>
#include <vector>

#include "qmac/entropy.hpp"

namespace qmac {

// Bipartite pure state in Schmidt form, |psi> = sum_i amplitudes[i] |i>|i>,
// with nonnegative amplitudes whose squares sum to 1 within 1e-12.
struct SchmidtState {
    std::vector<double> amplitudes;

    int local_dim() const { return static_cast<int>(amplitudes.size()); }
};

// Throws InvalidStateError.
void require_valid_schmidt(const SchmidtState& s);

// Local encoding operations with a probability weight each.
struct UnitaryEnsemble {
    std::vector<ComplexMatrix> unitaries;
    std::vector<double> weights;

    int size() const { return static_cast<int>(unitaries.size()); }
};

// Unitarity within 1e-10, matching weight vector. Throws InvalidStateError /
// InvalidDistributionError.
void require_valid_unitary_ensemble(const UnitaryEnsemble& ens);

// Entropy of the squared Schmidt coefficients, in bits: the entanglement
// entropy of either marginal.
double entanglement_entropy(const SchmidtState& s);

// The generalized shift/phase family X^a Z^b with
//   X|i> = |i+1 mod n>,   Z|i> = e^{2 pi i i/n}|i>,
// a ranging over 0..n-1 when include_shifts (else only 0), likewise b for
// include_phases; uniform weights. For n=2 with both flags this is the four
// Pauli encodings {I, X, Z, XZ} of dense coding.
UnitaryEnsemble pauli_ensemble(int n, bool include_shifts, bool include_phases);

// The full permutation group on the Schmidt basis (optionally combined with
// the n phase rotations Z^b), uniform weights. n! * n matrices - small n only.
UnitaryEnsemble permutation_phase_ensemble(int n, bool include_phases);

// The two-sender ensemble induced by local encoding of the shared state:
// letter pair (a, b) sends (U_a (x) V_b)|psi> with probability
// weights_A[a] * weights_B[b]. Alphabets are the unitary indices as strings.
SignalEnsemble superdense_ensemble(const SchmidtState& s, const UnitaryEnsemble& ens_a,
                                   const UnitaryEnsemble& ens_b);

// Entropy profile of the induced ensemble against the entanglement-assisted
// ceilings: each conditional entropy is at most log2(N) + H_E and the joint
// entropy at most 2 log2(N). Slacks are bound minus achieved value.
struct SuperdenseReport {
    EntropyProfile profile;
    double h_entanglement = 0.0;
    double log2_n = 0.0;
    double bound_single = 0.0;  // log2(N) + H_E, ceiling for either sender
    double bound_sum = 0.0;     // 2 log2(N)
    double slack_alice = 0.0;
    double slack_bob = 0.0;
    double slack_sum = 0.0;
};

SuperdenseReport superdense_rate_bounds(const SchmidtState& s, const UnitaryEnsemble& ens_a,
                                        const UnitaryEnsemble& ens_b);

}  // namespace qmac
