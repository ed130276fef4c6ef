#pragma once

#include <span>

#include "qmac/ensemble.hpp"

namespace qmac {

inline constexpr int kDefaultDimCap = 4096;

// Conditional Von Neumann entropies of a two-sender ensemble, in bits.
//   h_cond_alice = sum_b q_b H(rho_b)   (bounds Alice's rate)
//   h_cond_bob   = sum_a p_a H(rho_a)   (bounds Bob's rate)
struct EntropyProfile {
    double h_joint = 0.0;
    double h_cond_alice = 0.0;
    double h_cond_bob = 0.0;
};

// Throws InvalidProfileError if the concavity bounds (h_cond <= h_joint) or
// the superadditivity bound (h_cond_alice + h_cond_bob >= h_joint) fail
// beyond 1e-9.
void require_valid_profile(const EntropyProfile& profile);

// -sum p log2 p with 0 log 0 = 0. Throws InvalidDistributionError.
double shannon_entropy(std::span<const double> dist);

// -sum lambda log2 lambda over eigenvalues above the support cutoff.
double von_neumann_entropy(const DensityMatrix& rho);

EntropyProfile conditional_entropies(const SignalEnsemble& e);

// H(sum w_i sigma_i) - sum w_i H(sigma_i)
double holevo_information(std::span<const DensityMatrix> states,
                          std::span<const double> weights);

// Explicit construction of the classically-flagged extension
//   rho_ext = sum_ab p_a q_b |Psi_ab><Psi_ab| (x) |a><a| (x) |b><b|
// and its marginals, with the entropy identities that make the
// strong-subadditivity argument for h_cond_alice + h_cond_bob >= h_joint
// fully numerical.
struct SsaWitnessReport {
    double h_full = 0.0;         // H of the d*|A|*|B| extension
    double h_drop_b_flag = 0.0;  // flag register B traced out
    double h_drop_a_flag = 0.0;  // flag register A traced out
    double h_signal = 0.0;       // both flags traced out (= H(rho))
    // Checked identities, reported as absolute deviations:
    double id_full_dev = 0.0;    // |h_full - (H(p) + H(q))|
    double id_drop_b_dev = 0.0;  // |h_drop_b_flag - (H(p) + h_cond_bob)|
    double id_drop_a_dev = 0.0;  // |h_drop_a_flag - (H(q) + h_cond_alice)|
    // h_drop_b_flag + h_drop_a_flag - h_full - h_signal  (>= 0 by SSA)
    double ssa_slack = 0.0;
};

// Throws DimensionCapError when d*|A|*|B| exceeds dim_cap.
SsaWitnessReport ssa_witness_check(const SignalEnsemble& e, int dim_cap = kDefaultDimCap);

}  // namespace qmac
