#pragma once

#include <vector>

#include "qmac/coding.hpp"
#include "qmac/region.hpp"

namespace qmac {

// Entropy accounting for an explicit codebook with equiprobable codewords.
//
// h_code is the entropy of rho_code = (1/MN) sum |S_{aa'}><S_{aa'}|;
// h_code_a_avg averages the entropies of the Alice-conditional block states
// rho_code^a = (1/N) sum_{a'} |S_{aa'}><S_{aa'}| and h_code_aprime_avg those
// of the Bob-conditional ones. per_position holds, for each letter slot, the
// EntropyProfile of the single-letter ensemble with the empirical letter
// frequencies of the codebook at that slot. Subadditivity makes each block
// entropy at most the matching per-position sum.
struct ConverseReport {
    double h_code = 0.0;
    double h_code_a_avg = 0.0;
    double h_code_aprime_avg = 0.0;
    std::vector<EntropyProfile> per_position;

    double sum_h_joint() const;       // sum_k per-position h_joint
    double sum_h_cond_alice() const;  // sum_k per-position h_cond_alice
    double sum_h_cond_bob() const;    // sum_k per-position h_cond_bob

    // Subadditivity slacks; all >= -1e-9 for any codebook:
    double slack_joint() const { return sum_h_joint() - h_code; }
    double slack_alice() const { return sum_h_cond_alice() - h_code_aprime_avg; }
    double slack_bob() const { return sum_h_cond_bob() - h_code_a_avg; }
};

ConverseReport codebook_entropies(const SignalEnsemble& e, const Codebook& cb,
                                  int dim_cap = kDefaultDimCap);

// Per-use rate ceilings from a converse report:
//   r1_max = mean_k h_cond_alice^(k), r2_max = mean_k h_cond_bob^(k),
//   rsum_max = mean_k h_joint^(k),
// together with the two outmost vertices of the box-plus-sum constraint and
// their membership in the pentagon of the averaged profile.
struct ConverseBounds {
    double r1_max = 0.0;
    double r2_max = 0.0;
    double rsum_max = 0.0;
    EntropyProfile averaged;
    RatePair vertex_alice;     // (r1_max, rsum_max - r1_max)
    RatePair vertex_bob;       // (rsum_max - r2_max, r2_max)
    bool vertices_in_pentagon = false;  // both within 1e-6
};

// Throws LengthMismatchError when l differs from report.per_position.size().
ConverseBounds converse_bounds(const ConverseReport& report, int l);

}  // namespace qmac
