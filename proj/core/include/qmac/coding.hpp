#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qmac/entropy.hpp"

namespace qmac {

inline constexpr double kDefaultDelta = 0.2;

using LetterString = std::vector<std::string>;

// A block code: M Alice strings and N Bob strings of common length L.
// Codewords are always taken equiprobable at 1/(M*N).
struct Codebook {
    int length_l = 0;
    std::vector<LetterString> alice_strings;
    std::vector<LetterString> bob_strings;

    int size_m() const { return static_cast<int>(alice_strings.size()); }
    int size_n() const { return static_cast<int>(bob_strings.size()); }
};

// Throws InvalidCodebookError / UnknownLetterError / DimensionCapError.
void require_valid_codebook(const SignalEnsemble& e, const Codebook& cb,
                            int dim_cap = kDefaultDimCap);

// d^l, guarded by the dimension cap. Throws DimensionCapError.
std::int64_t block_dimension(int d, int l, int dim_cap = kDefaultDimCap);

// Codebook size from a rate exponent: max(1, floor(2^{l*rate})).
int size_from_rate(double rate, int l);

// |S_{aa'}> = (x)_t |Psi_{a_t a'_t}>
ComplexVector codeword(const SignalEnsemble& e, const LetterString& a,
                       const LetterString& a_prime, int dim_cap = kDefaultDimCap);

// rho_a = (x)_t rho_{a_t}, Bob's letters averaged out position by position.
DensityMatrix conditional_product_state(const SignalEnsemble& e, const LetterString& a,
                                        int dim_cap = kDefaultDimCap);

// Projector onto the eigenvectors of rho_a whose eigenvalues lie strictly
// inside the typicality window
//   2^{-L(h_cond_bob + delta)} < p < 2^{-L(h_cond_bob - delta)}.
// kept_eigs lists (position in the descending spectrum, eigenvalue).
struct TypicalProjector {
    LetterString string_a;
    ComplexMatrix projector;
    std::vector<std::pair<int, double>> kept_eigs;
};

TypicalProjector typical_projector(const SignalEnsemble& e, const LetterString& a,
                                   double delta, int dim_cap = kDefaultDimCap);

// Diagnostics of the window: how much of rho_a the projector retains and the
// collision bound 2^{-L(h_cond_bob - 3*delta)} that the kept spectrum obeys.
struct TypicalityReport {
    double trace_kept = 0.0;      // tr(Pi rho_a Pi) = sum of kept eigenvalues
    double trace_kept_sq = 0.0;   // tr(Pi rho_a^2 Pi) = sum of their squares
    double collision_bound = 0.0; // 2^{-L(h_cond_bob - 3*delta)}
    int kept_count = 0;
};

TypicalityReport typicality_report(const SignalEnsemble& e, const LetterString& a,
                                   double delta, int dim_cap = kDefaultDimCap);

// Stage one of the compound decoder: the square-root measurement over the
// pooled typical eigenvector family of every codebook row,
//   Phi = sum_rows Pi_row,  A_row = Pi_row Phi^{-1/2}.
// completeness_defect is max(0, lambda_max(sum A^dag A - identity)) and is
// ~0 by construction.
struct FirstStagePovm {
    std::vector<ComplexMatrix> operators;       // one per Alice string, in order
    std::vector<TypicalProjector> projectors;   // matching typical projectors
    double completeness_defect = 0.0;
};

FirstStagePovm first_stage_povm(const SignalEnsemble& e, const Codebook& cb,
                                double delta, int dim_cap = kDefaultDimCap);

// Stage two: the pretty good measurement distinguishing the projected
// codewords {Pi_a |S_{aa'}>} over Bob's strings,
//   G_a = sum_{a'} Pi_a|S_{aa'}><S_{aa'}|Pi_a,
//   |eta_{a'|a}> = G_a^{-1/2} Pi_a |S_{aa'}>.
// Codewords annihilated by Pi_a yield zero vectors and count as errors.
std::vector<ComplexVector> second_stage_pgm(const SignalEnsemble& e, const Codebook& cb,
                                            const LetterString& a,
                                            const TypicalProjector& projector,
                                            int dim_cap = kDefaultDimCap);

// Exact two-stage error probability
//   P_E = 1 - (1/MN) sum_{a,a'} |<eta_{a'|a}| A_a |S_{aa'}>|^2
// with the full M x N success-probability table and the per-row errors
// P_{E,a} = 1 - (1/N) sum_{a'} success(a, a').
struct DecodingResult {
    double p_error = 0.0;
    Eigen::MatrixXd success;             // success(a, a'), M x N
    std::vector<double> p_error_per_a;   // length M
};

DecodingResult error_probability(const SignalEnsemble& e, const Codebook& cb,
                                 double delta, int dim_cap = kDefaultDimCap);

// Monte Carlo average of P_E over Bob's random codes: each trial draws N Bob
// strings i.i.d. from q (letters independent across positions) and evaluates
// error_probability against the fixed Alice strings. Trial t draws from
// trial_stream(seed, t), so the result is independent of scheduling.
struct RandomCodeStats {
    double mean = 0.0;
    double stddev = 0.0;            // sample standard deviation, 0 for trials=1
    std::vector<double> values;     // per-trial P_E, in trial order
};

RandomCodeStats random_code_average(const SignalEnsemble& e,
                                    const std::vector<LetterString>& alice_strings,
                                    int n, int l, double delta, int trials,
                                    std::uint64_t seed, int dim_cap = kDefaultDimCap,
                                    int threads = 1);

}  // namespace qmac
