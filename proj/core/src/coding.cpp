#include "qmac/coding.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "qmac/errors.hpp"
#include "qmac/rng.hpp"

namespace qmac {

namespace {

constexpr double kZeroVectorTol = 1e-12;

void require_string_letters(const SignalEnsemble& e, const LetterString& s, Sender side) {
    for (const auto& letter : s) {
        if (side == Sender::Alice) {
            (void)e.index_a(letter);
        } else {
            (void)e.index_b(letter);
        }
    }
}

Eigen::MatrixXd success_matrix(const SignalEnsemble& e, const Codebook& cb,
                               const FirstStagePovm& first, int dim_cap) {
    const int m = cb.size_m();
    const int n = cb.size_n();
    Eigen::MatrixXd success(m, n);
    for (int a = 0; a < m; ++a) {
        const auto etas = second_stage_pgm(e, cb, cb.alice_strings[static_cast<size_t>(a)],
                                           first.projectors[static_cast<size_t>(a)], dim_cap);
        for (int ap = 0; ap < n; ++ap) {
            const ComplexVector word =
                codeword(e, cb.alice_strings[static_cast<size_t>(a)],
                         cb.bob_strings[static_cast<size_t>(ap)], dim_cap);
            const Complex amp = etas[static_cast<size_t>(ap)].adjoint() *
                                (first.operators[static_cast<size_t>(a)] * word);
            success(a, ap) = std::norm(amp);
        }
    }
    return success;
}

}  // namespace

std::int64_t block_dimension(int d, int l, int dim_cap) {
    if (d < 1 || l < 1) {
        throw InvalidCodebookError("block dimension needs d >= 1 and l >= 1");
    }
    std::int64_t dim = 1;
    for (int t = 0; t < l; ++t) {
        dim *= d;
        if (dim > dim_cap) {
            throw DimensionCapError("d^l = " + std::to_string(d) + "^" + std::to_string(l) +
                                    " exceeds the dimension cap " + std::to_string(dim_cap));
        }
    }
    return dim;
}

int size_from_rate(double rate, int l) {
    if (l < 1 || !std::isfinite(rate)) {
        throw InvalidCodebookError("size_from_rate needs l >= 1 and a finite rate");
    }
    const double raw = std::floor(std::exp2(static_cast<double>(l) * rate));
    return std::max(1, static_cast<int>(std::min(raw, 1e18)));
}

void require_valid_codebook(const SignalEnsemble& e, const Codebook& cb, int dim_cap) {
    if (cb.length_l < 1) {
        throw InvalidCodebookError("codebook length must be >= 1");
    }
    if (cb.size_m() < 1 || cb.size_n() < 1) {
        throw InvalidCodebookError("codebook needs at least one string per sender");
    }
    for (const auto& s : cb.alice_strings) {
        if (static_cast<int>(s.size()) != cb.length_l) {
            throw InvalidCodebookError("Alice string length differs from length_l");
        }
        require_string_letters(e, s, Sender::Alice);
    }
    for (const auto& s : cb.bob_strings) {
        if (static_cast<int>(s.size()) != cb.length_l) {
            throw InvalidCodebookError("Bob string length differs from length_l");
        }
        require_string_letters(e, s, Sender::Bob);
    }
    (void)block_dimension(e.dim, cb.length_l, dim_cap);
}

ComplexVector codeword(const SignalEnsemble& e, const LetterString& a,
                       const LetterString& a_prime, int dim_cap) {
    if (a.size() != a_prime.size() || a.empty()) {
        throw LengthMismatchError("codeword needs equal-length nonempty sequences");
    }
    (void)block_dimension(e.dim, static_cast<int>(a.size()), dim_cap);
    ComplexVector word = e.state(e.index_a(a[0]), e.index_b(a_prime[0]));
    for (size_t t = 1; t < a.size(); ++t) {
        const ComplexVector& letter = e.state(e.index_a(a[t]), e.index_b(a_prime[t]));
        ComplexVector next(word.size() * letter.size());
        for (Eigen::Index i = 0; i < word.size(); ++i) {
            next.segment(i * letter.size(), letter.size()) = word(i) * letter;
        }
        word = std::move(next);
    }
    return word;
}

DensityMatrix conditional_product_state(const SignalEnsemble& e, const LetterString& a,
                                        int dim_cap) {
    if (a.empty()) {
        throw LengthMismatchError("conditional_product_state needs a nonempty sequence");
    }
    (void)block_dimension(e.dim, static_cast<int>(a.size()), dim_cap);
    ComplexMatrix rho = conditional_density(e, Sender::Alice, a[0]).mat();
    for (size_t t = 1; t < a.size(); ++t) {
        rho = tensor_product(rho, conditional_density(e, Sender::Alice, a[t]).mat());
    }
    return DensityMatrix(std::move(rho));
}

TypicalProjector typical_projector(const SignalEnsemble& e, const LetterString& a,
                                   double delta, int dim_cap) {
    if (!(delta > 0.0) || !std::isfinite(delta)) {
        throw InvalidCodebookError("delta must be a positive finite number");
    }
    const DensityMatrix rho_a = conditional_product_state(e, a, dim_cap);
    const double h_b = conditional_entropies(e).h_cond_bob;
    const double l = static_cast<double>(a.size());
    const double lower = std::exp2(-l * (h_b + delta));
    const double upper = std::exp2(-l * (h_b - delta));

    const HermitianEig decomp = eig_hermitian(rho_a.mat());
    TypicalProjector out;
    out.string_a = a;
    out.projector = ComplexMatrix::Zero(rho_a.dim(), rho_a.dim());
    for (Eigen::Index k = 0; k < decomp.eigenvalues.size(); ++k) {
        const double p = decomp.eigenvalues(k);
        if (p > lower && p < upper) {
            out.kept_eigs.emplace_back(static_cast<int>(k), p);
            const ComplexVector v = decomp.eigenvectors.col(k);
            out.projector += v * v.adjoint();
        }
    }
    return out;
}

TypicalityReport typicality_report(const SignalEnsemble& e, const LetterString& a,
                                   double delta, int dim_cap) {
    const TypicalProjector proj = typical_projector(e, a, delta, dim_cap);
    const double h_b = conditional_entropies(e).h_cond_bob;
    TypicalityReport out;
    for (const auto& [k, p] : proj.kept_eigs) {
        out.trace_kept += p;
        out.trace_kept_sq += p * p;
    }
    out.collision_bound = std::exp2(-static_cast<double>(a.size()) * (h_b - 3.0 * delta));
    out.kept_count = static_cast<int>(proj.kept_eigs.size());
    return out;
}

FirstStagePovm first_stage_povm(const SignalEnsemble& e, const Codebook& cb,
                                double delta, int dim_cap) {
    require_valid_codebook(e, cb, dim_cap);
    const auto dim = block_dimension(e.dim, cb.length_l, dim_cap);

    FirstStagePovm out;
    out.projectors.reserve(cb.alice_strings.size());
    ComplexMatrix phi = ComplexMatrix::Zero(dim, dim);
    for (const auto& a : cb.alice_strings) {
        out.projectors.push_back(typical_projector(e, a, delta, dim_cap));
        phi += out.projectors.back().projector;
    }
    const ComplexMatrix phi_inv_sqrt = func_on_support(phi, MatrixFunc::InvSqrt);

    ComplexMatrix closure = ComplexMatrix::Zero(dim, dim);
    for (const auto& proj : out.projectors) {
        // A_a = sum_k |t_ak><u~_ak| with <u~_ak| = <t_ak| Phi^{-1/2}
        out.operators.push_back(proj.projector * phi_inv_sqrt);
        closure += out.operators.back().adjoint() * out.operators.back();
    }
    closure -= ComplexMatrix::Identity(dim, dim);
    const HermitianEig excess = eig_hermitian((closure + closure.adjoint()) / 2.0);
    out.completeness_defect =
        excess.eigenvalues.size() > 0 ? std::max(0.0, excess.eigenvalues(0)) : 0.0;
    return out;
}

std::vector<ComplexVector> second_stage_pgm(const SignalEnsemble& e, const Codebook& cb,
                                            const LetterString& a,
                                            const TypicalProjector& projector,
                                            int dim_cap) {
    const auto dim = block_dimension(e.dim, cb.length_l, dim_cap);
    std::vector<ComplexVector> projected;
    projected.reserve(cb.bob_strings.size());
    ComplexMatrix g = ComplexMatrix::Zero(dim, dim);
    for (const auto& a_prime : cb.bob_strings) {
        ComplexVector s = projector.projector * codeword(e, a, a_prime, dim_cap);
        if (s.norm() <= kZeroVectorTol) s.setZero();
        g += s * s.adjoint();
        projected.push_back(std::move(s));
    }
    const ComplexMatrix g_inv_sqrt = func_on_support(g, MatrixFunc::InvSqrt);
    std::vector<ComplexVector> etas;
    etas.reserve(projected.size());
    for (const auto& s : projected) {
        etas.push_back(g_inv_sqrt * s);
    }
    return etas;
}

DecodingResult error_probability(const SignalEnsemble& e, const Codebook& cb,
                                 double delta, int dim_cap) {
    const FirstStagePovm first = first_stage_povm(e, cb, delta, dim_cap);
    DecodingResult out;
    out.success = success_matrix(e, cb, first, dim_cap);
    const int m = cb.size_m();
    const int n = cb.size_n();
    out.p_error_per_a.resize(static_cast<size_t>(m));
    for (int a = 0; a < m; ++a) {
        out.p_error_per_a[static_cast<size_t>(a)] = 1.0 - out.success.row(a).sum() / n;
    }
    out.p_error = 1.0 - out.success.sum() / (static_cast<double>(m) * n);
    out.p_error = std::clamp(out.p_error, 0.0, 1.0);
    return out;
}

RandomCodeStats random_code_average(const SignalEnsemble& e,
                                    const std::vector<LetterString>& alice_strings,
                                    int n, int l, double delta, int trials,
                                    std::uint64_t seed, int dim_cap, int threads) {
    if (trials < 1) {
        throw InvalidCodebookError("random_code_average needs trials >= 1");
    }
    if (n < 1 || l < 1 || alice_strings.empty()) {
        throw InvalidCodebookError("random_code_average needs n >= 1, l >= 1, and Alice strings");
    }

    RandomCodeStats out;
    out.values.assign(static_cast<size_t>(trials), 0.0);
    const auto run_trial = [&](int t) {
        auto gen = trial_stream(seed, static_cast<std::uint64_t>(t));
        Codebook cb;
        cb.length_l = l;
        cb.alice_strings = alice_strings;
        cb.bob_strings.reserve(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) {
            LetterString s(static_cast<size_t>(l));
            for (int k = 0; k < l; ++k) {
                s[static_cast<size_t>(k)] =
                    e.alphabet_b[static_cast<size_t>(sample_index(gen, e.q))];
            }
            cb.bob_strings.push_back(std::move(s));
        }
        out.values[static_cast<size_t>(t)] = error_probability(e, cb, delta, dim_cap).p_error;
    };

    const int workers = std::max(1, std::min(threads, trials));
    if (workers == 1) {
        for (int t = 0; t < trials; ++t) run_trial(t);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (int t = w; t < trials; t += workers) run_trial(t);
            });
        }
        for (auto& th : pool) th.join();
    }

    double sum = 0.0;
    for (double v : out.values) sum += v;
    out.mean = sum / trials;
    if (trials > 1) {
        double ss = 0.0;
        for (double v : out.values) ss += (v - out.mean) * (v - out.mean);
        out.stddev = std::sqrt(ss / (trials - 1));
    }
    return out;
}

}  // namespace qmac
