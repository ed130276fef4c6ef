#include "qmac/converse.hpp"

#include <cmath>

#include "qmac/errors.hpp"

namespace qmac {

namespace {

constexpr double kVertexTol = 1e-6;

// Empirical letter frequencies at one position of a string list.
std::vector<double> position_frequencies(const std::vector<LetterString>& strings,
                                         const SignalEnsemble& e, Sender side, int k) {
    std::vector<double> freq(
        static_cast<size_t>(side == Sender::Alice ? e.size_a() : e.size_b()), 0.0);
    for (const auto& s : strings) {
        const int idx = side == Sender::Alice ? e.index_a(s[static_cast<size_t>(k)])
                                              : e.index_b(s[static_cast<size_t>(k)]);
        freq[static_cast<size_t>(idx)] += 1.0;
    }
    for (auto& f : freq) f /= static_cast<double>(strings.size());
    return freq;
}

}  // namespace

double ConverseReport::sum_h_joint() const {
    double s = 0.0;
    for (const auto& p : per_position) s += p.h_joint;
    return s;
}

double ConverseReport::sum_h_cond_alice() const {
    double s = 0.0;
    for (const auto& p : per_position) s += p.h_cond_alice;
    return s;
}

double ConverseReport::sum_h_cond_bob() const {
    double s = 0.0;
    for (const auto& p : per_position) s += p.h_cond_bob;
    return s;
}

ConverseReport codebook_entropies(const SignalEnsemble& e, const Codebook& cb, int dim_cap) {
    require_valid_codebook(e, cb, dim_cap);
    const auto dim = block_dimension(e.dim, cb.length_l, dim_cap);
    const int m = cb.size_m();
    const int n = cb.size_n();

    ConverseReport out;

    ComplexMatrix rho_code = ComplexMatrix::Zero(dim, dim);
    for (int a = 0; a < m; ++a) {
        ComplexMatrix rho_a = ComplexMatrix::Zero(dim, dim);
        for (int ap = 0; ap < n; ++ap) {
            const ComplexVector s = codeword(e, cb.alice_strings[static_cast<size_t>(a)],
                                             cb.bob_strings[static_cast<size_t>(ap)], dim_cap);
            rho_a += s * s.adjoint() / n;
        }
        out.h_code_a_avg += von_neumann_entropy(DensityMatrix(rho_a)) / m;
        rho_code += rho_a / m;
    }
    out.h_code = von_neumann_entropy(DensityMatrix(rho_code));

    for (int ap = 0; ap < n; ++ap) {
        ComplexMatrix rho_ap = ComplexMatrix::Zero(dim, dim);
        for (int a = 0; a < m; ++a) {
            const ComplexVector s = codeword(e, cb.alice_strings[static_cast<size_t>(a)],
                                             cb.bob_strings[static_cast<size_t>(ap)], dim_cap);
            rho_ap += s * s.adjoint() / m;
        }
        out.h_code_aprime_avg += von_neumann_entropy(DensityMatrix(rho_ap)) / n;
    }

    for (int k = 0; k < cb.length_l; ++k) {
        SignalEnsemble positional = e;
        positional.p = position_frequencies(cb.alice_strings, e, Sender::Alice, k);
        positional.q = position_frequencies(cb.bob_strings, e, Sender::Bob, k);
        out.per_position.push_back(conditional_entropies(positional));
    }
    return out;
}

ConverseBounds converse_bounds(const ConverseReport& report, int l) {
    if (l < 1 || static_cast<size_t>(l) != report.per_position.size()) {
        throw LengthMismatchError("l must equal the number of per-position profiles");
    }
    ConverseBounds out;
    out.r1_max = report.sum_h_cond_alice() / l;
    out.r2_max = report.sum_h_cond_bob() / l;
    out.rsum_max = report.sum_h_joint() / l;
    out.averaged = {out.rsum_max, out.r1_max, out.r2_max};
    out.vertex_alice = {out.r1_max, out.rsum_max - out.r1_max};
    out.vertex_bob = {out.rsum_max - out.r2_max, out.r2_max};
    const RateRegion pent = pentagon(out.averaged);
    out.vertices_in_pentagon = contains(pent, out.vertex_alice, kVertexTol) &&
                               contains(pent, out.vertex_bob, kVertexTol);
    return out;
}

}  // namespace qmac
