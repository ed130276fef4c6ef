#include "qmac/entropy.hpp"

#include <cmath>
#include <string>

#include "qmac/errors.hpp"

namespace qmac {

namespace {

constexpr double kProfileTol = 1e-9;

double entropy_of_eigenvalues(const Eigen::VectorXd& eigs) {
    double h = 0.0;
    for (Eigen::Index k = 0; k < eigs.size(); ++k) {
        const double lam = eigs[k];
        if (lam < -kNegativeEigTol) {
            throw NegativeEigenvalueError("density eigenvalue " + std::to_string(lam));
        }
        if (lam > kSupportCutoff) h -= lam * std::log2(lam);
    }
    return h;
}

}  // namespace

void require_valid_profile(const EntropyProfile& profile) {
    if (!(std::isfinite(profile.h_joint) && std::isfinite(profile.h_cond_alice) &&
          std::isfinite(profile.h_cond_bob))) {
        throw InvalidProfileError("entropy profile has non-finite entries");
    }
    if (profile.h_cond_alice < -kProfileTol || profile.h_cond_bob < -kProfileTol ||
        profile.h_joint < -kProfileTol) {
        throw InvalidProfileError("entropy profile has negative entries");
    }
    if (profile.h_cond_alice > profile.h_joint + kProfileTol ||
        profile.h_cond_bob > profile.h_joint + kProfileTol) {
        throw InvalidProfileError("conditional entropy exceeds joint entropy");
    }
    if (profile.h_cond_alice + profile.h_cond_bob < profile.h_joint - kProfileTol) {
        throw InvalidProfileError("conditional entropies sum below joint entropy");
    }
}

double shannon_entropy(std::span<const double> dist) {
    double sum = 0.0;
    for (const double v : dist) {
        if (!std::isfinite(v) || v < 0.0) {
            throw InvalidDistributionError("probability entries must be finite and >= 0");
        }
        sum += v;
    }
    if (std::abs(sum - 1.0) > kProbSumTol) {
        throw InvalidDistributionError("probabilities sum to " + std::to_string(sum));
    }
    double h = 0.0;
    for (const double v : dist) {
        if (v > 0.0) h -= v * std::log2(v);
    }
    return h;
}

double von_neumann_entropy(const DensityMatrix& rho) {
    const HermitianEig eig = eig_hermitian(rho.mat());
    return entropy_of_eigenvalues(eig.eigenvalues);
}

EntropyProfile conditional_entropies(const SignalEnsemble& e) {
    require_valid_ensemble(e);
    EntropyProfile out;
    out.h_joint = von_neumann_entropy(joint_density(e));
    for (int ib = 0; ib < e.size_b(); ++ib) {
        const double w = e.q[static_cast<size_t>(ib)];
        if (w == 0.0) continue;
        out.h_cond_alice += w * von_neumann_entropy(conditional_density(e, Sender::Bob, ib));
    }
    for (int ia = 0; ia < e.size_a(); ++ia) {
        const double w = e.p[static_cast<size_t>(ia)];
        if (w == 0.0) continue;
        out.h_cond_bob += w * von_neumann_entropy(conditional_density(e, Sender::Alice, ia));
    }
    return out;
}

double holevo_information(std::span<const DensityMatrix> states,
                          std::span<const double> weights) {
    if (states.empty()) {
        throw InvalidDistributionError("holevo information needs at least one state");
    }
    if (states.size() != weights.size()) {
        throw DimensionMismatchError("state count does not match weight count");
    }
    const Eigen::Index dim = states[0].dim();
    for (const auto& s : states) {
        if (s.dim() != dim) {
            throw DimensionMismatchError("holevo states have mixed dimensions");
        }
    }

    double sum = 0.0;
    for (const double w : weights) {
        if (!std::isfinite(w) || w < 0.0) {
            throw InvalidDistributionError("weights must be finite and >= 0");
        }
        sum += w;
    }
    if (std::abs(sum - 1.0) > kProbSumTol) {
        throw InvalidDistributionError("weights sum to " + std::to_string(sum));
    }

    ComplexMatrix avg = ComplexMatrix::Zero(dim, dim);
    double mean_entropy = 0.0;
    for (size_t i = 0; i < states.size(); ++i) {
        if (weights[i] == 0.0) continue;
        avg += weights[i] * states[i].mat();
        mean_entropy += weights[i] * von_neumann_entropy(states[i]);
    }
    return von_neumann_entropy(DensityMatrix(std::move(avg))) - mean_entropy;
}

SsaWitnessReport ssa_witness_check(const SignalEnsemble& e, int dim_cap) {
    require_valid_ensemble(e);
    const long full_dim = static_cast<long>(e.dim) * e.size_a() * e.size_b();
    if (full_dim > dim_cap) {
        throw DimensionCapError("witness dimension " + std::to_string(full_dim) +
                                " exceeds cap " + std::to_string(dim_cap));
    }

    const int na = e.size_a();
    const int nb = e.size_b();
    ComplexMatrix full = ComplexMatrix::Zero(full_dim, full_dim);
    for (int ia = 0; ia < na; ++ia) {
        ComplexMatrix flag_a = ComplexMatrix::Zero(na, na);
        flag_a(ia, ia) = 1.0;
        for (int ib = 0; ib < nb; ++ib) {
            const double w = e.p[static_cast<size_t>(ia)] * e.q[static_cast<size_t>(ib)];
            if (w == 0.0) continue;
            ComplexMatrix flag_b = ComplexMatrix::Zero(nb, nb);
            flag_b(ib, ib) = 1.0;
            const auto& s = e.state(ia, ib);
            full += w * tensor_product(tensor_product(ComplexMatrix(s * s.adjoint()), flag_a), flag_b);
        }
    }

    // Subsystem layout is signal (x) flag_a (x) flag_b.
    const ComplexMatrix drop_b = partial_trace(full, {e.dim * na, nb}, Subsystem::A);
    // flag_a sits in the middle of the layout, so its marginal is rebuilt
    // directly instead of via a bipartite partial trace.
    ComplexMatrix drop_a = ComplexMatrix::Zero(static_cast<long>(e.dim) * nb,
                                               static_cast<long>(e.dim) * nb);
    for (int ia = 0; ia < na; ++ia) {
        for (int ib = 0; ib < nb; ++ib) {
            const double w = e.p[static_cast<size_t>(ia)] * e.q[static_cast<size_t>(ib)];
            if (w == 0.0) continue;
            ComplexMatrix flag_b = ComplexMatrix::Zero(nb, nb);
            flag_b(ib, ib) = 1.0;
            const auto& s = e.state(ia, ib);
            drop_a += w * tensor_product(ComplexMatrix(s * s.adjoint()), flag_b);
        }
    }
    const ComplexMatrix signal = partial_trace(drop_b, {e.dim, na}, Subsystem::A);

    SsaWitnessReport out;
    out.h_full = von_neumann_entropy(DensityMatrix(full));
    out.h_drop_b_flag = von_neumann_entropy(DensityMatrix(drop_b));
    out.h_drop_a_flag = von_neumann_entropy(DensityMatrix(drop_a));
    out.h_signal = von_neumann_entropy(DensityMatrix(signal));

    const double hp = shannon_entropy(e.p);
    const double hq = shannon_entropy(e.q);
    const EntropyProfile profile = conditional_entropies(e);
    out.id_full_dev = std::abs(out.h_full - (hp + hq));
    out.id_drop_b_dev = std::abs(out.h_drop_b_flag - (hp + profile.h_cond_bob));
    out.id_drop_a_dev = std::abs(out.h_drop_a_flag - (hq + profile.h_cond_alice));
    out.ssa_slack = out.h_drop_b_flag + out.h_drop_a_flag - out.h_full - out.h_signal;
    return out;
}

}  // namespace qmac
