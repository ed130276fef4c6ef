#include "qmac/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qmac/errors.hpp"

namespace qmac {

DensityMatrix::DensityMatrix(ComplexMatrix m) : mat_(std::move(m)) {
    if (mat_.rows() != mat_.cols()) {
        throw NotSquareError("density matrix must be square");
    }
    if (!all_finite(mat_)) {
        throw ComputationError("density matrix has non-finite entries");
    }
    const double defect = hermiticity_defect(mat_);
    if (!(defect <= kHermitianTol)) {
        throw NotHermitianError("density matrix hermiticity defect " +
                                std::to_string(defect));
    }
    const double tr = mat_.trace().real();
    if (std::abs(tr - 1.0) > kDensityTraceTol) {
        throw ComputationError("density matrix trace " + std::to_string(tr) +
                               " is not 1");
    }
}

bool DensityMatrix::is_valid() const {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(mat_, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) return false;
    return solver.eigenvalues().minCoeff() >= -kNegativeEigTol;
}

namespace {

int find_letter(const std::vector<std::string>& alphabet, const std::string& letter,
                const char* side) {
    const auto it = std::find(alphabet.begin(), alphabet.end(), letter);
    if (it == alphabet.end()) {
        throw UnknownLetterError("letter '" + letter + "' not in alphabet " + side);
    }
    return static_cast<int>(it - alphabet.begin());
}

void check_distribution(const std::vector<double>& dist, size_t want, const char* name,
                        std::vector<EnsembleViolation>& out) {
    if (dist.size() != want) {
        out.push_back({std::string(name) + " has " + std::to_string(dist.size()) +
                       " entries, expected " + std::to_string(want)});
        return;
    }
    double sum = 0.0;
    for (size_t i = 0; i < dist.size(); ++i) {
        if (!std::isfinite(dist[i]) || dist[i] < 0.0) {
            out.push_back({std::string(name) + "[" + std::to_string(i) +
                           "] is negative or non-finite"});
            return;
        }
        sum += dist[i];
    }
    if (std::abs(sum - 1.0) > kProbSumTol) {
        std::ostringstream ss;
        ss << name << " sums to " << sum;
        out.push_back({ss.str()});
    }
}

}  // namespace

int SignalEnsemble::index_a(const std::string& letter) const {
    return find_letter(alphabet_a, letter, "A");
}

int SignalEnsemble::index_b(const std::string& letter) const {
    return find_letter(alphabet_b, letter, "B");
}

std::vector<EnsembleViolation> validate_ensemble(const SignalEnsemble& e) {
    std::vector<EnsembleViolation> out;
    if (e.alphabet_a.empty()) out.push_back({"alphabet_A is empty"});
    if (e.alphabet_b.empty()) out.push_back({"alphabet_B is empty"});
    if (e.dim < 1) out.push_back({"dim must be >= 1"});

    const size_t want = e.alphabet_a.size() * e.alphabet_b.size();
    if (e.states.size() != want) {
        out.push_back({"states table has " + std::to_string(e.states.size()) +
                       " entries, expected " + std::to_string(want)});
    } else {
        for (size_t ia = 0; ia < e.alphabet_a.size(); ++ia) {
            for (size_t ib = 0; ib < e.alphabet_b.size(); ++ib) {
                const auto& v = e.states[ia * e.alphabet_b.size() + ib];
                if (v.size() != e.dim) {
                    out.push_back({"state (" + e.alphabet_a[ia] + ", " +
                                   e.alphabet_b[ib] + ") has dimension " +
                                   std::to_string(v.size())});
                    continue;
                }
                if (!v.allFinite()) {
                    out.push_back({"state (" + e.alphabet_a[ia] + ", " +
                                   e.alphabet_b[ib] + ") has non-finite entries"});
                    continue;
                }
                const double norm = v.norm();
                if (std::abs(norm - 1.0) > kUnitNormTol) {
                    std::ostringstream ss;
                    ss << "state (" << e.alphabet_a[ia] << ", " << e.alphabet_b[ib]
                       << ") has norm " << norm;
                    out.push_back({ss.str()});
                }
            }
        }
    }
    check_distribution(e.p, e.alphabet_a.size(), "p", out);
    check_distribution(e.q, e.alphabet_b.size(), "q", out);
    return out;
}

void require_valid_ensemble(const SignalEnsemble& e) {
    const auto violations = validate_ensemble(e);
    if (!violations.empty()) {
        std::string msg = "invalid ensemble:";
        for (const auto& v : violations) msg += " " + v.what + ";";
        throw InvalidEnsembleError(msg);
    }
}

DensityMatrix joint_density(const SignalEnsemble& e) {
    require_valid_ensemble(e);
    ComplexMatrix rho = ComplexMatrix::Zero(e.dim, e.dim);
    for (int ia = 0; ia < e.size_a(); ++ia) {
        for (int ib = 0; ib < e.size_b(); ++ib) {
            const double w = e.p[static_cast<size_t>(ia)] * e.q[static_cast<size_t>(ib)];
            if (w == 0.0) continue;
            const auto& s = e.state(ia, ib);
            rho.noalias() += w * (s * s.adjoint());
        }
    }
    return DensityMatrix(std::move(rho));
}

DensityMatrix conditional_density(const SignalEnsemble& e, Sender fix, int letter_index) {
    require_valid_ensemble(e);
    ComplexMatrix rho = ComplexMatrix::Zero(e.dim, e.dim);
    if (fix == Sender::Alice) {
        if (letter_index < 0 || letter_index >= e.size_a()) {
            throw UnknownLetterError("Alice letter index out of range");
        }
        for (int ib = 0; ib < e.size_b(); ++ib) {
            const auto& s = e.state(letter_index, ib);
            rho.noalias() += e.q[static_cast<size_t>(ib)] * (s * s.adjoint());
        }
    } else {
        if (letter_index < 0 || letter_index >= e.size_b()) {
            throw UnknownLetterError("Bob letter index out of range");
        }
        for (int ia = 0; ia < e.size_a(); ++ia) {
            const auto& s = e.state(ia, letter_index);
            rho.noalias() += e.p[static_cast<size_t>(ia)] * (s * s.adjoint());
        }
    }
    return DensityMatrix(std::move(rho));
}

DensityMatrix conditional_density(const SignalEnsemble& e, Sender fix,
                                  const std::string& letter) {
    const int idx = (fix == Sender::Alice) ? e.index_a(letter) : e.index_b(letter);
    return conditional_density(e, fix, idx);
}

}  // namespace qmac
