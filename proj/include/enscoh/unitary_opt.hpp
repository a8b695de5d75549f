#pragma once

// Local-unitary minimization of total local coherence, plus the minimum
// ensemble coherence (MEC) and coherence deficit built on it.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "enscoh/coherence.hpp"
#include "enscoh/ensembles.hpp"
#include "enscoh/quantum_core.hpp"

namespace enscoh {

/// Real angles encoding an element of U(d).
///
/// Layout: one (angle, phase) pair per complex Givens rotation on rows
/// (i, j), i < j, in row-major pair order, followed by d diagonal phases.
/// The unitary is diag(e^{i a_k}) * G_1 * G_2 * ... * G_m.
struct UnitaryParams {
    std::size_t d = 2;
    std::vector<double> params;

    static std::size_t size_for(std::size_t d) { return d * d; }
    static std::size_t rotation_count(std::size_t d) { return d * (d - 1) / 2; }
    static UnitaryParams zero(std::size_t d) { return {d, std::vector<double>(d * d, 0.0)}; }

    /// Throws if the length is not d^2 or an entry is not finite.
    void validate() const;
};

Operator unitary_from_params(const UnitaryParams& p);

/// Applies the unitary encoded by p to the rows of m in place.
void apply_params(const UnitaryParams& p, CMatrix& m);

inline constexpr std::uint64_t kAcceptanceSeed = 20211;

struct OptimizerConfig {
    std::size_t restarts = 40;
    std::size_t max_evals = 20000;
    double f_tol = 1e-8;
    std::uint64_t seed = kAcceptanceSeed;

    /// 120 restarts for joint dimension >= 9, 40 otherwise.
    static OptimizerConfig defaults_for(std::size_t d1, std::size_t d2, std::uint64_t seed = kAcceptanceSeed);
    void validate() const;
};

/// sum_i C(U1 |psi_i>) + C(U2 |phi_i>) in the computational basis.
double total_local_coherence(const ProductEnsemble& e, const Operator& u1, const Operator& u2, CoherenceMeasure m);

struct LocalMinimizer {
    UnitaryParams alice;
    UnitaryParams bob;
    double objective = 0.0;
    /// Member coherences (Alice then Bob per member) followed by the
    /// coherence of the rotated superposed state.
    std::vector<double> profile;

    Operator u1() const { return unitary_from_params(alice); }
    Operator u2() const { return unitary_from_params(bob); }
};

struct TauResult {
    double tau = 0.0;
    /// Restart endpoints within f_tol * (1 + |tau|) of tau, sorted by
    /// objective then parameters, deduplicated by profile.
    std::vector<LocalMinimizer> minimizers;
};

/// True when every member's ket on that side is a computational basis
/// vector up to phase; that side's optimal unitary is then the identity.
bool alice_is_computational(const ProductEnsemble& e);
bool bob_is_computational(const ProductEnsemble& e);

TauResult minimize_tau(const ProductEnsemble& e, CoherenceMeasure m, const OptimizerConfig& cfg);

struct CoherenceReport {
    CoherenceMeasure measure;
    double tau;
    Operator u1_star;
    Operator u2_star;
    double mec;
    double mec_normalized;
    double deficit;
    std::vector<std::pair<Operator, Operator>> tau_ties;
};

/// MEC is the smallest superposed-state coherence over all tau minimizers.
CoherenceReport mec(const ProductEnsemble& e, CoherenceMeasure m, const OptimizerConfig& cfg);

/// For real two-block 2x2 / 2x3 ensembles with coinciding Bob bases:
/// whether the rotated superposed state reaches l1 coherence d1*d2 - 1
/// within 1e-3. Throws Error when the preconditions fail.
bool check_maximal_superposition(const ProductEnsemble& e, const OptimizerConfig& cfg);

}  // namespace enscoh
