#include "enscoh/unitary_opt.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "enscoh/nelder_mead.hpp"

namespace enscoh {

void UnitaryParams::validate() const {
    if (d < 2) throw Error("UnitaryParams: d must be at least 2");
    if (params.size() != size_for(d)) {
        throw Error("UnitaryParams: expected " + std::to_string(size_for(d)) + " parameters, got " +
                    std::to_string(params.size()));
    }
    for (double v : params) {
        if (!std::isfinite(v)) throw Error("UnitaryParams: non-finite parameter");
    }
}

void apply_params(const UnitaryParams& p, CMatrix& m) {
    const auto d = static_cast<Eigen::Index>(p.d);
    const std::size_t rotations = UnitaryParams::rotation_count(p.d);
    // Pair index k -> (i, j) in row-major order; walk backwards so the
    // rightmost rotation acts first.
    std::size_t k = rotations;
    for (Eigen::Index i = d - 1; i >= 0; --i) {
        for (Eigen::Index j = d - 1; j > i; --j) {
            --k;
            const double angle = p.params[2 * k];
            const double phase = p.params[2 * k + 1];
            const double c = std::cos(angle);
            const double s = std::sin(angle);
            const cplx e = std::polar(1.0, phase);
            for (Eigen::Index col = 0; col < m.cols(); ++col) {
                const cplx a = m(i, col);
                const cplx b = m(j, col);
                m(i, col) = c * a - std::conj(e) * s * b;
                m(j, col) = e * s * a + c * b;
            }
        }
    }
    for (Eigen::Index r = 0; r < d; ++r) {
        m.row(r) *= std::polar(1.0, p.params[2 * rotations + static_cast<std::size_t>(r)]);
    }
}

Operator unitary_from_params(const UnitaryParams& p) {
    p.validate();
    const auto d = static_cast<Eigen::Index>(p.d);
    CMatrix m = CMatrix::Identity(d, d);
    apply_params(p, m);
    return Operator(std::move(m));
}

OptimizerConfig OptimizerConfig::defaults_for(std::size_t d1, std::size_t d2, std::uint64_t seed) {
    OptimizerConfig cfg;
    cfg.restarts = d1 * d2 >= 9 ? 120 : 40;
    cfg.seed = seed;
    return cfg;
}

void OptimizerConfig::validate() const {
    if (restarts < 1) throw Error("OptimizerConfig: restarts must be at least 1");
    if (max_evals < 1) throw Error("OptimizerConfig: max_evals must be at least 1");
    if (!(f_tol >= 0.0)) throw Error("OptimizerConfig: f_tol must be non-negative");
}

namespace {

CMatrix side_matrix(const ProductEnsemble& e, bool alice) {
    const auto d = static_cast<Eigen::Index>(alice ? e.d1() : e.d2());
    CMatrix m(d, static_cast<Eigen::Index>(e.size()));
    for (std::size_t i = 0; i < e.size(); ++i) {
        m.col(static_cast<Eigen::Index>(i)) = (alice ? e[i].alice : e[i].bob).amplitudes();
    }
    return m;
}

bool all_computational(const CMatrix& m) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        if (std::abs(m.col(c).cwiseAbs().maxCoeff() - 1.0) > kAlgebraTol) return false;
    }
    return true;
}

double column_coherence_sum(CoherenceMeasure measure, const CMatrix& m, std::vector<double>* out) {
    double s = 0.0;
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        const double v = coherence_pure(measure, {m.col(c).data(), static_cast<std::size_t>(m.rows())});
        if (out) out->push_back(v);
        s += v;
    }
    return s;
}

// Total local coherence for fixed parameters, with per-thread workspaces.
class TauObjective {
public:
    TauObjective(const ProductEnsemble& e, CoherenceMeasure m)
        : measure_(m), alice_(side_matrix(e, true)), bob_(side_matrix(e, false)), wa_(alice_), wb_(bob_) {}

    double operator()(const UnitaryParams& pa, const UnitaryParams& pb, std::vector<double>* profile = nullptr) {
        wa_ = alice_;
        wb_ = bob_;
        apply_params(pa, wa_);
        apply_params(pb, wb_);
        if (!profile) return column_coherence_sum(measure_, wa_, nullptr) + column_coherence_sum(measure_, wb_, nullptr);
        std::vector<double> ca, cb;
        const double s = column_coherence_sum(measure_, wa_, &ca) + column_coherence_sum(measure_, wb_, &cb);
        for (std::size_t i = 0; i < ca.size(); ++i) {
            profile->push_back(ca[i]);
            profile->push_back(cb[i]);
        }
        return s;
    }

private:
    CoherenceMeasure measure_;
    CMatrix alice_, bob_, wa_, wb_;
};

double rotated_superposition_coherence(const ProductEnsemble& e, const UnitaryParams& pa, const UnitaryParams& pb,
                                       CoherenceMeasure m) {
    // (U1 (x) U2) psi  <->  U1 M U2^T with M the d1 x d2 reshape of psi.
    const Ket psi = superposed_state(e);
    const auto d1 = static_cast<Eigen::Index>(e.d1());
    const auto d2 = static_cast<Eigen::Index>(e.d2());
    CMatrix mat(d1, d2);
    for (Eigen::Index i = 0; i < d1; ++i) {
        for (Eigen::Index j = 0; j < d2; ++j) mat(i, j) = psi.amplitudes()(i * d2 + j);
    }
    apply_params(pa, mat);
    CMatrix t = mat.transpose();
    apply_params(pb, t);
    CVector out(d1 * d2);
    for (Eigen::Index i = 0; i < d1; ++i) {
        for (Eigen::Index j = 0; j < d2; ++j) out(i * d2 + j) = t(j, i);
    }
    return coherence_pure(m, {out.data(), static_cast<std::size_t>(out.size())});
}

bool lexicographically_less(const LocalMinimizer& a, const LocalMinimizer& b) {
    if (a.objective != b.objective) return a.objective < b.objective;
    if (a.alice.params != b.alice.params) return a.alice.params < b.alice.params;
    return a.bob.params < b.bob.params;
}

bool same_profile(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::abs(a[i] - b[i]) > 1e-6) return false;
    }
    return true;
}

UnitaryParams random_params(std::size_t d, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    UnitaryParams p{d, std::vector<double>(d * d)};
    for (double& v : p.params) v = angle(rng);
    return p;
}

}  // namespace

double total_local_coherence(const ProductEnsemble& e, const Operator& u1, const Operator& u2, CoherenceMeasure m) {
    if (u1.dim() != e.d1() || u2.dim() != e.d2()) {
        throw Error("total_local_coherence: unitary dimensions do not match the ensemble");
    }
    const CMatrix a = u1.matrix() * side_matrix(e, true);
    const CMatrix b = u2.matrix() * side_matrix(e, false);
    return column_coherence_sum(m, a, nullptr) + column_coherence_sum(m, b, nullptr);
}

bool alice_is_computational(const ProductEnsemble& e) { return all_computational(side_matrix(e, true)); }
bool bob_is_computational(const ProductEnsemble& e) { return all_computational(side_matrix(e, false)); }

TauResult minimize_tau(const ProductEnsemble& e, CoherenceMeasure m, const OptimizerConfig& cfg) {
    cfg.validate();
    const bool fix_alice = alice_is_computational(e);
    const bool fix_bob = bob_is_computational(e);
    const std::size_t restarts = fix_alice && fix_bob ? 1 : cfg.restarts;

    // Diagonal phases leave every computational-basis modulus unchanged, so
    // only the rotation entries (angle, phase pairs) are searched.
    const std::size_t ra = fix_alice ? 0 : 2 * UnitaryParams::rotation_count(e.d1());
    const std::size_t rb = fix_bob ? 0 : 2 * UnitaryParams::rotation_count(e.d2());

    std::vector<LocalMinimizer> endpoints(restarts);
    parallel_for(restarts, [&](std::size_t r) {
        std::mt19937_64 rng(derive_seed(cfg.seed, r));
        UnitaryParams pa = random_params(e.d1(), rng);
        UnitaryParams pb = random_params(e.d2(), rng);
        if (fix_alice) pa = UnitaryParams::zero(e.d1());
        if (fix_bob) pb = UnitaryParams::zero(e.d2());
        if (r % 2 == 0) {
            // Even restarts start from a real orthogonal pair.
            for (std::size_t k = 1; k < ra; k += 2) pa.params[k] = 0.0;
            for (std::size_t k = 1; k < rb; k += 2) pb.params[k] = 0.0;
        }

        // Pointers to the searched entries.
        std::vector<double*> all_slots;
        std::vector<double*> angle_slots;
        for (std::size_t k = 0; k < ra; ++k) all_slots.push_back(&pa.params[k]);
        for (std::size_t k = 0; k < rb; ++k) all_slots.push_back(&pb.params[k]);
        for (std::size_t k = 0; k < all_slots.size(); k += 2) angle_slots.push_back(all_slots[k]);

        TauObjective objective(e, m);
        auto run_stage = [&](const std::vector<double*>& slots, std::size_t budget) {
            std::vector<double> x0;
            x0.reserve(slots.size());
            for (double* p : slots) x0.push_back(*p);
            NelderMeadOptions opt;
            opt.max_evals = std::max<std::size_t>(budget, 1);
            const NelderMeadResult res = nelder_mead(
                [&](const std::vector<double>& x) {
                    for (std::size_t i = 0; i < slots.size(); ++i) *slots[i] = x[i];
                    return objective(pa, pb);
                },
                x0, opt);
            for (std::size_t i = 0; i < slots.size(); ++i) *slots[i] = res.x[i];
        };
        // Angles first, then all rotation parameters.
        run_stage(angle_slots, cfg.max_evals / 2);
        run_stage(all_slots, cfg.max_evals - cfg.max_evals / 2);

        LocalMinimizer& out = endpoints[r];
        out.alice = pa;
        out.bob = pb;
        out.objective = objective(pa, pb, &out.profile);
        out.profile.push_back(rotated_superposition_coherence(e, pa, pb, m));
    });

    std::sort(endpoints.begin(), endpoints.end(), lexicographically_less);
    TauResult result;
    result.tau = endpoints.front().objective;
    const double cutoff = result.tau + cfg.f_tol * (1.0 + std::abs(result.tau));
    for (auto& ep : endpoints) {
        if (ep.objective > cutoff) break;
        const bool dup = std::any_of(result.minimizers.begin(), result.minimizers.end(),
                                     [&](const LocalMinimizer& k) { return same_profile(k.profile, ep.profile); });
        if (!dup) result.minimizers.push_back(std::move(ep));
    }
    return result;
}

CoherenceReport mec(const ProductEnsemble& e, CoherenceMeasure m, const OptimizerConfig& cfg) {
    const TauResult tr = minimize_tau(e, m, cfg);
    const LocalMinimizer* best = &tr.minimizers.front();
    for (const auto& k : tr.minimizers) {
        if (k.profile.back() < best->profile.back()) best = &k;
    }
    std::vector<std::pair<Operator, Operator>> ties;
    ties.reserve(tr.minimizers.size());
    for (const auto& k : tr.minimizers) ties.emplace_back(k.u1(), k.u2());

    const double value = best->profile.back();
    return CoherenceReport{
        .measure = m,
        .tau = tr.tau,
        .u1_star = best->u1(),
        .u2_star = best->u2(),
        .mec = value,
        .mec_normalized = value / max_coherence(m, e.d1() * e.d2()),
        .deficit = std::abs(tr.tau - value),
        .tau_ties = std::move(ties),
    };
}

bool check_maximal_superposition(const ProductEnsemble& e, const OptimizerConfig& cfg) {
    const auto view = two_block_view(e);
    if (!view || (view->d != 2 && view->d != 3)) {
        throw Error("check_maximal_superposition: requires a 2x2 or 2x3 two-block ensemble");
    }
    for (const auto& s : e.states()) {
        if (s.alice.amplitudes().imag().cwiseAbs().maxCoeff() > kAlgebraTol ||
            s.bob.amplitudes().imag().cwiseAbs().maxCoeff() > kAlgebraTol) {
            throw Error("check_maximal_superposition: ensemble coefficients must be real");
        }
    }
    if (relative_local_coherence(e) > 1e-9) {
        throw Error("check_maximal_superposition: Bob bases must coincide (relative local coherence 0)");
    }
    const CoherenceReport r = mec(e, CoherenceMeasure::L1, cfg);
    return std::abs(r.mec - max_coherence(CoherenceMeasure::L1, e.d1() * e.d2())) <= 1e-3;
}

}  // namespace enscoh
