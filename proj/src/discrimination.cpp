#include "enscoh/discrimination.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <string>

#include "enscoh/nelder_mead.hpp"

namespace enscoh {

namespace {

constexpr std::size_t kMaxConfigDim = 6;

// Adjacent-overlap scoring of one candidate measurement.
struct Score {
    double sum = -1.0;
    double worst = 0.0;
    double avg = 0.0;
    std::vector<std::size_t> assignment;  // projector k -> pair index
};

// overlap_first[k * d + i] = |<phi_k|eta1^(i)>|, overlap_second likewise.
Score score_overlaps(std::size_t d, const std::vector<double>& overlap_first,
                     const std::vector<double>& overlap_second, const std::vector<std::size_t>& pairing) {
    // Best bijection projector -> pair by DP over subsets of pairs;
    // projectors are assigned in order 0, 1, ...
    const std::size_t full = (std::size_t{1} << d) - 1;
    std::vector<double> best(full + 1, -std::numeric_limits<double>::infinity());
    std::vector<std::size_t> choice(full + 1, 0);
    best[0] = 0.0;
    for (std::size_t mask = 0; mask < full; ++mask) {
        if (best[mask] == -std::numeric_limits<double>::infinity()) continue;
        const auto k = static_cast<std::size_t>(std::popcount(mask));
        for (std::size_t p = 0; p < d; ++p) {
            if (mask & (std::size_t{1} << p)) continue;
            const double w = overlap_first[k * d + p] + overlap_second[k * d + pairing[p]];
            const std::size_t next = mask | (std::size_t{1} << p);
            if (best[mask] + w > best[next]) {
                best[next] = best[mask] + w;
                choice[next] = p;
            }
        }
    }
    Score s;
    s.sum = best[full];
    s.assignment.assign(d, 0);
    std::size_t mask = full;
    for (std::size_t k = d; k-- > 0;) {
        const std::size_t p = choice[mask];
        s.assignment[k] = p;
        mask &= ~(std::size_t{1} << p);
    }
    s.worst = 1.0;
    double total = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
        const std::size_t p = s.assignment[k];
        const double a = overlap_first[k * d + p] * overlap_first[k * d + p];
        const double b = overlap_second[k * d + pairing[p]] * overlap_second[k * d + pairing[p]];
        s.worst = std::min({s.worst, a, b});
        total += a + b;
    }
    s.avg = total / static_cast<double>(2 * d);
    return s;
}

// Overlap tables for the directions stored as columns of `dirs`.
void overlap_tables(const CMatrix& dirs, const CMatrix& first, const CMatrix& second, std::vector<double>& of,
                    std::vector<double>& os) {
    const auto d = dirs.cols();
    of.resize(static_cast<std::size_t>(d * d));
    os.resize(static_cast<std::size_t>(d * d));
    for (Eigen::Index k = 0; k < d; ++k) {
        for (Eigen::Index i = 0; i < d; ++i) {
            of[static_cast<std::size_t>(k * d + i)] = std::abs(dirs.col(k).dot(first.col(i)));
            os[static_cast<std::size_t>(k * d + i)] = std::abs(dirs.col(k).dot(second.col(i)));
        }
    }
}

std::vector<ReducedSet> reduced_sets_for(const Configuration& c, const std::vector<std::size_t>& assignment) {
    std::vector<ReducedSet> out;
    for (std::size_t p : assignment) {
        const std::size_t j = c.pairing[p];
        out.push_back({p * c.d + j + 1, p, j});
    }
    return out;
}

struct Endpoint {
    UnitaryParams params;
    Score score;
};

}  // namespace

void Configuration::validate() const {
    if (pairing.size() != d) throw Error("Configuration: pairing length must equal d");
    std::vector<bool> seen(d, false);
    for (std::size_t v : pairing) {
        if (v >= d || seen[v]) throw Error("Configuration: pairing is not a bijection");
        seen[v] = true;
    }
}

ProjectorSet::ProjectorSet(std::vector<Ket> directions) : directions_(std::move(directions)) {
    if (directions_.size() < 2 || directions_.front().dim() != directions_.size()) {
        throw Error("ProjectorSet: need d directions of dimension d");
    }
    if (!is_orthonormal_set(directions_)) {
        throw Error("ProjectorSet: directions are not orthonormal");
    }
}

Operator ProjectorSet::projector(std::size_t k) const {
    const CVector& v = directions_.at(k).amplitudes();
    return Operator(CMatrix(v * v.adjoint()));
}

std::string_view to_string(SuccessCriterion c) { return c == SuccessCriterion::Worst ? "worst" : "avg"; }

SuccessCriterion parse_criterion(std::string_view s) {
    if (s == "worst") return SuccessCriterion::Worst;
    if (s == "avg") return SuccessCriterion::Average;
    throw Error("unknown success criterion '" + std::string(s) + "' (expected worst or avg)");
}

Configuration find_configuration(const ProductEnsemble& e) {
    const TwoBlockView v = require_two_block(e, "find_configuration");
    if (v.d > kMaxConfigDim) {
        throw Error("find_configuration: exhaustive search is limited to d <= " + std::to_string(kMaxConfigDim));
    }
    std::vector<std::size_t> perm(v.d);
    std::iota(perm.begin(), perm.end(), 0);
    Configuration best{v.d, perm};
    double best_sum = -1.0;
    do {
        double s = 0.0;
        for (std::size_t i = 0; i < v.d; ++i) s += std::abs(inner_product(v.first[i], v.second[perm[i]]));
        // Permutations arrive in lexicographic order, so strict improvement
        // keeps the smallest among ties.
        if (s > best_sum + 1e-12) {
            best_sum = s;
            best.pairing = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

DiscriminationResult evaluate_projectors(const ProductEnsemble& e, const Configuration& c, const ProjectorSet& p) {
    const TwoBlockView v = require_two_block(e, "evaluate_projectors");
    c.validate();
    if (c.d != v.d || p.d() != v.d) {
        throw Error("evaluate_projectors: configuration or projector dimension does not match the ensemble");
    }
    std::vector<double> of, os;
    overlap_tables(basis_matrix(p.directions()), basis_matrix(v.first), basis_matrix(v.second), of, os);
    const Score s = score_overlaps(v.d, of, os, c.pairing);
    return DiscriminationResult{c, p, s.worst, s.avg, s.sum, reduced_sets_for(c, s.assignment)};
}

DiscriminationResult optimize_projectors(const ProductEnsemble& e, const Configuration& c, const OptimizerConfig& cfg) {
    const TwoBlockView v = require_two_block(e, "optimize_projectors");
    c.validate();
    cfg.validate();
    if (c.d != v.d) {
        throw Error("optimize_projectors: configuration dimension does not match the ensemble");
    }
    const std::size_t d = v.d;
    const CMatrix first = basis_matrix(v.first);
    const CMatrix second = basis_matrix(v.second);
    const std::size_t rot = 2 * UnitaryParams::rotation_count(d);

    std::vector<Endpoint> endpoints(cfg.restarts);
    parallel_for(cfg.restarts, [&](std::size_t r) {
        std::mt19937_64 rng(derive_seed(cfg.seed, r));
        std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
        UnitaryParams params{d, std::vector<double>(d * d)};
        for (double& x : params.params) x = angle(rng);
        if (r % 2 == 0) {
            for (std::size_t k = 1; k < rot; k += 2) params.params[k] = 0.0;
        }

        CMatrix work(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
        std::vector<double> of, os;
        auto evaluate = [&]() {
            work.setIdentity();
            apply_params(params, work);
            overlap_tables(work, first, second, of, os);
            return score_overlaps(d, of, os, c.pairing);
        };
        auto run_stage = [&](std::size_t stride, std::size_t budget) {
            std::vector<double> x0;
            for (std::size_t k = 0; k < rot; k += stride) x0.push_back(params.params[k]);
            NelderMeadOptions opt;
            opt.max_evals = std::max<std::size_t>(budget, 1);
            const NelderMeadResult res = nelder_mead(
                [&](const std::vector<double>& x) {
                    for (std::size_t i = 0; i < x.size(); ++i) params.params[i * stride] = x[i];
                    return -evaluate().sum;
                },
                x0, opt);
            for (std::size_t i = 0; i < res.x.size(); ++i) params.params[i * stride] = res.x[i];
        };
        run_stage(2, cfg.max_evals / 2);
        run_stage(1, cfg.max_evals - cfg.max_evals / 2);
        endpoints[r] = {params, evaluate()};
    });

    double best_sum = -1.0;
    for (const auto& ep : endpoints) best_sum = std::max(best_sum, ep.score.sum);
    const double cutoff = best_sum - cfg.f_tol * (1.0 + std::abs(best_sum));
    const Endpoint* chosen = nullptr;
    for (const auto& ep : endpoints) {
        if (ep.score.sum < cutoff) continue;
        if (!chosen || ep.score.worst > chosen->score.worst ||
            (ep.score.worst == chosen->score.worst && ep.params.params < chosen->params.params)) {
            chosen = &ep;
        }
    }

    const Operator u = unitary_from_params(chosen->params);
    std::vector<Ket> dirs;
    for (Eigen::Index k = 0; k < static_cast<Eigen::Index>(d); ++k) {
        // Fix each direction's global phase: largest component real positive.
        CVector col = u.matrix().col(k);
        Eigen::Index top = 0;
        col.cwiseAbs().maxCoeff(&top);
        col *= std::polar(1.0, -std::arg(col[top]));
        dirs.push_back(Ket::normalized(col));
    }
    return evaluate_projectors(e, c, ProjectorSet(std::move(dirs)));
}

DiscriminationResult success_probability(const ProductEnsemble& e, const OptimizerConfig& cfg) {
    return optimize_projectors(e, find_configuration(e), cfg);
}

namespace {

// max over permutations alpha, beta of min_k value[k][alpha k][beta k], where
// value[k][i][j] = min(|<phi_k|eta1^(i)>|, |<phi_k|eta2^(j)>|).
template <std::size_t D>
double best_worst_overlap(const std::array<std::array<double, D>, D>& of,
                          const std::array<std::array<double, D>, D>& os) {
    std::array<std::size_t, D> alpha;
    std::iota(alpha.begin(), alpha.end(), 0);
    double best = 0.0;
    do {
        std::array<std::size_t, D> beta;
        std::iota(beta.begin(), beta.end(), 0);
        double lo_first = 1.0;
        for (std::size_t k = 0; k < D; ++k) lo_first = std::min(lo_first, of[k][alpha[k]]);
        if (lo_first <= best) continue;
        do {
            double lo = lo_first;
            for (std::size_t k = 0; k < D && lo > best; ++k) lo = std::min(lo, os[k][beta[k]]);
            best = std::max(best, lo);
        } while (std::next_permutation(beta.begin(), beta.end()));
    } while (std::next_permutation(alpha.begin(), alpha.end()));
    return best;
}

template <std::size_t D>
void fill_tables(const std::array<std::array<cplx, D>, D>& dirs, const TwoBlockView& v,
                 std::array<std::array<double, D>, D>& of, std::array<std::array<double, D>, D>& os) {
    for (std::size_t k = 0; k < D; ++k) {
        for (std::size_t i = 0; i < D; ++i) {
            cplx a = 0.0, b = 0.0;
            for (std::size_t n = 0; n < D; ++n) {
                a += std::conj(dirs[k][n]) * v.first[i][n];
                b += std::conj(dirs[k][n]) * v.second[i][n];
            }
            of[k][i] = std::abs(a);
            os[k][i] = std::abs(b);
        }
    }
}

std::size_t grid_points(double lo, double hi, double step, bool closed) {
    const double span = (hi - lo) / step;
    return static_cast<std::size_t>(std::floor(span + 1e-9)) + (closed ? 1 : 0);
}

double oracle_qubit(const TwoBlockView& v, double step) {
    constexpr double pi = std::numbers::pi;
    const std::size_t na = grid_points(0.0, pi / 2, step, true);
    const std::size_t nb = std::max<std::size_t>(1, grid_points(0.0, 2 * pi, step, false));
    std::vector<double> row_best(na, 0.0);
    parallel_for(na, [&](std::size_t ia) {
        const double a = std::min(ia * step, pi / 2);
        const double ca = std::cos(a), sa = std::sin(a);
        std::array<std::array<double, 2>, 2> of{}, os{};
        double best = 0.0;
        for (std::size_t ib = 0; ib < nb; ++ib) {
            const cplx ph = std::polar(1.0, ib * step);
            const std::array<std::array<cplx, 2>, 2> dirs{{{ca, ph * sa}, {-std::conj(ph) * sa, ca}}};
            fill_tables<2>(dirs, v, of, os);
            best = std::max(best, best_worst_overlap<2>(of, os));
        }
        row_best[ia] = best;
    });
    const double b = *std::max_element(row_best.begin(), row_best.end());
    return b * b;
}

double oracle_qutrit(const TwoBlockView& v, double step) {
    constexpr double pi = std::numbers::pi;
    bool real = true;
    for (const auto* block : {&v.first, &v.second}) {
        for (const auto& k : *block) real = real && k.amplitudes().imag().cwiseAbs().maxCoeff() <= kAlgebraTol;
    }
    // Frame angles t in [0, pi/2], p in [0, pi); the remaining ranges are
    // sign flips absorbed in the phases. Real ensembles use the phases
    // {0, pi} plus a roll r in [0, pi) about phi, which together cover all
    // real frames. Complex ensembles grid both phases and no roll.
    const std::size_t nt = grid_points(0.0, pi / 2, step, true);
    const std::size_t np = grid_points(0.0, pi, step, false);
    const std::size_t nr = real ? grid_points(0.0, pi, step, false) : 1;
    std::vector<double> phases;
    if (real) {
        phases = {0.0, pi};
    } else {
        for (std::size_t i = 0, n = grid_points(0.0, 2 * pi, step, false); i < n; ++i) phases.push_back(i * step);
    }
    std::vector<double> row_best(nt, 0.0);
    parallel_for(nt, [&](std::size_t it) {
        const double t = std::min(it * step, pi / 2);
        const double st = std::sin(t), ct = std::cos(t);
        std::array<std::array<double, 3>, 3> of{}, os{};
        double best = 0.0;
        for (std::size_t ip = 0; ip < np; ++ip) {
            const double sp = std::sin(ip * step), cp = std::cos(ip * step);
            for (double pa : phases) {
                const cplx ea = std::polar(1.0, pa);
                for (double pb : phases) {
                    const cplx eb = std::polar(1.0, pb);
                    const std::array<cplx, 3> f0{st * cp, st * sp * ea, ct * eb};
                    const std::array<cplx, 3> f1{-sp, ea * cp, 0.0};
                    const std::array<cplx, 3> f2{ct * cp, ct * sp * ea, -st * eb};
                    for (std::size_t ir = 0; ir < nr; ++ir) {
                        const double cr = std::cos(ir * step), sr = std::sin(ir * step);
                        std::array<std::array<cplx, 3>, 3> dirs;
                        for (std::size_t n = 0; n < 3; ++n) {
                            dirs[0][n] = f0[n];
                            dirs[1][n] = cr * f1[n] + sr * f2[n];
                            dirs[2][n] = -sr * f1[n] + cr * f2[n];
                        }
                        fill_tables<3>(dirs, v, of, os);
                        best = std::max(best, best_worst_overlap<3>(of, os));
                    }
                }
            }
        }
        row_best[it] = best;
    });
    const double b = *std::max_element(row_best.begin(), row_best.end());
    return b * b;
}

}  // namespace

double brute_force_oracle(const ProductEnsemble& e, double grid_step) {
    const TwoBlockView v = require_two_block(e, "brute_force_oracle");
    if (!(grid_step > 0.0) || !std::isfinite(grid_step)) {
        throw Error("brute_force_oracle: grid step must be positive");
    }
    if (v.d == 2) return oracle_qubit(v, grid_step);
    if (v.d == 3) return oracle_qutrit(v, grid_step);
    throw Error("brute_force_oracle: unsupported for d > 3");
}

}  // namespace enscoh
