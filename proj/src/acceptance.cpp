#include "enscoh/acceptance.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

#include "enscoh/coherence.hpp"
#include "enscoh/discrimination.hpp"
#include "enscoh/sweep.hpp"
#include "enscoh/unitary_opt.hpp"

namespace enscoh {

namespace {

constexpr double pi = std::numbers::pi;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// Seeded uniform draws independent of the standard distributions.
class Draw {
public:
    explicit Draw(std::uint64_t seed) : rng_(seed) {}
    double uniform(double hi) { return static_cast<double>(rng_() >> 11) * 0x1.0p-53 * hi; }
    double normal() {
        const double u1 = 1.0 - uniform(1.0), u2 = uniform(1.0);
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2 * pi * u2);
    }

private:
    std::mt19937_64 rng_;
};

class Table {
public:
    Table(std::vector<AcceptanceItem>& items, const std::function<void(const AcceptanceItem&)>& cb)
        : items_(items), cb_(cb) {}

    void add(int c, std::string name, std::string expected, std::string actual, std::string tol, bool pass) {
        items_.push_back({c, std::move(name), std::move(expected), std::move(actual), std::move(tol), pass});
        if (cb_) cb_(items_.back());
    }
    void close(int c, std::string name, double expected, double actual, double tol) {
        add(c, std::move(name), num(expected), num(actual), num(tol), std::abs(actual - expected) <= tol);
    }
    void max_error(int c, std::string name, double err, double tol) {
        add(c, std::move(name), "max error <= " + num(tol), num(err), num(tol), err <= tol);
    }

private:
    std::vector<AcceptanceItem>& items_;
    const std::function<void(const AcceptanceItem&)>& cb_;
};

// Cached optimizer reports shared by criteria 3 and 4.
class Reports {
public:
    const CoherenceReport& l1(const std::string& name) {
        auto it = cache_.find(name);
        if (it == cache_.end()) {
            const ProductEnsemble e = named_ensemble(name);
            const auto cfg = OptimizerConfig::defaults_for(e.d1(), e.d2());
            it = cache_.emplace(name, mec(e, CoherenceMeasure::L1, cfg)).first;
        }
        return it->second;
    }

private:
    std::map<std::string, CoherenceReport> cache_;
};

// Max p_succ per non-empty bin of 10 equal-width c_r bins must not increase.
bool envelope_non_increasing(const std::vector<SweepRow>& rows, std::string& detail) {
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (const auto& r : rows) {
        lo = std::min(lo, r.c_r);
        hi = std::max(hi, r.c_r);
    }
    std::vector<double> env(10, -1.0);
    for (const auto& r : rows) {
        auto b = static_cast<std::size_t>(hi > lo ? (r.c_r - lo) / (hi - lo) * 10.0 : 0.0);
        b = std::min<std::size_t>(b, 9);
        env[b] = std::max(env[b], r.p_succ);
    }
    bool ok = true;
    double prev = std::numeric_limits<double>::infinity();
    detail.clear();
    for (double v : env) {
        if (v < 0.0) continue;
        if (v > prev + 1e-9) ok = false;
        prev = v;
        detail += (detail.empty() ? "" : " ") + num(v);
    }
    return ok;
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) mx += x[i], my += y[i];
    mx /= n;
    my /= n;
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    return sxy / std::sqrt(sxx * syy);
}

void criterion1(Table& t) {
    const ProductEnsemble e = named_ensemble("e1");
    t.close(1, "MEC_l1(E1)", 3.0, mec(e, CoherenceMeasure::L1, OptimizerConfig::defaults_for(2, 2)).mec, 1e-9);
}

void criterion2(Table& t) {
    const auto r = mec(named_ensemble("e2"), CoherenceMeasure::L1, OptimizerConfig::defaults_for(2, 2));
    t.close(2, "MEC_l1(E2)", 1.914, r.mec, 0.005);
    t.close(2, "MEC^n_l1(E2)", 0.638, r.mec_normalized, 0.002);
}

void criterion3(Table& t, Reports& reports) {
    t.close(3, "MEC^n_l1(NLWE)", 0.491, reports.l1("nlwe").mec_normalized, 0.01);
    t.close(3, "MEC^n_l1(Tiles)", 0.772, reports.l1("tiles").mec_normalized, 0.01);
    t.close(3, "MEC^n_l1(NLWE-4th)", 0.567, reports.l1("nlwe-minus-fourth").mec_normalized, 0.01);
    t.close(3, "MEC^n_l1(Tiles-stopper)", 0.875, reports.l1("tiles-minus-stopper").mec_normalized, 0.01);
}

void criterion4(Table& t, Reports& reports) {
    t.close(4, "CD_l1(NLWE)", 4.076, reports.l1("nlwe").deficit, 0.02);
    t.close(4, "CD_l1(Tiles)", 1.823, reports.l1("tiles").deficit, 0.02);
    t.close(4, "MEC_l1(Pyramid)", 7.055, reports.l1("pyramid").mec, 0.02);
    t.close(4, "CD_l1(Pyramid)", 1.197, reports.l1("pyramid").deficit, 0.02);
}

void criterion5(Table& t) {
    const ProductEnsemble e = make_arb_2x2(pi / 2, pi / 4, pi / 2, pi / 2);
    const TwoBlockView v = require_two_block(e, "maximal complex 2x2");
    t.close(5, "|<eta1|eta2>| (maximal complex 2x2)", 0.92388, std::abs(inner_product(v.first[0], v.second[0])), 1e-5);
    const auto cfg = OptimizerConfig::defaults_for(2, 2);
    for (auto m : {CoherenceMeasure::L1, CoherenceMeasure::RelativeEntropy}) {
        t.close(5, "MEC_" + std::string(to_string(m)) + " maximal (maximal complex 2x2)", max_coherence(m, 4),
                mec(e, m, cfg).mec, 1e-3);
    }
    const double cr = relative_local_coherence(e);
    t.add(5, "C_r (maximal complex 2x2)", "> 0.3", num(cr), "-", cr > 0.3);
}

void criterion6(Table& t) {
    SweepSpec spec;
    spec.samples = 500;
    spec.family = SweepFamily::Arb2x2Real;
    const auto rows = run_sweep(spec);

    // Uniform sampling essentially never lands on C_r = 0, so the vanishing
    // case is also probed at explicit coinciding-basis points.
    std::vector<SweepRow> zero;
    for (const auto& r : rows) {
        if (r.c_r < 1e-9) zero.push_back(r);
    }
    Draw draw(kAcceptanceSeed + 6);
    for (int i = 0; i < 20; ++i) {
        const double th = draw.uniform(pi);
        zero.push_back(sweep_row(SweepFamily::Arb2x2Real, th, 0.0, th, 0.0, spec));
    }
    int bad = 0;
    for (const auto& r : zero) {
        if (r.c_r >= 1e-9 || std::abs(r.mec_n_l1 - 1.0) > 1e-3 || std::abs(r.p_succ - 1.0) > 1e-6) ++bad;
    }
    t.add(6, "2x2 real: C_r = 0 gives MEC^n = 1, P_succ = 1 (" + std::to_string(zero.size()) + " samples)",
          "0 violations", std::to_string(bad) + " violations", "1e-3 / 1e-6", bad == 0);

    std::string detail;
    bool ok = envelope_non_increasing(rows, detail);
    t.add(6, "2x2 real: P_succ envelope non-increasing in C_r", "non-increasing", detail, "1e-9", ok);

    std::vector<double> m, p;
    for (const auto& r : rows) m.push_back(r.mec_n_l1), p.push_back(r.p_succ);
    const double rho = pearson(m, p);
    t.add(6, "2x2 real: Pearson(MEC^n_l1, P_succ)", ">= 0.9", num(rho), "-", rho >= 0.9);

    spec.family = SweepFamily::Arb2x3Real;
    ok = envelope_non_increasing(run_sweep(spec), detail);
    t.add(6, "2x3 real: P_succ envelope non-increasing in C_r", "non-increasing", detail, "1e-9", ok);
}

void criterion7(Table& t) {
    Draw draw(kAcceptanceSeed + 7);
    double err = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double t1 = draw.uniform(pi), t2 = draw.uniform(pi);
        const ProductEnsemble e = make_arb_2x2(t1, t2, 0.0, 0.0);
        const double p = success_probability(e, OptimizerConfig::defaults_for(2, 2)).p_succ_worst;
        err = std::max(err, std::abs(p - brute_force_oracle(e, 1e-3)));
    }
    t.max_error(7, "2x2 real: optimizer vs grid oracle (100 ensembles, step 1e-3)", err, 1e-3);
    err = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double t1 = draw.uniform(pi), p1 = draw.uniform(2 * pi);
        const double t2 = draw.uniform(pi), p2 = draw.uniform(2 * pi);
        const ProductEnsemble e = make_arb_2x3(t1, p1, t2, p2);
        const double p = success_probability(e, OptimizerConfig::defaults_for(2, 3)).p_succ_worst;
        err = std::max(err, std::abs(p - brute_force_oracle(e, 2e-2)));
    }
    t.max_error(7, "2x3 real: optimizer vs grid oracle (20 ensembles, step 2e-2)", err, 5e-3);
}

void criterion8(Table& t) {
    Draw draw(kAcceptanceSeed + 8);
    double err_p = 0.0, err_folded = 0.0, err_cr = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double t1 = draw.uniform(pi), t2 = draw.uniform(pi);
        const ProductEnsemble e = make_arb_2x2(t1, t2, 0.0, 0.0);
        const double p = success_probability(e, OptimizerConfig::defaults_for(2, 2)).p_succ_worst;
        const double delta = std::abs(t2 - t1);
        const double folded = std::min(delta, pi - delta);
        err_p = std::max(err_p, std::abs(p - std::pow(std::cos(delta / 4), 2)));
        err_folded = std::max(err_folded, std::abs(p - std::pow(std::cos(folded / 4), 2)));
        err_cr = std::max(err_cr, std::abs(relative_local_coherence(e) - std::abs(std::sin(t2 - t1))));
    }
    t.max_error(8, "P_succ vs cos^2((theta2-theta1)/4) (50 ensembles)", err_p, 1e-4);
    t.max_error(8, "P_succ vs cos^2(min(|dtheta|, pi-|dtheta|)/4) (diagnostic)", err_folded, 1e-4);
    t.max_error(8, "C_r vs |sin(theta2-theta1)|", err_cr, 1e-9);
}

void criterion9(Table& t) {
    Draw draw(kAcceptanceSeed + 9);
    int ok2 = 0, ok3 = 0;
    for (int i = 0; i < 50; ++i) {
        const double th = draw.uniform(pi);
        ok2 += check_maximal_superposition(make_arb_2x2(th, th, 0.0, 0.0), OptimizerConfig::defaults_for(2, 2));
    }
    for (int i = 0; i < 50; ++i) {
        const double th = draw.uniform(pi), ph = draw.uniform(2 * pi);
        ok3 += check_maximal_superposition(make_arb_2x3(th, ph, th, ph), OptimizerConfig::defaults_for(2, 3));
    }
    t.add(9, "2x2 C_r = 0: superposed C_l1 = 3", "50/50", std::to_string(ok2) + "/50", "1e-3", ok2 == 50);
    t.add(9, "2x3 C_r = 0: superposed C_l1 = 5", "50/50", std::to_string(ok3) + "/50", "1e-3", ok3 == 50);
}

void criterion10(Table& t) {
    Draw draw(kAcceptanceSeed + 10);
    auto ginibre = [&draw](Eigen::Index d) {
        CMatrix g(d, d);
        for (Eigen::Index i = 0; i < d; ++i) {
            for (Eigen::Index j = 0; j < d; ++j) g(i, j) = cplx(draw.normal(), draw.normal());
        }
        return g;
    };
    int bounds = 0, dephased = 0, covariance = 0;
    for (int n = 0; n < 1000; ++n) {
        const auto d = static_cast<Eigen::Index>(2 + n % 4);
        CMatrix rho;
        if (n % 2 == 0) {
            const CMatrix g = ginibre(d);
            rho = g * g.adjoint();
            rho /= rho.trace();
        } else {
            const CVector v = ginibre(d).col(0).normalized();
            rho = v * v.adjoint();
        }
        rho = (rho + rho.adjoint()).eval() / 2.0;
        const DensityMatrix dm(rho);
        const CMatrix u = Eigen::HouseholderQR<CMatrix>(ginibre(d)).householderQ();
        std::vector<Ket> basis;
        for (Eigen::Index k = 0; k < d; ++k) basis.push_back(Ket::normalized(u.col(k)));
        const DensityMatrix rotated(CMatrix(u * rho * u.adjoint()));
        for (auto m : {CoherenceMeasure::L1, CoherenceMeasure::RelativeEntropy}) {
            auto c = [m](const DensityMatrix& r, std::span<const Ket> b) {
                return m == CoherenceMeasure::L1 ? c_l1(r, b) : c_rel(r, b);
            };
            const double v = c(dm, {});
            if (v < -1e-9 || v > max_coherence(m, static_cast<std::size_t>(d)) + 1e-9) ++bounds;
            if (std::abs(c(dephase(dm, computational_basis(static_cast<std::size_t>(d))), {})) > 1e-9) ++dephased;
            // C(rho, {|k>}) = C(U rho U^dag, {U|k>})
            if (std::abs(c(rotated, basis) - v) > 1e-8) ++covariance;
        }
    }
    t.add(10, "1000 states: 0 <= C <= C_max", "0 violations", std::to_string(bounds) + " violations", "1e-9",
          bounds == 0);
    t.add(10, "1000 states: C(dephased) = 0", "0 violations", std::to_string(dephased) + " violations", "1e-9",
          dephased == 0);
    t.add(10, "1000 states: basis covariance", "0 violations", std::to_string(covariance) + " violations", "1e-8",
          covariance == 0);
}

void criterion11(Table& t) {
    SweepSpec spec;
    spec.samples = 25;
    spec.family = SweepFamily::Arb2x2Complex;
    std::ostringstream a, b;
    write_csv(a, run_sweep(spec));
    write_csv(b, run_sweep(spec));
    t.add(11, "sweep CSV byte-identical across runs", "identical",
          a.str() == b.str() ? "identical" : "different", "-", a.str() == b.str());
}

}  // namespace

std::vector<AcceptanceItem> run_acceptance(const std::set<int>& criteria,
                                           const std::function<void(const AcceptanceItem&)>& on_item) {
    std::vector<AcceptanceItem> items;
    Table t(items, on_item);
    Reports reports;
    auto want = [&criteria](int c) { return criteria.empty() || criteria.count(c) > 0; };
    auto guarded = [&](int c, const std::function<void()>& body) {
        if (!want(c)) return;
        try {
            body();
        } catch (const std::exception& err) {
            t.add(c, "criterion " + std::to_string(c) + " raised", "no error", err.what(), "-", false);
        }
    };
    guarded(1, [&] { criterion1(t); });
    guarded(2, [&] { criterion2(t); });
    guarded(3, [&] { criterion3(t, reports); });
    guarded(4, [&] { criterion4(t, reports); });
    guarded(5, [&] { criterion5(t); });
    guarded(6, [&] { criterion6(t); });
    guarded(7, [&] { criterion7(t); });
    guarded(8, [&] { criterion8(t); });
    guarded(9, [&] { criterion9(t); });
    guarded(10, [&] { criterion10(t); });
    guarded(11, [&] { criterion11(t); });
    return items;
}

bool criterion_passed(const std::vector<AcceptanceItem>& items, int c) {
    bool any = false;
    for (const auto& it : items) {
        if (it.criterion != c) continue;
        if (!it.pass) return false;
        any = true;
    }
    return any;
}

}  // namespace enscoh
