#include <doctest.h>

#include <algorithm>

#include "enscoh/discrimination.hpp"
#include "test_support.hpp"

using namespace enscoh;
using testing::pi;

namespace {

const double kBest2 = std::pow(std::cos(pi / 8), 2);  // 0.853553...

double analytic_2x2(double t1, double t2) {
    const double delta = std::abs(t2 - t1);
    return std::pow(std::cos(std::min(delta, pi - delta) / 4), 2);
}

}  // namespace

TEST_CASE("configuration finding") {
    // |<eta1|eta2>| > |<eta1|eta2_perp>| keeps the identity pairing.
    CHECK(find_configuration(make_arb_2x2(0.2, 0.6, 0, 0)).pairing == std::vector<std::size_t>{0, 1});
    CHECK(find_configuration(make_arb_2x2(0.2, 0.2 + 2.5, 0, 0)).pairing == std::vector<std::size_t>{1, 0});
    const auto same = make_arb_2x3(1.0, 2.0, 1.0, 2.0);
    CHECK(find_configuration(same).pairing == std::vector<std::size_t>{0, 1, 2});
    CHECK_THROWS_AS(find_configuration(make_nlwe()), Error);

    Configuration bad{3, {0, 0, 1}};
    CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("criterion names") {
    CHECK(parse_criterion("avg") == SuccessCriterion::Average);
    CHECK(to_string(SuccessCriterion::Worst) == "worst");
    CHECK_THROWS_AS(parse_criterion("best"), Error);
}

TEST_CASE("projector sets") {
    CHECK_THROWS_AS(ProjectorSet({Ket::basis(2, 0), Ket{0.6, 0.8}}), Error);
    CHECK_THROWS_AS(ProjectorSet({Ket::basis(3, 0), Ket::basis(3, 1)}), Error);
    const ProjectorSet p({Ket::basis(2, 0), Ket::basis(2, 1)});
    CHECK(p.projector(1).is_rank1_projector());
}

TEST_CASE("E2 and the half-angle optimum") {
    const auto cfg = OptimizerConfig::defaults_for(2, 2);
    const auto r = success_probability(make_e2(), cfg);
    CHECK(r.p_succ_worst == doctest::Approx(kBest2).epsilon(1e-8));
    CHECK(r.p_succ_avg == doctest::Approx(kBest2).epsilon(1e-8));
    // The optimal direction sits halfway between |0> and |+>.
    CHECK(std::abs(inner_product(r.projectors.directions()[0], qubit_eta(pi / 4, 0))) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(r.reduced_sets.size() == 2);
    CHECK(r.reduced_sets[0].index == 1);
    CHECK(r.reduced_sets[1].index == 4);

    // Projector-angle grid at step 1e-5 for the same ensemble.
    double best = 0;
    for (double a = 0; a <= pi / 2; a += 1e-5) {
        const double c = std::cos(a), s = std::sin(a);
        best = std::max(best, std::min(c * c, std::pow(c * std::sqrt(0.5) + s * std::sqrt(0.5), 2)));
    }
    CHECK(std::abs(best - kBest2) <= 1e-5);
}

TEST_CASE("coinciding bases are perfectly distinguishable") {
    const auto cfg2 = OptimizerConfig::defaults_for(2, 2), cfg3 = OptimizerConfig::defaults_for(2, 3);
    CHECK(success_probability(make_arb_2x2(0.8, 0.8, 0, 0), cfg2).p_succ_worst == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(success_probability(make_computational(2, 2), cfg2).p_succ_worst == doctest::Approx(1.0).epsilon(1e-9));
    const auto e = make_arb_2x3(1.0, 2.0, 1.0, 2.0);
    const auto r = success_probability(e, cfg3);
    CHECK(r.p_succ_worst == doctest::Approx(1.0).epsilon(1e-9));
    const auto frame = qutrit_frame(1.0, 2.0);
    for (std::size_t k = 0; k < 3; ++k) {
        double best = 0;
        for (const auto& f : frame) best = std::max(best, std::abs(inner_product(f, r.projectors.directions()[k])));
        CHECK(best == doctest::Approx(1.0).epsilon(1e-8));
    }
    CHECK(brute_force_oracle(make_arb_2x2(0.8, 0.8, 0, 0), 1e-3) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(brute_force_oracle(make_computational(2, 3), 2e-2) == doctest::Approx(1.0));
}

TEST_CASE("random real 2x2 ensembles against the oracle and the closed form") {
    testing::Rng rng(51);
    const auto cfg = OptimizerConfig::defaults_for(2, 2);
    for (int i = 0; i < 20; ++i) {
        const double t1 = rng.uniform(0, pi), t2 = rng.uniform(0, pi);
        const auto e = make_arb_2x2(t1, t2, 0, 0);
        const auto r = success_probability(e, cfg);
        CHECK(std::abs(r.p_succ_worst - analytic_2x2(t1, t2)) <= 1e-6);
        CHECK(std::abs(r.p_succ_worst - brute_force_oracle(e, 1e-3)) <= 1e-3);
        CHECK(r.p_succ_worst <= r.p_succ_avg + 1e-12);
        CHECK(is_orthonormal_set(r.projectors.directions()));
        const auto swapped = success_probability(make_arb_2x2(t2, t1, 0, 0), cfg);
        CHECK(std::abs(swapped.p_succ_worst - r.p_succ_worst) <= 1e-8);
    }
}

TEST_CASE("complex 2x2 symmetry and the C_r = 0 equivalence") {
    testing::Rng rng(52);
    const auto cfg = OptimizerConfig::defaults_for(2, 2);
    for (int i = 0; i < 20; ++i) {
        const double t1 = rng.uniform(0, pi), t2 = rng.uniform(0, pi);
        const double p1 = rng.uniform(0, 2 * pi), p2 = rng.uniform(0, 2 * pi);
        const auto e = make_arb_2x2(t1, t2, p1, p2);
        const double p = success_probability(e, cfg).p_succ_worst;
        CHECK(std::abs(success_probability(make_arb_2x2(t2, t1, p2, p1), cfg).p_succ_worst - p) <= 1e-8);
        CHECK((p >= 1.0 - 1e-9) == (relative_local_coherence(e) <= 1e-9));
        CHECK(success_probability(make_arb_2x2(t1, t1, p1, p1), cfg).p_succ_worst == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("P_succ decreases with C_r at fixed theta1") {
    const auto cfg = OptimizerConfig::defaults_for(2, 2);
    std::vector<std::pair<double, double>> pts;
    for (double t2 = 0.0; t2 <= pi; t2 += pi / 40) {
        const auto e = make_arb_2x2(0.4, t2, 0, 0);
        pts.push_back({relative_local_coherence(e), success_probability(e, cfg).p_succ_worst});
    }
    std::sort(pts.begin(), pts.end());
    for (std::size_t i = 1; i < pts.size(); ++i) CHECK(pts[i].second <= pts[i - 1].second + 1e-9);
}

TEST_CASE("2x3 separation lowers P_succ") {
    const auto cfg = OptimizerConfig::defaults_for(2, 3);
    double prev = 1.0 + 1e-9;
    for (double gap : {0.0, 0.1, 0.3, 0.6}) {
        const auto e = make_arb_2x3(0.9, 0.5, 0.9 + gap, 0.5);
        const auto r = success_probability(e, cfg);
        CHECK(r.p_succ_worst <= prev);
        prev = r.p_succ_worst;
        CHECK(r.p_succ_worst == doctest::Approx(brute_force_oracle(e, 2e-2)).epsilon(5e-3));
    }
    CHECK(prev < 0.99);
}

TEST_CASE("evaluation of fixed projectors") {
    const auto e = make_e2();
    const Configuration c = find_configuration(e);
    const auto r = evaluate_projectors(e, c, ProjectorSet({Ket::basis(2, 0), Ket::basis(2, 1)}));
    CHECK(r.p_succ_worst == doctest::Approx(0.5));
    CHECK(r.p_succ_avg == doctest::Approx(0.75));
    CHECK(r.overlap_sum == doctest::Approx(2.0 + std::sqrt(2.0)));
    CHECK_THROWS_AS(evaluate_projectors(e, Configuration{3, {0, 1, 2}}, ProjectorSet({Ket::basis(2, 0), Ket::basis(2, 1)})),
                    Error);
}

TEST_CASE("oracle rejects what it cannot grid") {
    CHECK_THROWS_AS(brute_force_oracle(make_computational(2, 4), 0.1), Error);
    CHECK_THROWS_AS(brute_force_oracle(make_e2(), 0.0), Error);
    CHECK_THROWS_AS(brute_force_oracle(make_nlwe(), 0.1), Error);
}
