#include <doctest.h>

#include <algorithm>

#include "enscoh/ensembles.hpp"
#include "test_support.hpp"

using namespace enscoh;
using testing::pi;

namespace {

const double r2 = 1.0 / std::sqrt(2.0);

bool same_up_to_phase(const Ket& a, const Ket& b) { return std::abs(std::abs(inner_product(a, b)) - 1.0) <= 1e-10; }

bool same_ensemble(const ProductEnsemble& a, const ProductEnsemble& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!same_up_to_phase(a[i].alice, b[i].alice) || !same_up_to_phase(a[i].bob, b[i].bob)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("computational ensembles") {
    for (auto [d1, d2] : {std::pair{2, 2}, {2, 3}, {3, 3}}) {
        const auto e = make_computational(d1, d2);
        CHECK(e.size() == std::size_t(d1 * d2));
        CHECK(is_orthonormal_set(e.joint_states()));
    }
}

TEST_CASE("E2") {
    const auto e = make_e2();
    CHECK(e.size() == 4);
    CHECK(e[2].alice.amplitudes().isApprox(Ket::basis(2, 1).amplitudes()));
    CHECK(e[2].bob.amplitudes().isApprox(Ket{r2, r2}.amplitudes()));
    CHECK(is_orthonormal_set(e.joint_states()));
    CVector sup(4);
    sup << 0.5, 0.5, r2, 0.0;
    CHECK(superposed_state(e).amplitudes().isApprox(sup, 1e-12));
    CVector uniform = CVector::Constant(4, 0.5);
    CHECK(superposed_state(make_computational(2, 2)).amplitudes().isApprox(uniform));
}

TEST_CASE("ensemble validation") {
    std::vector<ProductState> overlapping{{Ket::basis(2, 0), Ket::basis(2, 0)}, {Ket::basis(2, 0), Ket{r2, r2}}};
    CHECK_THROWS_AS(ProductEnsemble(2, 2, overlapping), Error);
    std::vector<ProductState> wrong_dim{{Ket::basis(3, 0), Ket::basis(2, 0)}};
    CHECK_THROWS_AS(ProductEnsemble(2, 2, wrong_dim), Error);
    CHECK_THROWS_AS(ProductEnsemble(2, 2, {}), Error);
    CHECK_THROWS_AS(named_ensemble("nope"), Error);
}

TEST_CASE("arbitrary 2x2 family") {
    CHECK(same_ensemble(make_arb_2x2(0, 0, 0, 0), make_computational(2, 2)));
    CHECK(same_ensemble(make_arb_2x2(0, pi / 2, 0, 0), make_e2()));
    const auto r3 = make_arb_2x2(pi / 2, pi / 4, pi / 2, pi / 2);
    const TwoBlockView v = require_two_block(r3, "test");
    CHECK(same_up_to_phase(v.first[0], Ket{r2, cplx(0, r2)}));
    CHECK(same_up_to_phase(v.second[0], Ket{std::cos(pi / 8), cplx(0, std::sin(pi / 8))}));
    CHECK(std::abs(inner_product(v.first[0], v.second[0])) == doctest::Approx(0.92388).epsilon(1e-5));
}

TEST_CASE("arbitrary 2x3 family") {
    testing::Rng rng(31);
    for (int i = 0; i < 50; ++i) {
        const double t1 = rng.uniform(0, pi), p1 = rng.uniform(0, 2 * pi);
        const double t2 = rng.uniform(0, pi), p2 = rng.uniform(0, 2 * pi);
        const auto e = make_arb_2x3(t1, p1, t2, p2);
        CHECK(e.size() == 6);
        CHECK(is_orthonormal_set(e.joint_states()));
        CHECK(same_ensemble(make_arb_2xd(qutrit_frame(t1, p1), qutrit_frame(t2, p2)), e));
        CHECK(relative_local_coherence(make_arb_2x3(t1, p1, t1, p1)) <= 1e-9);
    }
    const auto e = make_arb_2x3(pi / 2, 0, pi / 2, pi / 2);
    const TwoBlockView v = require_two_block(e, "test");
    CHECK(same_up_to_phase(v.first[0], Ket::basis(3, 0)));
    CHECK(same_up_to_phase(v.second[0], Ket::basis(3, 1)));
}

TEST_CASE("2xd from bases") {
    const auto comp = computational_basis(4);
    CHECK(same_ensemble(make_arb_2xd(comp, comp), make_computational(2, 4)));
    CHECK(same_ensemble(make_arb_2xd({qubit_eta(0.3, 1.0), qubit_eta_perp(0.3, 1.0)},
                                     {qubit_eta(2.0, 0.5), qubit_eta_perp(2.0, 0.5)}),
                        make_arb_2x2(0.3, 2.0, 1.0, 0.5)));
    const std::vector<Ket> skew{Ket::basis(2, 0), Ket{r2, r2}};
    CHECK_THROWS_AS(make_arb_2xd(skew, skew), Error);
}

TEST_CASE("NLWE and Tiles") {
    const auto n = make_nlwe();
    CHECK(n.size() == 9);
    CHECK(make_nlwe_minus_fourth().size() == 8);
    CHECK(is_orthonormal_set(n.joint_states()));
    CHECK(n[0].alice.amplitudes().isApprox(Ket::basis(3, 1).amplitudes()));
    CHECK(n[0].bob.amplitudes().isApprox(Ket::basis(3, 1).amplitudes()));
    CHECK(make_nlwe_minus_fourth().locc_rounds() == 4);
    CHECK(make_nlwe_minus_fourth().starting_party() == "B");

    const auto t = make_tiles();
    CHECK(t.size() == 5);
    CHECK(make_tiles_minus_stopper().size() == 4);
    CHECK(is_orthonormal_set(t.joint_states()));
    const Ket& stopper = t[4].alice;
    CHECK(stopper.amplitudes().norm() == doctest::Approx(1.0));
    CHECK(stopper.amplitudes().isApprox(CVector::Constant(3, 1.0 / std::sqrt(3.0))));
}

TEST_CASE("Pyramid") {
    for (int i = 0; i < 5; ++i) {
        CHECK(pyramid_vector(i).amplitudes().norm() == doctest::Approx(1.0));
        // orthogonality skips one neighbour around the pentagon
        CHECK(std::abs(inner_product(pyramid_vector(i), pyramid_vector((i + 2) % 5))) <= 1e-12);
        CHECK(std::abs(inner_product(pyramid_vector(i), pyramid_vector((i + 1) % 5))) > 0.5);
    }
    const auto p = make_pyramid();
    CHECK(p.size() == 5);
    CHECK(is_orthonormal_set(p.joint_states()));
}

TEST_CASE("superposed state is normalized") {
    for (const auto& name : ensemble_names()) {
        CHECK(superposed_state(named_ensemble(name)).amplitudes().norm() == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("relative local coherence") {
    CHECK(relative_local_coherence(make_arb_2x2(0.7, 0.7, 1.2, 1.2)) <= 1e-12);
    CHECK(relative_local_coherence(make_e2()) == doctest::Approx(1.0));
    CHECK_THROWS_AS(relative_local_coherence(make_nlwe()), Error);
    for (double t1 = 0.0; t1 <= pi; t1 += 0.13) {
        for (double t2 = 0.0; t2 <= pi; t2 += 0.17) {
            const double cr = relative_local_coherence(make_arb_2x2(t1, t2, 0, 0));
            CHECK(std::abs(cr - std::abs(std::sin(t2 - t1))) <= 1e-9);
            CHECK(std::abs(cr - relative_local_coherence(make_arb_2x2(t2, t1, 0, 0))) <= 1e-12);
        }
    }
}

TEST_CASE("relative local coherence bounds and relabeling") {
    testing::Rng rng(32);
    for (int i = 0; i < 50; ++i) {
        const std::size_t d = 2 + rng.index(3);
        const auto b1 = testing::columns(rng.unitary(d));
        auto b2 = testing::columns(rng.unitary(d));
        const double cr = relative_local_coherence(make_arb_2xd(b1, b2));
        CHECK(cr >= 0.0);
        CHECK(cr <= d - 1.0 + 1e-12);
        std::reverse(b2.begin(), b2.end());
        CHECK(std::abs(relative_local_coherence(make_arb_2xd(b1, b2)) - cr) <= 1e-12);
    }
}

TEST_CASE("two-block recognition") {
    CHECK(two_block_view(make_e2()).has_value());
    CHECK_FALSE(two_block_view(make_tiles()).has_value());
    CHECK_FALSE(two_block_view(make_computational(3, 3)).has_value());
    const auto v = two_block_view(make_computational(2, 3));
    REQUIRE(v);
    CHECK(v->d == 3);
}

TEST_CASE("registry") {
    for (const auto& name : ensemble_names()) CHECK_NOTHROW(named_ensemble(name));
    CHECK(named_ensemble("tiles-minus-stopper").distinguishability_class() ==
          DistinguishabilityClass::FiniteMultiRound);
}
