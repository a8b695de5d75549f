#include <doctest.h>

#include "enscoh/ensembles.hpp"
#include "test_support.hpp"

using namespace enscoh;
using testing::pi;

namespace {
const double r2 = 1.0 / std::sqrt(2.0);
Ket plus() { return Ket{r2, r2}; }
}  // namespace

TEST_CASE("ket validation") {
    CHECK_THROWS_AS(Ket({1.0}), Error);
    CHECK_THROWS_AS(Ket({1.0, 1.0}), Error);
    CHECK_THROWS_AS(Ket({std::nan(""), 0.0}), Error);
    CHECK_THROWS_AS(Ket::normalized(CVector::Zero(3)), Error);
    CHECK(Ket::basis(3, 2)[2] == cplx(1.0));
    CHECK_THROWS_AS(Ket::basis(3, 3), Error);
}

TEST_CASE("tensor products of kets") {
    CVector e(4);
    CHECK(tensor_product(Ket::basis(2, 0), Ket::basis(2, 0)).amplitudes().isApprox(CVector::Unit(4, 0)));
    e << 0, 0, r2, r2;
    CHECK(tensor_product(Ket::basis(2, 1), plus()).amplitudes().isApprox(e));
    e << 0.5, 0.5, 0.5, 0.5;
    CHECK(tensor_product(plus(), plus()).amplitudes().isApprox(e));
}

TEST_CASE("tensor product norm is multiplicative") {
    testing::Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        const CVector a = rng.gaussian_vector(2 + rng.index(3)), b = rng.gaussian_vector(2 + rng.index(3));
        const Ket ka = Ket::normalized(a), kb = Ket::normalized(b);
        CHECK(tensor_product(ka, kb).amplitudes().norm() == doctest::Approx(1.0).epsilon(1e-12));
        const Operator op = tensor_product(Operator(a * a.adjoint()), Operator(b * b.adjoint()));
        CHECK(op.matrix().norm() == doctest::Approx(a.squaredNorm() * b.squaredNorm()).epsilon(1e-12));
    }
}

TEST_CASE("inner products") {
    CHECK(std::abs(inner_product(Ket::basis(2, 0), Ket::basis(2, 1))) == 0.0);
    CHECK(std::abs(inner_product(plus(), Ket::basis(2, 0))) == doctest::Approx(r2));
    const Ket eta1{r2, cplx(0, r2)};
    const Ket eta2{std::cos(pi / 8), cplx(0, std::sin(pi / 8))};
    CHECK(std::abs(inner_product(eta1, eta2)) == doctest::Approx(0.92388).epsilon(1e-5));
    CHECK_THROWS_AS(inner_product(Ket::basis(2, 0), Ket::basis(3, 0)), Error);
    const Ket a{cplx(0, 1), 0.0};
    CHECK(inner_product(a, Ket::basis(2, 0)) == cplx(0, -1));
}

TEST_CASE("unitary application") {
    const Ket k{0.6, cplx(0, 0.8)};
    CHECK(apply_unitary(Operator::identity(2), k).amplitudes() == k.amplitudes());
    CMatrix h(2, 2);
    h << r2, r2, r2, -r2;
    CHECK(apply_unitary(Operator(h), Ket::basis(2, 0)).amplitudes().isApprox(plus().amplitudes()));
    CMatrix x(2, 2);
    x << 0, 1, 1, 0;
    CHECK(apply_unitary(Operator(x), k)[0] == k[1]);
    CHECK_THROWS_AS(apply_unitary(Operator::identity(3), k), Error);
    CMatrix not_unitary = CMatrix::Identity(2, 2) * 2.0;
    CHECK_THROWS_AS(apply_unitary(Operator(not_unitary), k), Error);
    CHECK_THROWS_AS(Operator(CMatrix(2, 3)), Error);
}

TEST_CASE("projector and unitary predicates") {
    const CVector v = plus().amplitudes();
    CHECK(Operator(CMatrix(v * v.adjoint())).is_rank1_projector());
    CHECK_FALSE(Operator::identity(2).is_rank1_projector());
    CHECK(Operator::identity(3).is_unitary());
}

TEST_CASE("orthonormal sets") {
    const auto comp4 = computational_basis(4);
    CHECK(is_orthonormal_set(comp4));
    const std::vector<Ket> bad{Ket::basis(2, 0), plus()};
    CHECK_FALSE(is_orthonormal_set(bad));
    CHECK(is_orthonormal_set(make_nlwe().joint_states()));
}

TEST_CASE("density matrix validation") {
    CHECK_THROWS_AS(DensityMatrix(CMatrix::Identity(2, 2)), Error);
    CMatrix nonherm(2, 2);
    nonherm << 0.5, 0.1, 0.2, 0.5;
    CHECK_THROWS_AS(DensityMatrix{nonherm}, Error);
    CMatrix negative(2, 2);
    negative << 1.2, 0, 0, -0.2;
    CHECK_THROWS_AS(DensityMatrix{negative}, Error);
}

TEST_CASE("dephasing") {
    const auto comp = computational_basis(2);
    const DensityMatrix p = DensityMatrix::pure(plus());
    CHECK(dephase(p, comp).matrix().isApprox(CMatrix(Eigen::Vector2cd(0.5, 0.5).asDiagonal())));
    const DensityMatrix diag(CMatrix(Eigen::Vector2cd(0.3, 0.7).asDiagonal()));
    CHECK(dephase(diag, comp).matrix().isApprox(diag.matrix()));
    const Ket eta = qubit_eta(1.1, 0.4);
    const std::vector<Ket> own{eta, qubit_eta_perp(1.1, 0.4)};
    CHECK(dephase(DensityMatrix::pure(eta), own).matrix().isApprox(DensityMatrix::pure(eta).matrix(), 1e-12));
    const std::vector<Ket> partial{Ket::basis(2, 0)};
    CHECK_THROWS_AS(dephase(p, partial), Error);
    const std::vector<Ket> skew{Ket::basis(2, 0), plus()};
    CHECK_THROWS_AS(dephase(p, skew), Error);
}

TEST_CASE("dephasing properties on random states") {
    testing::Rng rng(12);
    for (int i = 0; i < 200; ++i) {
        const std::size_t d = 2 + rng.index(4);
        const DensityMatrix rho = rng.mixed(d);
        const auto basis = testing::columns(rng.unitary(d));
        const DensityMatrix once = dephase(rho, basis);
        const DensityMatrix twice = dephase(once, basis);
        CHECK((twice.matrix() - once.matrix()).cwiseAbs().maxCoeff() <= 1e-10);
        CHECK(std::abs(once.matrix().trace() - 1.0) <= 1e-10);
        CHECK(once.eigenvalues().front() >= 0.0);
    }
}

TEST_CASE("von Neumann entropy") {
    CHECK(von_neumann_entropy(DensityMatrix::pure(plus())) == doctest::Approx(0.0));
    CHECK(von_neumann_entropy(DensityMatrix(CMatrix::Identity(2, 2) / 2.0)) == doctest::Approx(1.0));
    // -(1/4) log2(1/4) - (3/4) log2(3/4)
    const DensityMatrix q(CMatrix(Eigen::Vector2cd(0.25, 0.75).asDiagonal()));
    CHECK(von_neumann_entropy(q) == doctest::Approx(0.811278).epsilon(1e-6));
    const std::vector<double> probs{0.5, 0.25, 0.25, 0.0};
    CHECK(shannon_entropy(probs) == doctest::Approx(1.5));

    testing::Rng rng(13);
    for (int i = 0; i < 100; ++i) {
        const std::size_t d = 2 + rng.index(4);
        const DensityMatrix rho = rng.mixed(d);
        const CMatrix u = rng.unitary(d);
        CMatrix rotated = u * rho.matrix() * u.adjoint();
        rotated = (rotated + rotated.adjoint()).eval() / 2.0;
        CHECK(std::abs(von_neumann_entropy(DensityMatrix(rotated)) - von_neumann_entropy(rho)) <= 1e-8);
    }
}
