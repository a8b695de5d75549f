#pragma once

#include <Eigen/QR>
#include <cmath>
#include <numbers>
#include <random>

#include "enscoh/quantum_core.hpp"

namespace testing {

using namespace enscoh;

inline constexpr double pi = std::numbers::pi;

class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}
    double uniform(double lo = 0.0, double hi = 1.0) { return std::uniform_real_distribution<double>(lo, hi)(g_); }
    double normal() { return std::normal_distribution<double>()(g_); }
    std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(g_); }

    CVector gaussian_vector(std::size_t d) {
        CVector v(static_cast<Eigen::Index>(d));
        for (auto& x : v) x = cplx(normal(), normal());
        return v;
    }
    Ket ket(std::size_t d) { return Ket::normalized(gaussian_vector(d)); }
    CMatrix unitary(std::size_t d) {
        CMatrix g(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
        for (Eigen::Index j = 0; j < g.cols(); ++j) g.col(j) = gaussian_vector(d);
        return Eigen::HouseholderQR<CMatrix>(g).householderQ();
    }
    DensityMatrix mixed(std::size_t d) {
        CMatrix g(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
        for (Eigen::Index j = 0; j < g.cols(); ++j) g.col(j) = gaussian_vector(d);
        CMatrix rho = g * g.adjoint();
        rho /= rho.trace();
        return DensityMatrix(CMatrix((rho + rho.adjoint()) / 2.0));
    }

private:
    std::mt19937_64 g_;
};

inline std::vector<Ket> columns(const CMatrix& u) {
    std::vector<Ket> out;
    for (Eigen::Index k = 0; k < u.cols(); ++k) out.push_back(Ket::normalized(u.col(k)));
    return out;
}

}  // namespace testing
