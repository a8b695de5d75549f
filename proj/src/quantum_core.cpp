#include "enscoh/quantum_core.hpp"

#include <cmath>

namespace enscoh {

namespace {

void require_dim(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw Error(std::string(what) + ": dimension mismatch (" + std::to_string(a) + " vs " +
                    std::to_string(b) + ")");
    }
}

}  // namespace

Ket::Ket(CVector amplitudes) : amps_(std::move(amplitudes)) {
    if (amps_.size() < 2) {
        throw Error("Ket: dimension must be at least 2");
    }
    if (!amps_.allFinite()) {
        throw Error("Ket: non-finite amplitude");
    }
    const double norm2 = amps_.squaredNorm();
    if (std::abs(norm2 - 1.0) > kAlgebraTol) {
        throw Error("Ket: amplitudes are not normalized (|a|^2 = " + std::to_string(norm2) + ")");
    }
}

Ket::Ket(std::initializer_list<cplx> amplitudes)
    : Ket(Eigen::Map<const CVector>(amplitudes.begin(), static_cast<Eigen::Index>(amplitudes.size()))) {}

Ket Ket::normalized(const CVector& v) {
    const double n = v.norm();
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw Error("Ket::normalized: vector has zero or non-finite norm");
    }
    return Ket(CVector(v / n));
}

Ket Ket::basis(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        throw Error("Ket::basis: index out of range");
    }
    CVector v = CVector::Zero(static_cast<Eigen::Index>(dim));
    v(static_cast<Eigen::Index>(index)) = 1.0;
    return Ket(std::move(v));
}

Operator::Operator(CMatrix entries) : m_(std::move(entries)) {
    if (m_.rows() != m_.cols() || m_.rows() < 1) {
        throw Error("Operator: matrix must be square and nonempty");
    }
}

Operator Operator::identity(std::size_t dim) {
    const auto n = static_cast<Eigen::Index>(dim);
    return Operator(CMatrix::Identity(n, n));
}

bool Operator::is_unitary(double tol) const {
    const CMatrix g = m_.adjoint() * m_;
    return (g - CMatrix::Identity(m_.rows(), m_.cols())).cwiseAbs().maxCoeff() <= tol;
}

bool Operator::is_rank1_projector(double tol) const {
    if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
    if ((m_ * m_ - m_).cwiseAbs().maxCoeff() > tol) return false;
    // Hermitian idempotent: rank equals trace.
    return std::abs(m_.trace() - cplx(1.0)) <= tol;
}

Operator Operator::operator*(const Operator& rhs) const {
    require_dim(dim(), rhs.dim(), "Operator product");
    return Operator(m_ * rhs.m_);
}

DensityMatrix::DensityMatrix(CMatrix entries) : m_(std::move(entries)) {
    if (m_.rows() != m_.cols() || m_.rows() < 2) {
        throw Error("DensityMatrix: matrix must be square with dim >= 2");
    }
    if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > kAlgebraTol) {
        throw Error("DensityMatrix: not Hermitian");
    }
    if (std::abs(m_.trace() - cplx(1.0)) > kAlgebraTol) {
        throw Error("DensityMatrix: trace is not 1");
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> es(m_, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -kAlgebraTol) {
        throw Error("DensityMatrix: negative eigenvalue");
    }
}

DensityMatrix DensityMatrix::pure(const Ket& k) {
    const CVector& a = k.amplitudes();
    return DensityMatrix(CMatrix(a * a.adjoint()), Unchecked{});
}

std::vector<double> DensityMatrix::eigenvalues() const {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(m_, Eigen::EigenvaluesOnly);
    std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    for (double& v : out) {
        if (v < 0.0 && v > -kAlgebraTol) v = 0.0;
    }
    return out;
}

Ket tensor_product(const Ket& a, const Ket& b) {
    const auto na = static_cast<Eigen::Index>(a.dim());
    const auto nb = static_cast<Eigen::Index>(b.dim());
    CVector out(na * nb);
    for (Eigen::Index i = 0; i < na; ++i) {
        out.segment(i * nb, nb) = a.amplitudes()(i) * b.amplitudes();
    }
    // Product of unit vectors; renormalize only to absorb rounding.
    return Ket::normalized(out);
}

Operator tensor_product(const Operator& a, const Operator& b) {
    const auto na = a.matrix().rows();
    const auto nb = b.matrix().rows();
    CMatrix out(na * nb, na * nb);
    for (Eigen::Index i = 0; i < na; ++i) {
        for (Eigen::Index j = 0; j < na; ++j) {
            out.block(i * nb, j * nb, nb, nb) = a.matrix()(i, j) * b.matrix();
        }
    }
    return Operator(std::move(out));
}

cplx inner_product(const Ket& a, const Ket& b) {
    require_dim(a.dim(), b.dim(), "inner_product");
    return a.amplitudes().dot(b.amplitudes());
}

Ket apply_unitary(const Operator& u, const Ket& k) {
    require_dim(u.dim(), k.dim(), "apply_unitary");
    if (!u.is_unitary()) {
        throw Error("apply_unitary: operator is not unitary");
    }
    return Ket::normalized(u.matrix() * k.amplitudes());
}

bool is_orthonormal_set(std::span<const Ket> kets, double tol) {
    for (std::size_t i = 0; i < kets.size(); ++i) {
        if (kets[i].dim() != kets[0].dim()) return false;
        if (std::abs(kets[i].amplitudes().norm() - 1.0) > tol) return false;
        for (std::size_t j = i + 1; j < kets.size(); ++j) {
            if (std::abs(inner_product(kets[i], kets[j])) > tol) return false;
        }
    }
    return true;
}

std::vector<Ket> computational_basis(std::size_t dim) {
    std::vector<Ket> out;
    out.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) out.push_back(Ket::basis(dim, i));
    return out;
}

CMatrix basis_matrix(std::span<const Ket> basis) {
    if (basis.empty()) throw Error("basis_matrix: empty basis");
    const auto d = static_cast<Eigen::Index>(basis.front().dim());
    CMatrix b(d, static_cast<Eigen::Index>(basis.size()));
    for (std::size_t k = 0; k < basis.size(); ++k) {
        require_dim(basis[k].dim(), basis.front().dim(), "basis_matrix");
        b.col(static_cast<Eigen::Index>(k)) = basis[k].amplitudes();
    }
    return b;
}

DensityMatrix dephase(const DensityMatrix& rho, std::span<const Ket> basis) {
    if (basis.size() != rho.dim()) {
        throw Error("dephase: basis is not complete for the state dimension");
    }
    if (!is_orthonormal_set(basis)) {
        throw Error("dephase: basis is not orthonormal");
    }
    const CMatrix b = basis_matrix(basis);
    const CMatrix in_basis = b.adjoint() * rho.matrix() * b;
    const CMatrix diag = in_basis.diagonal().asDiagonal();
    return DensityMatrix(CMatrix(b * diag * b.adjoint()));
}

double shannon_entropy(std::span<const double> probabilities) {
    double s = 0.0;
    for (double p : probabilities) {
        if (p > 0.0) s -= p * std::log2(p);
    }
    return s;
}

double von_neumann_entropy(const DensityMatrix& rho) {
    const auto ev = rho.eigenvalues();
    return std::max(0.0, shannon_entropy(ev));
}

}  // namespace enscoh
