#pragma once

// Finite-dimensional complex linear algebra for pure states and operators.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace enscoh {

using cplx = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

inline constexpr double kAlgebraTol = 1e-10;
inline constexpr double kSpectralTol = 1e-8;

/// Thrown for dimension mismatches, invalid states and malformed inputs.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Normalized pure state over the computational basis of C^dim.
///
/// The global phase is kept as given; state comparisons go through
/// |<a|b>|.
class Ket {
public:
    /// Takes ownership of an already normalized amplitude vector.
    /// Throws if dim < 2 or the norm deviates from 1 by more than kAlgebraTol.
    explicit Ket(CVector amplitudes);
    Ket(std::initializer_list<cplx> amplitudes);

    /// Rescales an arbitrary nonzero vector to unit norm.
    static Ket normalized(const CVector& v);
    /// Computational basis vector |index> of C^dim.
    static Ket basis(std::size_t dim, std::size_t index);

    std::size_t dim() const { return static_cast<std::size_t>(amps_.size()); }
    const CVector& amplitudes() const { return amps_; }
    cplx operator[](std::size_t i) const { return amps_(static_cast<Eigen::Index>(i)); }

private:
    CVector amps_;
};

/// Square complex matrix acting on C^dim.
class Operator {
public:
    explicit Operator(CMatrix entries);

    static Operator identity(std::size_t dim);

    std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
    const CMatrix& matrix() const { return m_; }

    bool is_unitary(double tol = kAlgebraTol) const;
    /// Hermitian idempotent of rank one.
    bool is_rank1_projector(double tol = kAlgebraTol) const;

    Operator adjoint() const { return Operator(m_.adjoint()); }
    Operator operator*(const Operator& rhs) const;

private:
    CMatrix m_;
};

/// Hermitian, unit-trace, positive semidefinite matrix.
class DensityMatrix {
public:
    /// Throws unless entries form a density matrix at kAlgebraTol.
    explicit DensityMatrix(CMatrix entries);

    /// |k><k|
    static DensityMatrix pure(const Ket& k);

    std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
    const CMatrix& matrix() const { return m_; }

    /// Ascending eigenvalues, with values in (-kAlgebraTol, 0) clamped to 0.
    std::vector<double> eigenvalues() const;

private:
    struct Unchecked {};
    DensityMatrix(CMatrix entries, Unchecked) : m_(std::move(entries)) {}
    CMatrix m_;
};

Ket tensor_product(const Ket& a, const Ket& b);
Operator tensor_product(const Operator& a, const Operator& b);

/// <a|b>, conjugate-linear in a.
cplx inner_product(const Ket& a, const Ket& b);

Ket apply_unitary(const Operator& u, const Ket& k);

bool is_orthonormal_set(std::span<const Ket> kets, double tol = kAlgebraTol);

/// Computational basis {|0>, ..., |dim-1>}.
std::vector<Ket> computational_basis(std::size_t dim);

/// Sum_k |b_k><b_k| rho |b_k><b_k|. Throws unless the basis is
/// orthonormal and complete for rho.
DensityMatrix dephase(const DensityMatrix& rho, std::span<const Ket> basis);

/// -Tr(rho log2 rho) in bits.
double von_neumann_entropy(const DensityMatrix& rho);

/// Shannon entropy in bits of a probability vector, with 0 log 0 = 0.
double shannon_entropy(std::span<const double> probabilities);

/// Matrix whose columns are the basis kets. Throws on ragged dims.
CMatrix basis_matrix(std::span<const Ket> basis);

}  // namespace enscoh
