#include "enscoh/coherence.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace enscoh {

namespace {

std::vector<Ket> resolve_basis(std::span<const Ket> basis, std::size_t dim) {
    if (basis.empty()) return computational_basis(dim);
    if (basis.size() != dim || !is_orthonormal_set(basis)) {
        throw Error("coherence: reference basis must be orthonormal and complete");
    }
    return {basis.begin(), basis.end()};
}

}  // namespace

std::string_view to_string(CoherenceMeasure m) {
    return m == CoherenceMeasure::L1 ? "l1" : "rel";
}

CoherenceMeasure parse_measure(std::string_view s) {
    if (s == "l1") return CoherenceMeasure::L1;
    if (s == "rel") return CoherenceMeasure::RelativeEntropy;
    throw Error("unknown coherence measure '" + std::string(s) + "' (expected l1 or rel)");
}

double c_l1(const DensityMatrix& rho, std::span<const Ket> basis) {
    const auto b = resolve_basis(basis, rho.dim());
    const CMatrix bm = basis_matrix(b);
    const CMatrix r = bm.adjoint() * rho.matrix() * bm;
    double s = 0.0;
    for (Eigen::Index i = 0; i < r.rows(); ++i) {
        for (Eigen::Index j = 0; j < r.cols(); ++j) {
            if (i != j) s += std::abs(r(i, j));
        }
    }
    return s;
}

double c_rel(const DensityMatrix& rho, std::span<const Ket> basis) {
    const auto b = resolve_basis(basis, rho.dim());
    const double gain = von_neumann_entropy(dephase(rho, b)) - von_neumann_entropy(rho);
    return std::max(0.0, gain);
}

double c_l1_pure(std::span<const cplx> amplitudes) {
    double s = 0.0;
    for (const cplx& a : amplitudes) s += std::abs(a);
    return std::max(0.0, s * s - 1.0);
}

double c_rel_pure(std::span<const cplx> amplitudes) {
    double s = 0.0;
    for (const cplx& a : amplitudes) {
        const double p = std::norm(a);
        if (p > 0.0) s -= p * std::log2(p);
    }
    return std::max(0.0, s);
}

double coherence_pure(CoherenceMeasure m, std::span<const cplx> amplitudes) {
    return m == CoherenceMeasure::L1 ? c_l1_pure(amplitudes) : c_rel_pure(amplitudes);
}

double coherence(CoherenceMeasure m, const Ket& k) {
    return coherence_pure(m, {k.amplitudes().data(), k.dim()});
}

double coherence(CoherenceMeasure m, const Ket& k, std::span<const Ket> basis) {
    const auto b = resolve_basis(basis, k.dim());
    const CVector coords = basis_matrix(b).adjoint() * k.amplitudes();
    return coherence_pure(m, {coords.data(), static_cast<std::size_t>(coords.size())});
}

double max_coherence(CoherenceMeasure m, std::size_t d) {
    if (d < 2) throw Error("max_coherence: dimension must be at least 2");
    const auto dd = static_cast<double>(d);
    return m == CoherenceMeasure::L1 ? dd - 1.0 : std::log2(dd);
}

}  // namespace enscoh
