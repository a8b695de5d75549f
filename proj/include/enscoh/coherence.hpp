#pragma once

#include <cstddef>
#include <span>
#include <string_view>

#include "enscoh/quantum_core.hpp"

namespace enscoh {

enum class CoherenceMeasure { L1, RelativeEntropy };

std::string_view to_string(CoherenceMeasure m);
/// Accepts "l1" and "rel".
CoherenceMeasure parse_measure(std::string_view s);

// Density-matrix routes. The reference basis must be orthonormal and
// complete; an empty span selects the computational basis.

/// Sum of off-diagonal moduli of rho in the reference basis.
double c_l1(const DensityMatrix& rho, std::span<const Ket> basis = {});
/// S(dephase(rho)) - S(rho), in bits.
double c_rel(const DensityMatrix& rho, std::span<const Ket> basis = {});

// Pure-state fast paths in the computational basis. Amplitudes need not
// be normalized exactly; they are used as given.

/// (sum_k |a_k|)^2 - 1
double c_l1_pure(std::span<const cplx> amplitudes);
/// Shannon entropy of |a_k|^2.
double c_rel_pure(std::span<const cplx> amplitudes);
double coherence_pure(CoherenceMeasure m, std::span<const cplx> amplitudes);

double coherence(CoherenceMeasure m, const Ket& k);
/// Coherence of k in the given orthonormal basis.
double coherence(CoherenceMeasure m, const Ket& k, std::span<const Ket> basis);

/// d - 1 for L1, log2 d for relative entropy.
double max_coherence(CoherenceMeasure m, std::size_t d);

}  // namespace enscoh
