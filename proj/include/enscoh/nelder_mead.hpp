#pragma once

// Derivative-free local minimization and deterministic multi-restart helpers.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace enscoh {

struct NelderMeadOptions {
    std::size_t max_evals = 20000;
    /// Stop when the spread of simplex values falls below this.
    double f_tol = 1e-13;
    /// ... and the simplex diameter falls below this.
    double x_tol = 1e-10;
    double initial_step = 0.5;
    /// Re-seed the simplex at the incumbent until a pass stops improving.
    int max_passes = 8;
};

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    std::size_t evals = 0;
};

using Objective = std::function<double(const std::vector<double>&)>;

/// Adaptive Nelder-Mead (dimension-dependent coefficients).
NelderMeadResult nelder_mead(const Objective& f, std::vector<double> x0, const NelderMeadOptions& opt);

/// Independent 64-bit stream for restart `index` of a run seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Worker count: ENSCOH_THREADS if set and positive, else hardware concurrency.
std::size_t worker_count();

/// Runs body(i) for i in [0, n) on up to worker_count() threads. Bodies
/// must write only to their own slot; the first exception is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace enscoh
