#pragma once

// Seeded random sweeps over the arbitrary two-block families, with CSV and
// SVG output.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "enscoh/coherence.hpp"
#include "enscoh/discrimination.hpp"
#include "enscoh/unitary_opt.hpp"

namespace enscoh {

enum class SweepFamily { Arb2x2Real, Arb2x2Complex, Arb2x3Real };
std::string_view to_string(SweepFamily f);
/// Accepts "2x2-real", "2x2-complex", "2x3-real".
SweepFamily parse_family(std::string_view s);

struct SweepSpec {
    SweepFamily family = SweepFamily::Arb2x2Real;
    std::size_t samples = 100;
    std::uint64_t seed = kAcceptanceSeed;
    /// Which normalized MEC column the SVG plots.
    CoherenceMeasure measure = CoherenceMeasure::L1;
    SuccessCriterion criterion = SuccessCriterion::Worst;
    /// Restart count override for the optimizers.
    std::optional<std::size_t> restarts;

    void validate() const;
};

struct SweepRow {
    double theta1 = 0.0, phi1 = 0.0, theta2 = 0.0, phi2 = 0.0;
    double c_r = 0.0;
    double mec_n_l1 = 0.0;
    double mec_n_rel = 0.0;
    double cd_l1 = 0.0;
    double p_succ = 0.0;
};

/// Ensemble of the family at the given angles (phases ignored for the real
/// 2x2 family).
ProductEnsemble family_ensemble(SweepFamily f, double theta1, double phi1, double theta2, double phi2);

/// Evaluates one sample.
SweepRow sweep_row(SweepFamily f, double theta1, double phi1, double theta2, double phi2, const SweepSpec& spec);

/// theta in [0, pi], phi in [0, 2 pi), drawn from a seeded 64-bit stream.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);
void write_svg(std::ostream& out, const std::vector<SweepRow>& rows, const SweepSpec& spec);

}  // namespace enscoh
