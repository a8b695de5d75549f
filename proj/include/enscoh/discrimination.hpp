#pragma once

// Restricted one-way LOCC discrimination of 2 x d two-block ensembles:
// Bob measures a rank-one projective measurement first, sends the outcome,
// and Alice finishes in the computational basis.

#include <cstddef>
#include <string_view>
#include <vector>

#include "enscoh/ensembles.hpp"
#include "enscoh/unitary_opt.hpp"

namespace enscoh {

/// Pairing of first-block Bob state eta1^(i) with second-block state
/// eta2^(pairing[i]).
struct Configuration {
    std::size_t d = 0;
    std::vector<std::size_t> pairing;

    /// Throws unless pairing is a bijection on {0, ..., d-1}.
    void validate() const;
    bool operator==(const Configuration&) const = default;
};

/// Orthonormal measurement directions for Bob.
class ProjectorSet {
public:
    explicit ProjectorSet(std::vector<Ket> directions);

    std::size_t d() const { return directions_.size(); }
    const std::vector<Ket>& directions() const { return directions_; }
    /// |phi_k><phi_k|
    Operator projector(std::size_t k) const;

private:
    std::vector<Ket> directions_;
};

/// Two-element sub-ensemble {|0 eta1^(first)>, |1 eta2^(second)>}, labelled
/// S_index with index = first * d + second + 1.
struct ReducedSet {
    std::size_t index = 0;
    std::size_t first = 0;
    std::size_t second = 0;
};

enum class SuccessCriterion { Worst, Average };
std::string_view to_string(SuccessCriterion c);
SuccessCriterion parse_criterion(std::string_view s);

struct DiscriminationResult {
    Configuration config;
    ProjectorSet projectors;
    /// Smallest squared adjacent overlap.
    double p_succ_worst = 0.0;
    /// Mean of the 2d squared adjacent overlaps.
    double p_succ_avg = 0.0;
    /// Sum of the 2d adjacent overlaps (the maximized quantity).
    double overlap_sum = 0.0;
    /// reduced_sets[k] is the set certified by outcome k.
    std::vector<ReducedSet> reduced_sets;

    double p_succ(SuccessCriterion c) const { return c == SuccessCriterion::Worst ? p_succ_worst : p_succ_avg; }
};

/// Pairing maximizing sum_i |<eta1^(i)|eta2^(pairing[i])>| over all d!
/// permutations; ties go to the lexicographically smallest. d <= 6.
Configuration find_configuration(const ProductEnsemble& e);

/// Scores a fixed projector set under a configuration. Each direction is
/// assigned the adjacent pair that maximizes the total overlap sum.
DiscriminationResult evaluate_projectors(const ProductEnsemble& e, const Configuration& c, const ProjectorSet& p);

/// Multi-restart search over Bob's projective measurements maximizing the
/// adjacent-overlap sum. Near-ties are resolved by the higher worst-case
/// score.
DiscriminationResult optimize_projectors(const ProductEnsemble& e, const Configuration& c, const OptimizerConfig& cfg);

/// find_configuration followed by optimize_projectors.
DiscriminationResult success_probability(const ProductEnsemble& e, const OptimizerConfig& cfg);

/// Best worst-case success probability over a uniform grid of Bob
/// measurements and over all configurations. d = 2 grids one angle and one
/// phase; d = 3 grids the frame
///   phi       = (sin t cos p, sin t sin p e^{i a}, cos t e^{i b})
///   phi_perp  = (-sin p, e^{i a} cos p, 0)
///   phi_perp2 = (cos t cos p, cos t sin p e^{i a}, -sin t e^{i b})
/// For real ensembles a, b are restricted to {0, pi} and the frame is
/// additionally rotated by an angle r about phi. Throws for d > 3.
double brute_force_oracle(const ProductEnsemble& e, double grid_step);

}  // namespace enscoh
