#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "enscoh/quantum_core.hpp"

namespace enscoh {

/// LOCC distinguishability class attached to named ensembles.
enum class DistinguishabilityClass {
    TwoWayMinRound,
    OneWayMinRound,
    FiniteMultiRound,
    Indistinguishable,
};

std::string_view to_string(DistinguishabilityClass c);

struct ProductState {
    Ket alice;
    Ket bob;
};

/// Ordered set of mutually orthogonal bipartite product states in d1 x d2.
class ProductEnsemble {
public:
    /// Validates member dimensions, the size bound 1 <= N <= d1*d2, and
    /// mutual orthogonality of the product states at kAlgebraTol.
    ProductEnsemble(std::size_t d1, std::size_t d2, std::vector<ProductState> states, std::string label = {},
                    std::optional<DistinguishabilityClass> cls = std::nullopt);

    std::size_t d1() const { return d1_; }
    std::size_t d2() const { return d2_; }
    std::size_t size() const { return states_.size(); }
    const std::vector<ProductState>& states() const { return states_; }
    const ProductState& operator[](std::size_t i) const { return states_[i]; }
    const std::string& label() const { return label_; }
    std::optional<DistinguishabilityClass> distinguishability_class() const { return class_; }
    /// Round count for finite multi-round classes, when known.
    std::optional<int> locc_rounds() const { return rounds_; }
    /// Party that must start the protocol ("A", "B", or empty for either).
    const std::string& starting_party() const { return starting_party_; }

    ProductEnsemble with_metadata(std::string label, std::optional<DistinguishabilityClass> cls,
                                  std::optional<int> rounds = std::nullopt, std::string starting_party = {}) const;

    /// Tensor-product kets of all members.
    std::vector<Ket> joint_states() const;

private:
    std::size_t d1_;
    std::size_t d2_;
    std::vector<ProductState> states_;
    std::string label_;
    std::optional<DistinguishabilityClass> class_;
    std::optional<int> rounds_;
    std::string starting_party_;
};

/// 2 x d ensemble {|0> eta1^(k)} u {|1> eta2^(k)} split into Bob's bases.
struct TwoBlockView {
    std::size_t d = 0;
    std::vector<Ket> first;   // Bob states paired with Alice |0>
    std::vector<Ket> second;  // Bob states paired with Alice |1>
};

/// Recognizes the two-block form (Alice states equal |0> or |1> up to a
/// phase, d states each, Bob states of each block orthonormal). Members are
/// taken in ensemble order within each block.
std::optional<TwoBlockView> two_block_view(const ProductEnsemble& e);
/// As two_block_view but throws Error when the form does not apply.
TwoBlockView require_two_block(const ProductEnsemble& e, std::string_view who);

ProductEnsemble make_computational(std::size_t d1, std::size_t d2);
/// {|00>, |01>, |1+>, |1->}
ProductEnsemble make_e2();

/// Qubit eta = cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
Ket qubit_eta(double theta, double phi);
/// -e^{-i phi} sin(theta/2)|0> + cos(theta/2)|1>
Ket qubit_eta_perp(double theta, double phi);

/// {|0 eta1>, |0 eta1_perp>, |1 eta2>, |1 eta2_perp>}
ProductEnsemble make_arb_2x2(double theta1, double theta2, double phi1, double phi2);

/// Real qutrit frame: eta = (sin t cos p, sin t sin p, cos t),
/// eta_perp = (-sin p, cos p, 0), eta_perp2 = (cos t cos p, cos t sin p, -sin t).
std::vector<Ket> qutrit_frame(double theta, double phi);

ProductEnsemble make_arb_2x3(double theta1, double phi1, double theta2, double phi2);
ProductEnsemble make_arb_2xd(const std::vector<Ket>& basis1, const std::vector<Ket>& basis2);

/// Nine-state 3x3 product basis exhibiting nonlocality without entanglement.
ProductEnsemble make_nlwe();
/// make_nlwe() without its fourth member |2>|1+2>.
ProductEnsemble make_nlwe_minus_fourth();
/// Tiles UPB including the uniform stopper state.
ProductEnsemble make_tiles();
ProductEnsemble make_tiles_minus_stopper();
/// Pyramid UPB built on five vectors on a cone.
ProductEnsemble make_pyramid();
/// v_i = N (cos 2 pi i/5, sin 2 pi i/5, h)
Ket pyramid_vector(int i);

/// (1/sqrt N) sum_i |psi_i> (x) |phi_i>
Ket superposed_state(const ProductEnsemble& e);

/// Average l1 coherence of Bob's second-block states measured in the
/// first-block basis. Throws for ensembles not of the two-block form.
double relative_local_coherence(const ProductEnsemble& e);

/// Names accepted by named_ensemble().
std::vector<std::string> ensemble_names();
/// Throws Error on unknown names.
ProductEnsemble named_ensemble(std::string_view name);

}  // namespace enscoh
