#include "enscoh/ensembles.hpp"

#include <cmath>
#include <numbers>

#include "enscoh/coherence.hpp"

namespace enscoh {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

Ket plus_ket(std::size_t dim, std::size_t i, std::size_t j, double sign) {
    CVector v = CVector::Zero(static_cast<Eigen::Index>(dim));
    v(static_cast<Eigen::Index>(i)) = kInvSqrt2;
    v(static_cast<Eigen::Index>(j)) = sign * kInvSqrt2;
    return Ket::normalized(v);
}

Ket real_ket(std::initializer_list<double> xs) {
    CVector v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (double x : xs) v(i++) = x;
    return Ket::normalized(v);
}

// Index of the computational basis vector k is proportional to, if any.
std::optional<std::size_t> computational_index(const Ket& k) {
    for (std::size_t i = 0; i < k.dim(); ++i) {
        if (std::abs(std::abs(k[i]) - 1.0) <= kAlgebraTol) return i;
    }
    return std::nullopt;
}

}  // namespace

std::string_view to_string(DistinguishabilityClass c) {
    switch (c) {
        case DistinguishabilityClass::TwoWayMinRound: return "two-way-min-round";
        case DistinguishabilityClass::OneWayMinRound: return "one-way-min-round";
        case DistinguishabilityClass::FiniteMultiRound: return "finite-multi-round";
        case DistinguishabilityClass::Indistinguishable: return "indistinguishable";
    }
    return "unknown";
}

ProductEnsemble::ProductEnsemble(std::size_t d1, std::size_t d2, std::vector<ProductState> states,
                                 std::string label, std::optional<DistinguishabilityClass> cls)
    : d1_(d1), d2_(d2), states_(std::move(states)), label_(std::move(label)), class_(cls) {
    if (d1_ < 2 || d2_ < 2) {
        throw Error("ProductEnsemble: subsystem dimensions must be at least 2");
    }
    if (states_.empty() || states_.size() > d1_ * d2_) {
        throw Error("ProductEnsemble: number of states must lie in [1, d1*d2]");
    }
    for (const auto& s : states_) {
        if (s.alice.dim() != d1_ || s.bob.dim() != d2_) {
            throw Error("ProductEnsemble: member dimension does not match (d1, d2)");
        }
    }
    for (std::size_t i = 0; i < states_.size(); ++i) {
        for (std::size_t j = i + 1; j < states_.size(); ++j) {
            const double ov = std::abs(inner_product(states_[i].alice, states_[j].alice) *
                                       inner_product(states_[i].bob, states_[j].bob));
            if (ov > kAlgebraTol) {
                throw Error("ProductEnsemble: members " + std::to_string(i) + " and " + std::to_string(j) +
                            " are not orthogonal");
            }
        }
    }
}

ProductEnsemble ProductEnsemble::with_metadata(std::string label, std::optional<DistinguishabilityClass> cls,
                                               std::optional<int> rounds, std::string starting_party) const {
    ProductEnsemble out = *this;
    out.label_ = std::move(label);
    out.class_ = cls;
    out.rounds_ = rounds;
    out.starting_party_ = std::move(starting_party);
    return out;
}

std::vector<Ket> ProductEnsemble::joint_states() const {
    std::vector<Ket> out;
    out.reserve(states_.size());
    for (const auto& s : states_) out.push_back(tensor_product(s.alice, s.bob));
    return out;
}

std::optional<TwoBlockView> two_block_view(const ProductEnsemble& e) {
    if (e.d1() != 2 || e.size() != 2 * e.d2()) return std::nullopt;
    TwoBlockView v;
    v.d = e.d2();
    for (const auto& s : e.states()) {
        const auto idx = computational_index(s.alice);
        if (!idx) return std::nullopt;
        (*idx == 0 ? v.first : v.second).push_back(s.bob);
    }
    if (v.first.size() != v.d || v.second.size() != v.d) return std::nullopt;
    if (!is_orthonormal_set(v.first) || !is_orthonormal_set(v.second)) return std::nullopt;
    return v;
}

TwoBlockView require_two_block(const ProductEnsemble& e, std::string_view who) {
    auto v = two_block_view(e);
    if (!v) {
        throw Error(std::string(who) +
                    ": ensemble is not of the 2 x d two-block form {|0> eta1^(k)} u {|1> eta2^(k)}");
    }
    return *std::move(v);
}

ProductEnsemble make_computational(std::size_t d1, std::size_t d2) {
    std::vector<ProductState> states;
    for (std::size_t i = 0; i < d1; ++i) {
        for (std::size_t j = 0; j < d2; ++j) {
            states.push_back({Ket::basis(d1, i), Ket::basis(d2, j)});
        }
    }
    return ProductEnsemble(d1, d2, std::move(states),
                           "computational-" + std::to_string(d1) + "x" + std::to_string(d2),
                           DistinguishabilityClass::TwoWayMinRound);
}

ProductEnsemble make_e2() {
    const Ket k0 = Ket::basis(2, 0);
    const Ket k1 = Ket::basis(2, 1);
    return ProductEnsemble(2, 2,
                           {{k0, k0}, {k0, k1}, {k1, plus_ket(2, 0, 1, 1.0)}, {k1, plus_ket(2, 0, 1, -1.0)}},
                           "e2", DistinguishabilityClass::OneWayMinRound);
}

Ket qubit_eta(double theta, double phi) {
    return Ket({std::cos(theta / 2), std::polar(1.0, phi) * std::sin(theta / 2)});
}

Ket qubit_eta_perp(double theta, double phi) {
    return Ket({-std::polar(1.0, -phi) * std::sin(theta / 2), std::cos(theta / 2)});
}

ProductEnsemble make_arb_2x2(double theta1, double theta2, double phi1, double phi2) {
    return make_arb_2xd({qubit_eta(theta1, phi1), qubit_eta_perp(theta1, phi1)},
                        {qubit_eta(theta2, phi2), qubit_eta_perp(theta2, phi2)});
}

std::vector<Ket> qutrit_frame(double theta, double phi) {
    const double st = std::sin(theta), ct = std::cos(theta);
    const double sp = std::sin(phi), cp = std::cos(phi);
    return {real_ket({st * cp, st * sp, ct}), real_ket({-sp, cp, 0.0}), real_ket({ct * cp, ct * sp, -st})};
}

ProductEnsemble make_arb_2x3(double theta1, double phi1, double theta2, double phi2) {
    return make_arb_2xd(qutrit_frame(theta1, phi1), qutrit_frame(theta2, phi2));
}

ProductEnsemble make_arb_2xd(const std::vector<Ket>& basis1, const std::vector<Ket>& basis2) {
    const std::size_t d = basis1.size();
    if (d < 2 || basis2.size() != d) {
        throw Error("make_arb_2xd: both bases need the same size d >= 2");
    }
    for (const auto& k : basis1) {
        if (k.dim() != d) throw Error("make_arb_2xd: basis kets must have dimension d");
    }
    for (const auto& k : basis2) {
        if (k.dim() != d) throw Error("make_arb_2xd: basis kets must have dimension d");
    }
    if (!is_orthonormal_set(basis1) || !is_orthonormal_set(basis2)) {
        throw Error("make_arb_2xd: input basis is not orthonormal");
    }
    std::vector<ProductState> states;
    for (const auto& k : basis1) states.push_back({Ket::basis(2, 0), k});
    for (const auto& k : basis2) states.push_back({Ket::basis(2, 1), k});
    ProductEnsemble e(2, d, std::move(states), "arb-2x" + std::to_string(d));
    // Two-block ensembles are always one-way distinguishable with A starting;
    // coinciding Bob bases make them two-way.
    const auto cls = relative_local_coherence(e) <= 1e-9 ? DistinguishabilityClass::TwoWayMinRound
                                                          : DistinguishabilityClass::OneWayMinRound;
    return e.with_metadata(e.label(), cls);
}

ProductEnsemble make_nlwe() {
    const auto b = [](std::size_t i) { return Ket::basis(3, i); };
    const auto p = [](std::size_t i, std::size_t j, double s) { return plus_ket(3, i, j, s); };
    return ProductEnsemble(3, 3,
                           {
                               {b(1), b(1)},
                               {b(0), p(0, 1, 1)},
                               {b(0), p(0, 1, -1)},
                               {b(2), p(1, 2, 1)},
                               {b(2), p(1, 2, -1)},
                               {p(1, 2, 1), b(0)},
                               {p(1, 2, -1), b(0)},
                               {p(0, 1, 1), b(2)},
                               {p(0, 1, -1), b(2)},
                           },
                           "nlwe", DistinguishabilityClass::Indistinguishable);
}

ProductEnsemble make_nlwe_minus_fourth() {
    const ProductEnsemble full = make_nlwe();
    std::vector<ProductState> states = full.states();
    states.erase(states.begin() + 3);
    return ProductEnsemble(3, 3, std::move(states))
        .with_metadata("nlwe-minus-fourth", DistinguishabilityClass::FiniteMultiRound, 4, "B");
}

ProductEnsemble make_tiles() {
    const auto b = [](std::size_t i) { return Ket::basis(3, i); };
    const auto m = [](std::size_t i, std::size_t j) { return plus_ket(3, i, j, -1.0); };
    const Ket stopper = real_ket({1.0, 1.0, 1.0});
    return ProductEnsemble(3, 3,
                           {
                               {b(0), m(0, 1)},
                               {b(2), m(1, 2)},
                               {m(1, 2), b(0)},
                               {m(0, 1), b(2)},
                               {stopper, stopper},
                           },
                           "tiles", DistinguishabilityClass::Indistinguishable);
}

ProductEnsemble make_tiles_minus_stopper() {
    std::vector<ProductState> states = make_tiles().states();
    states.pop_back();
    return ProductEnsemble(3, 3, std::move(states))
        .with_metadata("tiles-minus-stopper", DistinguishabilityClass::FiniteMultiRound, 3, "");
}

Ket pyramid_vector(int i) {
    const double s5 = std::sqrt(5.0);
    const double h = std::sqrt(1.0 + s5) / 2.0;
    const double n = 2.0 / std::sqrt(5.0 + s5);
    const double a = 2.0 * std::numbers::pi * i / 5.0;
    return Ket(CVector{{n * std::cos(a), n * std::sin(a), n * h}});
}

ProductEnsemble make_pyramid() {
    const auto v = pyramid_vector;
    return ProductEnsemble(3, 3, {{v(0), v(0)}, {v(1), v(2)}, {v(2), v(4)}, {v(3), v(1)}, {v(4), v(3)}}, "pyramid",
                           DistinguishabilityClass::Indistinguishable);
}

Ket superposed_state(const ProductEnsemble& e) {
    CVector sum = CVector::Zero(static_cast<Eigen::Index>(e.d1() * e.d2()));
    for (const auto& k : e.joint_states()) sum += k.amplitudes();
    return Ket::normalized(sum);
}

double relative_local_coherence(const ProductEnsemble& e) {
    const TwoBlockView v = require_two_block(e, "relative_local_coherence");
    double s = 0.0;
    for (const auto& k : v.second) s += coherence(CoherenceMeasure::L1, k, v.first);
    return s / static_cast<double>(v.d);
}

std::vector<std::string> ensemble_names() {
    return {"e1", "e2", "comp-2x3", "comp-3x3", "nlwe", "nlwe-minus-fourth", "tiles", "tiles-minus-stopper",
            "pyramid", "maximal-complex"};
}

ProductEnsemble named_ensemble(std::string_view name) {
    constexpr double pi = std::numbers::pi;
    if (name == "e1") return make_computational(2, 2).with_metadata("e1", DistinguishabilityClass::TwoWayMinRound);
    if (name == "e2") return make_e2();
    if (name == "comp-2x3") return make_computational(2, 3);
    if (name == "comp-3x3") return make_computational(3, 3);
    if (name == "nlwe") return make_nlwe();
    if (name == "nlwe-minus-fourth") return make_nlwe_minus_fourth();
    if (name == "tiles") return make_tiles();
    if (name == "tiles-minus-stopper") return make_tiles_minus_stopper();
    if (name == "pyramid") return make_pyramid();
    if (name == "maximal-complex") {
        return make_arb_2x2(pi / 2, pi / 4, pi / 2, pi / 2)
            .with_metadata("maximal-complex", DistinguishabilityClass::OneWayMinRound);
    }
    throw Error("unknown ensemble '" + std::string(name) + "'");
}

}  // namespace enscoh
