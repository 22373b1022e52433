#pragma once

#include <string>

#include "gcdc/faa/comonad.hpp"
#include "gcdc/faa/jet.hpp"
#include "gcdc/smooth.hpp"
#include "gcdc/verdict.hpp"

namespace gcdc {

using SmoothJet = Jet<Smooth>;
using SmoothFaa = Faa<Smooth>;

/// Sampled well-formedness of the components f_1..f_max (max <= 4).
struct WellFormedness {
    Verdict additive;        // additive in each direction block
    Verdict symmetric;       // invariant under block permutations
    Verdict side_condition;  // guard mentions only x and agrees with guard(f_*)
};
WellFormedness check_wellformed(const SmoothJet& j, const Config& cfg, const std::string& label,
                                std::size_t max_order = 4);

/// Restriction-order predicates decided through the semantic protocol.
bool is_total(const SmoothMap& f, const Config& cfg, const std::string& label);
bool is_total(const SmoothJet& f, const Config& cfg, const std::string& label);
bool leq(const SmoothMap& a, const SmoothMap& b, const Config& cfg, const std::string& label);
bool leq(const SmoothJet& a, const SmoothJet& b, const Config& cfg, const std::string& label);
bool compatible(const SmoothMap& a, const SmoothMap& b, const Config& cfg, const std::string& label);
bool compatible(const SmoothJet& a, const SmoothJet& b, const Config& cfg, const std::string& label);

/// The same predicates read componentwise: f_* and every f_n.
bool leq_componentwise(const SmoothJet& a, const SmoothJet& b, const Config& cfg, const std::string& label);
bool compatible_componentwise(const SmoothJet& a, const SmoothJet& b, const Config& cfg, const std::string& label);

class NonLinearObject : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// derivative_jet(f) compared with pi_0-jet then f. Throws NonLinearObject
/// unless source and target have point object equal to the carrier.
Verdict linearity(const SmoothJet& f, const Config& cfg, const std::string& label);
bool is_linear(const SmoothJet& f, const Config& cfg, const std::string& label);

/// f compared with lambda(f_*).
Verdict lambda_membership(const SmoothJet& f, const Config& cfg, const std::string& label);

/// compose_jets(cofree f, cofree g) against cofree(f then g).
Verdict check_functoriality(const SmoothMap& f, const SmoothMap& g, const LAssignment& L, std::size_t order,
                            const Config& cfg, const std::string& label);

/// Structural equality first; otherwise the semantic protocol at tol_rel 1e-12.
Verdict exact_or_tight(const SmoothJet& a, const SmoothJet& b, const Config& cfg, const std::string& label);

/// The order-1 anchor of the jet derivative: f_2(b, c; x) + f_1(a; x) at
/// directions (a, b) and point (c, x).
SmoothMap derivative_anchor(const SmoothJet& f);

}  // namespace gcdc
