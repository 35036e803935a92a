#pragma once

#include "biquad/calculus.hpp"
#include "biquad/pbw.hpp"
#include "biquad/presentation.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace biquad {

struct InconsistentPresentation : std::domain_error {
    PBWReport report;
    explicit InconsistentPresentation(PBWReport r)
        : std::domain_error("presentation has no PBW basis"), report(std::move(r)) {}
};

struct ValidationError : std::domain_error {
    std::vector<std::string> violations;
    explicit ValidationError(std::vector<std::string> v)
        : std::domain_error(v.empty() ? "invalid presentation" : v.front()),
          violations(std::move(v)) {}
};

/// One instantiated sufficiency condition: a formula id, the indices it was
/// instantiated at, and its exact left-hand side (zero means it holds).
struct ConditionEntry {
    std::string id;
    std::array<int, 3> indices{0, 0, 0};  // unused slots are 0
    Scalar lhs;
    bool holds = true;
};

struct ConditionReport {
    std::vector<ConditionEntry> entries;
    bool all_hold() const;
    std::vector<const ConditionEntry*> failed() const;
};

/// The full list of coefficient conditions under which the forced twist
/// family is a commuting family of automorphisms (and the algebra therefore
/// carries the n-dimensional connected integrable calculus).  Evaluated on
/// the ascending translation of the presentation, where the formulas apply
/// verbatim; reported left-hand sides are unit-reduced.
ConditionReport sufficiency_conditions(const AlgebraPresentation& pres);

/// First (i,j,k) in lexicographic order with a(i,j,k) != 0 and k outside
/// {i,j}; such a coefficient rules out any n-dimensional calculus.
std::optional<Obstruction> calculus_obstruction(const AlgebraPresentation& pres);

/// Outcome of the constructive proof obligations for a twist family.
struct WitnessVerification {
    int depth = 0;
    std::vector<bool> relation_preserving;  // per generator twist
    bool commuting = false;
    bool dd_zero = false;
    bool leibniz = false;
    bool connected = false;
    bool integral_identity = false;
    bool all_relations_preserved() const;
    bool pass() const;
};

/// Runs every check backing a Smooth verdict: each twist extends to an
/// endomorphism, the twists commute, d.d = 0 up to the given degree, the
/// degree-0 kernel of d is the scalars, and the integral-form identities
/// hold in every degree.
WitnessVerification verify_witness(const AlgebraPresentation& pres, const TwistFamily& tw,
                                   int depth);

enum class SmoothStatus { smooth, not_smooth, undetermined };

std::string to_string(SmoothStatus s);

struct SmoothnessVerdict {
    SmoothStatus status = SmoothStatus::undetermined;
    int gkdim = 0;  // the growth dimension of these algebras, reported as n
    std::optional<TwistFamily> witness;
    std::optional<Obstruction> obstruction;
    ConditionReport conditions;
    std::optional<WitnessVerification> verification;
};

/// Full decision procedure.  Requires a valid, PBW-consistent presentation
/// (throws ValidationError / InconsistentPresentation otherwise).  Returns
/// NotSmooth on an obstruction, Smooth when the forced twists verify, and
/// an honest Undetermined with diagnostics in the remaining gap.
SmoothnessVerdict analyze(const AlgebraPresentation& pres, int depth = 4);

}  // namespace biquad
