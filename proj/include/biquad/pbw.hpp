#pragma once

#include "biquad/presentation.hpp"
#include "biquad/rewrite.hpp"

#include <array>
#include <string>
#include <vector>

namespace biquad {

struct WrongArity : std::domain_error {
    explicit WrongArity(const std::string& msg) : std::domain_error(msg) {}
};

/// Result of the triple-overlap confluence test.
struct PBWReport {
    bool consistent = true;
    // (i,j,k) with i<j<k and the nonzero difference of the two reductions
    // of x_k x_j x_i.
    std::vector<std::pair<std::array<int, 3>, NormalPoly>> failures;
};

/// Decides whether the ordered monomials form a basis by normalizing every
/// overlap word x_k x_j x_i (i<j<k) under both descent strategies and
/// comparing.  Presentations with n <= 2 are trivially consistent.
PBWReport check_pbw_by_overlaps(const AlgebraPresentation& pres);

struct ClosedConditionEntry {
    std::string id;     // formula, in the coefficient names of the 3-generator display
    Scalar lhs;         // instantiated left-hand side (unit-reduced)
    bool holds = true;  // lhs == 0
};

struct ClosedConditionReport {
    std::vector<ClosedConditionEntry> entries;
    bool all_hold() const;
};

/// The closed-form consistency conditions for n = 3, evaluated on the
/// descending-orientation coefficients
///   x2x1 - q1 x1x2 = a x1 + b x2 + c x3 + b1
///   x3x1 - q2 x1x3 = al x1 + be x2 + ga x3 + b2
///   x3x2 - q3 x2x3 = la x1 + mu x2 + nu x3 + b3.
/// Throws WrongArity when n != 3.
ClosedConditionReport check_pbw3_conditions(const AlgebraPresentation& pres);

}  // namespace biquad
