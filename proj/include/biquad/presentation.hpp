#pragma once

#include "biquad/scalar.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace biquad {

/// Which side of each pairwise relation is rewritten, for 1 <= i < j <= n:
///   descending:  x_j x_i = q_ij x_i x_j + sum_k a_ijk x_k + b_ij
///   ascending:   x_i x_j = q_ij x_j x_i + sum_k a_ijk x_k + b_ij
enum class Orientation { descending, ascending };

std::string to_string(Orientation o);

/// A bi-quadratic presentation: n generators with one relation per pair,
/// quadratic leading coefficient q (a unit), linear part a, constant part b.
/// Absent q entries default to 1, absent a and b entries to 0.
struct AlgebraPresentation {
    int n = 0;
    std::vector<std::string> params;
    std::map<std::pair<int, int>, Scalar> q;           // (i,j), i<j
    std::map<std::array<int, 3>, Scalar> a;            // (i,j,k), i<j, 1<=k<=n
    std::map<std::pair<int, int>, Scalar> b;           // (i,j), i<j
    Orientation orientation = Orientation::descending;
    std::string name;

    Scalar q_at(int i, int j) const;
    Scalar a_at(int i, int j, int k) const;
    Scalar b_at(int i, int j) const;

    void set_q(int i, int j, Scalar v);
    void set_a(int i, int j, int k, Scalar v);
    void set_b(int i, int j, Scalar v);
};

/// Structural checks: index ranges, q nonzero, parameters declared.
/// Returns a list of violations; empty means valid.
std::vector<std::string> validate(const AlgebraPresentation& pres);

/// The same algebra presented with the opposite rewrite direction:
/// q' = 1/q, a' = -a/q, b' = -b/q.  Involutive.
AlgebraPresentation translate_orientation(const AlgebraPresentation& pres);

/// Canonical form used by the rewriting engine and all downstream analysis.
AlgebraPresentation to_descending(const AlgebraPresentation& pres);

/// Field-wise value equality (same n, parameter set, orientation-adjusted
/// coefficients).
bool presentations_equal(const AlgebraPresentation& a, const AlgebraPresentation& b);

}  // namespace biquad
