#pragma once

#include "biquad/presentation.hpp"
#include "biquad/rewrite.hpp"

#include <map>
#include <variant>
#include <vector>

namespace biquad {

struct DegreeOverflow : std::domain_error {
    DegreeOverflow() : std::domain_error("form degree exceeds the number of generators") {}
};

/// The per-generator twists rho_k mediating p dx_k = dx_k rho_k(p) in the
/// free bimodule of one-forms.  Each rho_k fixes x_k and sends x_j to an
/// affine function of x_j.
struct TwistFamily {
    std::vector<AffineEndo> rho;  // rho[k-1] acts for dx_k
    int n() const { return static_cast<int>(rho.size()); }
};

/// A linear-part coefficient a(i,j,k) with k outside {i,j}: no free
/// first-order calculus exists because dx_k becomes dependent.
struct Obstruction {
    int i = 0, j = 0, k = 0;
};

/// The unique twist family compatible with d and freeness of the one-forms,
/// in descending data: rho_i(x_j) = q_ij x_j + a_ij,i and
/// rho_j(x_i) = (x_i - a_ij,j)/q_ij for i < j, rho_k(x_k) = x_k.
/// Returns the obstruction triple instead when one exists.
std::variant<TwistFamily, Obstruction> derive_forced_twists(const AlgebraPresentation& pres);

/// Element of the degree-k forms: sum over size-k increasing index subsets S
/// of dx_S * (right coefficient), with dx_S = dx_{s1} ^ ... ^ dx_{sk}.
struct KForm {
    int n = 0;
    int degree = 0;
    std::map<std::vector<int>, NormalPoly> coeffs;

    static KForm zero(int n, int degree);
    static KForm from_poly(int n, const NormalPoly& p);          // degree 0
    static KForm basis(int n, std::vector<int> subset,
                       NormalPoly coeff);                        // dx_S * coeff

    void add_term(const std::vector<int>& subset, const NormalPoly& c);
    bool is_zero() const { return coeffs.empty(); }
};

KForm form_add(const KForm& f, const KForm& g);
KForm form_sub(const KForm& f, const KForm& g);
KForm form_scale(const KForm& f, const Scalar& c);
bool form_equal(const KForm& f, const KForm& g);

/// Right action of the algebra: (dx_S a) * p = dx_S (a p).
KForm form_right_multiply(const KForm& f, const NormalPoly& p, const AlgebraPresentation& pres);

/// d(a) as a one-form, computed by the Leibniz recursion, pushing every dx
/// to the left with p dx_k = dx_k rho_k(p).  Linear; d(1) = 0.
KForm differential(const NormalPoly& a, const AlgebraPresentation& pres, const TwistFamily& tw);

/// Closed form of the k-th skew partial of the ordered monomial x^alpha:
/// alpha_k * rho_k(x_1)^{a_1} ... rho_k(x_{k-1})^{a_{k-1}} x_k^{a_k - 1} * tail.
NormalPoly partial_closed_form(int k, const ExponentVector& alpha,
                               const AlgebraPresentation& pres, const TwistFamily& tw);

/// Product of forms: coefficients pass leftward through dx factors via the
/// twists; the concatenated dx sequence is sorted by adjacent swaps, each
/// contributing the factor -q_ij (descending data, i < j); repeated indices
/// give zero.  Throws DegreeOverflow when deg f + deg g > n.
KForm wedge(const KForm& f, const KForm& g, const AlgebraPresentation& pres,
            const TwistFamily& tw);

/// d on higher forms: d(dx_S a) = (-1)^|S| dx_S ^ d(a).
/// Throws DegreeOverflow at degree n.
KForm d_on_forms(const KForm& f, const AlgebraPresentation& pres, const TwistFamily& tw);

/// Left action: p (dx_S a) = dx_S (rho_{s_k} ... rho_{s_1})(p) a.
KForm left_multiply_form(const NormalPoly& p, const KForm& f, const AlgebraPresentation& pres,
                         const TwistFamily& tw);

/// The volume form omega = dx_1 ^ ... ^ dx_n with its induced automorphism
/// nu_omega (a omega = omega nu_omega(a)) and the coefficient-reading map
/// pi_omega(omega a) = a.
struct VolumeData {
    int n = 0;
    AffineEndo nu_omega;
    NormalPoly pi_omega(const KForm& top) const;
};

VolumeData volume_data(const AlgebraPresentation& pres, const TwistFamily& tw);

/// For each size-j increasing subset S: the pair (dx_S, c_S dx_{S^c}) with
/// the scalar prefactor c_S chosen so that the second wedged with the first
/// is exactly omega.
std::vector<std::pair<KForm, KForm>> integral_form_generators(int j,
                                                              const AlgebraPresentation& pres,
                                                              const TwistFamily& tw);

/// Checks, over every basis j-form dx_S m with monomial m of degree <= 2,
/// the two reconstruction identities
///   w' = sum_i  w_i^j  pi(wbar_i^{n-j} ^ w')
///   w' = sum_i  nu^{-1}(pi(w' ^ w_i^{n-j})) wbar_i^j .
bool verify_integral_identity(int j, const AlgebraPresentation& pres, const TwistFamily& tw);

/// Basis of { a : deg a <= degree_bound, d(a) = 0 }, by exact linear algebra
/// on monomial coefficients.  A connected calculus yields just {1}.
std::vector<NormalPoly> kernel_of_d(const AlgebraPresentation& pres, const TwistFamily& tw,
                                    int degree_bound);

/// All exponent vectors of total degree <= bound, in deg-lex order.
std::vector<ExponentVector> monomials_up_to(int n, int bound);

}  // namespace biquad
