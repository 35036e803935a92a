#pragma once

#include "biquad/presentation.hpp"
#include "biquad/scalar.hpp"

#include <map>
#include <vector>

namespace biquad {

/// A word in the free algebra: a sequence of generator indices in 1..n.
/// The empty word is the monomial 1.
using Word = std::vector<int>;

/// Exponent vector of an ordered monomial x1^a1 ... xn^an; length exactly n.
using ExponentVector = std::vector<unsigned>;

/// Degree-lexicographic order with x1 < ... < xn: shorter total degree first;
/// at equal degree the word order, i.e. a higher power of an earlier
/// generator makes the monomial smaller.
struct DegLexLess {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

struct NoDescent : std::domain_error {
    NoDescent() : std::domain_error("word is already in ascending order") {}
};

/// Element of the free algebra: finite sum of words with scalar coefficients.
struct FreePoly {
    std::map<Word, Scalar> terms;

    static FreePoly word(Word w, Scalar c = Scalar(1));
    void add_term(const Word& w, const Scalar& c);
    bool is_zero() const { return terms.empty(); }
};

/// PBW normal form: finite sum of ordered monomials.
using NormalPoly = std::map<ExponentVector, Scalar, DegLexLess>;

NormalPoly normal_zero();
NormalPoly normal_const(int n, const Scalar& c);
NormalPoly normal_monomial(ExponentVector alpha, Scalar c = Scalar(1));
NormalPoly normal_add(const NormalPoly& a, const NormalPoly& b);
NormalPoly normal_sub(const NormalPoly& a, const NormalPoly& b);
NormalPoly normal_scale(const NormalPoly& a, const Scalar& c);
bool normal_is_zero(const NormalPoly& a);
bool normal_equal(const NormalPoly& a, const NormalPoly& b);

Word word_of(const ExponentVector& alpha);
ExponentVector exponents_of(const Word& w, int n);  // w must be ascending

/// Which descent (adjacent pair with left index > right index) a single
/// rewrite step targets.
enum class Strategy { leftmost, rightmost };

/// One application of the pairwise relation at the chosen descent of w.
/// Throws NoDescent when w is ascending.
FreePoly reduce_once(const Word& w, const AlgebraPresentation& pres, Strategy strategy);

/// Rewrite to the PBW normal form.  Terminates for every input: each step
/// strictly decreases (total degree, inversion count) lexicographically.
NormalPoly normalize(const FreePoly& p, const AlgebraPresentation& pres,
                     Strategy strategy = Strategy::leftmost);
NormalPoly normalize(const Word& w, const AlgebraPresentation& pres,
                     Strategy strategy = Strategy::leftmost);

/// Product in the algebra: concatenate monomials, then normalize.
NormalPoly multiply(const NormalPoly& a, const NormalPoly& b, const AlgebraPresentation& pres);

/// An affine map on generators, x_j -> lambda_j x_j + mu_j, extended to
/// ordered monomials multiplicatively.  Bijective iff every lambda_j != 0.
struct AffineEndo {
    // image[j-1] = (lambda_j, mu_j)
    std::vector<std::pair<Scalar, Scalar>> images;

    static AffineEndo identity(int n);
    int n() const { return static_cast<int>(images.size()); }
    bool is_bijective() const;
    AffineEndo inverse() const;
    bool equals(const AffineEndo& o) const;

    /// Image of the generator x_j as a normal-form polynomial.
    NormalPoly image_of(int j) const;
};

/// e1 after e2 (apply e2 first).
AffineEndo compose(const AffineEndo& e1, const AffineEndo& e2);

/// Substitute e into each ordered monomial of p, multiplying images in the
/// algebra.  Linear in p; multiplicative when e preserves the relations.
NormalPoly apply_endo(const AffineEndo& e, const NormalPoly& p, const AlgebraPresentation& pres);

/// True iff e maps every defining relation to zero, i.e. extends to an
/// algebra endomorphism.
bool preserves_relations(const AffineEndo& e, const AlgebraPresentation& pres);

/// True iff e1 and e2 commute as affine maps on every generator.
bool commute_on_generators(const AffineEndo& e1, const AffineEndo& e2);

std::string to_string(const NormalPoly& p, int n);

}  // namespace biquad
