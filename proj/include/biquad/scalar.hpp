#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace biquad {

using Rational = boost::multiprecision::cpp_rational;

/// A monomial in the declared parameters: name -> exponent (> 0).
using Monomial = std::map<std::string, unsigned>;

/// Sparse multivariate polynomial over Q. Zero coefficients are never stored.
using Polynomial = std::map<Monomial, Rational>;

// ---- error types ----

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("scalar: division by zero") {}
};

struct MissingParameter : std::domain_error {
    explicit MissingParameter(const std::string& name)
        : std::domain_error("scalar: no value assigned to parameter '" + name + "'") {}
};

struct PoleAtPoint : std::domain_error {
    PoleAtPoint() : std::domain_error("scalar: denominator vanishes at the given point") {}
};

/// Error from the expression parser; `pos` is a 0-based offset into the input.
struct ExprError : std::runtime_error {
    std::size_t pos;
    ExprError(std::size_t p, const std::string& msg)
        : std::runtime_error(msg), pos(p) {}
};

// ---- polynomial helpers ----

Polynomial poly_const(const Rational& c);
Polynomial poly_var(const std::string& name);
Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_sub(const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
Polynomial poly_neg(const Polynomial& a);
bool poly_is_zero(const Polynomial& a);

/// Element of the field Q(p1,...,pm) of rational functions in the declared
/// parameters.  Stored as numerator/denominator; the denominator is never the
/// zero polynomial.  Canonical form: common monomial factor removed, the
/// denominator primitive with positive leading coefficient, zero as 0/1.
/// Equality of values is decided by cross-multiplication, not by the stored
/// representation (no polynomial gcd is computed).
class Scalar {
public:
    Scalar() : num_(), den_(poly_const(1)) {}
    Scalar(int v) : Scalar(Rational(v)) {}
    Scalar(long v) : Scalar(Rational(v)) {}
    explicit Scalar(const Rational& v);
    Scalar(Polynomial num, Polynomial den);

    static Scalar parameter(const std::string& name);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.empty(); }
    bool is_one() const { return num_ == den_; }

    /// Value equality (cross-multiplication).
    bool equals(const Scalar& o) const;

    /// Raise to an integer power; negative exponents invert (value must be nonzero).
    Scalar pow(long e) const;

    /// Exact evaluation at a rational point.
    Rational eval_at(const std::map<std::string, Rational>& assignment) const;

    /// All parameter names appearing in numerator or denominator.
    std::set<std::string> parameters() const;

    /// Same value up to a unit: the denominator's rational-monomial part is
    /// cleared.  Used when reporting left-hand sides of zero-tests, where
    /// invertible monomial factors are noise.
    Scalar unit_reduced() const;

    /// Render in the expression grammar accepted by parse_scalar.
    std::string str() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);  // throws DivisionByZero
    friend Scalar operator-(const Scalar& a);

    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
    Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

private:
    Polynomial num_, den_;
    void canonicalize();
};

/// Parse an expression in the scalar grammar:
///   expr   := term (("+"|"-") term)*
///   term   := factor (("*"|"/") factor)*
///   factor := atom ("^" integer)?
///   atom   := rational | identifier | "(" expr ")" | "-" factor
/// "^" binds tighter than the unary minus, so "-q^2" is -(q^2).
Scalar parse_scalar(const std::string& text);

}  // namespace biquad
