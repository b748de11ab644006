#pragma once

// Exact scalars: rational functions in the formal variable s = q^(1/2) with
// arbitrary-precision rational coefficients.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace uqaudit {

using Rational = mpq_class;

/// Which symbol a rendering uses. `Q` writes every power of s as a power of
/// q = s^2, with half-integer exponents spelled `q^(k/2)`.
enum class Variable { S, Q };

/// Tags an evaluation point as a physical deformation parameter (must be > 0)
/// or as an arbitrary formal substitution.
enum class ParameterDomain { Formal, Physical };

class LaurentPolynomial {
public:
    using Terms = std::map<int, Rational>;

    LaurentPolynomial() = default;
    LaurentPolynomial(long constant);  // NOLINT(google-explicit-constructor)
    LaurentPolynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)

    static LaurentPolynomial monomial(const Rational& coefficient, int exponent);
    /// The formal variable s.
    static LaurentPolynomial s() { return monomial(1, 1); }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    bool is_monomial() const noexcept { return terms_.size() == 1; }

    /// Precondition: nonzero.
    int min_exponent() const;
    int max_exponent() const;
    const Rational& leading_coefficient() const;
    Rational coefficient(int exponent) const;

    LaurentPolynomial shifted(int by) const;
    LaurentPolynomial scaled(const Rational& factor) const;

    LaurentPolynomial operator-() const;
    LaurentPolynomial& operator+=(const LaurentPolynomial& rhs);
    LaurentPolynomial& operator-=(const LaurentPolynomial& rhs);
    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);

    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a.terms_ == b.terms_; }

    /// Exact value at s = s0. Throws PoleAtPoint when s0 = 0 meets a negative exponent.
    Rational evaluate(const Rational& s0) const;
    long double evaluate(long double s0) const;

    std::string to_string(Variable var = Variable::S) const;

private:
    void add_term(int exponent, const Rational& coefficient);

    Terms terms_;
};

enum class PolyOp { Add, Sub, Mul };

LaurentPolynomial poly_arith(const LaurentPolynomial& a, const LaurentPolynomial& b, PolyOp op);

/// Greatest common divisor, up to units c*s^k: the result is an ordinary
/// primitive integer polynomial with positive leading coefficient and nonzero
/// constant term. gcd(0, 0) = 0.
LaurentPolynomial polynomial_gcd(const LaurentPolynomial& a, const LaurentPolynomial& b);

/// Element of Q(s). Always held in canonical form:
///   - numerator and denominator coprime,
///   - denominator an ordinary polynomial with nonzero constant term,
///     primitive integer coefficients and positive leading coefficient.
/// Equality of values is therefore equality of representations.
class FieldScalar {
public:
    FieldScalar() : num_(), den_(1) {}
    FieldScalar(long value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
    FieldScalar(const Rational& value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
    FieldScalar(const LaurentPolynomial& p);  // NOLINT(google-explicit-constructor)

    static FieldScalar fraction(const LaurentPolynomial& num, const LaurentPolynomial& den);

    /// s = q^(1/2).
    static FieldScalar s();
    static FieldScalar q();
    /// s - 1/s = q^(1/2) - q^(-1/2).
    static FieldScalar lambda();

    const LaurentPolynomial& numerator() const noexcept { return num_; }
    const LaurentPolynomial& denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const;
    /// True when the value does not depend on s.
    bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }

    FieldScalar inverse() const;
    FieldScalar pow(int exponent) const;

    FieldScalar operator-() const;
    FieldScalar& operator+=(const FieldScalar& rhs);
    FieldScalar& operator-=(const FieldScalar& rhs);
    FieldScalar& operator*=(const FieldScalar& rhs);
    FieldScalar& operator/=(const FieldScalar& rhs);
    friend FieldScalar operator+(FieldScalar a, const FieldScalar& b) { return a += b; }
    friend FieldScalar operator-(FieldScalar a, const FieldScalar& b) { return a -= b; }
    friend FieldScalar operator*(FieldScalar a, const FieldScalar& b) { return a *= b; }
    friend FieldScalar operator/(FieldScalar a, const FieldScalar& b) { return a /= b; }

    friend bool operator==(const FieldScalar& a, const FieldScalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string(Variable var = Variable::S) const;

private:
    struct Canonical {};
    FieldScalar(Canonical, LaurentPolynomial num, LaurentPolynomial den)
        : num_(std::move(num)), den_(std::move(den)) {}

    friend FieldScalar canonicalize(const LaurentPolynomial& num, const LaurentPolynomial& den);

    LaurentPolynomial num_;
    LaurentPolynomial den_;
};

FieldScalar canonicalize(const LaurentPolynomial& num, const LaurentPolynomial& den);

enum class ScalarOp { Add, Sub, Mul, Div };

FieldScalar scalar_arith(const FieldScalar& a, const FieldScalar& b, ScalarOp op);

/// Exact value at s = s0. Throws PoleAtPoint if the denominator vanishes there
/// and NonpositiveParameter for a physical point s0 <= 0.
Rational evaluate(const FieldScalar& x, const Rational& s0,
                  ParameterDomain domain = ParameterDomain::Formal);

/// Exact value at s = sqrt(q) for a rational q > 0. Empty when sqrt(q) is
/// irrational and x depends on odd powers of s. Throws NonpositiveParameter
/// and PoleAtPoint.
std::optional<Rational> evaluate_at_q(const FieldScalar& x, const Rational& q);

/// Floating value at s = sqrt(q); q must be positive.
double to_float(const FieldScalar& x, double q);

/// Complex conjugation. Every quantity here is real for real q > 0, so this is
/// the identity.
inline const FieldScalar& conjugate(const FieldScalar& x) noexcept { return x; }

/// Parses the rendering produced by `to_string` (either variable) and, more
/// generally, any arithmetic expression in s, q, rationals and decimals with
/// + - * / ^ and parentheses. `q^(k/2)` is accepted.
FieldScalar parse_scalar(std::string_view text);

/// Parses "3/2", "-7", "0.125" into an exact rational.
Rational parse_rational(std::string_view text);

/// `digits` significant digits, "%g" style; -0 is printed as 0.
std::string format_decimal(double value, int digits = 12);

/// Sets `root` and returns true if q = root^2 for a nonnegative rational root.
bool rational_sqrt(const Rational& q, Rational& root);

}  // namespace uqaudit
