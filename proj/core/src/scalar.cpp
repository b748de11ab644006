#include "uqaudit/scalar.hpp"

#include "uqaudit/errors.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <utility>
#include <vector>

namespace uqaudit {

namespace {

// Dense integer polynomial, index = degree, no trailing zeros.
using ZPoly = std::vector<mpz_class>;

void trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

Rational rational_pow(const Rational& base, unsigned exponent) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
    Rational r(num, den);
    r.canonicalize();
    return r;
}

mpz_class content(const ZPoly& p) {
    mpz_class g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

// Divides out the content and makes the leading coefficient positive.
void make_primitive(ZPoly& p) {
    trim(p);
    if (p.empty()) return;
    mpz_class g = content(p);
    if (p.back() < 0) g = -g;
    if (g != 1) {
        for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    }
}

// p (an ordinary polynomial) = scale * prim with prim primitive, positive lead.
void split_primitive(const LaurentPolynomial& p, Rational& scale, ZPoly& prim) {
    mpz_class lcm = 1;
    for (const auto& [e, c] : p.terms()) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    }
    prim.assign(static_cast<std::size_t>(p.max_exponent()) + 1, mpz_class(0));
    for (const auto& [e, c] : p.terms()) {
        mpz_class v = c.get_num() * (lcm / c.get_den());
        prim[static_cast<std::size_t>(e)] = v;
    }
    mpz_class g = content(prim);
    if (prim.back() < 0) g = -g;
    for (auto& c : prim) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    scale = Rational(g, lcm);
    scale.canonicalize();
}

LaurentPolynomial from_zpoly(const ZPoly& p) {
    LaurentPolynomial out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] != 0) out += LaurentPolynomial::monomial(Rational(p[i]), static_cast<int>(i));
    }
    return out;
}

ZPoly pseudo_remainder(ZPoly a, const ZPoly& b) {
    const mpz_class& lb = b.back();
    const int db = degree(b);
    while (!a.empty() && degree(a) >= db) {
        const int shift = degree(a) - db;
        const mpz_class la = a.back();
        for (auto& c : a) c *= lb;
        for (int i = 0; i <= db; ++i) a[static_cast<std::size_t>(i + shift)] -= la * b[static_cast<std::size_t>(i)];
        trim(a);
    }
    return a;
}

// Primitive polynomial remainder sequence; inputs primitive and nonzero.
ZPoly primitive_gcd(ZPoly a, ZPoly b) {
    if (degree(a) < degree(b)) std::swap(a, b);
    while (!b.empty()) {
        ZPoly r = pseudo_remainder(a, b);
        make_primitive(r);
        a = std::move(b);
        b = std::move(r);
    }
    make_primitive(a);
    return a;
}

// a / g where g is known to divide a in Z[x].
ZPoly divide_exact(ZPoly a, const ZPoly& g) {
    const int dg = degree(g);
    ZPoly quotient(static_cast<std::size_t>(degree(a) - dg) + 1, mpz_class(0));
    while (!a.empty() && degree(a) >= dg) {
        const int shift = degree(a) - dg;
        mpz_class c;
        mpz_divexact(c.get_mpz_t(), a.back().get_mpz_t(), g.back().get_mpz_t());
        quotient[static_cast<std::size_t>(shift)] = c;
        for (int i = 0; i <= dg; ++i) a[static_cast<std::size_t>(i + shift)] -= c * g[static_cast<std::size_t>(i)];
        trim(a);
    }
    trim(quotient);
    return quotient;
}

std::string rational_string(const Rational& r) { return r.get_str(); }

std::string term_string(const Rational& coefficient, int exponent, Variable var) {
    std::string power;
    if (exponent != 0) {
        if (var == Variable::S) {
            power = exponent == 1 ? "s" : "s^" + std::to_string(exponent);
        } else if (exponent % 2 == 0) {
            power = exponent == 2 ? "q" : "q^" + std::to_string(exponent / 2);
        } else {
            power = "q^(" + std::to_string(exponent) + "/2)";
        }
    }
    if (power.empty()) return rational_string(coefficient);
    if (coefficient == 1) return power;
    if (coefficient == -1) return "-" + power;
    return rational_string(coefficient) + "*" + power;
}

}  // namespace

// ---------------------------------------------------------------------------
// LaurentPolynomial

LaurentPolynomial::LaurentPolynomial(long constant) {
    if (constant != 0) terms_.emplace(0, Rational(constant));
}

LaurentPolynomial::LaurentPolynomial(const Rational& constant) {
    if (constant != 0) terms_.emplace(0, constant);
}

LaurentPolynomial LaurentPolynomial::monomial(const Rational& coefficient, int exponent) {
    LaurentPolynomial p;
    if (coefficient != 0) p.terms_.emplace(exponent, coefficient);
    return p;
}

bool LaurentPolynomial::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

int LaurentPolynomial::min_exponent() const { return terms_.begin()->first; }
int LaurentPolynomial::max_exponent() const { return terms_.rbegin()->first; }
const Rational& LaurentPolynomial::leading_coefficient() const { return terms_.rbegin()->second; }

Rational LaurentPolynomial::coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPolynomial::add_term(int exponent, const Rational& coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.emplace(exponent, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPolynomial LaurentPolynomial::shifted(int by) const {
    LaurentPolynomial out;
    for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + by, c);
    return out;
}

LaurentPolynomial LaurentPolynomial::scaled(const Rational& factor) const {
    if (factor == 0) return {};
    LaurentPolynomial out;
    for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, c * factor);
    return out;
}

LaurentPolynomial LaurentPolynomial::operator-() const { return scaled(-1); }

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    }
    return out;
}

Rational LaurentPolynomial::evaluate(const Rational& s0) const {
    Rational total = 0;
    if (s0 == 0) {
        if (!terms_.empty() && min_exponent() < 0) {
            throw Error(ErrorKind::PoleAtPoint, "negative power of s at s = 0");
        }
        return coefficient(0);
    }
    const Rational inv = 1 / s0;
    for (const auto& [e, c] : terms_) {
        total += c * (e >= 0 ? rational_pow(s0, static_cast<unsigned>(e))
                             : rational_pow(inv, static_cast<unsigned>(-e)));
    }
    return total;
}

long double LaurentPolynomial::evaluate(long double s0) const {
    long double total = 0.0L;
    for (const auto& [e, c] : terms_) {
        total += static_cast<long double>(c.get_d()) * std::pow(s0, static_cast<long double>(e));
    }
    return total;
}

std::string LaurentPolynomial::to_string(Variable var) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (out.empty()) {
            out = term_string(c, e, var);
        } else if (c < 0) {
            out += " - " + term_string(-c, e, var);
        } else {
            out += " + " + term_string(c, e, var);
        }
    }
    return out;
}

LaurentPolynomial poly_arith(const LaurentPolynomial& a, const LaurentPolynomial& b, PolyOp op) {
    switch (op) {
        case PolyOp::Add: return a + b;
        case PolyOp::Sub: return a - b;
        case PolyOp::Mul: return a * b;
    }
    return {};
}

LaurentPolynomial polynomial_gcd(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.is_zero() && b.is_zero()) return {};
    // Powers of s are units in the Laurent ring; gcd is taken on the s-free parts.
    Rational scale;
    ZPoly pa, pb;
    if (a.is_zero()) {
        split_primitive(b.shifted(-b.min_exponent()), scale, pb);
        return from_zpoly(pb);
    }
    split_primitive(a.shifted(-a.min_exponent()), scale, pa);
    if (b.is_zero()) return from_zpoly(pa);
    split_primitive(b.shifted(-b.min_exponent()), scale, pb);
    return from_zpoly(primitive_gcd(std::move(pa), std::move(pb)));
}

// ---------------------------------------------------------------------------
// FieldScalar

FieldScalar::FieldScalar(const LaurentPolynomial& p) : num_(p), den_(1) {}

FieldScalar canonicalize(const LaurentPolynomial& num, const LaurentPolynomial& den) {
    if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "zero denominator");
    if (num.is_zero()) return FieldScalar();

    const int num_shift = num.min_exponent();
    const int den_shift = den.min_exponent();
    Rational num_scale, den_scale;
    ZPoly pn, pd;
    split_primitive(num.shifted(-num_shift), num_scale, pn);
    split_primitive(den.shifted(-den_shift), den_scale, pd);

    if (degree(pn) > 0 && degree(pd) > 0) {
        ZPoly g = primitive_gcd(pn, pd);
        if (degree(g) > 0) {
            pn = divide_exact(std::move(pn), g);
            pd = divide_exact(std::move(pd), g);
        }
    }
    return FieldScalar(FieldScalar::Canonical{},
                       from_zpoly(pn).scaled(num_scale / den_scale).shifted(num_shift - den_shift),
                       from_zpoly(pd));
}

FieldScalar FieldScalar::fraction(const LaurentPolynomial& num, const LaurentPolynomial& den) {
    return canonicalize(num, den);
}

FieldScalar FieldScalar::s() { return FieldScalar(LaurentPolynomial::s()); }
FieldScalar FieldScalar::q() { return FieldScalar(LaurentPolynomial::monomial(1, 2)); }
FieldScalar FieldScalar::lambda() {
    return FieldScalar(LaurentPolynomial::monomial(1, 1) - LaurentPolynomial::monomial(1, -1));
}

bool FieldScalar::is_one() const {
    return den_.is_constant() && num_ == LaurentPolynomial(1);
}

FieldScalar FieldScalar::inverse() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    return canonicalize(den_, num_);
}

FieldScalar FieldScalar::pow(int exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    FieldScalar result(1);
    FieldScalar base = *this;
    auto e = static_cast<unsigned>(exponent);
    while (e != 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e != 0) base *= base;
    }
    return result;
}

FieldScalar FieldScalar::operator-() const { return FieldScalar(Canonical{}, -num_, den_); }

FieldScalar& FieldScalar::operator+=(const FieldScalar& rhs) {
    if (rhs.is_zero()) return *this;
    if (is_zero()) return *this = rhs;
    if (den_ == rhs.den_) {
        *this = canonicalize(num_ + rhs.num_, den_);
    } else {
        *this = canonicalize(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
    }
    return *this;
}

FieldScalar& FieldScalar::operator-=(const FieldScalar& rhs) { return *this += -rhs; }

FieldScalar& FieldScalar::operator*=(const FieldScalar& rhs) {
    if (is_zero() || rhs.is_zero()) return *this = FieldScalar();
    if (den_.is_constant() && rhs.den_.is_constant()) {
        num_ = num_ * rhs.num_;
        return *this;
    }
    *this = canonicalize(num_ * rhs.num_, den_ * rhs.den_);
    return *this;
}

FieldScalar& FieldScalar::operator/=(const FieldScalar& rhs) {
    if (rhs.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by the zero rational function");
    *this = canonicalize(num_ * rhs.den_, den_ * rhs.num_);
    return *this;
}

std::string FieldScalar::to_string(Variable var) const {
    if (den_ == LaurentPolynomial(1)) return num_.to_string(var);
    // A bare integer or a unit monomial needs no parentheses: "q^2/(q^2 + 1)".
    const bool bare = num_.is_monomial() && num_.leading_coefficient().get_den() == 1 &&
                      (num_.min_exponent() == 0 || abs(num_.leading_coefficient()) == 1);
    const std::string num = bare ? num_.to_string(var) : "(" + num_.to_string(var) + ")";
    return num + "/(" + den_.to_string(var) + ")";
}

FieldScalar scalar_arith(const FieldScalar& a, const FieldScalar& b, ScalarOp op) {
    switch (op) {
        case ScalarOp::Add: return a + b;
        case ScalarOp::Sub: return a - b;
        case ScalarOp::Mul: return a * b;
        case ScalarOp::Div: return a / b;
    }
    return {};
}

Rational evaluate(const FieldScalar& x, const Rational& s0, ParameterDomain domain) {
    if (domain == ParameterDomain::Physical && s0 <= 0) {
        throw Error(ErrorKind::NonpositiveParameter, "s0 = " + s0.get_str());
    }
    const Rational den = x.denominator().evaluate(s0);
    if (den == 0) throw Error(ErrorKind::PoleAtPoint, "denominator vanishes at s = " + s0.get_str());
    return x.numerator().evaluate(s0) / den;
}

std::optional<Rational> evaluate_at_q(const FieldScalar& x, const Rational& q) {
    if (q <= 0) throw Error(ErrorKind::NonpositiveParameter, "q = " + q.get_str());
    Rational s0;
    if (rational_sqrt(q, s0)) return evaluate(x, s0, ParameterDomain::Physical);
    // In lowest terms a function of q has only even powers of s on both sides.
    auto in_q = [&](const LaurentPolynomial& p) -> std::optional<Rational> {
        Rational sum = 0;
        for (const auto& [e, c] : p.terms()) {
            if (e % 2 != 0) return std::nullopt;
            Rational term = c;
            mpz_class num = q.get_num(), den = q.get_den();
            const unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e) / 2;
            mpz_pow_ui(num.get_mpz_t(), num.get_mpz_t(), k);
            mpz_pow_ui(den.get_mpz_t(), den.get_mpz_t(), k);
            term *= e < 0 ? Rational(den, num) : Rational(num, den);
            sum += term;
        }
        return sum;
    };
    const auto num = in_q(x.numerator());
    const auto den = in_q(x.denominator());
    if (!num || !den) return std::nullopt;
    if (*den == 0) throw Error(ErrorKind::PoleAtPoint, "denominator vanishes at q = " + q.get_str());
    Rational v = *num / *den;
    v.canonicalize();
    return v;
}

double to_float(const FieldScalar& x, double q) {
    if (!(q > 0.0) || !std::isfinite(q)) {
        throw Error(ErrorKind::NonpositiveParameter, "q must be a positive finite number");
    }
    const long double s0 = std::sqrt(static_cast<long double>(q));
    const long double den = x.denominator().evaluate(s0);
    if (den == 0.0L) throw Error(ErrorKind::PoleAtPoint, "denominator vanishes");
    return static_cast<double>(x.numerator().evaluate(s0) / den);
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class ScalarParser {
public:
    explicit ScalarParser(std::string_view text) : text_(text) {}

    FieldScalar parse() {
        FieldScalar value = expression();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return value;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw Error(ErrorKind::ParseError,
                    why + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    bool starts_primary() {
        const char c = peek();
        return c == '(' || std::isalpha(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c));
    }

    FieldScalar expression() {
        FieldScalar value = term();
        for (;;) {
            if (accept('+')) {
                value += term();
            } else if (accept('-')) {
                value -= term();
            } else {
                return value;
            }
        }
    }

    FieldScalar term() {
        FieldScalar value = unary();
        for (;;) {
            if (accept('*')) {
                value *= unary();
            } else if (accept('/')) {
                FieldScalar divisor = unary();
                if (divisor.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero in expression");
                value /= divisor;
            } else if (starts_primary()) {
                value *= power();
            } else {
                return value;
            }
        }
    }

    FieldScalar unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    mpz_class integer() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    Rational exponent() {
        if (accept('(')) {
            const bool negative = accept('-');
            Rational e(integer());
            if (accept('/')) {
                const mpz_class den = integer();
                if (den == 0) fail("zero exponent denominator");
                e /= Rational(den);
            }
            expect(')');
            return negative ? Rational(-e) : e;
        }
        const bool negative = accept('-');
        Rational e(integer());
        return negative ? Rational(-e) : e;
    }

    FieldScalar power() {
        FieldScalar base = primary();
        if (!accept('^')) return base;
        Rational e = exponent();
        e.canonicalize();
        if (e.get_den() == 1) {
            if (!e.get_num().fits_sint_p()) fail("exponent too large");
            return base.pow(static_cast<int>(e.get_num().get_si()));
        }
        // Fractional exponents only make sense for a bare power of s.
        const auto& num = base.numerator();
        if (!base.denominator().is_constant() || !num.is_monomial() || num.leading_coefficient() != 1) {
            fail("fractional exponent on a non-monomial");
        }
        Rational scaled = e * num.max_exponent();
        scaled.canonicalize();
        if (scaled.get_den() != 1) fail("fractional exponent does not give an integer power of s");
        return FieldScalar(LaurentPolynomial::monomial(1, static_cast<int>(scaled.get_num().get_si())));
    }

    FieldScalar primary() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            FieldScalar value = expression();
            expect(')');
            return value;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return FieldScalar(number());
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            const std::string_view name = text_.substr(start, pos_ - start);
            if (name == "s") return FieldScalar::s();
            if (name == "q") return FieldScalar::q();
            if (name == "lambda") return FieldScalar::lambda();
            pos_ = start;
            fail("unknown identifier '" + std::string(name) + "'");
        }
        fail("expected a number, s, q or '('");
    }

    Rational number() {
        Rational value(integer());
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("expected digits after '.'");
            mpz_class frac(std::string(text_.substr(start, pos_ - start)));
            mpz_class scale;
            mpz_ui_pow_ui(scale.get_mpz_t(), 10, pos_ - start);
            value += Rational(frac, scale);
            value.canonicalize();
        }
        return value;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

FieldScalar parse_scalar(std::string_view text) { return ScalarParser(text).parse(); }

Rational parse_rational(std::string_view text) {
    const FieldScalar value = parse_scalar(text);
    if (!value.is_constant()) {
        throw Error(ErrorKind::ParseError, "expected a rational number, got '" + std::string(text) + "'");
    }
    return value.numerator().coefficient(0) / value.denominator().coefficient(0);
}

std::string format_decimal(double value, int digits) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.*g", digits, value);
    std::string out(buffer);
    if (out == "-0") out = "0";
    return out;
}

bool rational_sqrt(const Rational& q, Rational& root) {
    if (q < 0) return false;
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return false;
    mpz_class num, den;
    mpz_sqrt(num.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(den.get_mpz_t(), q.get_den_mpz_t());
    root = Rational(num, den);
    root.canonicalize();
    return true;
}

}  // namespace uqaudit
