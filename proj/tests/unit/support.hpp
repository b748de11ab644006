#pragma once

#include "uqaudit/linalg.hpp"
#include "uqaudit/scalar.hpp"

#include <doctest.h>

#include <initializer_list>
#include <ostream>
#include <random>
#include <string>
#include <vector>

namespace uqaudit {

inline std::ostream& operator<<(std::ostream& os, const FieldScalar& x) { return os << x.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const Matrix& m) { return os << to_string(m); }
inline std::ostream& operator<<(std::ostream& os, const StateVector& v) { return os << to_string(v); }
inline std::ostream& operator<<(std::ostream& os, const Covector& u) { return os << to_string(u); }
inline std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p) { return os << p.to_string(); }

}  // namespace uqaudit

namespace support {

using uqaudit::FieldScalar;
using uqaudit::Matrix;
using uqaudit::Rational;
using uqaudit::StateVector;

inline FieldScalar S(const char* text) { return uqaudit::parse_scalar(text); }

inline Matrix M(std::initializer_list<std::initializer_list<const char*>> rows) {
    std::vector<FieldScalar> entries;
    std::size_t cols = 0;
    for (const auto& row : rows) {
        cols = row.size();
        for (const char* cell : row) entries.push_back(S(cell));
    }
    return Matrix(rows.size(), cols, std::move(entries));
}

inline StateVector V(std::initializer_list<const char*> cells) {
    std::vector<FieldScalar> entries;
    for (const char* cell : cells) entries.push_back(S(cell));
    return StateVector(std::move(entries));
}

// Seeded generator of small random Laurent polynomials and field elements.
class Random {
public:
    explicit Random(unsigned seed) : gen_(seed) {}

    Rational rational() {
        std::uniform_int_distribution<int> num(-6, 6);
        std::uniform_int_distribution<int> den(1, 4);
        Rational r(num(gen_), den(gen_));
        r.canonicalize();
        return r;
    }

    uqaudit::LaurentPolynomial poly(int max_terms = 3) {
        std::uniform_int_distribution<int> terms(1, max_terms);
        std::uniform_int_distribution<int> exponent(-3, 3);
        uqaudit::LaurentPolynomial p;
        const int n = terms(gen_);
        for (int i = 0; i < n; ++i) p += uqaudit::LaurentPolynomial::monomial(rational(), exponent(gen_));
        return p;
    }

    FieldScalar scalar() {
        uqaudit::LaurentPolynomial den;
        while (den.is_zero()) den = poly(2);
        return FieldScalar::fraction(poly(), den);
    }

    FieldScalar nonzero_scalar() {
        FieldScalar x;
        while (x.is_zero()) x = scalar();
        return x;
    }

    Matrix matrix(std::size_t n) {
        std::vector<FieldScalar> e;
        for (std::size_t i = 0; i < n * n; ++i) e.push_back(sparse_scalar());
        return Matrix(n, n, std::move(e));
    }

    // Mostly small constants and monomials, so matrix products stay cheap.
    FieldScalar sparse_scalar() {
        std::uniform_int_distribution<int> kind(0, 3);
        switch (kind(gen_)) {
            case 0: return 0;
            case 1: return rational();
            case 2: return FieldScalar(uqaudit::LaurentPolynomial::monomial(rational(), 1));
            default: return FieldScalar(poly(2));
        }
    }

    std::mt19937& engine() { return gen_; }

private:
    std::mt19937 gen_;
};

}  // namespace support
