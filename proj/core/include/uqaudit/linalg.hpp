#pragma once

// Dense exact linear algebra over FieldScalar.

#include "uqaudit/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace uqaudit {

/// Optional label naming the ordered basis a matrix or vector is written in.
/// Two tagged operands of a product or sum must carry the same tag.
using BasisTag = std::optional<std::string>;

class StateVector {
public:
    StateVector() = default;
    explicit StateVector(std::vector<FieldScalar> entries, BasisTag basis = std::nullopt);

    std::size_t size() const noexcept { return entries_.size(); }
    const FieldScalar& operator[](std::size_t i) const { return entries_[i]; }
    std::span<const FieldScalar> entries() const noexcept { return entries_; }
    const BasisTag& basis() const noexcept { return basis_; }

    /// Sum of squared entries (entries are real).
    const FieldScalar& norm_squared() const noexcept { return norm_squared_; }
    bool is_zero() const;

    StateVector scaled(const FieldScalar& factor) const;
    /// Rescales so that the first nonzero entry equals 1; the zero vector is returned unchanged.
    StateVector leading_normalized() const;

    friend bool operator==(const StateVector& a, const StateVector& b) { return a.entries_ == b.entries_; }

private:
    std::vector<FieldScalar> entries_;
    BasisTag basis_;
    FieldScalar norm_squared_;
};

/// Row vector (element of the dual space).
struct Covector {
    std::vector<FieldScalar> entries;

    std::size_t size() const noexcept { return entries.size(); }
    Covector leading_normalized() const;
    friend bool operator==(const Covector&, const Covector&) = default;
};

/// Contraction u . v.
FieldScalar pair(const Covector& u, const StateVector& v);

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, BasisTag basis = std::nullopt);
    Matrix(std::size_t rows, std::size_t cols, std::vector<FieldScalar> entries, BasisTag basis = std::nullopt);

    static Matrix identity(std::size_t n, BasisTag basis = std::nullopt);
    static Matrix diagonal(const std::vector<FieldScalar>& diag, BasisTag basis = std::nullopt);
    /// Unit matrix with a single 1 at (row, col), zero-based.
    static Matrix unit(std::size_t n, std::size_t row, std::size_t col, BasisTag basis = std::nullopt);
    static Matrix from_rows(std::initializer_list<std::initializer_list<FieldScalar>> rows,
                            BasisTag basis = std::nullopt);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool is_zero() const;

    const FieldScalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    FieldScalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    /// Bounds-checked access; throws DimensionMismatch.
    const FieldScalar& at(std::size_t r, std::size_t c) const;

    std::span<const FieldScalar> entries() const noexcept { return entries_; }
    const BasisTag& basis() const noexcept { return basis_; }
    Matrix with_basis(BasisTag basis) const;

    Matrix transpose() const;

    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    Matrix& operator*=(const FieldScalar& factor);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const FieldScalar& f) { return a *= f; }
    friend Matrix operator*(const FieldScalar& f, Matrix a) { return a *= f; }
    Matrix operator-() const;

    /// Entrywise equality; basis tags are metadata and do not take part.
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<FieldScalar> entries_;
    BasisTag basis_;
};

Matrix matmul(const Matrix& a, const Matrix& b);
inline Matrix operator*(const Matrix& a, const Matrix& b) { return matmul(a, b); }
StateVector operator*(const Matrix& a, const StateVector& v);
Covector operator*(const Covector& u, const Matrix& a);

/// Kronecker product; the first factor is the left (Alice) slot.
Matrix kron(const Matrix& a, const Matrix& b);
Matrix commutator(const Matrix& a, const Matrix& b);
Matrix invert(const Matrix& a);
/// g * x * g^-1.
Matrix conjugate(const Matrix& g, const Matrix& x);

Matrix vstack(std::span<const Matrix> blocks);
Matrix hstack(std::span<const Matrix> blocks);

struct EchelonForm {
    Matrix reduced;
    std::vector<std::size_t> pivot_columns;
};

/// Reduced row echelon form. The pivot in each column is the first nonzero
/// entry at or below the current row.
EchelonForm row_reduce(const Matrix& a);
std::size_t rank(const Matrix& a);

/// Basis of {v : A v = 0}: one vector per free column, left to right, with that
/// column's entry set to 1.
std::vector<StateVector> kernel(const Matrix& a);
/// Basis of {u : u A = 0}, same convention applied to A^T.
std::vector<Covector> left_kernel(const Matrix& a);

/// Coefficients c_0 .. c_n of det(x I - A), lowest degree first.
std::vector<FieldScalar> characteristic_polynomial(const Matrix& a);

Matrix evaluate(const Matrix& a, const Rational& s0);
std::vector<double> to_float(const Matrix& a, double q);

/// "[[a, b], [c, d]]" with each entry rendered by FieldScalar::to_string.
std::string to_string(const Matrix& a, Variable var = Variable::S);
std::string to_string(const StateVector& v, Variable var = Variable::S);
std::string to_string(const Covector& u, Variable var = Variable::S);

}  // namespace uqaudit
