#include "uqaudit/linalg.hpp"

#include "uqaudit/errors.hpp"

#include <algorithm>
#include <utility>

namespace uqaudit {

namespace {

void require(bool condition, ErrorKind kind, const char* what) {
    if (!condition) throw Error(kind, what);
}

BasisTag merge_basis(const BasisTag& a, const BasisTag& b) {
    if (a && b && *a != *b) throw Error(ErrorKind::BasisMismatch, "'" + *a + "' vs '" + *b + "'");
    return a ? a : b;
}

std::string join_entries(std::span<const FieldScalar> xs, Variable var) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i != 0) out += ", ";
        out += xs[i].to_string(var);
    }
    return out + "]";
}

}  // namespace

// ---------------------------------------------------------------------------
// vectors

StateVector::StateVector(std::vector<FieldScalar> entries, BasisTag basis)
    : entries_(std::move(entries)), basis_(std::move(basis)) {
    for (const auto& x : entries_) norm_squared_ += x * conjugate(x);
}

bool StateVector::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const FieldScalar& x) { return x.is_zero(); });
}

StateVector StateVector::scaled(const FieldScalar& factor) const {
    std::vector<FieldScalar> out;
    out.reserve(entries_.size());
    for (const auto& x : entries_) out.push_back(x * factor);
    return StateVector(std::move(out), basis_);
}

StateVector StateVector::leading_normalized() const {
    for (const auto& x : entries_) {
        if (!x.is_zero()) return scaled(x.inverse());
    }
    return *this;
}

Covector Covector::leading_normalized() const {
    for (const auto& x : entries) {
        if (!x.is_zero()) {
            const FieldScalar inv = x.inverse();
            Covector out;
            for (const auto& y : entries) out.entries.push_back(y * inv);
            return out;
        }
    }
    return *this;
}

FieldScalar pair(const Covector& u, const StateVector& v) {
    require(u.size() == v.size(), ErrorKind::DimensionMismatch, "pairing lengths differ");
    FieldScalar total;
    for (std::size_t i = 0; i < u.size(); ++i) total += u.entries[i] * v[i];
    return total;
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols, BasisTag basis)
    : rows_(rows), cols_(cols), entries_(rows * cols), basis_(std::move(basis)) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<FieldScalar> entries, BasisTag basis)
    : rows_(rows), cols_(cols), entries_(std::move(entries)), basis_(std::move(basis)) {
    require(entries_.size() == rows * cols, ErrorKind::DimensionMismatch, "entry count != rows * cols");
}

Matrix Matrix::identity(std::size_t n, BasisTag basis) {
    Matrix m(n, n, std::move(basis));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::diagonal(const std::vector<FieldScalar>& diag, BasisTag basis) {
    Matrix m(diag.size(), diag.size(), std::move(basis));
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

Matrix Matrix::unit(std::size_t n, std::size_t row, std::size_t col, BasisTag basis) {
    require(row < n && col < n, ErrorKind::DimensionMismatch, "unit matrix index out of range");
    Matrix m(n, n, std::move(basis));
    m(row, col) = 1;
    return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<FieldScalar>> rows, BasisTag basis) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    std::vector<FieldScalar> entries;
    entries.reserve(r * c);
    for (const auto& row : rows) {
        require(row.size() == c, ErrorKind::DimensionMismatch, "ragged rows");
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return Matrix(r, c, std::move(entries), std::move(basis));
}

bool Matrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const FieldScalar& x) { return x.is_zero(); });
}

const FieldScalar& Matrix::at(std::size_t r, std::size_t c) const {
    require(r < rows_ && c < cols_, ErrorKind::DimensionMismatch, "matrix index out of range");
    return (*this)(r, c);
}

Matrix Matrix::with_basis(BasisTag basis) const {
    Matrix m = *this;
    m.basis_ = std::move(basis);
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_, basis_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
    require(rows_ == rhs.rows_ && cols_ == rhs.cols_, ErrorKind::DimensionMismatch, "sum of unequal shapes");
    basis_ = merge_basis(basis_, rhs.basis_);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
    require(rows_ == rhs.rows_ && cols_ == rhs.cols_, ErrorKind::DimensionMismatch, "difference of unequal shapes");
    basis_ = merge_basis(basis_, rhs.basis_);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
    return *this;
}

Matrix& Matrix::operator*=(const FieldScalar& factor) {
    for (auto& x : entries_) x *= factor;
    return *this;
}

Matrix Matrix::operator-() const {
    Matrix m = *this;
    for (auto& x : m.entries_) x = -x;
    return m;
}

// ---------------------------------------------------------------------------
// products

Matrix matmul(const Matrix& a, const Matrix& b) {
    require(a.cols() == b.rows(), ErrorKind::DimensionMismatch, "matmul: inner dimensions differ");
    Matrix out(a.rows(), b.cols(), merge_basis(a.basis(), b.basis()));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const FieldScalar& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

StateVector operator*(const Matrix& a, const StateVector& v) {
    require(a.cols() == v.size(), ErrorKind::DimensionMismatch, "matrix-vector: lengths differ");
    std::vector<FieldScalar> out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (!a(i, k).is_zero() && !v[k].is_zero()) out[i] += a(i, k) * v[k];
        }
    }
    return StateVector(std::move(out), merge_basis(a.basis(), v.basis()));
}

Covector operator*(const Covector& u, const Matrix& a) {
    require(u.size() == a.rows(), ErrorKind::DimensionMismatch, "covector-matrix: lengths differ");
    Covector out{std::vector<FieldScalar>(a.cols())};
    for (std::size_t k = 0; k < a.rows(); ++k) {
        if (u.entries[k].is_zero()) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (!a(k, j).is_zero()) out.entries[j] += u.entries[k] * a(k, j);
        }
    }
    return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    BasisTag tag;
    if (a.basis() && b.basis()) tag = *a.basis() + "*" + *b.basis();
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols(), std::move(tag));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) {
    require(a.is_square() && b.is_square() && a.rows() == b.rows(), ErrorKind::DimensionMismatch,
            "commutator needs square matrices of equal size");
    return a * b - b * a;
}

Matrix vstack(std::span<const Matrix> blocks) {
    if (blocks.empty()) return {};
    const std::size_t cols = blocks.front().cols();
    std::vector<FieldScalar> entries;
    std::size_t rows = 0;
    BasisTag tag = blocks.front().basis();
    for (const auto& m : blocks) {
        require(m.cols() == cols, ErrorKind::DimensionMismatch, "vstack: column counts differ");
        tag = merge_basis(tag, m.basis());
        entries.insert(entries.end(), m.entries().begin(), m.entries().end());
        rows += m.rows();
    }
    return Matrix(rows, cols, std::move(entries), std::move(tag));
}

Matrix hstack(std::span<const Matrix> blocks) {
    std::vector<Matrix> transposed;
    transposed.reserve(blocks.size());
    for (const auto& m : blocks) transposed.push_back(m.transpose());
    return vstack(transposed).transpose();
}

// ---------------------------------------------------------------------------
// elimination

EchelonForm row_reduce(const Matrix& a) {
    Matrix m = a;
    std::vector<std::size_t> pivots;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        std::size_t r = pivot_row;
        while (r < m.rows() && m(r, col).is_zero()) ++r;
        if (r == m.rows()) continue;
        if (r != pivot_row) {
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(r, c), m(pivot_row, c));
        }
        const FieldScalar inv = m(pivot_row, col).inverse();
        for (std::size_t c = col; c < m.cols(); ++c) {
            if (!m(pivot_row, c).is_zero()) m(pivot_row, c) *= inv;
        }
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == pivot_row || m(i, col).is_zero()) continue;
            const FieldScalar factor = m(i, col);
            for (std::size_t c = col; c < m.cols(); ++c) {
                if (!m(pivot_row, c).is_zero()) m(i, c) -= factor * m(pivot_row, c);
            }
        }
        pivots.push_back(col);
        ++pivot_row;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& a) { return row_reduce(a).pivot_columns.size(); }

Matrix invert(const Matrix& a) {
    require(a.is_square(), ErrorKind::DimensionMismatch, "invert needs a square matrix");
    const std::size_t n = a.rows();
    const Matrix blocks[] = {a.with_basis(std::nullopt), Matrix::identity(n)};
    const EchelonForm ef = row_reduce(hstack(blocks));
    if (ef.pivot_columns.size() < n || ef.pivot_columns[n - 1] != n - 1) {
        throw Error(ErrorKind::SingularMatrix, "matrix has rank below " + std::to_string(n));
    }
    Matrix inv(n, n, a.basis());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = ef.reduced(i, n + j);
    }
    return inv;
}

Matrix conjugate(const Matrix& g, const Matrix& x) { return g * x * invert(g); }

std::vector<StateVector> kernel(const Matrix& a) {
    const EchelonForm ef = row_reduce(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : ef.pivot_columns) is_pivot[c] = true;

    std::vector<StateVector> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<FieldScalar> v(a.cols());
        v[free] = 1;
        for (std::size_t i = 0; i < ef.pivot_columns.size(); ++i) v[ef.pivot_columns[i]] = -ef.reduced(i, free);
        basis.emplace_back(std::move(v), a.basis());
    }
    return basis;
}

std::vector<Covector> left_kernel(const Matrix& a) {
    std::vector<Covector> out;
    for (const auto& v : kernel(a.transpose())) {
        out.push_back(Covector{{v.entries().begin(), v.entries().end()}});
    }
    return out;
}

std::vector<FieldScalar> characteristic_polynomial(const Matrix& a) {
    require(a.is_square(), ErrorKind::DimensionMismatch, "characteristic polynomial needs a square matrix");
    const std::size_t n = a.rows();
    const Matrix plain = a.with_basis(std::nullopt);
    std::vector<FieldScalar> coeffs(n + 1);
    coeffs[n] = 1;
    Matrix m(n, n);  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I
    for (std::size_t k = 1; k <= n; ++k) {
        m = plain * m + Matrix::identity(n) * coeffs[n - k + 1];
        const Matrix am = plain * m;
        FieldScalar trace;
        for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
        coeffs[n - k] = -trace / FieldScalar(static_cast<long>(k));
    }
    return coeffs;
}

Matrix evaluate(const Matrix& a, const Rational& s0) {
    std::vector<FieldScalar> out;
    out.reserve(a.entries().size());
    for (const auto& x : a.entries()) out.emplace_back(evaluate(x, s0));
    return Matrix(a.rows(), a.cols(), std::move(out), a.basis());
}

std::vector<double> to_float(const Matrix& a, double q) {
    std::vector<double> out;
    out.reserve(a.entries().size());
    for (const auto& x : a.entries()) out.push_back(to_float(x, q));
    return out;
}

std::string to_string(const Matrix& a, Variable var) {
    std::string out = "[";
    for (std::size_t r = 0; r < a.rows(); ++r) {
        if (r != 0) out += ", ";
        out += join_entries(a.entries().subspan(r * a.cols(), a.cols()), var);
    }
    return out + "]";
}

std::string to_string(const StateVector& v, Variable var) { return join_entries(v.entries(), var); }
std::string to_string(const Covector& u, Variable var) { return join_entries(u.entries, var); }

}  // namespace uqaudit
