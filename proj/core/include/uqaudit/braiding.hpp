#pragma once

// R-matrices, the flip, R-matrix dressing of single-site operators and the
// identity checks built on them.

#include "uqaudit/hopf.hpp"
#include "uqaudit/linalg.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace uqaudit {

/// diag(s, 1, 1, s) + (s - 1/s) E_{23} in the two-site basis (E_{23}: row 2,
/// column 3, one-based).
struct PaperR {};

/// The intertwiner found by solve_r on the six-vertex support, scaled so that
/// its lower-right entry equals `normalization`.
struct SolvedR {
    FieldScalar normalization = FieldScalar::q();
};

struct CustomR {
    Matrix matrix;
};

using RSource = std::variant<PaperR, SolvedR, CustomR>;

std::string to_string(const RSource& r);

/// Conjugation used to dress Bob's (right-slot) operators. Alice is always
/// dressed by R21.
enum class BobRule { ConjugateByR, ConjugateByR21, ConjugateByRinv };

std::string_view to_string(BobRule rule) noexcept;

struct DressingConvention {
    BobRule bob_rule = BobRule::ConjugateByR;
};

enum class Site { A, B };

Matrix r_paper();
/// Throws SingularMatrix if the source does not give an invertible 4x4 matrix.
Matrix r_matrix(const RSource& r);
/// P R P.
Matrix r21(const RSource& r);

/// Site A: R21 (X (x) 1) R21^-1. Site B: G (1 (x) X) G^-1 with G chosen by the
/// convention's Bob rule.
Matrix dress(const Matrix& x, Site site, const RSource& r, DressingConvention conv = {});

struct CovarianceResiduals {
    /// [D(J+), ~Jz^A] + ~J+^A
    Matrix jplus;
    /// [D(J-), ~Jz^A] - ~J-^A
    Matrix jminus;

    bool all_zero() const { return jplus.is_zero() && jminus.is_zero(); }
};

CovarianceResiduals covariance_check(const RSource& r, CoproductVariant variant = CoproductVariant::Definition);

/// For each symmetry generator g: D^op(g) - R D(g) R^-1.
std::map<Generator, Matrix> check_quasitriangularity(const RSource& r);

/// Zero-based (row, column) position in a 4x4 matrix.
using EntryPosition = std::pair<std::size_t, std::size_t>;

/// The four diagonal slots and the (2,3) slot (one-based).
std::vector<EntryPosition> six_vertex_support();

struct RSolution {
    std::vector<EntryPosition> support;
    /// Basis of all R supported on `support` with R D(g) = D^op(g) R for every
    /// symmetry generator.
    std::vector<Matrix> basis;
    /// Set when the family is one-dimensional: the representative with its
    /// lower-right entry equal to q (or, if that slot is empty, its first
    /// nonzero supported entry equal to 1).
    std::optional<Matrix> normalized;
};

/// Throws NoSolution when no invertible R exists on the given support.
RSolution solve_r(std::span<const EntryPosition> support);
RSolution solve_r();

/// R12 R13 R23 - R23 R13 R12 on three sites.
Matrix check_yang_baxter(const RSource& r);

}  // namespace uqaudit
