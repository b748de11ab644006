#include "uqaudit/braiding.hpp"

#include "uqaudit/errors.hpp"

#include <algorithm>

namespace uqaudit {

namespace {

constexpr std::size_t kTwoSiteDim = 4;

const Matrix& solved_r_unit() {
    // Scale-fixed solution with lower-right entry q; computed once.
    static const Matrix cached = [] {
        RSolution sol = solve_r();
        return *sol.normalized;
    }();
    return cached;
}

Matrix bob_conjugator(const RSource& r, BobRule rule) {
    switch (rule) {
        case BobRule::ConjugateByR: return r_matrix(r);
        case BobRule::ConjugateByR21: return r21(r);
        case BobRule::ConjugateByRinv: return invert(r_matrix(r));
    }
    return {};
}

}  // namespace

std::string to_string(const RSource& r) {
    struct Visitor {
        std::string operator()(const PaperR&) const { return "paper"; }
        std::string operator()(const SolvedR& s) const {
            return s.normalization == FieldScalar::q() ? "solved" : "solved(" + s.normalization.to_string() + ")";
        }
        std::string operator()(const CustomR&) const { return "custom"; }
    };
    return std::visit(Visitor{}, r);
}

std::string_view to_string(BobRule rule) noexcept {
    switch (rule) {
        case BobRule::ConjugateByR: return "r";
        case BobRule::ConjugateByR21: return "r21";
        case BobRule::ConjugateByRinv: return "rinv";
    }
    return "?";
}

Matrix r_paper() {
    const FieldScalar s = FieldScalar::s();
    Matrix r = Matrix::diagonal({s, 1, 1, s}, kTwoSiteBasis);
    r(1, 2) = FieldScalar::lambda();
    return r;
}

Matrix r_matrix(const RSource& source) {
    struct Visitor {
        Matrix operator()(const PaperR&) const { return r_paper(); }
        Matrix operator()(const SolvedR& s) const {
            return solved_r_unit() * (s.normalization / FieldScalar::q());
        }
        Matrix operator()(const CustomR& c) const {
            if (c.matrix.rows() != kTwoSiteDim || c.matrix.cols() != kTwoSiteDim) {
                throw Error(ErrorKind::DimensionMismatch, "custom R must be 4x4");
            }
            return c.matrix;
        }
    };
    Matrix r = std::visit(Visitor{}, source);
    if (rank(r) != kTwoSiteDim) throw Error(ErrorKind::SingularMatrix, "R-matrix source is not invertible");
    return r;
}

Matrix r21(const RSource& r) {
    const Matrix p = flip();
    return p * r_matrix(r) * p;
}

Matrix dress(const Matrix& x, Site site, const RSource& r, DressingConvention conv) {
    if (x.rows() != 2 || x.cols() != 2) throw Error(ErrorKind::DimensionMismatch, "dress expects a 2x2 operator");
    const Matrix one = Matrix::identity(2, kSiteBasis);
    const Matrix local = x.with_basis(kSiteBasis);
    if (site == Site::A) return conjugate(r21(r), kron(local, one));
    return conjugate(bob_conjugator(r, conv.bob_rule), kron(one, local));
}

CovarianceResiduals covariance_check(const RSource& r, CoproductVariant variant) {
    const Matrix jz_a = dress(generator_matrix(Generator::Jz), Site::A, r);
    const Matrix jp_a = dress(generator_matrix(Generator::Jplus), Site::A, r);
    const Matrix jm_a = dress(generator_matrix(Generator::Jminus), Site::A, r);
    return {
        commutator(coproduct_matrix(Generator::Jplus, variant), jz_a) + jp_a,
        commutator(coproduct_matrix(Generator::Jminus, variant), jz_a) - jm_a,
    };
}

std::map<Generator, Matrix> check_quasitriangularity(const RSource& r) {
    const Matrix rm = r_matrix(r);
    std::map<Generator, Matrix> out;
    for (Generator g : kSymmetryGenerators) {
        out.emplace(g, opposite_coproduct_matrix(g) - conjugate(rm, coproduct_matrix(g)));
    }
    return out;
}

std::vector<EntryPosition> six_vertex_support() { return {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {1, 2}}; }

RSolution solve_r(std::span<const EntryPosition> support) {
    for (const auto& [row, col] : support) {
        if (row >= kTwoSiteDim || col >= kTwoSiteDim) {
            throw Error(ErrorKind::DimensionMismatch, "support position outside 4x4");
        }
    }
    // Unknown i multiplies the unit matrix E_i; each generator contributes the
    // 16 linear equations vec(E_i D(g) - D^op(g) E_i) x_i = 0.
    std::vector<Matrix> blocks;
    for (Generator g : kSymmetryGenerators) {
        const Matrix d = coproduct_matrix(g);
        const Matrix dop = opposite_coproduct_matrix(g);
        Matrix block(kTwoSiteDim * kTwoSiteDim, support.size());
        for (std::size_t i = 0; i < support.size(); ++i) {
            const Matrix e = Matrix::unit(kTwoSiteDim, support[i].first, support[i].second, kTwoSiteBasis);
            const Matrix eq = e * d - dop * e;
            for (std::size_t k = 0; k < eq.entries().size(); ++k) block(k, i) = eq.entries()[k];
        }
        blocks.push_back(std::move(block));
    }
    const auto null = kernel(vstack(blocks));

    RSolution out;
    out.support.assign(support.begin(), support.end());
    for (const auto& v : null) {
        Matrix r(kTwoSiteDim, kTwoSiteDim, kTwoSiteBasis);
        for (std::size_t i = 0; i < support.size(); ++i) r(support[i].first, support[i].second) += v[i];
        out.basis.push_back(std::move(r));
    }
    const bool any_invertible = std::any_of(out.basis.begin(), out.basis.end(),
                                            [](const Matrix& m) { return rank(m) == kTwoSiteDim; });
    if (out.basis.empty() || (out.basis.size() == 1 && !any_invertible)) {
        throw Error(ErrorKind::NoSolution, "no invertible intertwiner on the given support");
    }
    if (out.basis.size() == 1) {
        const Matrix& r = out.basis.front();
        FieldScalar scale;
        if (!r(3, 3).is_zero()) {
            scale = FieldScalar::q() / r(3, 3);
        } else {
            for (const auto& [row, col] : support) {
                if (!r(row, col).is_zero()) {
                    scale = r(row, col).inverse();
                    break;
                }
            }
        }
        out.normalized = r * scale;
    }
    return out;
}

RSolution solve_r() {
    const auto support = six_vertex_support();
    return solve_r(support);
}

Matrix check_yang_baxter(const RSource& r) {
    const Matrix rm = r_matrix(r);
    const Matrix one = Matrix::identity(2, kSiteBasis);
    const Matrix r12 = kron(rm, one);
    const Matrix r23 = kron(one, rm);
    const Matrix p23 = kron(one, flip());
    const Matrix r13 = p23 * r12 * p23;
    return r12 * r13 * r23 - r23 * r13 * r12;
}

}  // namespace uqaudit
