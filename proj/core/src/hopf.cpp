#include "uqaudit/hopf.hpp"

#include "uqaudit/errors.hpp"

#include <algorithm>

namespace uqaudit {

std::string_view to_string(Generator g) noexcept {
    switch (g) {
        case Generator::Jz: return "Jz";
        case Generator::Jplus: return "Jplus";
        case Generator::Jminus: return "Jminus";
        case Generator::K: return "K";
        case Generator::Kinv: return "Kinv";
    }
    return "?";
}

Matrix generator_matrix(Generator g) {
    const FieldScalar half = Rational(1, 2);
    const FieldScalar s = FieldScalar::s();
    switch (g) {
        case Generator::Jz: return Matrix::diagonal({half, -half}, kSiteBasis);
        case Generator::Jplus: return Matrix::unit(2, 0, 1, kSiteBasis);
        case Generator::Jminus: return Matrix::unit(2, 1, 0, kSiteBasis);
        case Generator::K: return Matrix::diagonal({s, s.inverse()}, kSiteBasis);
        case Generator::Kinv: return Matrix::diagonal({s.inverse(), s}, kSiteBasis);
    }
    return {};
}

Matrix coproduct_matrix(Generator g, CoproductVariant variant) {
    const Matrix one = Matrix::identity(2, kSiteBasis);
    const Matrix k = generator_matrix(Generator::K);
    const Matrix kinv = generator_matrix(Generator::Kinv);
    switch (g) {
        case Generator::Jz: {
            const Matrix jz = generator_matrix(Generator::Jz);
            return kron(jz, one) + kron(one, jz);
        }
        case Generator::Jplus: {
            const Matrix jp = generator_matrix(Generator::Jplus);
            return kron(jp, k) + kron(kinv, jp);
        }
        case Generator::Jminus: {
            const Matrix jm = generator_matrix(Generator::Jminus);
            if (variant == CoproductVariant::InlineActions) return kron(jm, kinv) + kron(k, jm);
            return kron(jm, k) + kron(kinv, jm);
        }
        case Generator::K: return kron(k, k);
        case Generator::Kinv: return kron(kinv, kinv);
    }
    return {};
}

Matrix flip() {
    Matrix p(4, 4, kTwoSiteBasis);
    p(0, 0) = 1;
    p(1, 2) = 1;
    p(2, 1) = 1;
    p(3, 3) = 1;
    return p;
}

Matrix opposite_coproduct_matrix(Generator g, CoproductVariant variant) {
    const Matrix p = flip();
    return p * coproduct_matrix(g, variant) * p;
}

Matrix total_casimir() {
    const Matrix jz = coproduct_matrix(Generator::Jz);
    const Matrix jp = coproduct_matrix(Generator::Jplus);
    const Matrix jm = coproduct_matrix(Generator::Jminus);
    return jz * jz + (jp * jm + jm * jp) * FieldScalar(Rational(1, 2));
}

bool AlgebraResiduals::all_zero() const {
    return std::all_of(residuals.begin(), residuals.end(), [](const auto& kv) { return kv.second.is_zero(); });
}

AlgebraResiduals verify_algebra_relations() {
    const Matrix jz = generator_matrix(Generator::Jz);
    const Matrix jp = generator_matrix(Generator::Jplus);
    const Matrix jm = generator_matrix(Generator::Jminus);
    const Matrix k = generator_matrix(Generator::K);
    const Matrix kinv = generator_matrix(Generator::Kinv);

    const FieldScalar s = FieldScalar::s();
    const FieldScalar q_minus_qinv = s * s - (s * s).inverse();
    if (q_minus_qinv.is_zero()) {
        throw Error(ErrorKind::DeformationParameterSingular, "s^2 - s^-2 vanishes");
    }

    AlgebraResiduals out;
    out.residuals.emplace("[Jz,J+]-J+", commutator(jz, jp) - jp);
    out.residuals.emplace("[Jz,J-]+J-", commutator(jz, jm) + jm);
    out.residuals.emplace("[J+,J-]-(K^2-Kinv^2)/(q-1/q)",
                          commutator(jp, jm) - (k * k - kinv * kinv) * q_minus_qinv.inverse());
    out.residuals.emplace("[J+,J-]-2Jz", commutator(jp, jm) - jz * FieldScalar(2));
    out.residuals.emplace("K*Kinv-1", k * kinv - Matrix::identity(2, kSiteBasis));
    return out;
}

}  // namespace uqaudit
