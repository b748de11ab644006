#include "uqaudit/states.hpp"

#include "uqaudit/errors.hpp"

#include <string>
#include <vector>

namespace uqaudit {

Matrix stacked_coproducts(CoproductVariant variant) {
    const std::vector<Matrix> blocks{coproduct_matrix(Generator::Jplus, variant),
                                     coproduct_matrix(Generator::Jminus, variant),
                                     coproduct_matrix(Generator::Jz, variant)};
    return vstack(blocks);
}

QSinglet q_singlet() {
    const auto null = kernel(stacked_coproducts());
    if (null.size() != 1) {
        throw Error(ErrorKind::UnexpectedKernelDimension,
                    "common kernel has dimension " + std::to_string(null.size()));
    }
    StateVector v = null.front().leading_normalized();
    FieldScalar n2 = v.norm_squared();
    return {std::move(v), std::move(n2), dual_singlet()};
}

std::map<Generator, StateVector> invariance_residuals(const StateVector& v, CoproductVariant variant) {
    if (v.size() != 4) throw Error(ErrorKind::DimensionMismatch, "two-site vectors have 4 entries");
    std::map<Generator, StateVector> out;
    for (Generator g : kSymmetryGenerators) out.emplace(g, coproduct_matrix(g, variant) * v);
    return out;
}

StateVector casimir_residual(const StateVector& v) {
    if (v.size() != 4) throw Error(ErrorKind::DimensionMismatch, "two-site vectors have 4 entries");
    return total_casimir() * v;
}

Covector dual_singlet() {
    const std::vector<Matrix> blocks{coproduct_matrix(Generator::Jplus), coproduct_matrix(Generator::Jminus),
                                     coproduct_matrix(Generator::Jz)};
    const auto null = left_kernel(hstack(blocks));
    if (null.size() != 1) {
        throw Error(ErrorKind::UnexpectedKernelDimension,
                    "common left kernel has dimension " + std::to_string(null.size()));
    }
    return null.front().leading_normalized();
}

}  // namespace uqaudit
