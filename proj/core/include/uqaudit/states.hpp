#pragma once

// The invariant two-qubit state, derived as the common kernel of the
// coproduct generators.

#include "uqaudit/hopf.hpp"
#include "uqaudit/linalg.hpp"

#include <map>

namespace uqaudit {

struct QSinglet {
    /// Unnormalized, first nonzero entry 1: (0, 1, -1/q, 0).
    StateVector vector;
    /// 1 + q^-2, the inverse of the squared normalization constant.
    FieldScalar norm_squared;
    /// Common left kernel of the coproduct generators, first nonzero entry 1.
    Covector dual;
};

/// Stacks D(J+), D(J-), D(Jz) into a 12x4 matrix.
Matrix stacked_coproducts(CoproductVariant variant = CoproductVariant::Definition);

/// Throws UnexpectedKernelDimension unless the common kernel is a line.
QSinglet q_singlet();

/// D(g) v for g in {Jz, J+, J-}.
std::map<Generator, StateVector> invariance_residuals(const StateVector& v,
                                                      CoproductVariant variant = CoproductVariant::Definition);

StateVector casimir_residual(const StateVector& v);

Covector dual_singlet();

}  // namespace uqaudit
