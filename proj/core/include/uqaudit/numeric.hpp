#pragma once

// Double-precision re-implementation of the measurement pipeline, written
// directly from closed-form matrices at a numeric q. Used to cross-check the
// exact pipeline and for fast sweeps.

#include "uqaudit/measurement.hpp"

#include <array>

namespace uqaudit::numeric {

using Mat4 = std::array<double, 16>;  // row-major
using Vec4 = std::array<double, 4>;
/// p(++), p(+-), p(-+), p(--)
using Joint = std::array<double, 4>;

Mat4 r_matrix(double q, const RSource& r);
Mat4 r21_matrix(double q, const RSource& r);
Mat4 inverse(const Mat4& m);
Mat4 dressed_alice_jz(double q, const RSource& r);
Mat4 dressed_bob_jz(double q, const RSource& r, BobRule rule);
/// (1 + 2J)/2 and (1 - 2J)/2.
std::array<Mat4, 2> projectors(const Mat4& j);

Vec4 singlet(double q);
Joint naive_joint(double q);
/// Supports PaperR and SolvedR with the default normalization.
Joint dressed_joint(double q, const Convention& conv);

}  // namespace uqaudit::numeric
