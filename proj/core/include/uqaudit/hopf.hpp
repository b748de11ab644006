#pragma once

// Spin-1/2 representation of the deformed angular-momentum Hopf algebra:
// generator matrices, two-site coproducts and the total Casimir.

#include "uqaudit/linalg.hpp"

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace uqaudit {

enum class Generator { Jz, Jplus, Jminus, K, Kinv };

inline constexpr std::array<Generator, 3> kSymmetryGenerators{Generator::Jz, Generator::Jplus, Generator::Jminus};

std::string_view to_string(Generator g) noexcept;

/// Basis labels: one site is {up, down}; two sites are ordered
/// {up up, up down, down up, down down}.
inline const std::string kSiteBasis = "ud";
inline const std::string kTwoSiteBasis = "ud*ud";

struct RepContext {
    int site_count = 1;
    std::vector<std::string> labels;

    static RepContext single_site() { return {1, {"u", "d"}}; }
    static RepContext two_sites() { return {2, {"uu", "ud", "du", "dd"}}; }
};

/// Jz = diag(1/2, -1/2), J+ maps down to up, J- maps up to down,
/// K = q^(Jz) = diag(s, 1/s), Kinv = diag(1/s, s).
Matrix generator_matrix(Generator g);

/// Which two-site action of J- to build. `Definition` is
///   D(J-) = J- (x) K + Kinv (x) J-
/// and `InlineActions` swaps the two q-factors,
///   D(J-) = J- (x) Kinv + K (x) J-,
/// which is what one gets by reading the J- action off the worked single-state
/// lines. Only the J- coproduct differs between the variants.
enum class CoproductVariant { Definition, InlineActions };

/// 4x4 matrix of the coproduct in the two-site basis, assembled by Kronecker
/// products:
///   D(Jz) = Jz (x) 1 + 1 (x) Jz
///   D(J+) = J+ (x) K + Kinv (x) J+
///   D(J-) = J- (x) K + Kinv (x) J-
///   D(K) = K (x) K, D(Kinv) = Kinv (x) Kinv
Matrix coproduct_matrix(Generator g, CoproductVariant variant = CoproductVariant::Definition);

/// P D(g) P with P the two-site flip.
Matrix opposite_coproduct_matrix(Generator g, CoproductVariant variant = CoproductVariant::Definition);

/// The two-site flip P(v (x) w) = w (x) v.
Matrix flip();

/// D(Jz)^2 + (D(J+) D(J-) + D(J-) D(J+)) / 2.
Matrix total_casimir();

struct AlgebraResiduals {
    /// Keyed by a short relation name; every matrix must be zero.
    std::map<std::string, Matrix> residuals;

    bool all_zero() const;
};

/// Residuals of the defining relations in the 2x2 representation:
///   [Jz, J+] - J+,  [Jz, J-] + J-,
///   [J+, J-] - (K^2 - Kinv^2) / (s^2 - s^-2),
///   [J+, J-] - 2 Jz  (the relation as it reads on spin 1/2),
///   K Kinv - 1.
AlgebraResiduals verify_algebra_relations();

}  // namespace uqaudit
