#pragma once

// Outcome statistics of local spin measurements on the invariant state, for
// the bare tensor-factor observables and for the R-dressed ones.

#include "uqaudit/braiding.hpp"
#include "uqaudit/linalg.hpp"
#include "uqaudit/states.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace uqaudit {

enum class BraChoice { ConjugateOfState, InvariantDual };
enum class Ordering { BobThenAlice, AliceThenBob };
enum class BornRule { SandwichProduct, NormOfProjected };

std::string_view to_string(BraChoice b) noexcept;
std::string_view to_string(Ordering o) noexcept;
std::string_view to_string(BornRule b) noexcept;

/// Every choice the dressed joint probability depends on. The defaults apply
/// Bob's projector first, then Alice's, and contract with the state itself:
/// p(a, b) = <v| PiA_a PiB_b |v> / <v|v>.
struct Convention {
    RSource r_source = PaperR{};
    DressingConvention dressing{};
    BraChoice bra = BraChoice::ConjugateOfState;
    Ordering ordering = Ordering::BobThenAlice;
    BornRule born = BornRule::SandwichProduct;

    /// e.g. "r=paper,bob=r,bra=state,ord=ba,born=sandwich"
    std::string label() const;
};

/// All 24 combinations of Bob rule, bra, ordering and Born rule for one R source.
std::vector<Convention> convention_space(const RSource& r = PaperR{});

enum class Outcome { Plus = 0, Minus = 1 };
inline constexpr std::array<Outcome, 2> kOutcomes{Outcome::Plus, Outcome::Minus};

/// Rational q sample points at which signs of quasi-probabilities are probed.
std::vector<Rational> quasi_probability_samples();

struct JointDistribution {
    /// p[alice][bob], index 0 = +1/2, 1 = -1/2.
    std::array<std::array<FieldScalar, 2>, 2> p;
    /// Empty for the bare (undressed) measurement.
    std::optional<Convention> convention;
    /// Some entry is negative at one of the sample points.
    bool quasi_probability = false;

    const FieldScalar& operator()(Outcome alice, Outcome bob) const {
        return p[static_cast<std::size_t>(alice)][static_cast<std::size_t>(bob)];
    }
    FieldScalar total() const;
    Matrix as_matrix() const;
};

struct MarginalReport {
    FieldScalar alice_plus;
    FieldScalar alice_minus;
    FieldScalar bob_plus;
    FieldScalar bob_minus;
    /// alice_plus - alice_minus
    FieldScalar bias;
};

struct Projectors {
    Matrix plus;
    Matrix minus;
};

/// Pi+- = (1 +- 2J) / 2. Throws NotInvolutory unless J^2 = 1/4.
Projectors spectral_projectors(const Matrix& j);

/// Product-basis projections: p(a, b) = |<a b|psi>|^2 / <psi|psi>.
JointDistribution naive_joint(const QSinglet& state);

struct DressedObservables {
    Matrix alice;
    Matrix bob;
    Projectors alice_projectors;
    Projectors bob_projectors;
};

DressedObservables dressed_observables(const Convention& conv);

JointDistribution dressed_joint(const QSinglet& state, const Convention& conv);

MarginalReport marginals(const JointDistribution& jd);

/// <bra|op|psi> / <bra|psi>. Throws DegeneratePairing when the denominator vanishes.
FieldScalar expectation(const Matrix& op, const QSinglet& state, BraChoice bra);

struct MetricFamily {
    std::size_t dimension = 0;
    std::vector<Matrix> basis;
    /// (q, sum of the basis matrices is positive definite at q)
    std::vector<std::pair<Rational, bool>> positivity;
};

/// Symmetric M with M X = X^T M for every X in ops.
MetricFamily hermitizing_metric(std::span<const Matrix> ops);

}  // namespace uqaudit
