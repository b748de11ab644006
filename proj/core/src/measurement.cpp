#include "uqaudit/measurement.hpp"

#include "uqaudit/errors.hpp"
#include "uqaudit/hopf.hpp"

#include <cmath>

namespace uqaudit {

namespace {

double as_q(const Rational& q) { return q.get_d(); }

bool positive_definite(const std::vector<double>& m, std::size_t n) {
    std::vector<double> l(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double sum = m[i * n + j];
            for (std::size_t k = 0; k < j; ++k) sum -= l[i * n + k] * l[j * n + k];
            if (i == j) {
                if (sum <= 1e-12) return false;
                l[i * n + i] = std::sqrt(sum);
            } else {
                l[i * n + j] = sum / l[j * n + j];
            }
        }
    }
    return true;
}

bool any_negative_at_samples(const std::array<std::array<FieldScalar, 2>, 2>& p) {
    for (const auto& q : quasi_probability_samples()) {
        for (const auto& row : p) {
            for (const auto& x : row) {
                if (!x.is_zero() && to_float(x, as_q(q)) < 0.0) return true;
            }
        }
    }
    return false;
}

Covector bra_for(const QSinglet& state, BraChoice bra) {
    if (bra == BraChoice::InvariantDual) return state.dual;
    std::vector<FieldScalar> entries;
    for (const auto& x : state.vector.entries()) entries.push_back(conjugate(x));
    return Covector{std::move(entries)};
}

const Matrix& pick(const Projectors& p, Outcome o) { return o == Outcome::Plus ? p.plus : p.minus; }

}  // namespace

std::string_view to_string(BraChoice b) noexcept {
    return b == BraChoice::ConjugateOfState ? "state" : "dual";
}

std::string_view to_string(Ordering o) noexcept { return o == Ordering::BobThenAlice ? "ba" : "ab"; }

std::string_view to_string(BornRule b) noexcept {
    return b == BornRule::SandwichProduct ? "sandwich" : "norm";
}

std::string Convention::label() const {
    std::string out = "r=" + to_string(r_source);
    out += ",bob=";
    out += to_string(dressing.bob_rule);
    out += ",bra=";
    out += to_string(bra);
    out += ",ord=";
    out += to_string(ordering);
    out += ",born=";
    out += to_string(born);
    return out;
}

std::vector<Convention> convention_space(const RSource& r) {
    std::vector<Convention> out;
    for (BobRule rule : {BobRule::ConjugateByR, BobRule::ConjugateByR21, BobRule::ConjugateByRinv}) {
        for (BraChoice bra : {BraChoice::ConjugateOfState, BraChoice::InvariantDual}) {
            for (Ordering ord : {Ordering::BobThenAlice, Ordering::AliceThenBob}) {
                for (BornRule born : {BornRule::SandwichProduct, BornRule::NormOfProjected}) {
                    out.push_back(Convention{r, DressingConvention{rule}, bra, ord, born});
                }
            }
        }
    }
    return out;
}

std::vector<Rational> quasi_probability_samples() {
    return {Rational(1, 2), Rational(2, 3), Rational(3, 2), Rational(2)};
}

FieldScalar JointDistribution::total() const {
    FieldScalar sum;
    for (const auto& row : p) {
        for (const auto& x : row) sum += x;
    }
    return sum;
}

Matrix JointDistribution::as_matrix() const { return Matrix::from_rows({{p[0][0], p[0][1]}, {p[1][0], p[1][1]}}); }

Projectors spectral_projectors(const Matrix& j) {
    if (!j.is_square()) throw Error(ErrorKind::DimensionMismatch, "observable must be square");
    const Matrix one = Matrix::identity(j.rows());
    const FieldScalar half = Rational(1, 2);
    if (j * j != one * FieldScalar(Rational(1, 4))) {
        throw Error(ErrorKind::NotInvolutory, "observable does not square to 1/4");
    }
    Matrix plus = (one + j * FieldScalar(2)) * half;
    Matrix minus = (one - j * FieldScalar(2)) * half;
    return {std::move(plus), std::move(minus)};
}

JointDistribution naive_joint(const QSinglet& state) {
    JointDistribution jd;
    for (Outcome a : kOutcomes) {
        for (Outcome b : kOutcomes) {
            const std::size_t index = 2 * static_cast<std::size_t>(a) + static_cast<std::size_t>(b);
            const FieldScalar& amplitude = state.vector[index];
            jd.p[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                amplitude * conjugate(amplitude) / state.norm_squared;
        }
    }
    jd.quasi_probability = any_negative_at_samples(jd.p);
    return jd;
}

DressedObservables dressed_observables(const Convention& conv) {
    const Matrix jz = generator_matrix(Generator::Jz);
    Matrix alice = dress(jz, Site::A, conv.r_source, conv.dressing);
    Matrix bob = dress(jz, Site::B, conv.r_source, conv.dressing);
    Projectors pa = spectral_projectors(alice);
    Projectors pb = spectral_projectors(bob);
    return {std::move(alice), std::move(bob), std::move(pa), std::move(pb)};
}

JointDistribution dressed_joint(const QSinglet& state, const Convention& conv) {
    const DressedObservables obs = dressed_observables(conv);
    const Covector bra = bra_for(state, conv.bra);
    const FieldScalar pairing = pair(bra, state.vector);
    if (conv.born == BornRule::SandwichProduct && pairing.is_zero()) {
        throw Error(ErrorKind::DegeneratePairing, "bra annihilates the state");
    }

    JointDistribution jd;
    jd.convention = conv;
    for (Outcome a : kOutcomes) {
        for (Outcome b : kOutcomes) {
            const Matrix& pa = pick(obs.alice_projectors, a);
            const Matrix& pb = pick(obs.bob_projectors, b);
            const StateVector w = conv.ordering == Ordering::BobThenAlice ? pa * (pb * state.vector)
                                                                          : pb * (pa * state.vector);
            FieldScalar value = conv.born == BornRule::SandwichProduct ? pair(bra, w) / pairing
                                                                       : w.norm_squared() / state.norm_squared;
            jd.p[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = std::move(value);
        }
    }
    jd.quasi_probability = any_negative_at_samples(jd.p);
    return jd;
}

MarginalReport marginals(const JointDistribution& jd) {
    MarginalReport m;
    m.alice_plus = jd.p[0][0] + jd.p[0][1];
    m.alice_minus = jd.p[1][0] + jd.p[1][1];
    m.bob_plus = jd.p[0][0] + jd.p[1][0];
    m.bob_minus = jd.p[0][1] + jd.p[1][1];
    m.bias = m.alice_plus - m.alice_minus;
    return m;
}

FieldScalar expectation(const Matrix& op, const QSinglet& state, BraChoice bra) {
    const Covector u = bra_for(state, bra);
    const FieldScalar pairing = pair(u, state.vector);
    if (pairing.is_zero()) throw Error(ErrorKind::DegeneratePairing, "bra annihilates the state");
    return pair(u, op * state.vector) / pairing;
}

MetricFamily hermitizing_metric(std::span<const Matrix> ops) {
    if (ops.empty()) return {};
    const std::size_t n = ops.front().rows();
    for (const auto& x : ops) {
        if (!x.is_square() || x.rows() != n) throw Error(ErrorKind::DimensionMismatch, "operators must be n x n");
    }
    // One unknown per upper-triangular slot of the symmetric M.
    std::vector<Matrix> units;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            Matrix u(n, n);
            u(i, j) = 1;
            u(j, i) = 1;
            units.push_back(std::move(u));
        }
    }
    std::vector<Matrix> blocks;
    for (const auto& x0 : ops) {
        const Matrix x = x0.with_basis(std::nullopt);
        const Matrix xt = x.transpose();
        Matrix block(n * n, units.size());
        for (std::size_t k = 0; k < units.size(); ++k) {
            const Matrix eq = units[k] * x - xt * units[k];
            for (std::size_t e = 0; e < eq.entries().size(); ++e) block(e, k) = eq.entries()[e];
        }
        blocks.push_back(std::move(block));
    }

    MetricFamily family;
    for (const auto& v : kernel(vstack(blocks))) {
        Matrix m(n, n);
        for (std::size_t k = 0; k < units.size(); ++k) {
            if (!v[k].is_zero()) m += units[k] * v[k];
        }
        family.basis.push_back(std::move(m));
    }
    family.dimension = family.basis.size();

    Matrix generic(n, n);
    for (const auto& m : family.basis) generic += m;
    for (const auto& q : quasi_probability_samples()) {
        const bool pd = family.dimension > 0 && positive_definite(to_float(generic, as_q(q)), n);
        family.positivity.emplace_back(q, pd);
    }
    return family;
}

}  // namespace uqaudit
