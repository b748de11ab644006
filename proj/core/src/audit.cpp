#include "uqaudit/audit.hpp"

#include "uqaudit/errors.hpp"
#include "uqaudit/version.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <future>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace uqaudit {

namespace {

constexpr Variable kRender = Variable::Q;

// ---------------------------------------------------------------------------
// comparison plumbing

struct Evaluation {
    std::vector<std::string> expected;
    std::vector<std::string> computed;
    std::vector<std::string> residual;
    std::vector<FieldScalar> residual_entries;

    void add(const Matrix& want, const Matrix& got) {
        const Matrix diff = got.with_basis(std::nullopt) - want.with_basis(std::nullopt);
        expected.push_back(to_string(want, kRender));
        computed.push_back(to_string(got, kRender));
        residual.push_back(diff.is_zero() ? "0" : to_string(diff, kRender));
        residual_entries.insert(residual_entries.end(), diff.entries().begin(), diff.entries().end());
    }

    void add(const FieldScalar& want, const FieldScalar& got) {
        const FieldScalar diff = got - want;
        expected.push_back(want.to_string(kRender));
        computed.push_back(got.to_string(kRender));
        residual.push_back(diff.to_string(kRender));
        residual_entries.push_back(diff);
    }

    void add(const StateVector& want, const StateVector& got) {
        std::vector<FieldScalar> diff;
        for (std::size_t i = 0; i < want.size(); ++i) diff.push_back(got[i] - want[i]);
        const StateVector d(diff);
        expected.push_back(to_string(want, kRender));
        computed.push_back(to_string(got, kRender));
        residual.push_back(d.is_zero() ? "0" : to_string(d, kRender));
        residual_entries.insert(residual_entries.end(), diff.begin(), diff.end());
    }

    bool zero() const {
        return std::all_of(residual_entries.begin(), residual_entries.end(),
                           [](const FieldScalar& x) { return x.is_zero(); });
    }

    bool zero_at_q1() const {
        for (const auto& x : residual_entries) {
            try {
                if (evaluate(x, Rational(1)) != 0) return false;
            } catch (const Error&) {
                return false;
            }
        }
        return true;
    }
};

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i != 0) out += "; ";
        out += parts[i];
    }
    return out;
}

Matrix displayed(std::initializer_list<std::initializer_list<const char*>> rows) {
    std::vector<FieldScalar> entries;
    std::size_t cols = 0;
    for (const auto& row : rows) {
        cols = row.size();
        for (const char* cell : row) entries.push_back(parse_scalar(cell));
    }
    return Matrix(rows.size(), cols, std::move(entries));
}

StateVector vec(std::initializer_list<const char*> cells) {
    std::vector<FieldScalar> entries;
    for (const char* cell : cells) entries.push_back(parse_scalar(cell));
    return StateVector(std::move(entries));
}

StateVector basis_vector(std::size_t i) {
    std::vector<FieldScalar> e(4);
    e[i] = 1;
    return StateVector(std::move(e));
}

Matrix jz() { return generator_matrix(Generator::Jz); }
Matrix one2() { return Matrix::identity(2, kSiteBasis); }

// ---------------------------------------------------------------------------
// claims

using ClaimFn = std::function<Evaluation(const Convention&)>;

struct ClaimEntry {
    ClaimInfo info;
    ClaimFn run;
};

Evaluation alg_cartan(const Convention&) {
    Evaluation ev;
    const Matrix jp = generator_matrix(Generator::Jplus);
    const Matrix jm = generator_matrix(Generator::Jminus);
    ev.add(jp, commutator(jz(), jp));
    ev.add(-jm, commutator(jz(), jm));
    return ev;
}

Evaluation alg_raise_lower(const Convention&) {
    Evaluation ev;
    const Matrix jp = generator_matrix(Generator::Jplus);
    const Matrix jm = generator_matrix(Generator::Jminus);
    const Matrix k = generator_matrix(Generator::K);
    const Matrix kinv = generator_matrix(Generator::Kinv);
    const FieldScalar q = FieldScalar::q();
    ev.add((k * k - kinv * kinv) * (q - q.inverse()).inverse(), commutator(jp, jm));
    ev.add(displayed({{"1", "0"}, {"0", "-1"}}), commutator(jp, jm));
    return ev;
}

Evaluation coprod_jplus_actions(const Convention&) {
    Evaluation ev;
    const Matrix djp = coproduct_matrix(Generator::Jplus);
    const Matrix djz = coproduct_matrix(Generator::Jz);
    ev.add(vec({"0", "0", "0", "0"}), djz * basis_vector(1));
    ev.add(vec({"0", "0", "0", "0"}), djz * basis_vector(2));
    ev.add(vec({"q^(-1/2)", "0", "0", "0"}), djp * basis_vector(1));
    ev.add(vec({"q^(1/2)", "0", "0", "0"}), djp * basis_vector(2));
    return ev;
}

Evaluation coprod_jminus_actions(const Convention&) {
    Evaluation ev;
    const Matrix djm = coproduct_matrix(Generator::Jminus);
    ev.add(vec({"0", "0", "0", "q^(1/2)"}), djm * basis_vector(1));
    ev.add(vec({"0", "0", "0", "q^(-1/2)"}), djm * basis_vector(2));
    return ev;
}

Evaluation singlet(const Convention&) {
    Evaluation ev;
    const auto null = kernel(stacked_coproducts());
    ev.add(FieldScalar(1), FieldScalar(static_cast<long>(null.size())));
    if (!null.empty()) ev.add(vec({"0", "1", "-q^-1", "0"}), null.front().leading_normalized());
    return ev;
}

Evaluation normalization(const Convention&) {
    Evaluation ev;
    const QSinglet psi = q_singlet();
    ev.add(parse_scalar("1/(1 + q^-2)"), psi.norm_squared.inverse());
    ev.add(parse_scalar("q^2/(1 + q^2)"), psi.norm_squared.inverse());
    return ev;
}

Evaluation casimir(const Convention&) {
    Evaluation ev;
    ev.add(vec({"0", "0", "0", "0"}), casimir_residual(q_singlet().vector));
    return ev;
}

Evaluation naive_singlet_not_invariant(const Convention&) {
    Evaluation ev;
    const StateVector bell = vec({"0", "1", "-1", "0"});
    for (const auto& [g, r] : invariance_residuals(bell)) ev.add(vec({"0", "0", "0", "0"}), r);
    return ev;
}

Evaluation naive_covariance(const Convention&) {
    Evaluation ev;
    const Matrix jz_a = kron(jz(), one2());
    ev.add(-kron(generator_matrix(Generator::Jplus), one2()), commutator(coproduct_matrix(Generator::Jplus), jz_a));
    ev.add(kron(generator_matrix(Generator::Jminus), one2()), commutator(coproduct_matrix(Generator::Jminus), jz_a));
    return ev;
}

Evaluation r21_claim(const Convention& conv) {
    Evaluation ev;
    const Matrix r21m = r21(conv.r_source);
    ev.add(displayed({{"q^(1/2)", "0", "0", "0"},
                      {"0", "1", "0", "0"},
                      {"0", "q^(1/2) - q^(-1/2)", "1", "0"},
                      {"0", "0", "0", "q^(1/2)"}}),
           r21m);
    ev.add(displayed({{"q^(-1/2)", "0", "0", "0"},
                      {"0", "1", "0", "0"},
                      {"0", "-(q^(1/2) - q^(-1/2))", "1", "0"},
                      {"0", "0", "0", "q^(-1/2)"}}),
           invert(r21m));
    return ev;
}

Evaluation quasitri(const Convention& conv) {
    Evaluation ev;
    const Matrix rm = r_matrix(conv.r_source);
    for (Generator g : kSymmetryGenerators) {
        ev.add(opposite_coproduct_matrix(g), conjugate(rm, coproduct_matrix(g)));
    }
    return ev;
}

Evaluation solved_r(const Convention&) {
    Evaluation ev;
    const RSolution sol = solve_r();
    ev.add(FieldScalar(1), FieldScalar(static_cast<long>(sol.basis.size())));
    if (sol.normalized) {
        ev.add(displayed({{"q", "0", "0", "0"}, {"0", "1", "q - q^-1", "0"}, {"0", "0", "1", "0"}, {"0", "0", "0", "q"}}),
               *sol.normalized);
        for (const auto& [g, residual] : check_quasitriangularity(CustomR{*sol.normalized})) {
            ev.add(Matrix(4, 4), residual);
        }
    }
    return ev;
}

Evaluation yang_baxter(const Convention& conv) {
    Evaluation ev;
    ev.add(Matrix(8, 8), check_yang_baxter(conv.r_source));
    return ev;
}

Evaluation cov_jplus(const Convention& conv) {
    Evaluation ev;
    const Matrix jz_a = dress(jz(), Site::A, conv.r_source);
    const Matrix jp_a = dress(generator_matrix(Generator::Jplus), Site::A, conv.r_source);
    ev.add(-jp_a, commutator(coproduct_matrix(Generator::Jplus), jz_a));
    return ev;
}

Evaluation cov_jminus(const Convention& conv) {
    Evaluation ev;
    const Matrix jz_a = dress(jz(), Site::A, conv.r_source);
    const Matrix jm_a = dress(generator_matrix(Generator::Jminus), Site::A, conv.r_source);
    ev.add(jm_a, commutator(coproduct_matrix(Generator::Jminus), jz_a));
    return ev;
}

Evaluation dressed_jza(const Convention& conv) {
    Evaluation ev;
    ev.add(displayed({{"1/2", "0", "0", "0"},
                      {"0", "1/2", "0", "0"},
                      {"0", "q^(1/2) - q^(-1/2)", "-1/2", "0"},
                      {"0", "0", "0", "-1/2"}}),
           dress(jz(), Site::A, conv.r_source));
    return ev;
}

Evaluation dressed_compact(const Convention& conv) {
    Evaluation ev;
    const Matrix sigma_minus = generator_matrix(Generator::Jminus);
    const Matrix sigma_plus = generator_matrix(Generator::Jplus);
    ev.add(kron(jz(), one2()) + kron(sigma_minus, sigma_plus) * FieldScalar::lambda(),
           dress(jz(), Site::A, conv.r_source));
    return ev;
}

Evaluation dressed_jzb(const Convention& conv) {
    Evaluation ev;
    ev.add(displayed({{"1/2", "0", "0", "0"},
                      {"0", "-1/2", "q^(1/2) - q^(-1/2)", "0"},
                      {"0", "0", "1/2", "0"},
                      {"0", "0", "0", "-1/2"}}),
           dress(jz(), Site::B, conv.r_source, conv.dressing));
    return ev;
}

Evaluation dressed_square(const Convention& conv) {
    Evaluation ev;
    const Matrix quarter = Matrix::identity(4) * FieldScalar(Rational(1, 4));
    const Matrix a = dress(jz(), Site::A, conv.r_source);
    const Matrix b = dress(jz(), Site::B, conv.r_source, conv.dressing);
    ev.add(quarter, a * a);
    ev.add(quarter, b * b);
    return ev;
}

Evaluation proj_a(const Convention& conv) {
    Evaluation ev;
    const Projectors p = spectral_projectors(dress(jz(), Site::A, conv.r_source));
    ev.add(displayed({{"1", "0", "0", "0"}, {"0", "1", "0", "0"}, {"0", "q^(1/2) - q^(-1/2)", "0", "0"}, {"0", "0", "0", "0"}}),
           p.plus);
    ev.add(displayed({{"0", "0", "0", "0"}, {"0", "0", "0", "0"}, {"0", "-(q^(1/2) - q^(-1/2))", "1", "0"}, {"0", "0", "0", "1"}}),
           p.minus);
    return ev;
}

Evaluation proj_b(const Convention& conv) {
    Evaluation ev;
    const Projectors p = spectral_projectors(dress(jz(), Site::B, conv.r_source, conv.dressing));
    ev.add(displayed({{"1", "0", "0", "0"}, {"0", "0", "q^(1/2) - q^(-1/2)", "0"}, {"0", "0", "1", "0"}, {"0", "0", "0", "0"}}),
           p.plus);
    ev.add(displayed({{"0", "0", "0", "0"}, {"0", "1", "-(q^(1/2) - q^(-1/2))", "0"}, {"0", "0", "0", "0"}, {"0", "0", "0", "1"}}),
           p.minus);
    return ev;
}

Evaluation naive_joint_claim(const Convention&) {
    Evaluation ev;
    ev.add(displayed({{"0", "q^2/(1 + q^2)"}, {"1/(1 + q^2)", "0"}}), naive_joint(q_singlet()).as_matrix());
    return ev;
}

Evaluation naive_anticorr(const Convention&) {
    Evaluation ev;
    const JointDistribution jd = naive_joint(q_singlet());
    ev.add(FieldScalar(0), jd(Outcome::Plus, Outcome::Plus));
    ev.add(FieldScalar(0), jd(Outcome::Minus, Outcome::Minus));
    return ev;
}

Evaluation naive_marginals(const Convention&) {
    Evaluation ev;
    const MarginalReport m = marginals(naive_joint(q_singlet()));
    ev.add(parse_scalar("q^2/(1 + q^2)"), m.alice_plus);
    ev.add(parse_scalar("1/(1 + q^2)"), m.alice_minus);
    ev.add(parse_scalar("1/(1 + q^2)"), m.bob_plus);
    ev.add(parse_scalar("q^2/(1 + q^2)"), m.bob_minus);
    return ev;
}

Evaluation naive_bias(const Convention&) {
    Evaluation ev;
    ev.add(parse_scalar("(q^2 - 1)/(q^2 + 1)"), marginals(naive_joint(q_singlet())).bias);
    return ev;
}

Evaluation dressed_half(const Convention& conv) {
    Evaluation ev;
    ev.add(displayed({{"0", "1/2"}, {"1/2", "0"}}), dressed_joint(q_singlet(), conv).as_matrix());
    return ev;
}

Evaluation dressed_marginals(const Convention& conv) {
    Evaluation ev;
    const MarginalReport m = marginals(dressed_joint(q_singlet(), conv));
    const FieldScalar half = Rational(1, 2);
    ev.add(half, m.alice_plus);
    ev.add(half, m.alice_minus);
    ev.add(half, m.bob_plus);
    ev.add(half, m.bob_minus);
    return ev;
}

Evaluation dressed_expect_zero(const Convention& conv) {
    Evaluation ev;
    ev.add(FieldScalar(0), expectation(dress(jz(), Site::A, conv.r_source), q_singlet(), conv.bra));
    return ev;
}

Evaluation undeformed_limit(const Convention& conv) {
    Evaluation ev;
    const Rational s1(1);
    ev.add(Matrix::identity(4), evaluate(r_matrix(conv.r_source), s1));
    ev.add(kron(jz(), one2()), evaluate(dress(jz(), Site::A, conv.r_source), s1));
    ev.add(kron(one2(), jz()), evaluate(dress(jz(), Site::B, conv.r_source, conv.dressing), s1));
    const StateVector psi = q_singlet().vector;
    std::vector<FieldScalar> psi1;
    for (const auto& x : psi.entries()) psi1.emplace_back(evaluate(x, s1));
    ev.add(vec({"0", "1", "-1", "0"}), StateVector(psi1));
    ev.add(displayed({{"0", "1/2"}, {"1/2", "0"}}), evaluate(dressed_joint(q_singlet(), conv).as_matrix(), s1));
    ev.add(FieldScalar(0), FieldScalar(evaluate(marginals(naive_joint(q_singlet())).bias, s1)));
    return ev;
}

const std::vector<ClaimEntry>& entries() {
    static const std::vector<ClaimEntry> table = [] {
        std::vector<ClaimEntry> t{
            {{"C-ALG-CARTAN", "defining relations: [Jz, J+-] = +-J+-", "Cartan relations in the spin-1/2 representation",
              false, ""},
             alg_cartan},
            {{"C-ALG-RAISE-LOWER",
              "defining relations: [J+, J-] = (q^(2Jz) - q^(-2Jz))/(q - q^-1); on spin 1/2 it acts as 2Jz",
              "deformed raising/lowering relation collapses to the undeformed one on spin 1/2", false, ""},
             alg_raise_lower},
            {{"C-CASIMIR", "total Casimir D(Jz)^2 + (D(J+)D(J-) + D(J-)D(J+))/2 annihilates the invariant state",
              "invariant state carries total spin 0", false, ""},
             casimir},
            {{"C-COPROD-JMINUS-ACTIONS",
              "worked two-site actions: D(J-)|ud> = q^(1/2)|dd>, D(J-)|du> = q^(-1/2)|dd>",
              "printed J- actions versus the J- coproduct formula", false,
              "The printed J- actions carry the two q-factors exchanged relative to the coproduct formula "
              "D(J-) = J- (x) q^(Jz) + q^(-Jz) (x) J-, which gives q^(-1/2)|dd> on |ud> and q^(1/2)|dd> on |du>. "
              "Only the formula's version annihilates (0, 1, -q^-1, 0); with the printed factors D(J-) maps it to "
              "(q^(1/2) - q^(-3/2))|dd>. Everything else in this audit uses the formula."},
             coprod_jminus_actions},
            {{"C-COPROD-JPLUS-ACTIONS",
              "worked two-site actions: D(Jz)|ud> = D(Jz)|du> = 0, D(J+)|ud> = q^(-1/2)|uu>, D(J+)|du> = q^(1/2)|uu>",
              "printed J+ and Jz actions versus the coproduct formula", false, ""},
             coprod_jplus_actions},
            {{"C-COV-JMINUS", "adjoint covariance for J-: [D(J-), ~Jz^A] = +~J-^A with ~X^A = R21 (X (x) 1) R21^-1",
              "dressed Alice observable transforms covariantly under J-", false,
              "With the displayed R the J- covariance identity fails for q != 1: the residual has entries "
              "(3,1) and (4,2) that vanish only at q = 1. The J+ identity does hold, and the failure persists "
              "for the intertwining R, for the printed J- actions, and for dressing by R, R^-1 or R21^-1."},
             cov_jminus},
            {{"C-COV-JPLUS", "adjoint covariance for J+: [D(J+), ~Jz^A] = -~J+^A with ~X^A = R21 (X (x) 1) R21^-1",
              "dressed Alice observable transforms covariantly under J+", false,
              "The J+ identity holds for the displayed R but not for the intertwining R."},
             cov_jplus},
            {{"C-DRESSED-COMPACT", "dressed Alice observable: ~Jz^A = Jz (x) 1 + (q^(1/2) - q^(-1/2)) s- (x) s+",
              "compact operator form of the dressed Alice observable", false, ""},
             dressed_compact},
            {{"C-DRESSED-EXPECT-ZERO", "dressed marginal expectation: <psi|~Jz^A|psi> = 0",
              "dressed Alice observable has zero expectation on the invariant state", true,
              "Under the standard pairing the expectation is (q^(1/2) - 1)^3 (q^(1/2) + 1) / (2 (q^2 + 1)), "
              "nonzero for q != 1. The invariant dual covector coincides with the state, so the dual pairing "
              "gives the same value."},
             dressed_expect_zero},
            {{"C-DRESSED-HALF",
              "dressed joint statistics: P(+1/2,-1/2) = P(-1/2,+1/2) = 1/2, P(+1/2,+1/2) = P(-1/2,-1/2) = 0",
              "dressed projectors reproduce the undeformed singlet statistics", true,
              "Evaluating w = PiA_+ (PiB_- v) and <v, w>/<v, v> exactly gives "
              "P(+1/2,-1/2) = (q^3 - q^2 + 2q - 1)/(q^3 + q), e.g. 7/10 at q = 2, not 1/2. No combination of "
              "Bob rule, bra, ordering and Born rule reproduces 1/2 for q != 1; all agree at q = 1."},
             dressed_half},
            {{"C-DRESSED-JZA", "dressed Alice observable matrix: diag(1/2,1/2,-1/2,-1/2) + (q^(1/2) - q^(-1/2)) E32",
              "R21-conjugated Jz (x) 1", false, ""},
             dressed_jza},
            {{"C-DRESSED-JZB", "dressed Bob observable matrix: diag(1/2,-1/2,1/2,-1/2) + (q^(1/2) - q^(-1/2)) E23",
              "dressed 1 (x) Jz", true,
              "The defining conjugation for Bob is not stated; conjugating 1 (x) Jz by R reproduces the "
              "displayed matrix, conjugating by R21 or R^-1 does not."},
             dressed_jzb},
            {{"C-DRESSED-MARGINALS", "dressed marginals: P_A(+1/2) = P_A(-1/2) = 1/2, same for Bob",
              "dressed observables give unbiased marginals", true,
              "Follows the dressed joint distribution; unbiased only at q = 1 under every convention."},
             dressed_marginals},
            {{"C-DRESSED-SQUARE", "dressed observables square to 1/4, so (1 +- 2J)/2 are projectors",
              "dressed Jz^2 = 1/4 for Alice and Bob", false, ""},
             dressed_square},
            {{"C-NAIVE-ANTICORR", "bare measurement: P(+1/2,+1/2) = P(-1/2,-1/2) = 0",
              "perfect anticorrelation with tensor-factor observables", false, ""},
             naive_anticorr},
            {{"C-NAIVE-BIAS", "bare measurement: marginals biased, P_A(+1/2) - P_A(-1/2) = (q^2 - 1)/(q^2 + 1)",
              "marginal bias of tensor-factor observables", false, ""},
             naive_bias},
            {{"C-NAIVE-COVARIANCE", "tensor-factor embedding: [D(J+-), Jz (x) 1] = [J+-, Jz] (x) 1 only when q = 1",
              "Jz (x) 1 is not covariant under the deformed coproduct", false,
              "Q1_ONLY is the expected outcome: the bare embedding is covariant only in the undeformed limit."},
             naive_covariance},
            {{"C-NAIVE-JOINT", "bare joint matrix: [[0, q^2/(1+q^2)], [1/(1+q^2), 0]]",
              "joint distribution of tensor-factor Jz measurements", false, ""},
             naive_joint_claim},
            {{"C-NAIVE-MARGINALS", "bare marginals: P_A(+1/2) = q^2/(1+q^2), P_A(-1/2) = 1/(1+q^2), Bob complementary",
              "marginals of tensor-factor Jz measurements", false, ""},
             naive_marginals},
            {{"C-NAIVE-SINGLET", "the antisymmetric state (0, 1, -1, 0) is invariant only when q = 1",
              "undeformed singlet under the deformed coproduct", false,
              "Q1_ONLY is the expected outcome: D(J+-) do not annihilate (0, 1, -1, 0) for q != 1."},
             naive_singlet_not_invariant},
            {{"C-NORMALIZATION", "normalization: N^2 = 1/(1 + q^-2) = q^2/(1 + q^2)",
              "squared normalization of the invariant state", false, ""},
             normalization},
            {{"C-PROJ-A", "dressed Alice projectors Pi^A_(+-1/2) = (1 +- 2 ~Jz^A)/2 as displayed",
              "spectral projectors of the dressed Alice observable", false, ""},
             proj_a},
            {{"C-PROJ-B", "dressed Bob projectors Pi^B_(+-1/2) = (1 +- 2 ~Jz^B)/2 as displayed",
              "spectral projectors of the dressed Bob observable", true,
              "Depends on the Bob dressing rule; only conjugation by R matches the displayed projectors."},
             proj_b},
            {{"C-QUASITRI", "quasitriangularity: D^op(h) = R D(h) R^-1 for h in {Jz, J+, J-}",
              "the displayed R intertwines the coproduct and its opposite", false,
              "The displayed R (the six-vertex matrix with q replaced by q^(1/2)) intertwines D and D^op only at "
              "q = 1 for J+ and J-. The six-vertex ansatz solved against this coproduct gives "
              "diag(q, 1, 1, q) + (q - q^-1) E23 instead (see C-SOLVED-R)."},
             quasitri},
            {{"C-R21", "R21 = P R P and its lower-triangular inverse as displayed", "flip-conjugated R-matrix", false,
              ""},
             r21_claim},
            {{"C-SINGLET", "invariant state: common kernel of D(J+), D(J-), D(Jz) is spanned by (0, 1, -q^-1, 0)",
              "derivation of the deformed singlet", false, ""},
             singlet},
            {{"C-SOLVED-R", "six-vertex R solving D^op = R D R^-1: alpha = q, beta = q - q^-1, unique up to scale",
              "intertwiner for this coproduct", false, ""},
             solved_r},
            {{"C-UNDEFORMED-LIMIT",
              "q = 1: R = 1, dressing disappears, singlet is (0, 1, -1, 0), statistics (0, 1/2, 1/2, 0), no bias",
              "undeformed limit", false, ""},
             undeformed_limit},
            {{"C-YBE", "R12 R13 R23 = R23 R13 R12", "Yang-Baxter equation for the R-matrix", false,
              "Yang-Baxter is a consistency check added by this tool."},
             yang_baxter},
        };
        std::sort(t.begin(), t.end(), [](const ClaimEntry& a, const ClaimEntry& b) { return a.info.id < b.info.id; });
        return t;
    }();
    return table;
}

const ClaimEntry& find_claim(std::string_view id) {
    const auto& t = entries();
    auto it = std::find_if(t.begin(), t.end(), [&](const ClaimEntry& e) { return e.info.id == id; });
    if (it == t.end()) throw Error(ErrorKind::UnknownClaim, std::string(id));
    return *it;
}

// Whether any measurement convention (with the same R source) zeroes the
// claim's residual. Memoized: the answer does not depend on the requested
// convention beyond its R source.
bool zero_under_some_convention(const ClaimEntry& claim, const RSource& r) {
    static std::mutex mutex;
    static std::map<std::string, bool> cache;
    const std::string key = claim.info.id + "|" + to_string(r);
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    bool found = false;
    for (const auto& c : convention_space(r)) {
        if (claim.run(c).zero()) {
            found = true;
            break;
        }
    }
    std::lock_guard lock(mutex);
    cache.emplace(key, found);
    return found;
}

nlohmann::json convention_json(const Convention& c) {
    return {{"label", c.label()},
            {"rSource", to_string(c.r_source)},
            {"bobRule", std::string(to_string(c.dressing.bob_rule))},
            {"bra", std::string(to_string(c.bra))},
            {"ordering", std::string(to_string(c.ordering))},
            {"born", std::string(to_string(c.born))}};
}

std::string md_cell(std::string text) {
    std::string out;
    for (char ch : text) {
        if (ch == '|') {
            out += "\\|";
        } else if (ch == '\n') {
            out += ' ';
        } else {
            out += ch;
        }
    }
    return out;
}

// q_min * ratio^(i/k) as an exact rational when the k-th root of the ratio is rational.
std::optional<Rational> exact_root(const Rational& ratio, unsigned long k) {
    mpz_class num, den;
    if (mpz_root(num.get_mpz_t(), ratio.get_num_mpz_t(), k) == 0) return std::nullopt;
    if (mpz_root(den.get_mpz_t(), ratio.get_den_mpz_t(), k) == 0) return std::nullopt;
    Rational r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace

std::string_view tool_version() noexcept { return kVersionString; }

std::string_view to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::Confirmed: return "CONFIRMED";
        case Verdict::RefutedUnderConvention: return "REFUTED_UNDER_CONVENTION";
        case Verdict::ConventionDependent: return "CONVENTION_DEPENDENT";
        case Verdict::Q1Only: return "Q1_ONLY";
    }
    return "?";
}

const std::vector<ClaimInfo>& claim_registry() {
    static const std::vector<ClaimInfo> infos = [] {
        std::vector<ClaimInfo> out;
        for (const auto& e : entries()) out.push_back(e.info);
        return out;
    }();
    return infos;
}

ClaimResult run_claim(std::string_view claim_id, const std::optional<Convention>& conv) {
    const ClaimEntry& claim = find_claim(claim_id);
    const Convention c = conv.value_or(Convention{});
    const Evaluation ev = claim.run(c);

    ClaimResult result;
    result.claim_id = claim.info.id;
    result.reference = claim.info.reference;
    result.convention = c.label();
    result.expected = join(ev.expected);
    result.computed = join(ev.computed);
    result.residual = ev.zero() ? "0" : join(ev.residual);

    if (ev.zero()) {
        result.verdict = Verdict::Confirmed;
    } else if (claim.info.convention_sensitive) {
        result.verdict = zero_under_some_convention(claim, c.r_source) ? Verdict::ConventionDependent
                                                                       : Verdict::RefutedUnderConvention;
    } else {
        result.verdict = ev.zero_at_q1() ? Verdict::Q1Only : Verdict::RefutedUnderConvention;
    }
    if (result.verdict != Verdict::Confirmed) result.note = claim.info.note;
    return result;
}

AuditReport run_all(std::vector<Convention> conventions, bool parallel) {
    const auto start = std::chrono::steady_clock::now();
    if (conventions.empty()) conventions.emplace_back();

    AuditReport report;
    report.tool_version = std::string(tool_version());
    report.conventions = conventions;

    std::vector<std::pair<std::string, const Convention*>> jobs;
    for (const auto& info : claim_registry()) {
        for (const auto& c : conventions) jobs.emplace_back(info.id, &c);
    }
    if (parallel && jobs.size() > 1) {
        report.claims.resize(jobs.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next++; i < jobs.size(); i = next++) {
                report.claims[i] = run_claim(jobs[i].first, *jobs[i].second);
            }
        };
        const std::size_t workers =
            std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::min<std::size_t>(jobs.size(), 16));
        std::vector<std::future<void>> futures;
        for (std::size_t w = 0; w < workers; ++w) futures.push_back(std::async(std::launch::async, worker));
        for (auto& f : futures) f.get();
    } else {
        for (const auto& [id, c] : jobs) report.claims.push_back(run_claim(id, *c));
    }
    std::stable_sort(report.claims.begin(), report.claims.end(), [](const ClaimResult& a, const ClaimResult& b) {
        return std::tie(a.claim_id, a.convention) < std::tie(b.claim_id, b.convention);
    });
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

std::vector<SweepRow> sweep(const Rational& q_min, const Rational& q_max, std::size_t steps, const Convention& conv) {
    if (q_min <= 0 || q_max <= 0) throw Error(ErrorKind::NonpositiveParameter, "q range must be positive");
    if (q_min > q_max) throw Error(ErrorKind::NonpositiveParameter, "q_min exceeds q_max");
    if (steps == 0) throw Error(ErrorKind::NonpositiveParameter, "steps must be at least 1");

    const QSinglet psi = q_singlet();
    const JointDistribution naive = naive_joint(psi);
    const JointDistribution dressed = dressed_joint(psi, conv);
    const FieldScalar naive_bias = marginals(naive).bias;
    const FieldScalar dressed_bias = marginals(dressed).bias;
    const std::array<const FieldScalar*, 6> columns{&naive(Outcome::Plus, Outcome::Minus),
                                                    &naive(Outcome::Minus, Outcome::Plus),
                                                    &naive_bias,
                                                    &dressed(Outcome::Plus, Outcome::Minus),
                                                    &dressed(Outcome::Minus, Outcome::Plus),
                                                    &dressed_bias};

    const Rational ratio = q_max / q_min;
    const unsigned long k = steps > 1 ? steps - 1 : 1;
    const std::optional<Rational> step_ratio = steps > 1 ? exact_root(ratio, k) : std::optional<Rational>(Rational(1));

    std::vector<SweepRow> rows;
    for (std::size_t i = 0; i < steps; ++i) {
        SweepRow row;
        if (i == 0) {
            row.q_exact = q_min;
        } else if (i + 1 == steps) {
            row.q_exact = q_max;
        } else if (step_ratio) {
            Rational qi = q_min;
            for (std::size_t j = 0; j < i; ++j) qi *= *step_ratio;
            row.q_exact = qi;
        }
        row.q = row.q_exact ? row.q_exact->get_d()
                            : q_min.get_d() * std::pow(ratio.get_d(), static_cast<double>(i) / static_cast<double>(k));

        Rational s0;
        row.exact = row.q_exact && rational_sqrt(*row.q_exact, s0);
        std::array<double, 6> values{};
        for (std::size_t c = 0; c < columns.size(); ++c) {
            values[c] = row.exact ? evaluate(*columns[c], s0, ParameterDomain::Physical).get_d()
                                  : to_float(*columns[c], row.q);
        }
        row.naive_plus_minus = values[0];
        row.naive_minus_plus = values[1];
        row.naive_bias = values[2];
        row.dressed_plus_minus = values[3];
        row.dressed_minus_plus = values[4];
        row.dressed_bias = values[5];
        rows.push_back(row);
    }
    return rows;
}

Convention parse_convention(std::string_view spec, const Convention& base) {
    Convention out = base;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        const std::size_t end = std::min(spec.find(',', pos), spec.size());
        const std::string_view item = spec.substr(pos, end - pos);
        pos = end + 1;
        if (item.empty()) {
            if (end == spec.size()) break;
            continue;
        }
        const std::size_t eq = item.find('=');
        if (eq == std::string_view::npos) throw Error(ErrorKind::ParseError, "expected key=value: " + std::string(item));
        const std::string_view key = item.substr(0, eq);
        const std::string_view value = item.substr(eq + 1);
        auto bad = [&] { return Error(ErrorKind::ParseError, "bad value for " + std::string(key) + ": " + std::string(value)); };
        if (key == "r") {
            if (value == "paper") {
                out.r_source = PaperR{};
            } else if (value == "solved") {
                out.r_source = SolvedR{};
            } else {
                throw bad();
            }
        } else if (key == "bob") {
            if (value == "r") {
                out.dressing.bob_rule = BobRule::ConjugateByR;
            } else if (value == "r21") {
                out.dressing.bob_rule = BobRule::ConjugateByR21;
            } else if (value == "rinv") {
                out.dressing.bob_rule = BobRule::ConjugateByRinv;
            } else {
                throw bad();
            }
        } else if (key == "bra") {
            if (value == "state") {
                out.bra = BraChoice::ConjugateOfState;
            } else if (value == "dual") {
                out.bra = BraChoice::InvariantDual;
            } else {
                throw bad();
            }
        } else if (key == "ord") {
            if (value == "ba") {
                out.ordering = Ordering::BobThenAlice;
            } else if (value == "ab") {
                out.ordering = Ordering::AliceThenBob;
            } else {
                throw bad();
            }
        } else if (key == "born") {
            if (value == "sandwich") {
                out.born = BornRule::SandwichProduct;
            } else if (value == "norm") {
                out.born = BornRule::NormOfProjected;
            } else {
                throw bad();
            }
        } else {
            throw Error(ErrorKind::ParseError, "unknown convention key: " + std::string(key));
        }
    }
    return out;
}

std::vector<Convention> expand_convention(std::string_view spec, const Convention& base) {
    if (spec == "all") {
        std::vector<Convention> out = convention_space(PaperR{});
        const auto solved = convention_space(SolvedR{});
        out.insert(out.end(), solved.begin(), solved.end());
        return out;
    }
    return {parse_convention(spec, base)};
}

ReportFormat parse_format(std::string_view name) {
    if (name == "json") return ReportFormat::Json;
    if (name == "csv") return ReportFormat::Csv;
    if (name == "markdown" || name == "md") return ReportFormat::Markdown;
    throw Error(ErrorKind::UnsupportedFormat, std::string(name));
}

std::string csv_field(std::string_view text) {
    if (text.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(text);
    std::string out = "\"";
    for (char ch : text) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string render(const AuditReport& report, ReportFormat format) {
    switch (format) {
        case ReportFormat::Json: {
            nlohmann::json j;
            j["schema"] = "uqaudit.audit/1";
            j["toolVersion"] = report.tool_version;
            j["conventions"] = nlohmann::json::array();
            for (const auto& c : report.conventions) j["conventions"].push_back(convention_json(c));
            j["claims"] = nlohmann::json::array();
            for (const auto& r : report.claims) {
                j["claims"].push_back({{"claimId", r.claim_id},
                                       {"reference", r.reference},
                                       {"convention", r.convention},
                                       {"expected", r.expected},
                                       {"computed", r.computed},
                                       {"residual", r.residual},
                                       {"verdict", std::string(to_string(r.verdict))},
                                       {"note", r.note}});
            }
            return j.dump(2) + "\n";
        }
        case ReportFormat::Csv: {
            std::string out = "claimId,convention,verdict,residual\r\n";
            for (const auto& r : report.claims) {
                out += csv_field(r.claim_id) + "," + csv_field(r.convention) + "," +
                       csv_field(to_string(r.verdict)) + "," + csv_field(r.residual) + "\r\n";
            }
            return out;
        }
        case ReportFormat::Markdown: {
            std::ostringstream os;
            os << "# Audit report\n\n";
            os << "Tool version: " << report.tool_version << "\n\n";
            os << "All values are exact rational functions of q (half-integer powers written q^(k/2)).\n\n";
            os << "## Convention ledger\n\n";
            os << "| label | R source | Bob rule | bra | ordering | Born rule |\n";
            os << "|---|---|---|---|---|---|\n";
            for (const auto& c : report.conventions) {
                os << "| " << c.label() << " | " << to_string(c.r_source) << " | " << to_string(c.dressing.bob_rule)
                   << " | " << to_string(c.bra) << " | " << to_string(c.ordering) << " | " << to_string(c.born)
                   << " |\n";
            }
            os << "\nR source: `paper` is diag(q^(1/2),1,1,q^(1/2)) + (q^(1/2)-q^(-1/2)) E23, `solved` is the "
                  "intertwiner diag(q,1,1,q) + (q-q^-1) E23. Bob rule: Bob's Jz is conjugated by R, R21 or R^-1 "
                  "(Alice always by R21). bra: the state itself or the invariant dual covector. ordering: `ba` "
                  "applies Bob's projector first. Born rule: `sandwich` is <bra|PiA PiB|psi>/<bra|psi>, `norm` is "
                  "|PiA PiB psi|^2/<psi|psi>.\n\n";
            os << "## Claims\n\n";
            os << "| claim | convention | verdict | expected | computed | residual |\n";
            os << "|---|---|---|---|---|---|\n";
            for (const auto& r : report.claims) {
                os << "| " << r.claim_id << " | " << r.convention << " | " << to_string(r.verdict) << " | "
                   << md_cell(r.expected) << " | " << md_cell(r.computed) << " | " << md_cell(r.residual) << " |\n";
            }
            os << "\n## Discrepancy notes\n\n";
            std::set<std::string> seen;
            bool any = false;
            for (const auto& r : report.claims) {
                if (r.verdict == Verdict::Confirmed || r.note.empty() || !seen.insert(r.claim_id).second) continue;
                os << "- **" << r.claim_id << "** (" << r.reference << "): " << r.note << "\n";
                any = true;
            }
            if (!any) os << "None.\n";
            return os.str();
        }
    }
    throw Error(ErrorKind::UnsupportedFormat, "unknown format");
}

std::string render_sweep(const std::vector<SweepRow>& rows) {
    std::string out = "q,exact,p_naive_pm,p_naive_mp,bias_naive,p_dressed_pm,p_dressed_mp,bias_dressed\n";
    for (const auto& r : rows) {
        out += format_decimal(r.q) + "," + (r.exact ? "true" : "false") + "," + format_decimal(r.naive_plus_minus) +
               "," + format_decimal(r.naive_minus_plus) + "," + format_decimal(r.naive_bias) + "," +
               format_decimal(r.dressed_plus_minus) + "," + format_decimal(r.dressed_minus_plus) + "," +
               format_decimal(r.dressed_bias) + "\n";
    }
    return out;
}

}  // namespace uqaudit
