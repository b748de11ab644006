#include "support.hpp"

#include "uqaudit/hopf.hpp"
#include "uqaudit/states.hpp"

#include <cmath>

using namespace uqaudit;
using support::M;
using support::S;
using support::V;

namespace {

constexpr Generator kAll[] = {Generator::Jz, Generator::Jplus, Generator::Jminus, Generator::K, Generator::Kinv};

}  // namespace

TEST_SUITE("hopf-rep") {

TEST_CASE("generator matrices") {
    CHECK(generator_matrix(Generator::Jz) == M({{"1/2", "0"}, {"0", "-1/2"}}));
    CHECK(generator_matrix(Generator::K) * generator_matrix(Generator::Kinv) == Matrix::identity(2));
    CHECK((generator_matrix(Generator::Jplus) * generator_matrix(Generator::Jplus)).is_zero());
    CHECK((generator_matrix(Generator::Jminus) * generator_matrix(Generator::Jminus)).is_zero());
    CHECK(generator_matrix(Generator::K) == M({{"s", "0"}, {"0", "s^-1"}}));
    CHECK(generator_matrix(Generator::Jplus) == M({{"0", "1"}, {"0", "0"}}));
    CHECK(generator_matrix(Generator::Jminus) == M({{"0", "0"}, {"1", "0"}}));
    CHECK(generator_matrix(Generator::Jz).basis() == BasisTag(kSiteBasis));
}

TEST_CASE("generator names") {
    CHECK(to_string(Generator::Jz) == "Jz");
    CHECK(to_string(Generator::Jplus) == "Jplus");
    CHECK(to_string(Generator::Jminus) == "Jminus");
    CHECK(to_string(Generator::K) == "K");
    CHECK(to_string(Generator::Kinv) == "Kinv");
}

TEST_CASE("two-site basis order") {
    CHECK(RepContext::two_sites().labels == std::vector<std::string>{"uu", "ud", "du", "dd"});
    CHECK(RepContext::single_site().labels == std::vector<std::string>{"u", "d"});
}

TEST_CASE("coproduct examples") {
    CHECK(coproduct_matrix(Generator::Jz) == Matrix::diagonal({1, 0, 0, -1}));
    const Matrix djp = coproduct_matrix(Generator::Jplus);
    CHECK(djp(0, 1) == S("q^(-1/2)"));
    CHECK(djp(0, 2) == S("q^(1/2)"));
    const Matrix djm = coproduct_matrix(Generator::Jminus);
    CHECK(djm(3, 1) == S("q^(-1/2)"));
    CHECK(djm(3, 2) == S("q^(1/2)"));
    CHECK(djp(2, 3) == S("q^(1/2)"));
    CHECK(djp(1, 3) == S("q^(-1/2)"));
    CHECK(coproduct_matrix(Generator::Jz).basis() == BasisTag(kTwoSiteBasis));
}

TEST_CASE("printed J- actions swap the q-factors") {
    const Matrix inline_jm = coproduct_matrix(Generator::Jminus, CoproductVariant::InlineActions);
    CHECK(inline_jm(3, 1) == S("q^(1/2)"));
    CHECK(inline_jm(3, 2) == S("q^(-1/2)"));
    CHECK(coproduct_matrix(Generator::Jplus, CoproductVariant::InlineActions) == coproduct_matrix(Generator::Jplus));
    // Only the coproduct formula annihilates the invariant state.
    const StateVector psi = V({"0", "1", "-q^-1", "0"});
    CHECK((coproduct_matrix(Generator::Jminus) * psi).is_zero());
    CHECK(inline_jm * psi == V({"0", "0", "0", "q^(1/2) - q^(-3/2)"}));
}

TEST_CASE("opposite coproduct examples") {
    CHECK(opposite_coproduct_matrix(Generator::Jz) == Matrix::diagonal({1, 0, 0, -1}));
    const Matrix op = opposite_coproduct_matrix(Generator::Jplus);
    CHECK(op(0, 1) == S("q^(1/2)"));
    CHECK(op(0, 2) == S("q^(-1/2)"));
    for (Generator g : kAll) {
        CAPTURE(to_string(g));
        CHECK(evaluate(opposite_coproduct_matrix(g), Rational(1)) == evaluate(coproduct_matrix(g), Rational(1)));
    }
}

TEST_CASE("total Casimir") {
    const Matrix c = total_casimir();
    CHECK((c * V({"0", "1", "-q^-1", "0"})).is_zero());
    CHECK(evaluate(c, Rational(1)) == M({{"2", "0", "0", "0"}, {"0", "1", "1", "0"}, {"0", "1", "1", "0"}, {"0", "0", "0", "2"}}));
    // Eigenvalues {2, 2, 2, 0} at q = 1: det(x - C) = x (x - 2)^3.
    std::vector<FieldScalar> at_one;
    for (const auto& coefficient : characteristic_polynomial(c)) {
        at_one.emplace_back(evaluate(coefficient, Rational(1)));
    }
    CHECK(at_one == std::vector<FieldScalar>{0, -8, 12, -6, 1});
    CHECK(commutator(c, coproduct_matrix(Generator::Jz)).is_zero());
    CHECK(c(0, 0) == S("(q^2 + 1)/(2 q) + 1"));
}

TEST_CASE("algebra relations") {
    const AlgebraResiduals r = verify_algebra_relations();
    CHECK(r.all_zero());
    CHECK(r.residuals.size() == 5);
    CHECK(r.residuals.at("[Jz,J+]-J+").is_zero());
    CHECK(r.residuals.at("[J+,J-]-2Jz").is_zero());
    for (const auto& [name, m] : r.residuals) {
        CAPTURE(name);
        for (double x : to_float(m, 7.0 / 3.0)) CHECK(x == 0.0);
    }
}

TEST_CASE("property: coproduct consistency") {
    const Matrix jz = generator_matrix(Generator::Jz);
    const Matrix one = Matrix::identity(2);
    CHECK(coproduct_matrix(Generator::K) * coproduct_matrix(Generator::Kinv) == Matrix::identity(4));
    CHECK(coproduct_matrix(Generator::Jz) == kron(jz, one) + kron(one, jz));
    const Matrix dk = coproduct_matrix(Generator::K);
    const Matrix dkinv = coproduct_matrix(Generator::Kinv);
    const FieldScalar denom = FieldScalar::q() - FieldScalar::q().inverse();
    CHECK(commutator(coproduct_matrix(Generator::Jplus), coproduct_matrix(Generator::Jminus)) ==
          (dk * dk - dkinv * dkinv) * denom.inverse());
    CHECK(commutator(coproduct_matrix(Generator::Jplus), coproduct_matrix(Generator::Jminus)) ==
          Matrix::diagonal({S("(q^2 + 1)/q"), 0, 0, S("-(q^2 + 1)/q")}));
    for (Generator g : kAll) {
        for (CoproductVariant v : {CoproductVariant::Definition, CoproductVariant::InlineActions}) {
            CAPTURE(to_string(g));
            CHECK(opposite_coproduct_matrix(g, v) == flip() * coproduct_matrix(g, v) * flip());
        }
    }
    CHECK(commutator(coproduct_matrix(Generator::Jz), coproduct_matrix(Generator::Jplus)) ==
          coproduct_matrix(Generator::Jplus));
    CHECK(commutator(coproduct_matrix(Generator::Jz), coproduct_matrix(Generator::Jminus)) ==
          -coproduct_matrix(Generator::Jminus));
}

TEST_CASE("flip") {
    const Matrix p = flip();
    CHECK(p * p == Matrix::identity(4));
    CHECK(p(1, 2) == FieldScalar(1));
    CHECK(p(2, 1) == FieldScalar(1));
    // P(u (x) d) = d (x) u
    CHECK(p * V({"0", "1", "0", "0"}) == V({"0", "0", "1", "0"}));
    CHECK(p * V({"1", "0", "0", "0"}) == V({"1", "0", "0", "0"}));
}

}  // TEST_SUITE
