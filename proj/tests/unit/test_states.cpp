#include "support.hpp"

#include "uqaudit/states.hpp"

using namespace uqaudit;
using support::S;
using support::V;

TEST_SUITE("states") {

TEST_CASE("q_singlet") {
    const QSinglet psi = q_singlet();
    CHECK(psi.vector == V({"0", "1", "-q^-1", "0"}));
    CHECK(psi.norm_squared == S("1 + q^-2"));
    CHECK(psi.vector.norm_squared() == psi.norm_squared);
    CHECK(psi.dual == Covector{{S("0"), S("1"), S("-q^-1"), S("0")}});
    std::vector<FieldScalar> at_one;
    for (const auto& x : psi.vector.entries()) at_one.emplace_back(evaluate(x, Rational(1)));
    CHECK(StateVector(at_one) == V({"0", "1", "-1", "0"}));
}

TEST_CASE("stacked coproducts") {
    const Matrix m = stacked_coproducts();
    CHECK(m.rows() == 12);
    CHECK(m.cols() == 4);
    CHECK(kernel(m).size() == 1);
    // With the printed J- actions there is no invariant vector at all.
    CHECK(kernel(stacked_coproducts(CoproductVariant::InlineActions)).empty());
}

TEST_CASE("kernel stays one-dimensional at sampled q") {
    const Matrix m = stacked_coproducts();
    for (const Rational s0 : {Rational(1, 3), Rational(1, 2), Rational(1), Rational(3, 2), Rational(2), Rational(5)}) {
        CAPTURE(s0.get_str());
        const auto ker = kernel(evaluate(m, s0));
        REQUIRE(ker.size() == 1);
        CHECK(ker[0].leading_normalized() == StateVector({0, 1, FieldScalar(-1 / (s0 * s0)), 0}));
    }
}

TEST_CASE("invariance residuals") {
    for (const auto& [g, r] : invariance_residuals(q_singlet().vector)) {
        CAPTURE(to_string(g));
        CHECK(r.is_zero());
    }
    const auto bell = invariance_residuals(V({"0", "1", "-1", "0"}));
    CHECK(bell.at(Generator::Jplus) == V({"q^(-1/2) - q^(1/2)", "0", "0", "0"}));
    CHECK(bell.at(Generator::Jminus) == V({"0", "0", "0", "q^(-1/2) - q^(1/2)"}));
    CHECK(bell.at(Generator::Jz).is_zero());
    CHECK(invariance_residuals(V({"1", "0", "0", "0"})).at(Generator::Jz) == V({"1", "0", "0", "0"}));
}

TEST_CASE("casimir residual") {
    CHECK(casimir_residual(q_singlet().vector).is_zero());
    const StateVector e1 = casimir_residual(V({"1", "0", "0", "0"}));
    CHECK(e1 == V({"1 + (q^2 + 1)/(2q)", "0", "0", "0"}));
    CHECK(evaluate(e1[0], Rational(1)) == 2);
    const StateVector e4 = casimir_residual(V({"0", "0", "0", "1"}));
    CHECK(e4 == V({"0", "0", "0", "1 + (q^2 + 1)/(2q)"}));
}

TEST_CASE("dual singlet") {
    const Covector u = dual_singlet();
    CHECK(u == Covector{{S("0"), S("1"), S("-q^-1"), S("0")}});
    CHECK(pair(u, q_singlet().vector) == S("1 + q^-2"));
    CHECK_FALSE(pair(u, q_singlet().vector).is_zero());
    for (Generator g : kSymmetryGenerators) {
        const Covector z = u * coproduct_matrix(g);
        for (const auto& x : z.entries) CHECK(x.is_zero());
    }
    std::vector<FieldScalar> at_one;
    for (const auto& x : u.entries) at_one.emplace_back(evaluate(x, Rational(1)));
    CHECK(Covector{at_one} == Covector{{0, 1, -1, 0}});
}

}  // TEST_SUITE
