#include "support.hpp"

#include "uqaudit/errors.hpp"
#include "uqaudit/numeric.hpp"

#include <cmath>

using namespace uqaudit;

namespace {

const double kQs[] = {0.25, 0.5, 1.0, 1.5, 2.0, 4.0};

void check_close(const numeric::Mat4& got, const Matrix& exact, double q) {
    const std::vector<double> want = to_float(exact, q);
    for (std::size_t i = 0; i < 16; ++i) {
        CAPTURE(i);
        CHECK(std::abs(got[i] - want[i]) <= 1e-12);
    }
}

}  // namespace

TEST_SUITE("measurement") {

TEST_CASE("float pipeline matches the exact matrices") {
    const Matrix jz = generator_matrix(Generator::Jz);
    for (double q : kQs) {
        CAPTURE(q);
        for (const RSource& r : {RSource{PaperR{}}, RSource{SolvedR{}}}) {
            check_close(numeric::r_matrix(q, r), r_matrix(r), q);
            check_close(numeric::r21_matrix(q, r), r21(r), q);
            check_close(numeric::inverse(numeric::r_matrix(q, r)), invert(r_matrix(r)), q);
            check_close(numeric::dressed_alice_jz(q, r), dress(jz, Site::A, r), q);
            for (BobRule rule : {BobRule::ConjugateByR, BobRule::ConjugateByR21, BobRule::ConjugateByRinv}) {
                const Matrix exact = dress(jz, Site::B, r, {rule});
                const numeric::Mat4 approx = numeric::dressed_bob_jz(q, r, rule);
                check_close(approx, exact, q);
                const auto p = numeric::projectors(approx);
                check_close(p[0], spectral_projectors(exact).plus, q);
                check_close(p[1], spectral_projectors(exact).minus, q);
            }
        }
    }
}

TEST_CASE("float pipeline matches the exact probabilities") {
    const QSinglet psi = q_singlet();
    const JointDistribution naive = naive_joint(psi);
    for (double q : kQs) {
        CAPTURE(q);
        const numeric::Joint n = numeric::naive_joint(q);
        for (int i = 0; i < 4; ++i) {
            CHECK(std::abs(n[i] - to_float(naive.p[i / 2][i % 2], q)) <= 1e-12);
        }
        for (const RSource& r : {RSource{PaperR{}}, RSource{SolvedR{}}}) {
            for (const Convention& c : convention_space(r)) {
                CAPTURE(c.label());
                const JointDistribution exact = dressed_joint(psi, c);
                const numeric::Joint approx = numeric::dressed_joint(q, c);
                for (int i = 0; i < 4; ++i) CHECK(std::abs(approx[i] - to_float(exact.p[i / 2][i % 2], q)) <= 1e-12);
            }
        }
    }
}

TEST_CASE("float pipeline edge cases") {
    CHECK_THROWS_AS(numeric::r_matrix(2.0, CustomR{Matrix::identity(4)}), Error);
    numeric::Mat4 singular{};
    CHECK_THROWS_AS(numeric::inverse(singular), Error);
    const numeric::Vec4 v = numeric::singlet(2.0);
    CHECK(v[2] == -0.5);
}

}  // TEST_SUITE
