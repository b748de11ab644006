#include "support.hpp"

#include "uqaudit/audit.hpp"
#include "uqaudit/errors.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <map>
#include <set>

using namespace uqaudit;

namespace {

const ClaimResult* find(const AuditReport& report, const std::string& id) {
    for (const auto& r : report.claims) {
        if (r.claim_id == id) return &r;
    }
    return nullptr;
}

}  // namespace

TEST_SUITE("audit-cli") {

TEST_CASE("claim registry") {
    const auto& reg = claim_registry();
    CHECK(reg.size() >= 14);
    std::set<std::string> ids;
    for (std::size_t i = 0; i < reg.size(); ++i) {
        CHECK(ids.insert(reg[i].id).second);
        CHECK_FALSE(reg[i].reference.empty());
        CHECK_FALSE(reg[i].summary.empty());
        if (i > 0) CHECK(reg[i - 1].id < reg[i].id);
    }
    for (const char* id : {"C-SINGLET", "C-CASIMIR", "C-NAIVE-JOINT", "C-DRESSED-HALF", "C-COV-JPLUS", "C-COV-JMINUS",
                           "C-QUASITRI", "C-SOLVED-R", "C-YBE", "C-UNDEFORMED-LIMIT"}) {
        CHECK(ids.count(id) == 1);
    }
}

TEST_CASE("run_claim examples") {
    const ClaimResult cov = run_claim("C-COV-JPLUS");
    CHECK(cov.verdict == Verdict::Confirmed);
    CHECK(cov.residual == "0");
    CHECK(cov.note.empty());

    Convention paper;
    paper.r_source = PaperR{};
    CHECK(run_claim("C-QUASITRI", paper).verdict == Verdict::Q1Only);
    Convention solved;
    solved.r_source = SolvedR{};
    CHECK(run_claim("C-QUASITRI", solved).verdict == Verdict::Confirmed);

    const ClaimResult naive = run_claim("C-NAIVE-JOINT");
    CHECK(naive.verdict == Verdict::Confirmed);
    CHECK(naive.computed == "[[0, q^2/(q^2 + 1)], [1/(q^2 + 1), 0]]");

    try {
        run_claim("C-NOPE");
        FAIL("expected UnknownClaim");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnknownClaim);
    }
}

TEST_CASE("dressed one-half claim is refuted and shown next to the computed value") {
    const ClaimResult r = run_claim("C-DRESSED-HALF");
    CHECK(r.verdict == Verdict::RefutedUnderConvention);
    CHECK(r.expected == "[[0, 1/2], [1/2, 0]]");
    CHECK(r.computed.find("(q^2 - q + 2 - q^-1)/(q^2 + 1)") != std::string::npos);
    CHECK_FALSE(r.note.empty());
}

TEST_CASE("convention-sensitive verdicts") {
    CHECK(run_claim("C-DRESSED-JZB").verdict == Verdict::Confirmed);
    Convention c;
    c.dressing.bob_rule = BobRule::ConjugateByR21;
    CHECK(run_claim("C-DRESSED-JZB", c).verdict == Verdict::ConventionDependent);
    CHECK(run_claim("C-PROJ-B", c).verdict == Verdict::ConventionDependent);
    CHECK(run_claim("C-DRESSED-EXPECT-ZERO", c).verdict == Verdict::RefutedUnderConvention);
}

TEST_CASE("default run") {
    const AuditReport report = run_all({});
    CHECK(report.claims.size() == claim_registry().size());
    REQUIRE(report.conventions.size() == 1);
    CHECK(report.conventions.front().label() == Convention{}.label());
    CHECK(report.tool_version == tool_version());
    for (const char* id : {"C-ALG-CARTAN", "C-ALG-RAISE-LOWER", "C-CASIMIR", "C-SINGLET", "C-NORMALIZATION",
                           "C-COV-JPLUS", "C-R21", "C-YBE", "C-SOLVED-R", "C-UNDEFORMED-LIMIT"}) {
        CAPTURE(id);
        const ClaimResult* r = find(report, id);
        REQUIRE(r != nullptr);
        CHECK(r->verdict == Verdict::Confirmed);
    }
    // The J- covariance identity does not hold for q != 1.
    CHECK(find(report, "C-COV-JMINUS")->verdict == Verdict::Q1Only);
    CHECK(find(report, "C-NAIVE-COVARIANCE")->verdict == Verdict::Q1Only);
    CHECK(find(report, "C-NAIVE-SINGLET")->verdict == Verdict::Q1Only);
    CHECK(find(report, "C-COPROD-JMINUS-ACTIONS")->verdict == Verdict::Q1Only);
}

TEST_CASE("verdict invariants hold on the full convention space") {
    const AuditReport report = run_all(expand_convention("all"));
    CHECK(report.claims.size() == claim_registry().size() * 48);
    std::map<std::string, bool> sensitive;
    for (const auto& c : claim_registry()) sensitive[c.id] = c.convention_sensitive;
    for (const auto& r : report.claims) {
        CAPTURE(r.claim_id);
        CAPTURE(r.convention);
        CHECK((r.verdict == Verdict::Confirmed) == (r.residual == "0"));
        if (r.verdict == Verdict::Q1Only) CHECK_FALSE(sensitive[r.claim_id]);
        if (r.verdict == Verdict::ConventionDependent) CHECK(sensitive[r.claim_id]);
    }
    for (std::size_t i = 1; i < report.claims.size(); ++i) {
        const auto& a = report.claims[i - 1];
        const auto& b = report.claims[i];
        CHECK(std::tie(a.claim_id, a.convention) < std::tie(b.claim_id, b.convention));
    }
}

TEST_CASE("four-convention run") {
    std::vector<Convention> four;
    for (BobRule rule : {BobRule::ConjugateByR, BobRule::ConjugateByR21}) {
        for (Ordering ord : {Ordering::BobThenAlice, Ordering::AliceThenBob}) {
            four.push_back(Convention{PaperR{}, {rule}, BraChoice::ConjugateOfState, ord, BornRule::SandwichProduct});
        }
    }
    const AuditReport report = run_all(four);
    std::map<std::string, int> count;
    for (const auto& r : report.claims) ++count[r.claim_id];
    for (const auto& c : claim_registry()) CHECK(count[c.id] == 4);
}

TEST_CASE("parallel and serial runs render identically") {
    const auto conventions = convention_space();
    const std::string a = render(run_all(conventions, true), ReportFormat::Json);
    const std::string b = render(run_all(conventions, false), ReportFormat::Json);
    CHECK(a == b);
}

TEST_CASE("rendering") {
    const AuditReport report = run_all({});
    const std::string json = render(report, ReportFormat::Json);
    CHECK(json == render(report, ReportFormat::Json));
    const auto j = nlohmann::json::parse(json);
    CHECK(j["schema"] == "uqaudit.audit/1");
    CHECK(j["claims"].size() == report.claims.size());
    CHECK(j["conventions"][0]["label"] == Convention{}.label());
    CHECK_FALSE(j.contains("elapsed"));

    const std::string csv = render(report, ReportFormat::Csv);
    CHECK(csv.rfind("claimId,convention,verdict,residual\r\n", 0) == 0);
    CHECK(csv.find("C-SINGLET,\"r=paper,bob=r,bra=state,ord=ba,born=sandwich\",CONFIRMED,0\r\n") != std::string::npos);

    const std::string md = render(report, ReportFormat::Markdown);
    CHECK(md.find("## Convention ledger") != std::string::npos);
    CHECK(md.find("## Discrepancy notes") != std::string::npos);
    CHECK(md.find("**C-DRESSED-HALF**") != std::string::npos);
    CHECK(md.find("| C-DRESSED-HALF | r=paper,bob=r,bra=state,ord=ba,born=sandwich | REFUTED_UNDER_CONVENTION | "
                  "[[0, 1/2], [1/2, 0]] |") != std::string::npos);
}

TEST_CASE("formats and csv quoting") {
    CHECK(parse_format("json") == ReportFormat::Json);
    CHECK(parse_format("csv") == ReportFormat::Csv);
    CHECK(parse_format("markdown") == ReportFormat::Markdown);
    try {
        parse_format("xml");
        FAIL("expected UnsupportedFormat");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnsupportedFormat);
    }
    CHECK(csv_field("plain") == "plain");
    CHECK(csv_field("a,b") == "\"a,b\"");
    CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(csv_field("two\nlines") == "\"two\nlines\"");
    CHECK(csv_field("") == "");
}

TEST_CASE("parse_convention") {
    CHECK(parse_convention("").label() == Convention{}.label());
    const Convention c = parse_convention("r=solved,bob=rinv,bra=dual,ord=ab,born=norm");
    CHECK(c.label() == "r=solved,bob=rinv,bra=dual,ord=ab,born=norm");
    CHECK(parse_convention(c.label()).label() == c.label());
    CHECK(parse_convention("bob=r21", c).label() == "r=solved,bob=r21,bra=dual,ord=ab,born=norm");
    for (const char* bad : {"bob", "bob=x", "who=r", "r=custom", "ord=ba,born=maybe"}) {
        CAPTURE(bad);
        try {
            parse_convention(bad);
            FAIL("expected ParseError");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::ParseError);
        }
    }
    CHECK(expand_convention("all").size() == 48);
    CHECK(expand_convention("bra=dual").size() == 1);
}

TEST_CASE("sweep examples") {
    const auto one = sweep(Rational(1), Rational(1), 1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].exact);
    CHECK(one[0].q == 1.0);
    CHECK(one[0].naive_plus_minus == 0.5);
    CHECK(one[0].naive_minus_plus == 0.5);
    CHECK(one[0].naive_bias == 0.0);
    CHECK(one[0].dressed_plus_minus == 0.5);
    CHECK(one[0].dressed_minus_plus == 0.5);
    CHECK(one[0].dressed_bias == 0.0);

    const auto two = sweep(Rational(2), Rational(2), 1);
    REQUIRE(two.size() == 1);
    CHECK_FALSE(two[0].exact);
    CHECK(two[0].naive_bias == doctest::Approx(0.6).epsilon(1e-14));
    CHECK(two[0].dressed_plus_minus == doctest::Approx(0.7).epsilon(1e-14));

    const auto sym = sweep(Rational(1, 2), Rational(2), 4);
    REQUIRE(sym.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        const SweepRow& a = sym[i];
        const SweepRow& b = sym[3 - i];
        CHECK(std::abs(a.q * b.q - 1.0) <= 1e-12);
        CHECK(std::abs(a.naive_plus_minus - b.naive_minus_plus) <= 1e-12);
        CHECK(std::abs(a.naive_bias + b.naive_bias) <= 1e-12);
    }
    CHECK(sym.front().q_exact == Rational(1, 2));
    CHECK(sym.back().q_exact == Rational(2));
    CHECK_FALSE(sym[1].q_exact.has_value());
}

TEST_CASE("sweep uses exact evaluation on rational squares") {
    const auto rows = sweep(Rational(1, 4), Rational(4), 3);
    REQUIRE(rows.size() == 3);
    CHECK(rows[1].q_exact == Rational(1));
    for (const auto& r : rows) CHECK(r.exact);
    CHECK(rows[2].naive_bias == doctest::Approx(15.0 / 17).epsilon(1e-15));
    CHECK(rows[2].dressed_plus_minus == doctest::Approx(55.0 / 68).epsilon(1e-15));
    const std::string csv = render_sweep(rows);
    CHECK(csv.rfind("q,exact,p_naive_pm,p_naive_mp,bias_naive,p_dressed_pm,p_dressed_mp,bias_dressed\n", 0) == 0);
    CHECK(csv.find("\n1,true,0.5,0.5,0,0.5,0.5,0\n") != std::string::npos);
}

TEST_CASE("sweep errors") {
    auto kind = [](const Rational& lo, const Rational& hi, std::size_t steps) {
        try {
            sweep(lo, hi, steps);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::UnknownClaim;
    };
    CHECK(kind(Rational(0), Rational(1), 2) == ErrorKind::NonpositiveParameter);
    CHECK(kind(Rational(-1), Rational(1), 2) == ErrorKind::NonpositiveParameter);
    CHECK(kind(Rational(2), Rational(1), 2) == ErrorKind::NonpositiveParameter);
    CHECK(kind(Rational(1), Rational(2), 0) == ErrorKind::NonpositiveParameter);
}

}  // TEST_SUITE
