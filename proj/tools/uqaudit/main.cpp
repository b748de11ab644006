#include "uqaudit/audit.hpp"
#include "uqaudit/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConventionFlags {
    std::vector<std::string> conventions;
    std::optional<std::string> r_source;
    std::optional<std::string> bob_rule;
    std::optional<std::string> bra;
    std::optional<std::string> ordering;
    std::optional<std::string> born;

    void attach(CLI::App& cmd, bool repeatable) {
        if (repeatable) {
            cmd.add_option("--convention", conventions,
                           "Convention label such as r=paper,bob=r21 (missing keys take the flag values), "
                           "or 'all'; repeatable");
        } else {
            cmd.add_option("--convention", conventions, "Convention label such as r=paper,bob=r21")
                ->expected(1);
        }
        cmd.add_option("--r-source", r_source, "R-matrix")->check(CLI::IsMember({"paper", "solved"}));
        cmd.add_option("--bob-rule", bob_rule, "Conjugation used to dress Bob's observable")
            ->check(CLI::IsMember({"r", "r21", "rinv"}));
        cmd.add_option("--bra", bra, "Bra used in the Born rule")->check(CLI::IsMember({"state", "dual"}));
        cmd.add_option("--ordering", ordering, "Projector order: ba applies Bob's first")
            ->check(CLI::IsMember({"ba", "ab"}));
        cmd.add_option("--born", born, "Born rule")->check(CLI::IsMember({"sandwich", "norm"}));
    }

    uqaudit::Convention base() const {
        std::string spec;
        auto add = [&](const char* key, const std::optional<std::string>& v) {
            if (!v) return;
            if (!spec.empty()) spec += ',';
            spec += key;
            spec += '=';
            spec += *v;
        };
        add("r", r_source);
        add("bob", bob_rule);
        add("bra", bra);
        add("ord", ordering);
        add("born", born);
        return uqaudit::parse_convention(spec);
    }

    std::vector<uqaudit::Convention> resolve() const {
        try {
            const uqaudit::Convention b = base();
            if (conventions.empty()) return {b};
            std::vector<uqaudit::Convention> out;
            for (const auto& spec : conventions) {
                auto expanded = uqaudit::expand_convention(spec, b);
                out.insert(out.end(), expanded.begin(), expanded.end());
            }
            return out;
        } catch (const uqaudit::Error& e) {
            throw UsageError(e.what());
        }
    }
};

uqaudit::Rational parse_q(const std::string& text, const char* flag) {
    try {
        return uqaudit::parse_rational(text);
    } catch (const uqaudit::Error&) {
        throw UsageError(std::string(flag) + ": not a rational or decimal number: " + text);
    }
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << text;
    if (!out.flush()) throw std::runtime_error("cannot write " + path);
}

std::string table_cell(const uqaudit::FieldScalar& x, const uqaudit::Rational& q) {
    if (const auto v = uqaudit::evaluate_at_q(x, q)) return v->get_str() + " | " + uqaudit::format_decimal(v->get_d());
    return "- | " + uqaudit::format_decimal(uqaudit::to_float(x, q.get_d()));
}

std::string run_table(const uqaudit::Rational& q, const uqaudit::Convention& conv) {
    using namespace uqaudit;
    if (q <= 0) throw UsageError("--q must be positive");

    const QSinglet psi = q_singlet();
    const JointDistribution naive = naive_joint(psi);
    const JointDistribution dressed = dressed_joint(psi, conv);
    const MarginalReport mn = marginals(naive);
    const MarginalReport md = marginals(dressed);

    std::string out = "q = " + q.get_str() + "\n";
    out += "convention: " + conv.label() + "\n\n";
    out += "| quantity | symbolic | exact | decimal |\n|---|---|---|---|\n";
    auto row = [&](const std::string& name, const FieldScalar& x) {
        out += "| " + name + " | " + x.to_string(Variable::Q) + " | " + table_cell(x, q) + " |\n";
    };
    const char* labels[2] = {"+", "-"};
    for (Outcome a : kOutcomes) {
        for (Outcome b : kOutcomes) {
            row(std::string("naive p(") + labels[static_cast<int>(a)] + "," + labels[static_cast<int>(b)] + ")",
                naive(a, b));
        }
    }
    row("naive P_A(+)", mn.alice_plus);
    row("naive P_B(+)", mn.bob_plus);
    row("naive bias", mn.bias);
    for (Outcome a : kOutcomes) {
        for (Outcome b : kOutcomes) {
            row(std::string("dressed p(") + labels[static_cast<int>(a)] + "," + labels[static_cast<int>(b)] + ")",
                dressed(a, b));
        }
    }
    row("dressed P_A(+)", md.alice_plus);
    row("dressed P_B(+)", md.bob_plus);
    row("dressed bias", md.bias);
    row("dressed total", dressed.total());
    out += "\nquasi-probability: ";
    out += dressed.quasi_probability ? "yes" : "no";
    out += "\n";
    return out;
}

std::string run_solve_r() {
    using namespace uqaudit;
    const RSolution sol = solve_r();
    std::string out = "support (one-based):";
    for (const auto& [r, c] : sol.support) out += " (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")";
    out += "\nsolution dimension: " + std::to_string(sol.basis.size()) + "\n";
    if (!sol.normalized) return out;
    out += "R = " + to_string(*sol.normalized, Variable::Q) + "\n";
    const RSource source = CustomR{*sol.normalized};
    for (const auto& [g, residual] : check_quasitriangularity(source)) {
        out += "D^op(" + std::string(to_string(g)) + ") - R D(" + std::string(to_string(g)) +
               ") R^-1: " + (residual.is_zero() ? "0" : to_string(residual, Variable::Q)) + "\n";
    }
    const Matrix ybe = check_yang_baxter(source);
    out += "Yang-Baxter residual: " + (ybe.is_zero() ? std::string("0") : to_string(ybe, Variable::Q)) + "\n";
    return out;
}

std::string run_claims_list() {
    std::string out = "claimId\tconventionSensitive\tsummary\n";
    for (const auto& c : uqaudit::claim_registry()) {
        out += c.id + "\t" + (c.convention_sensitive ? "yes" : "no") + "\t" + c.summary + "\n";
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact audit of the deformed two-qubit singlet and its measurement statistics", "uqaudit"};
    app.set_version_flag("--version", std::string(uqaudit::tool_version()));
    app.require_subcommand(1);

    ConventionFlags audit_flags;
    std::string format = "json";
    std::string out_path;
    bool serial = false;
    auto* audit = app.add_subcommand("audit", "Run every registered claim under the requested conventions");
    audit_flags.attach(*audit, true);
    audit->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv", "markdown"}));
    audit->add_option("--out", out_path, "Write the report here instead of stdout");
    audit->add_flag("--serial", serial, "Run claims on one thread");

    ConventionFlags table_flags;
    std::string table_q;
    auto* table = app.add_subcommand("table", "Exact and decimal statistics at one value of q");
    table->add_option("--q", table_q, "Deformation parameter, e.g. 2, 3/2 or 0.75")->required();
    table_flags.attach(*table, false);

    ConventionFlags sweep_flags;
    std::string q_min;
    std::string q_max;
    std::size_t steps = 0;
    auto* sweep = app.add_subcommand("sweep", "CSV table of statistics over a geometric grid of q");
    sweep->add_option("--q-min", q_min, "Smallest q")->required();
    sweep->add_option("--q-max", q_max, "Largest q")->required();
    sweep->add_option("--steps", steps, "Number of grid points")->required()->check(CLI::PositiveNumber);
    sweep_flags.attach(*sweep, false);

    auto* solve = app.add_subcommand("solve-r", "Solve for the six-vertex R-matrix intertwining the coproduct");

    auto* claims = app.add_subcommand("claims", "Claim registry");
    claims->require_subcommand(1);
    auto* claims_list = claims->add_subcommand("list", "List registered claims");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (audit->parsed()) {
            const auto conventions = audit_flags.resolve();
            const auto report = uqaudit::run_all(conventions, !serial);
            write_output(uqaudit::render(report, uqaudit::parse_format(format)), out_path);
        } else if (table->parsed()) {
            const auto conventions = table_flags.resolve();
            write_output(run_table(parse_q(table_q, "--q"), conventions.front()), "");
        } else if (sweep->parsed()) {
            const auto conventions = sweep_flags.resolve();
            const auto lo = parse_q(q_min, "--q-min");
            const auto hi = parse_q(q_max, "--q-max");
            if (lo <= 0 || hi <= 0 || lo > hi) throw UsageError("need 0 < q-min <= q-max");
            write_output(uqaudit::render_sweep(uqaudit::sweep(lo, hi, steps, conventions.front())), "");
        } else if (solve->parsed()) {
            write_output(run_solve_r(), "");
        } else if (claims_list->parsed()) {
            write_output(run_claims_list(), "");
        }
    } catch (const UsageError& e) {
        std::cerr << "uqaudit: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "uqaudit: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitOk;
}
