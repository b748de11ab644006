#pragma once

// Claim registry, verification runner, q sweeps and report rendering.

#include "uqaudit/measurement.hpp"

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace uqaudit {

std::string_view tool_version() noexcept;

enum class Verdict { Confirmed, RefutedUnderConvention, ConventionDependent, Q1Only };

std::string_view to_string(Verdict v) noexcept;

struct ClaimInfo {
    std::string id;
    /// Where the claim lives and what exactly is checked.
    std::string reference;
    std::string summary;
    /// Reads the Bob rule, bra, ordering or Born rule of the convention.
    bool convention_sensitive = false;
    /// Shown next to every result that is not CONFIRMED.
    std::string note;
};

/// Sorted by id.
const std::vector<ClaimInfo>& claim_registry();

struct ClaimResult {
    std::string claim_id;
    std::string reference;
    std::string convention;
    std::string expected;
    std::string computed;
    std::string residual;
    Verdict verdict = Verdict::Confirmed;
    std::string note;
};

/// Verdict rules:
///   residual exactly zero                       -> CONFIRMED
///   otherwise, convention-sensitive claims      -> CONVENTION_DEPENDENT if some
///     convention with the same R source zeroes the residual, else
///     REFUTED_UNDER_CONVENTION
///   otherwise, residual vanishes at q = 1       -> Q1_ONLY
///   otherwise                                   -> REFUTED_UNDER_CONVENTION
/// Throws UnknownClaim.
ClaimResult run_claim(std::string_view claim_id, const std::optional<Convention>& conv = std::nullopt);

struct AuditReport {
    std::vector<ClaimResult> claims;
    std::vector<Convention> conventions;
    std::string tool_version;
    /// Wall time of the run. Not rendered, so renderings stay byte-stable.
    std::chrono::nanoseconds elapsed{0};
};

/// Every registered claim once per convention, ordered by claim id and then
/// convention label. An empty list means the default convention.
AuditReport run_all(std::vector<Convention> conventions, bool parallel = true);

struct SweepRow {
    double q = 0.0;
    /// q is a rational square, so every column was evaluated exactly.
    bool exact = false;
    std::optional<Rational> q_exact;
    double naive_plus_minus = 0.0;
    double naive_minus_plus = 0.0;
    double naive_bias = 0.0;
    double dressed_plus_minus = 0.0;
    double dressed_minus_plus = 0.0;
    double dressed_bias = 0.0;
};

/// `steps` points spaced geometrically from q_min to q_max (so the grid is
/// closed under q -> q_min q_max / q). Throws NonpositiveParameter.
std::vector<SweepRow> sweep(const Rational& q_min, const Rational& q_max, std::size_t steps,
                            const Convention& conv = {});

/// Reads a convention written as comma-separated key=value pairs with keys
/// r (paper|solved), bob (r|r21|rinv), bra (state|dual), ord (ba|ab) and
/// born (sandwich|norm), i.e. the form Convention::label() prints. Keys that
/// are absent keep their value from `base`. Throws ParseError.
Convention parse_convention(std::string_view spec, const Convention& base = {});

/// Like parse_convention, but "all" expands to the full space for both R
/// sources (48 conventions).
std::vector<Convention> expand_convention(std::string_view spec, const Convention& base = {});

enum class ReportFormat { Json, Csv, Markdown };

/// Throws UnsupportedFormat.
ReportFormat parse_format(std::string_view name);

std::string render(const AuditReport& report, ReportFormat format);
std::string render_sweep(const std::vector<SweepRow>& rows);

/// RFC-4180 field quoting.
std::string csv_field(std::string_view text);

}  // namespace uqaudit
