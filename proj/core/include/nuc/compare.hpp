#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nuc/game.hpp"
#include "nuc/kohlberg.hpp"
#include "nuc/random.hpp"
#include "nuc/span_pruned.hpp"

namespace nuc {

/// How the candidate point of each row is produced: the solver's own answer,
/// that answer with an efficiency-preserving 1/7 perturbation, or a seeded
/// point of the imputation simplex.
enum class PointRule { Oracle, OraclePerturbed, RandomImputation };

PointRule parse_point_rule(const std::string& name);
std::string point_rule_name(PointRule rule);

struct CompareConfig {
    int n = 3;
    int count = 1;
    std::uint64_t seed = 0;
    GameDist dist = GameDist::UniformInt;
    PointRule point_rule = PointRule::Oracle;
    std::string out_dir;  // counterexample files land here; empty = don't persist
    int threads = 0;      // 0 = hardware concurrency
};

struct CompareRow {
    int index = 0;
    std::uint64_t game_seed = 0;
    std::string game_hash;
    TUGame game{1};
    Payoff point;
    Verdict kohlberg = Verdict::NotSolution;
    Verdict modified = Verdict::NotSolution;
    std::optional<Verdict> nucleolus;  // present only for imputation candidates
    std::optional<Verdict> nguyen;
    std::array<std::int64_t, 3> containment{};  // case i / ii / iii step counts
    bool prenucleolus_agree = false;            // kohlberg vs modified
    std::optional<bool> nucleolus_agree;        // verify_nucleolus vs nguyen
    VerificationTrace kohlberg_trace;
    SpanPrunedTrace modified_trace;
    std::optional<VerificationTrace> nucleolus_trace;
    std::optional<VerificationTrace> nguyen_trace;
    std::string counterexample_path;  // empty when the row agrees everywhere
};

struct ComparisonReport {
    CompareConfig config;
    std::vector<CompareRow> rows;
    int prenucleolus_agreements = 0;
    int prenucleolus_disagreements = 0;
    int nucleolus_pairs = 0;  // rows where both nucleolus verdicts exist
    int nucleolus_agreements = 0;
    int nucleolus_disagreements = 0;
    std::array<std::int64_t, 3> containment_totals{};
    std::vector<std::string> counterexample_paths;
};

/// Runs the three-way comparison. Row seeds derive from (config.seed, index),
/// so the report is identical for any thread count; rows are assembled in
/// index order.
ComparisonReport compare_methods(const CompareConfig& config);

std::string format_report(const ComparisonReport& report);

/// Self-contained disagreement record: game, point, verdicts, traces.
std::string format_counterexample(const CompareRow& row);

struct ReplayResult {
    bool identical = false;
    std::string detail;
};

/// Re-runs every verifier recorded in a counterexample document and checks
/// verdicts and re-serialized traces byte for byte.
ReplayResult replay_counterexample(const std::string& doc);

/// FNV-1a over the canonical game document, rendered as 16 hex digits.
std::string game_hash(const TUGame& game);

}  // namespace nuc
