#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nuc/game.hpp"

namespace nuc {

/// Aggregated costs at one verification level across a batch: elimination
/// operations spent on span-membership checks and LP pivots spent by the
/// pruned verifier, against LP pivots of the full-collection balancedness
/// tests.
struct BenchLevelRow {
    int level = 0;
    std::int64_t span_ops = 0;
    std::int64_t modified_lp_pivots = 0;
    std::int64_t kohlberg_lp_pivots = 0;
    int samples = 0;  // (game, point) pairs reaching this level
};

struct BenchTable {
    int games = 0;
    std::vector<BenchLevelRow> levels;
    std::int64_t total_span_ops = 0;
    std::int64_t total_modified_pivots = 0;
    std::int64_t total_kohlberg_pivots = 0;
    double kohlberg_seconds = 0.0;  // wall clock; not part of determinism
    double modified_seconds = 0.0;
};

/// Runs both prenucleolus verifiers on each (game, point) pair and tallies
/// their step counters. Lists must be nonempty and of equal length. Step
/// counts are deterministic; only the wall-clock fields vary between runs.
BenchTable bench_span_vs_lp(const std::vector<TUGame>& games, const std::vector<Payoff>& points);

std::string format_bench(const BenchTable& table);

}  // namespace nuc
