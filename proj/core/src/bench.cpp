#include "nuc/bench.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

#include "nuc/kohlberg.hpp"
#include "nuc/span_pruned.hpp"

namespace nuc {
namespace {

BenchLevelRow& row_for(BenchTable& table, int level) {
    while (static_cast<int>(table.levels.size()) <= level) {
        BenchLevelRow row;
        row.level = static_cast<int>(table.levels.size());
        table.levels.push_back(row);
    }
    return table.levels[level];
}

}  // namespace

BenchTable bench_span_vs_lp(const std::vector<TUGame>& games, const std::vector<Payoff>& points) {
    if (games.empty()) throw std::invalid_argument("empty benchmark batch");
    if (games.size() != points.size())
        throw std::invalid_argument("games and points must have matching lengths");

    using Clock = std::chrono::steady_clock;
    BenchTable table;
    table.games = static_cast<int>(games.size());

    for (std::size_t g = 0; g < games.size(); ++g) {
        const auto t0 = Clock::now();
        VerificationTrace kohl = verify_prenucleolus(games[g], points[g]);
        const auto t1 = Clock::now();
        SpanPrunedTrace pruned = verify_prenucleolus_modified(games[g], points[g]);
        const auto t2 = Clock::now();
        table.kohlberg_seconds += std::chrono::duration<double>(t1 - t0).count();
        table.modified_seconds += std::chrono::duration<double>(t2 - t1).count();

        for (const TraceStep& step : kohl.steps) {
            BenchLevelRow& row = row_for(table, step.k);
            row.kohlberg_lp_pivots += step.lp_pivots;
            table.total_kohlberg_pivots += step.lp_pivots;
        }
        for (const SpanPrunedStep& step : pruned.steps) {
            BenchLevelRow& row = row_for(table, step.k);
            row.span_ops += step.span_ops;
            row.modified_lp_pivots += step.lp_pivots;
            ++row.samples;
            table.total_span_ops += step.span_ops;
            table.total_modified_pivots += step.lp_pivots;
        }
    }
    return table;
}

std::string format_bench(const BenchTable& table) {
    std::ostringstream out;
    out << "games: " << table.games << "\n";
    out << "level  samples  span_ops  modified_lp_pivots  kohlberg_lp_pivots\n";
    for (const BenchLevelRow& row : table.levels)
        out << row.level << "  " << row.samples << "  " << row.span_ops << "  "
            << row.modified_lp_pivots << "  " << row.kohlberg_lp_pivots << "\n";
    out << "total  span_ops=" << table.total_span_ops
        << "  modified_lp_pivots=" << table.total_modified_pivots
        << "  kohlberg_lp_pivots=" << table.total_kohlberg_pivots << "\n";
    out << "wall_clock  kohlberg=" << table.kohlberg_seconds
        << "s  modified=" << table.modified_seconds << "s\n";
    return out.str();
}

}  // namespace nuc
