#include <doctest.h>

#include <filesystem>

#include "helpers.hpp"
#include "nuc/bench.hpp"
#include "nuc/compare.hpp"
#include "nuc/io.hpp"
#include "nuc/solver.hpp"

using namespace nuc;

namespace {

CompareConfig base_config() {
    CompareConfig config;
    config.n = 3;
    config.count = 10;
    config.seed = 7;
    config.dist = GameDist::UniformInt;
    config.point_rule = PointRule::Oracle;
    config.threads = 1;
    return config;
}

}  // namespace

TEST_CASE("oracle points all pass the ground-truth verifier") {
    ComparisonReport report = compare_methods(base_config());
    CHECK(report.rows.size() == 10);
    for (const CompareRow& row : report.rows) CHECK(row.kohlberg == Verdict::IsSolution);
    CHECK(report.prenucleolus_agreements + report.prenucleolus_disagreements == 10);
    CHECK(report.nucleolus_agreements + report.nucleolus_disagreements ==
          report.nucleolus_pairs);
}

TEST_CASE("perturbed oracle points all fail the ground-truth verifier") {
    CompareConfig config = base_config();
    config.point_rule = PointRule::OraclePerturbed;
    ComparisonReport report = compare_methods(config);
    for (const CompareRow& row : report.rows) CHECK(row.kohlberg == Verdict::NotSolution);
}

TEST_CASE("invalid configurations are rejected") {
    CompareConfig config = base_config();
    config.count = 0;
    CHECK_THROWS_AS(compare_methods(config), std::invalid_argument);
}

TEST_CASE("reports are deterministic and thread-count independent") {
    CompareConfig config = base_config();
    config.point_rule = PointRule::RandomImputation;
    config.dist = GameDist::ZeroNormalized;
    ComparisonReport first = compare_methods(config);
    config.threads = 3;
    ComparisonReport second = compare_methods(config);
    CHECK(format_report(first) == format_report(second));
}

TEST_CASE("counterexample files replay to identical verdicts") {
    // synthesize a record from any row, then check the replay path end to end
    ComparisonReport report = compare_methods(base_config());
    for (const CompareRow& row : report.rows) {
        ReplayResult replay = replay_counterexample(format_counterexample(row));
        CHECK(replay.identical);
    }
}

TEST_CASE("persisted disagreements replay from disk") {
    CompareConfig config = base_config();
    config.dist = GameDist::ZeroNormalized;
    config.point_rule = PointRule::OraclePerturbed;
    config.count = 6;
    config.out_dir = (std::filesystem::temp_directory_path() / "nuc_replay_test").string();
    ComparisonReport report = compare_methods(config);
    for (const std::string& path : report.counterexample_paths) {
        ReplayResult replay = replay_counterexample(read_file(path));
        CHECK(replay.identical);
    }
}

TEST_CASE("random imputations respect the simplex") {
    TUGame game = random_game(4, 5, GameDist::ZeroNormalized);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Payoff x = random_imputation(game, seed);
        CHECK(is_imputation(game, x));
    }
    CHECK(random_imputation(game, 9) == random_imputation(game, 9));
}

TEST_CASE("seed mixing is stable") {
    CHECK(mix_seed(1, 2) == mix_seed(1, 2));
    CHECK(mix_seed(1, 2) != mix_seed(1, 3));
    CHECK(mix_seed(1, 2) != mix_seed(2, 2));
}

TEST_CASE("span-vs-LP cost table is shaped and deterministic") {
    std::vector<TUGame> games;
    std::vector<Payoff> points;
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        TUGame game = random_game(3, seed, GameDist::UniformInt);
        points.push_back(prenucleolus(game).first);
        games.push_back(std::move(game));
    }
    BenchTable first = bench_span_vs_lp(games, points);
    CHECK(first.games == 3);
    CHECK_FALSE(first.levels.empty());
    CHECK(first.total_kohlberg_pivots > 0);

    BenchTable second = bench_span_vs_lp(games, points);
    REQUIRE(first.levels.size() == second.levels.size());
    for (std::size_t i = 0; i < first.levels.size(); ++i) {
        CHECK(first.levels[i].span_ops == second.levels[i].span_ops);
        CHECK(first.levels[i].modified_lp_pivots == second.levels[i].modified_lp_pivots);
        CHECK(first.levels[i].kohlberg_lp_pivots == second.levels[i].kohlberg_lp_pivots);
    }
    CHECK_THROWS_AS(bench_span_vs_lp({}, {}), std::invalid_argument);
}
