#include <benchmark/benchmark.h>

#include <vector>

#include "nuc/balance.hpp"
#include "nuc/kohlberg.hpp"
#include "nuc/random.hpp"
#include "nuc/solver.hpp"
#include "nuc/span_pruned.hpp"

namespace {

using namespace nuc;

std::vector<TUGame> game_batch(int n, int count) {
    std::vector<TUGame> games;
    games.reserve(count);
    for (int i = 0; i < count; ++i)
        games.push_back(random_game(n, mix_seed(31337, i), GameDist::UniformInt));
    return games;
}

std::vector<Payoff> oracle_points(const std::vector<TUGame>& games) {
    std::vector<Payoff> points;
    points.reserve(games.size());
    for (const TUGame& game : games) points.push_back(prenucleolus(game).first);
    return points;
}

void bm_theta(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    TUGame game = random_game(n, 1, GameDist::UniformInt);
    Payoff x = prenucleolus(game).first;
    for (auto _ : state) benchmark::DoNotOptimize(theta(game, x));
}
BENCHMARK(bm_theta)->Arg(4)->Arg(6)->Arg(8);

void bm_check_balanced(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    TUGame game = random_game(n, 2, GameDist::UniformInt);
    Payoff x = prenucleolus(game).first;
    CoalitionCollection d =
        level_collection(game, x, next_level(game, x, CoalitionCollection(n, {})));
    for (auto _ : state) benchmark::DoNotOptimize(check_balanced(d));
}
BENCHMARK(bm_check_balanced)->Arg(4)->Arg(6)->Arg(8);

void bm_prenucleolus(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    TUGame game = random_game(n, 3, GameDist::UniformInt);
    for (auto _ : state) benchmark::DoNotOptimize(prenucleolus(game));
}
BENCHMARK(bm_prenucleolus)->Arg(3)->Arg(4)->Arg(5)->Arg(6);

void bm_verify_kohlberg(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto games = game_batch(n, 8);
    auto points = oracle_points(games);
    for (auto _ : state)
        for (std::size_t i = 0; i < games.size(); ++i)
            benchmark::DoNotOptimize(verify_prenucleolus(games[i], points[i]));
}
BENCHMARK(bm_verify_kohlberg)->Arg(4)->Arg(5)->Arg(6);

void bm_verify_span_pruned(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto games = game_batch(n, 8);
    auto points = oracle_points(games);
    for (auto _ : state)
        for (std::size_t i = 0; i < games.size(); ++i)
            benchmark::DoNotOptimize(verify_prenucleolus_modified(games[i], points[i]));
}
BENCHMARK(bm_verify_span_pruned)->Arg(4)->Arg(5)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
