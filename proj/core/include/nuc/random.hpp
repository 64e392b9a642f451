#pragma once

#include <cstdint>
#include <string>

#include "nuc/game.hpp"

namespace nuc {

/// Integer-worth game families. `uniform_int` draws every nonempty proper
/// coalition's worth from [lo, hi] and the grand coalition's from
/// [max(lo,0), hi]. `zero_normalized` does the same, then forces singleton
/// worths to 0 and the grand coalition's to max(1, drawn value).
enum class GameDist { UniformInt, ZeroNormalized };

GameDist parse_dist(const std::string& name);
std::string dist_name(GameDist dist);

/// Deterministic across platforms: mt19937_64 seeded directly, draws reduced
/// by modulo (no std::uniform_int_distribution).
TUGame random_game(int n, std::uint64_t seed, GameDist dist, std::int64_t lo = -10,
                   std::int64_t hi = 10);

/// Random point on the imputation simplex with denominator `grid`: a
/// composition of `grid` units over n coordinates added to the vector of
/// singleton worths, scaled by the imputation surplus. Requires a nonempty
/// imputation set.
Payoff random_imputation(const TUGame& game, std::uint64_t seed, std::int64_t grid = 720);

/// splitmix64 step, used to derive independent per-item seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace nuc
