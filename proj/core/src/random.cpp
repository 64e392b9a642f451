#include "nuc/random.hpp"

#include <random>
#include <stdexcept>

namespace nuc {
namespace {

std::int64_t draw_in(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    const std::uint64_t width = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(rng() % width);
}

}  // namespace

GameDist parse_dist(const std::string& name) {
    if (name == "uniform_int") return GameDist::UniformInt;
    if (name == "zero_normalized") return GameDist::ZeroNormalized;
    throw std::invalid_argument("unknown distribution: " + name);
}

std::string dist_name(GameDist dist) {
    return dist == GameDist::UniformInt ? "uniform_int" : "zero_normalized";
}

TUGame random_game(int n, std::uint64_t seed, GameDist dist, std::int64_t lo, std::int64_t hi) {
    if (n < 1 || n > kMaxPlayers) throw std::invalid_argument("player count out of range");
    if (lo > hi) throw std::invalid_argument("empty worth range");
    std::mt19937_64 rng(seed);
    TUGame game(n);
    const std::uint32_t full = game.coalition_count();
    for (std::uint32_t m = 1; m < full; ++m)
        game.set_worth(Coalition(m), Rational(draw_in(rng, lo, hi)));
    game.set_worth(grand_coalition(n), Rational(draw_in(rng, std::max<std::int64_t>(lo, 0), hi)));

    if (dist == GameDist::ZeroNormalized) {
        for (int i = 0; i < n; ++i) game.set_worth(Coalition(1u << i), Rational(0));
        if (game.worth(grand_coalition(n)) < 1)
            game.set_worth(grand_coalition(n), Rational(1));
    }
    return game;
}

Payoff random_imputation(const TUGame& game, std::uint64_t seed, std::int64_t grid) {
    const int n = game.players();
    Rational surplus = game.worth(grand_coalition(n));
    for (int i = 0; i < n; ++i) surplus -= game.worth(Coalition(1u << i));
    if (surplus < 0) throw std::invalid_argument("imputation set is empty");

    std::mt19937_64 rng(seed);
    std::vector<std::int64_t> shares(n, 0);
    for (std::int64_t unit = 0; unit < grid; ++unit)
        ++shares[static_cast<int>(rng() % static_cast<std::uint64_t>(n))];

    std::vector<Rational> values(n);
    for (int i = 0; i < n; ++i)
        values[i] = game.worth(Coalition(1u << i)) + surplus * Rational(shares[i]) / grid;
    return Payoff(std::move(values));
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace nuc
