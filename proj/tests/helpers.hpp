#pragma once

#include <random>
#include <vector>

#include "nuc/game.hpp"

namespace testutil {

inline nuc::Rational R(const char* s) { return nuc::parse_rational(s); }

// n=3, v(S) = 1 for |S| >= 2, 0 otherwise
inline nuc::TUGame g3sym() {
    nuc::TUGame game(3);
    for (std::uint32_t m = 1; m <= 7; ++m)
        if (nuc::Coalition(m).size() >= 2) game.set_worth(nuc::Coalition(m), nuc::Rational(1));
    return game;
}

inline nuc::Payoff pay(std::vector<nuc::Rational> v) { return nuc::Payoff(std::move(v)); }

inline nuc::Payoff pay3(const char* a, const char* b, const char* c) {
    return pay({R(a), R(b), R(c)});
}

// Nonempty random collection of nonempty coalitions.
inline nuc::CoalitionCollection random_collection(int n, std::mt19937_64& rng) {
    const std::uint32_t count = (1u << n) - 1u;
    std::vector<nuc::Coalition> members;
    while (members.empty()) {
        members.clear();
        for (std::uint32_t m = 1; m <= count; ++m)
            if (rng() % 4 == 0) members.push_back(nuc::Coalition(m));
    }
    return nuc::CoalitionCollection(n, std::move(members));
}

// Exhaustive lexicographic minimization over a grid slice of the efficient
// plane: coordinates x_1..x_{n-1} range over [lo, hi] in steps of 1/24, the
// last coordinate absorbs efficiency. Test-only, non-authoritative.
inline nuc::Payoff grid_minimum(const nuc::TUGame& game, long lo24, long hi24) {
    const int n = game.players();
    const nuc::Rational vn = game.worth(nuc::grand_coalition(n));
    std::vector<long> idx(n - 1, lo24);
    std::vector<nuc::Rational> values(n);
    nuc::Payoff best;
    bool have = false;
    nuc::ThetaVector best_theta;
    for (;;) {
        nuc::Rational rest = vn;
        for (int i = 0; i < n - 1; ++i) {
            values[i] = nuc::Rational(idx[i]) / 24;
            rest -= values[i];
        }
        values[n - 1] = rest;
        nuc::Payoff x(values);
        nuc::ThetaVector t = nuc::theta(game, x);
        if (!have || nuc::lex_compare(t, best_theta) == nuc::Ordering::Less) {
            best = x;
            best_theta = std::move(t);
            have = true;
        }
        int pos = 0;
        while (pos < n - 1 && ++idx[pos] > hi24) idx[pos++] = lo24;
        if (pos == n - 1) break;
    }
    return best;
}

}  // namespace testutil
