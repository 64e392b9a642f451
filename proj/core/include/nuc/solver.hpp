#pragma once

#include <utility>
#include <vector>

#include "nuc/game.hpp"

namespace nuc {

/// One round of the iterated minimization: the minimized maximum excess, the
/// coalitions newly fixed at that value, and the affine dimension of the
/// remaining optimal face.
struct SolveRound {
    Rational level;
    CoalitionCollection fixed;
    std::vector<int> fixed_bounds;  // players whose lower bound became tight (nucleolus only)
    int remaining_dim = 0;
};

struct SolveTrace {
    std::vector<SolveRound> rounds;
    Payoff result;
};

/// The unique lexicographic minimizer of the sorted excess vector over
/// pre-imputations, by iterated exact LPs: each round minimizes the largest
/// unfixed excess, then fixes exactly the coalitions whose constraint is
/// tight in every optimal solution (per-coalition max-slack LPs).
std::pair<Payoff, SolveTrace> prenucleolus(const TUGame& game);

/// Same scheme over the imputation set (x_i >= v({i})). Throws
/// std::invalid_argument when the imputation set is empty.
std::pair<Payoff, SolveTrace> nucleolus(const TUGame& game);

/// Direction y with a certified step size: theta(x + delta_star * y) is
/// lexicographically below theta(x). Inputs: the rejected level collection
/// (= D(N,v;psi,x) at the rejection level) and a direction with y(S) >= 0 on
/// it, y(N) = 0, and y(S) > 0 somewhere on it.
struct ImprovingDirection {
    std::vector<Rational> y;
    Rational delta_star;
    CoalitionCollection target;
};

ImprovingDirection improving_direction(const TUGame& game, const Payoff& x,
                                       const CoalitionCollection& unbalanced,
                                       const std::vector<Rational>& farkas_y);

}  // namespace nuc
