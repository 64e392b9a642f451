#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nuc/balance.hpp"
#include "nuc/game.hpp"

namespace nuc {

enum class Verdict { IsSolution, NotSolution };

/// One level of a verification run. `collection` is the set the level test
/// actually ran on (D_k, the pruned set, or the union with singletons).
struct TraceStep {
    int k = 0;
    Rational psi;
    CoalitionCollection collection;
    bool accepted = false;
    std::string verdict_label;
    std::vector<Rational> weights;      // aligned with collection when accepted
    std::vector<Rational> certificate;  // rejecting direction y when present
    int rank = 0;                       // rank of the collection's characteristic vectors
    std::int64_t lp_pivots = 0;
    std::int64_t span_ops = 0;
};

struct VerificationTrace {
    std::string method;  // "kohlberg", "nucleolus", "nguyen"
    std::string note;    // e.g. singleton rule in effect
    std::vector<TraceStep> steps;
    Verdict final = Verdict::NotSolution;
    std::optional<int> reject_level;
    std::vector<Rational> reject_certificate;
};

/// Maximum excess over nonempty coalitions outside `excluded`. Throws when
/// nothing remains.
Rational next_level(const TUGame& game, const Payoff& x, const CoalitionCollection& excluded);

/// Kohlberg's criterion: iterate level collections D_0 subset D_1 subset ...;
/// reject at the first one without strictly positive weights (with a Farkas
/// direction), accept once the rank reaches n with every tested collection
/// balanced. Requires a pre-imputation.
VerificationTrace verify_prenucleolus(const TUGame& game, const Payoff& x);

/// Which singletons join the level collections on the nucleolus side: all of
/// them, or only those with x_i = v({i}).
enum class SingletonRule { All, Tight };

/// Nucleolus variant: each level is tested for nonnegative weights over
/// C0 union D_k that are strictly positive on D_k. Requires an imputation.
VerificationTrace verify_nucleolus(const TUGame& game, const Payoff& x,
                                   SingletonRule rule = SingletonRule::Tight);

}  // namespace nuc
