#pragma once

#include <cstdint>
#include <vector>

#include "nuc/game.hpp"
#include "nuc/kohlberg.hpp"
#include "nuc/linalg.hpp"

namespace nuc {

/// State of the simplified nucleolus check (Nguyen's published Algorithm 2),
/// replicated as stated so its verdicts can be searched for contradictions
/// against the Kohlberg verifier. Span membership is read through
/// characteristic vectors; the empty-set element of the initial H is ignored.
struct NguyenState {
    int n = 0;
    SpanBasis h;                            // spans the characteristic vectors seen so far
    std::vector<Coalition> h_members;       // starts with N
    CoalitionCollection t0;                 // tight singletons
    std::vector<CoalitionCollection> t_levels;

    explicit NguyenState(int players)
        : n(players), h(players), t0(players, {}) {}
};

/// Singletons with x_i = v({i}), exact comparison.
CoalitionCollection t0_init(const TUGame& game, const Payoff& x);

/// All coalitions attaining the maximum excess among those whose
/// characteristic vector lies outside span(H). Throws when the span is
/// already full.
CoalitionCollection next_T(const TUGame& game, const Payoff& x, const NguyenState& state,
                           std::int64_t* span_ops = nullptr);

/// T0-balancedness as reconstructed for the replica: nonnegative weights
/// over t0 union q summing to 1_N with strictly positive weight on every
/// member of q.
bool is_T0_balanced(const CoalitionCollection& q, const CoalitionCollection& t0, int n,
                    std::int64_t* lp_pivots = nullptr);

/// Runs the published procedure verbatim: grow H by the argmax coalitions
/// level by level, rejecting when the accumulated T-sets fail the
/// T0-balancedness test. Requires an imputation.
VerificationTrace verify_nucleolus_nguyen(const TUGame& game, const Payoff& x);

}  // namespace nuc
