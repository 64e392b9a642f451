#include "nuc/nguyen.hpp"

#include <stdexcept>

#include "nuc/balance.hpp"

namespace nuc {

CoalitionCollection t0_init(const TUGame& game, const Payoff& x) {
    if (x.size() != game.players()) throw std::invalid_argument("payoff length mismatch");
    std::vector<Coalition> tight;
    for (int i = 0; i < game.players(); ++i) {
        Coalition s(1u << i);
        if (x[i] == game.worth(s)) tight.push_back(s);
    }
    return CoalitionCollection(game.players(), std::move(tight));
}

CoalitionCollection next_T(const TUGame& game, const Payoff& x, const NguyenState& state,
                           std::int64_t* span_ops) {
    const int n = game.players();
    ElimStats stats;
    std::optional<Rational> best;
    std::vector<Coalition> argmax;
    const std::uint32_t count = game.coalition_count();
    for (std::uint32_t m = 1; m <= count; ++m) {
        Coalition s(m);
        if (state.h.contains(indicator(s, n), &stats)) continue;
        Rational e = excess(game, s, x);
        if (!best || e > *best) {
            best = std::move(e);
            argmax.assign(1, s);
        } else if (e == *best) {
            argmax.push_back(s);
        }
    }
    if (span_ops) *span_ops += stats.ops;
    if (!best) throw std::invalid_argument("span of H is already full");
    return CoalitionCollection(n, std::move(argmax));
}

static NucleolusPropertyResult t0_balance_test(const CoalitionCollection& q,
                                        const CoalitionCollection& t0, int n) {
    for (Coalition s : t0)
        if (s.size() != 1) throw std::invalid_argument("t0 must contain singletons only");
    std::vector<Coalition> members(t0.members());
    for (Coalition s : q)
        if (!t0.contains(s)) members.push_back(s);
    CoalitionCollection all(n, std::move(members));
    return positive_weight_system(all, q);
}

bool is_T0_balanced(const CoalitionCollection& q, const CoalitionCollection& t0, int n,
                    std::int64_t* lp_pivots) {
    NucleolusPropertyResult result = t0_balance_test(q, t0, n);
    if (lp_pivots) *lp_pivots += result.lp_pivots;
    return result.holds;
}

VerificationTrace verify_nucleolus_nguyen(const TUGame& game, const Payoff& x) {
    if (!is_imputation(game, x)) throw std::invalid_argument("x is not an imputation");
    const int n = game.players();
    VerificationTrace trace;
    trace.method = "nguyen";
    trace.note = "T0-balancedness: nonnegative weights over T0 and the accumulated T-sets, "
                 "strictly positive on the T-sets";

    NguyenState state(n);
    state.t0 = t0_init(game, x);
    state.h.insert(indicator(grand_coalition(n), n));
    state.h_members.push_back(grand_coalition(n));

    std::vector<Coalition> accumulated;  // union of T_1..T_k
    for (int k = 1; state.h.rank() < n; ++k) {
        TraceStep step;
        step.k = k;
        std::int64_t span_ops = 0;
        CoalitionCollection t_k = next_T(game, x, state, &span_ops);
        step.span_ops = span_ops;
        step.psi = excess(game, t_k.members().front(), x);
        step.collection = t_k;

        for (Coalition s : t_k) accumulated.push_back(s);
        CoalitionCollection test_set(n, accumulated);
        NucleolusPropertyResult result = t0_balance_test(test_set, state.t0, n);
        step.lp_pivots += result.lp_pivots;
        step.accepted = result.holds;
        step.verdict_label = step.accepted ? "T0Balanced" : "NotT0Balanced";
        if (!step.accepted) {
            step.certificate = result.certificate;
            const int level = k;
            trace.reject_certificate = result.certificate;
            trace.steps.push_back(std::move(step));
            trace.final = Verdict::NotSolution;
            trace.reject_level = level;
            return trace;
        }
        step.weights = result.certificate;
        step.collection = result.tested;
        state.t_levels.push_back(t_k);
        for (Coalition s : t_k) {
            state.h.insert(indicator(s, n));
            state.h_members.push_back(s);
        }
        step.rank = state.h.rank();
        trace.steps.push_back(std::move(step));
    }
    trace.final = Verdict::IsSolution;
    return trace;
}

}  // namespace nuc
