#include "nuc/kohlberg.hpp"

#include <stdexcept>

#include "nuc/linalg.hpp"

namespace nuc {
namespace {

int collection_rank(const CoalitionCollection& c, std::int64_t* span_ops) {
    ElimStats stats;
    SpanBasis basis(c.ambient_players());
    for (Coalition s : c) basis.insert(indicator(s, c.ambient_players()), &stats);
    if (span_ops) *span_ops += stats.ops;
    return basis.rank();
}

const char* kind_label(BalanceKind kind) {
    switch (kind) {
        case BalanceKind::Balanced: return "Balanced";
        case BalanceKind::WeaklyBalancedOnly: return "WeaklyBalancedOnly";
        case BalanceKind::Unbalanced: return "Unbalanced";
    }
    return "?";
}

}  // namespace

Rational next_level(const TUGame& game, const Payoff& x, const CoalitionCollection& excluded) {
    std::optional<Rational> best;
    const std::uint32_t count = game.coalition_count();
    for (std::uint32_t m = 1; m <= count; ++m) {
        Coalition s(m);
        if (excluded.contains(s)) continue;
        Rational e = excess(game, s, x);
        if (!best || e > *best) best = std::move(e);
    }
    if (!best) throw std::invalid_argument("no coalition outside the excluded set");
    return *best;
}

VerificationTrace verify_prenucleolus(const TUGame& game, const Payoff& x) {
    if (!is_preimputation(game, x)) throw std::invalid_argument("x is not a pre-imputation");
    const int n = game.players();
    VerificationTrace trace;
    trace.method = "kohlberg";

    CoalitionCollection empty(n, {});
    Rational psi = next_level(game, x, empty);
    for (int k = 0;; ++k) {
        CoalitionCollection d = level_collection(game, x, psi);
        TraceStep step;
        step.k = k;
        step.psi = psi;
        step.collection = d;
        step.rank = collection_rank(d, &step.span_ops);

        BalanceVerdict verdict = check_balanced(d);
        step.lp_pivots = verdict.lp_pivots;
        step.verdict_label = kind_label(verdict.kind);
        step.accepted = verdict.kind == BalanceKind::Balanced;
        if (step.accepted) {
            step.weights = verdict.weights;
        } else {
            step.certificate = verdict.farkas_y;
        }
        const bool full_rank = step.rank == n;
        const bool accepted = step.accepted;
        trace.steps.push_back(std::move(step));
        if (!accepted) {
            trace.final = Verdict::NotSolution;
            trace.reject_level = k;
            trace.reject_certificate = trace.steps.back().certificate;
            return trace;
        }
        if (full_rank) {
            trace.final = Verdict::IsSolution;
            return trace;
        }
        psi = next_level(game, x, d);
    }
}

VerificationTrace verify_nucleolus(const TUGame& game, const Payoff& x, SingletonRule rule) {
    if (!is_imputation(game, x)) throw std::invalid_argument("x is not an imputation");
    const int n = game.players();
    VerificationTrace trace;
    trace.method = "nucleolus";
    trace.note = rule == SingletonRule::All ? "singleton-rule=all" : "singleton-rule=tight";

    std::vector<Coalition> singles;
    for (int i = 0; i < n; ++i) {
        Coalition s(1u << i);
        if (rule == SingletonRule::All || x[i] == game.worth(s)) singles.push_back(s);
    }
    CoalitionCollection c0(n, std::move(singles));

    CoalitionCollection empty(n, {});
    Rational psi = next_level(game, x, empty);
    for (int k = 0;; ++k) {
        CoalitionCollection d = level_collection(game, x, psi);
        TraceStep step;
        step.k = k;
        step.psi = psi;
        step.collection = d;
        step.rank = collection_rank(d, &step.span_ops);

        NucleolusPropertyResult result = nucleolus_property(d, d, c0, PropertyMode::II);
        step.lp_pivots = result.lp_pivots;
        step.accepted = result.holds;
        step.verdict_label = result.holds ? "PositiveOnLevel" : "NoPositiveWeights";
        if (result.holds) {
            // weights refer to C0 union D_k; keep them aligned with that union
            step.collection = result.tested;
            step.weights = result.certificate;
        } else {
            step.certificate = result.certificate;
        }
        const bool full_rank = step.rank == n;
        const bool accepted = step.accepted;
        trace.steps.push_back(std::move(step));
        if (!accepted) {
            trace.final = Verdict::NotSolution;
            trace.reject_level = k;
            trace.reject_certificate = trace.steps.back().certificate;
            return trace;
        }
        if (full_rank) {
            trace.final = Verdict::IsSolution;
            return trace;
        }
        psi = next_level(game, x, d);
    }
}

}  // namespace nuc
