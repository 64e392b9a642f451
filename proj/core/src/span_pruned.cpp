#include "nuc/span_pruned.hpp"

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

ContainmentCase classify(const CoalitionCollection& full_level,
                         const CoalitionCollection& pruned) {
    if (full_level.subset_of(pruned)) return ContainmentCase::I;
    if (pruned.subset_of(full_level)) return ContainmentCase::III;
    return ContainmentCase::II;
}

}  // namespace

Rational epsilon_tilde(const TUGame& game, const Payoff& x, const Rational& psi) {
    CoalitionCollection level = level_collection(game, x, psi);
    if (static_cast<std::uint32_t>(level.size()) == game.coalition_count())
        throw std::invalid_argument("no excess level below psi");
    return psi - next_level(game, x, level);
}

CoalitionCollection d_tilde(const TUGame& game, const Payoff& x, const Rational& psi,
                            const Rational& eps, const CoalitionCollection& d_hat,
                            std::int64_t* span_ops) {
    const int n = game.players();
    if (!d_hat.subset_of(level_collection(game, x, psi)))
        throw std::invalid_argument("d_hat must be a subset of the psi level set");
    ElimStats stats;
    SpanBasis basis(n);
    for (Coalition s : d_hat) basis.insert(indicator(s, n), &stats);
    std::vector<Coalition> fresh;
    for (Coalition s : level_collection(game, x, psi - eps)) {
        if (d_hat.contains(s)) continue;
        if (!basis.contains(indicator(s, n), &stats)) fresh.push_back(s);
    }
    if (span_ops) *span_ops += stats.ops;
    return CoalitionCollection(n, std::move(fresh));
}

CoalitionCollection d_hat_next(const CoalitionCollection& d_hat,
                               const CoalitionCollection& d_tilde) {
    std::vector<Coalition> members(d_hat.members());
    for (Coalition s : d_tilde) {
        if (d_hat.contains(s)) throw std::invalid_argument("d_hat and d_tilde overlap");
        members.push_back(s);
    }
    return CoalitionCollection(d_hat.ambient_players(), std::move(members));
}

SpanPrunedTrace verify_prenucleolus_modified(const TUGame& game, const Payoff& x) {
    if (!is_preimputation(game, x)) throw std::invalid_argument("x is not a pre-imputation");
    const int n = game.players();
    SpanPrunedTrace trace;

    CoalitionCollection empty(n, {});
    Rational psi = next_level(game, x, empty);
    CoalitionCollection full = level_collection(game, x, psi);
    CoalitionCollection pruned = full;  // D-hat starts as the top level set
    CoalitionCollection dropped(n, {});
    std::optional<Rational> eps;
    std::int64_t carried_span_ops = 0;
    if (static_cast<std::uint32_t>(full.size()) < game.coalition_count())
        eps = epsilon_tilde(game, x, psi);

    for (int k = 0;; ++k) {
        SpanPrunedStep step;
        step.k = k;
        step.psi = psi;
        step.eps = eps;
        step.pruned = pruned;
        step.dropped = dropped;
        step.span_ops = carried_span_ops;
        carried_span_ops = 0;
        step.rank_pruned = collection_rank(pruned, &step.span_ops);
        step.rank_full = collection_rank(full, nullptr);
        if (k > 0) step.containment = classify(full, pruned);

        BalanceVerdict verdict = check_balanced(pruned);
        step.lp_pivots = verdict.lp_pivots;
        step.accepted = verdict.kind == BalanceKind::Balanced;
        switch (verdict.kind) {
            case BalanceKind::Balanced: step.verdict_label = "Balanced"; break;
            case BalanceKind::WeaklyBalancedOnly: step.verdict_label = "WeaklyBalancedOnly"; break;
            case BalanceKind::Unbalanced: step.verdict_label = "Unbalanced"; break;
        }
        if (step.accepted) {
            step.weights = verdict.weights;
        } else {
            step.certificate = verdict.farkas_y;
        }
        const bool accepted = step.accepted;
        const bool full_rank = step.rank_pruned == n;
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

        // next level maximizes over coalitions outside the full previous
        // level set, not outside the pruned set
        psi = next_level(game, x, full);
        Rational gap(0);  // at the bottom level no gap exists; D(psi - 0) = D(psi)
        if (static_cast<std::uint32_t>(level_collection(game, x, psi).size()) <
            game.coalition_count()) {
            eps = epsilon_tilde(game, x, psi);
            gap = *eps;
        } else {
            eps.reset();
        }
        CoalitionCollection fresh = d_tilde(game, x, psi, gap, pruned, &carried_span_ops);
        CoalitionCollection new_level = level_collection(game, x, psi - gap);
        std::vector<Coalition> discarded;
        for (Coalition s : new_level)
            if (!pruned.contains(s) && !fresh.contains(s)) discarded.push_back(s);
        dropped = CoalitionCollection(n, std::move(discarded));
        pruned = d_hat_next(pruned, fresh);
        full = level_collection(game, x, psi);
    }
}

}  // namespace nuc
