#include "nuc/solver.hpp"

#include <stdexcept>

#include "nuc/kohlberg.hpp"
#include "nuc/linalg.hpp"
#include "nuc/lp.hpp"

namespace nuc {
namespace {

struct FixedRow {
    std::vector<Rational> lhs;  // coefficients over x
    Rational rhs;
};

// Round LP: minimize t subject to the efficiency row, previously fixed
// equalities, and v(S) - x(S) <= t for every unfixed proper coalition.
// Optionally fixes t to pin the optimal face for the max-slack probes.
struct RoundProblem {
    LPProblem lp;
    int t_var;
    std::vector<std::uint32_t> unfixed;  // proper coalitions, ascending mask
    int slack_base;
};

RoundProblem build_round(const TUGame& game, const std::vector<FixedRow>& fixed,
                         const std::vector<bool>& is_fixed_coalition, bool imputation_bounds) {
    const int n = game.players();
    RoundProblem rp;
    const std::uint32_t full = game.coalition_count();
    for (std::uint32_t m = 1; m < full; ++m)
        if (!is_fixed_coalition[m]) rp.unfixed.push_back(m);

    const int u = static_cast<int>(rp.unfixed.size());
    rp.t_var = n;
    rp.slack_base = n + 1;
    rp.lp = LPProblem::make(n + 1 + u);
    rp.lp.objective[rp.t_var] = -1;  // maximize -t == minimize t
    if (imputation_bounds)
        for (int i = 0; i < n; ++i) rp.lp.lower[i] = game.worth(Coalition(1u << i));
    for (int j = 0; j < u; ++j) rp.lp.lower[rp.slack_base + j] = Rational(0);

    {
        std::vector<Rational> row(rp.lp.num_vars, Rational(0));
        for (int i = 0; i < n; ++i) row[i] = 1;
        rp.lp.eq_rows.push_back(std::move(row));
        rp.lp.eq_rhs.push_back(game.worth(grand_coalition(n)));
    }
    for (const auto& fr : fixed) {
        std::vector<Rational> row(rp.lp.num_vars, Rational(0));
        for (int i = 0; i < n; ++i) row[i] = fr.lhs[i];
        rp.lp.eq_rows.push_back(std::move(row));
        rp.lp.eq_rhs.push_back(fr.rhs);
    }
    for (int j = 0; j < u; ++j) {
        Coalition s(rp.unfixed[j]);
        std::vector<Rational> row(rp.lp.num_vars, Rational(0));
        for (int i = 0; i < n; ++i)
            if (s.contains(i)) row[i] = -1;
        row[rp.t_var] = -1;
        row[rp.slack_base + j] = 1;
        rp.lp.eq_rows.push_back(std::move(row));
        rp.lp.eq_rhs.push_back(-game.worth(s));
    }
    return rp;
}

void pin_t(RoundProblem& rp, const Rational& t_value) {
    std::vector<Rational> row(rp.lp.num_vars, Rational(0));
    row[rp.t_var] = 1;
    rp.lp.eq_rows.push_back(std::move(row));
    rp.lp.eq_rhs.push_back(t_value);
}

std::pair<Payoff, SolveTrace> iterate(const TUGame& game, bool imputation_bounds) {
    const int n = game.players();
    SolveTrace trace;
    if (n == 1) {
        Payoff x({game.worth(grand_coalition(1))});
        trace.rounds.push_back(
            {Rational(0), CoalitionCollection(1, {grand_coalition(1)}), {}, 0});
        trace.result = x;
        return {x, trace};
    }

    std::vector<FixedRow> fixed;
    std::vector<bool> is_fixed_coalition(std::size_t(1) << n, false);
    std::vector<bool> is_fixed_bound(n, false);
    std::optional<Rational> prev_level;

    for (;;) {
        RoundProblem rp = build_round(game, fixed, is_fixed_coalition, imputation_bounds);
        LPOutcome out = solve(rp.lp);
        if (out.status != LPStatus::Optimal)
            throw std::logic_error("round LP must be optimal on a nonempty feasible set");
        const Rational level = out.primal[rp.t_var];
        if (prev_level && level >= *prev_level)
            throw std::logic_error("minimized max excess failed to decrease");
        prev_level = level;

        std::vector<Coalition> newly_fixed;
        std::vector<int> newly_fixed_bounds;
        // only constraints tight at this optimum can be tight at every optimum
        for (std::size_t j = 0; j < rp.unfixed.size(); ++j) {
            if (out.primal[rp.slack_base + static_cast<int>(j)] != 0) continue;
            RoundProblem probe = build_round(game, fixed, is_fixed_coalition, imputation_bounds);
            pin_t(probe, level);
            probe.lp.objective.assign(probe.lp.num_vars, Rational(0));
            probe.lp.objective[probe.slack_base + static_cast<int>(j)] = 1;
            probe.lp.upper[probe.slack_base + static_cast<int>(j)] = Rational(1);  // cap; 0-test only
            LPOutcome slack = solve(probe.lp);
            if (slack.status != LPStatus::Optimal) throw std::logic_error("slack probe not optimal");
            if (slack.objective_value == 0) newly_fixed.push_back(Coalition(rp.unfixed[j]));
        }
        if (imputation_bounds) {
            for (int i = 0; i < n; ++i) {
                if (is_fixed_bound[i]) continue;
                const Rational vi = game.worth(Coalition(1u << i));
                if (out.primal[i] != vi) continue;
                RoundProblem probe = build_round(game, fixed, is_fixed_coalition, imputation_bounds);
                pin_t(probe, level);
                probe.lp.objective.assign(probe.lp.num_vars, Rational(0));
                probe.lp.objective[i] = 1;
                probe.lp.upper[i] = vi + 1;
                LPOutcome bound = solve(probe.lp);
                if (bound.status != LPStatus::Optimal)
                    throw std::logic_error("bound probe not optimal");
                if (bound.objective_value == vi) newly_fixed_bounds.push_back(i);
            }
        }
        if (newly_fixed.empty() && newly_fixed_bounds.empty())
            throw std::logic_error("no constraint became permanently tight");

        for (Coalition s : newly_fixed) {
            is_fixed_coalition[s.mask] = true;
            FixedRow fr;
            fr.lhs.assign(n, Rational(0));
            for (int i = 0; i < n; ++i)
                if (s.contains(i)) fr.lhs[i] = 1;
            fr.rhs = game.worth(s) - level;  // x(S) = v(S) - e(S)
            fixed.push_back(std::move(fr));
        }
        for (int i : newly_fixed_bounds) {
            is_fixed_bound[i] = true;
            FixedRow fr;
            fr.lhs.assign(n, Rational(0));
            fr.lhs[i] = 1;
            fr.rhs = game.worth(Coalition(1u << i));
            fixed.push_back(std::move(fr));
        }

        SpanBasis basis(n);
        std::vector<Rational> eff(n, Rational(1));
        basis.insert(eff);
        for (const auto& fr : fixed) basis.insert(fr.lhs);
        SolveRound round;
        round.level = level;
        round.fixed = CoalitionCollection(n, newly_fixed);
        round.fixed_bounds = newly_fixed_bounds;
        round.remaining_dim = n - basis.rank();
        trace.rounds.push_back(std::move(round));

        if (basis.rank() == n) {
            std::vector<std::vector<Rational>> rows;
            std::vector<Rational> rhs;
            rows.push_back(eff);
            rhs.push_back(game.worth(grand_coalition(n)));
            for (const auto& fr : fixed) {
                rows.push_back(fr.lhs);
                rhs.push_back(fr.rhs);
            }
            auto solution = solve_unique(rows, rhs);
            if (!solution) throw std::logic_error("pinned system failed to solve");
            Payoff x(*solution);
            trace.result = x;
            return {x, trace};
        }
    }
}

}  // namespace

std::pair<Payoff, SolveTrace> prenucleolus(const TUGame& game) { return iterate(game, false); }

std::pair<Payoff, SolveTrace> nucleolus(const TUGame& game) {
    Rational singles(0);
    for (int i = 0; i < game.players(); ++i) singles += game.worth(Coalition(1u << i));
    if (singles > game.worth(grand_coalition(game.players())))
        throw std::invalid_argument("imputation set is empty");
    return iterate(game, true);
}

ImprovingDirection improving_direction(const TUGame& game, const Payoff& x,
                                       const CoalitionCollection& unbalanced,
                                       const std::vector<Rational>& farkas_y) {
    const int n = game.players();
    if (static_cast<int>(farkas_y.size()) != n) throw std::invalid_argument("direction length mismatch");
    if (unbalanced.empty()) throw std::invalid_argument("empty rejection collection");

    auto y_of = [&](Coalition s) {
        Rational total(0);
        for (int i = 0; i < n; ++i)
            if (s.contains(i)) total += farkas_y[i];
        return total;
    };
    if (y_of(grand_coalition(n)) != 0) throw std::invalid_argument("y(N) must be 0");
    bool strict = false;
    for (Coalition s : unbalanced) {
        Rational ys = y_of(s);
        if (ys < 0) throw std::invalid_argument("y(S) < 0 on the rejected collection");
        if (ys > 0) strict = true;
    }
    if (!strict) throw std::invalid_argument("y vanishes on the rejected collection");

    // level of the rejection: members have excess >= psi, psi attained
    Rational psi = excess(game, unbalanced.members().front(), x);
    for (Coalition s : unbalanced) {
        Rational e = excess(game, s, x);
        if (e < psi) psi = std::move(e);
    }
    if (!(level_collection(game, x, psi) == unbalanced))
        throw std::invalid_argument("collection is not the level set at its own minimum excess");

    const Rational gap = psi - next_level(game, x, unbalanced);
    if (gap <= 0) throw std::logic_error("level gap must be positive at an attained level");
    Rational reach(1);
    const std::uint32_t count = game.coalition_count();
    for (std::uint32_t m = 1; m <= count; ++m) {
        Rational mag = abs(y_of(Coalition(m)));
        if (mag > reach) reach = std::move(mag);
    }
    const Rational delta = gap / (2 * reach);

    Payoff moved = x;
    for (int i = 0; i < n; ++i) moved[i] += delta * farkas_y[i];
    if (lex_compare(theta(game, moved), theta(game, x)) != Ordering::Less)
        throw std::logic_error("constructed direction failed to lex-improve");
    return ImprovingDirection{farkas_y, delta, unbalanced};
}

}  // namespace nuc
