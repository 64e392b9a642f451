#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nuc/rational.hpp"

namespace nuc {

/// Exact-rational LP: maximize objective . w subject to eq_rows . w = eq_rhs
/// and per-variable bounds (nullopt = unbounded on that side).
struct LPProblem {
    int num_vars = 0;
    std::vector<Rational> objective;
    std::vector<std::vector<Rational>> eq_rows;
    std::vector<Rational> eq_rhs;
    std::vector<std::optional<Rational>> lower;
    std::vector<std::optional<Rational>> upper;

    static LPProblem make(int vars);
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

/// Certificate conventions:
///  - Optimal: primal is feasible; dual (one entry per equality row) and
///    dual_upper (one entry per finite upper bound, >= 0) satisfy exact
///    complementary slackness, hence zero duality gap.
///  - Infeasible: farkas y over equality rows (plus farkas_upper over upper
///    bound rows) satisfies y.A <= 0 componentwise on bounded-below
///    variables, y.A = 0 on free variables, and y.(b - A.l) > 0.
///  - Unbounded: ray is a feasible improving direction (A.ray = 0, respects
///    bound signs, objective.ray > 0); primal holds a feasible point.
struct LPOutcome {
    LPStatus status = LPStatus::Infeasible;
    std::vector<Rational> primal;
    Rational objective_value = 0;
    std::vector<Rational> dual;
    std::vector<Rational> dual_upper;
    std::vector<Rational> farkas;
    std::vector<Rational> farkas_upper;
    std::vector<Rational> ray;
    std::int64_t pivots = 0;
};

/// Phase-1/phase-2 simplex with Bland's pivoting rule; terminates on every
/// input. Throws std::invalid_argument on malformed dimensions.
LPOutcome solve(const LPProblem& problem);

/// Re-verifies the outcome's certificates by direct substitution in exact
/// arithmetic, independent of the pivoting path.
bool lp_certificates_valid(const LPProblem& problem, const LPOutcome& outcome);

}  // namespace nuc
