#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "nuc/lp.hpp"

using namespace nuc;

namespace {

// C(vars + rows, rows), saturating well above any observed pivot count
std::int64_t basis_bound(int vars, int rows) {
    std::int64_t result = 1;
    for (int i = 1; i <= rows; ++i) {
        result = result * (vars + rows - i + 1) / i;
        if (result > (std::int64_t(1) << 40)) return std::int64_t(1) << 40;
    }
    return result;
}

}  // namespace

TEST_CASE("symmetric max-t weight split") {
    // max t  s.t.  w1 + w2 = 1,  w1 >= t,  w2 >= t
    LPProblem p = LPProblem::make(5);  // w1 w2 t s1 s2
    for (int j : {0, 1, 3, 4}) p.lower[j] = Rational(0);
    p.objective[2] = 1;
    p.eq_rows.push_back({Rational(1), Rational(1), Rational(0), Rational(0), Rational(0)});
    p.eq_rhs.emplace_back(1);
    p.eq_rows.push_back({Rational(1), Rational(0), Rational(-1), Rational(-1), Rational(0)});
    p.eq_rhs.emplace_back(0);
    p.eq_rows.push_back({Rational(0), Rational(1), Rational(-1), Rational(0), Rational(-1)});
    p.eq_rhs.emplace_back(0);

    LPOutcome out = solve(p);
    REQUIRE(out.status == LPStatus::Optimal);
    CHECK(out.objective_value == Rational(1, 2));
    CHECK(out.primal[0] == Rational(1, 2));
    CHECK(out.primal[1] == Rational(1, 2));
    CHECK(lp_certificates_valid(p, out));
}

TEST_CASE("infeasible nonnegative sum carries a Farkas certificate") {
    LPProblem p = LPProblem::make(3);
    for (int j = 0; j < 3; ++j) p.lower[j] = Rational(0);
    p.eq_rows.push_back({Rational(1), Rational(1), Rational(1)});
    p.eq_rhs.emplace_back(-1);
    LPOutcome out = solve(p);
    REQUIRE(out.status == LPStatus::Infeasible);
    CHECK(lp_certificates_valid(p, out));
}

TEST_CASE("unbounded maximization returns a ray") {
    LPProblem p = LPProblem::make(1);
    p.lower[0] = Rational(0);
    p.objective[0] = 1;
    LPOutcome out = solve(p);
    REQUIRE(out.status == LPStatus::Unbounded);
    CHECK(lp_certificates_valid(p, out));
}

TEST_CASE("free variables and upper bounds round-trip through certificates") {
    // max x - y  s.t.  x + y = 2,  x <= 3, y free
    LPProblem p = LPProblem::make(2);
    p.objective = {Rational(1), Rational(-1)};
    p.upper[0] = Rational(3);
    p.eq_rows.push_back({Rational(1), Rational(1)});
    p.eq_rhs.emplace_back(2);
    LPOutcome out = solve(p);
    REQUIRE(out.status == LPStatus::Optimal);
    CHECK(out.primal[0] == Rational(3));
    CHECK(out.primal[1] == Rational(-1));
    CHECK(out.objective_value == Rational(4));
    CHECK(lp_certificates_valid(p, out));
}

TEST_CASE("random LPs always verify and respect the pivot bound") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const int vars = 2 + static_cast<int>(rng() % 4);
        const int rows = 1 + static_cast<int>(rng() % 3);
        LPProblem p = LPProblem::make(vars);
        for (int j = 0; j < vars; ++j) {
            const int kind = static_cast<int>(rng() % 3);
            if (kind == 0) {
                p.lower[j] = Rational(0);
            } else if (kind == 1) {
                p.lower[j] = Rational(-(int)(rng() % 3));
                p.upper[j] = Rational((int)(rng() % 3) + 1);
            }
            p.objective[j] = Rational((int)(rng() % 7)) - 3;
        }
        for (int r = 0; r < rows; ++r) {
            std::vector<Rational> row(vars);
            for (int j = 0; j < vars; ++j) row[j] = Rational((int)(rng() % 5)) - 2;
            p.eq_rows.push_back(std::move(row));
            p.eq_rhs.push_back(Rational((int)(rng() % 9)) - 4);
        }
        LPOutcome out = solve(p);
        CHECK(lp_certificates_valid(p, out));
        // standardized form splits frees and adds slack rows; 3x head-room
        CHECK(out.pivots <= basis_bound(3 * vars + 2 * rows, 2 * rows));
    }
}
