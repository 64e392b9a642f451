#include <doctest.h>

#include "helpers.hpp"
#include "nuc/random.hpp"
#include "nuc/solver.hpp"
#include "nuc/span_pruned.hpp"

using namespace nuc;
using testutil::R;
using testutil::g3sym;
using testutil::pay3;

TEST_CASE("epsilon_tilde is the gap to the next excess value") {
    TUGame game = g3sym();
    Payoff eq = pay3("1/3", "1/3", "1/3");
    CHECK(epsilon_tilde(game, eq, R("1/3")) == R("1/3"));
    CHECK(epsilon_tilde(game, eq, R("0")) == R("1/3"));
    CHECK(epsilon_tilde(game, pay3("1", "0", "0"), R("1")) == 1);
    CHECK_THROWS_AS(epsilon_tilde(game, eq, R("-1/3")), std::invalid_argument);
}

TEST_CASE("d_tilde keeps only span-independent newcomers") {
    TUGame game = g3sym();
    Payoff eq = pay3("1/3", "1/3", "1/3");
    CoalitionCollection pairs(3, {Coalition(0b011), Coalition(0b101), Coalition(0b110)});
    CHECK(d_tilde(game, eq, R("1/3"), R("1/3"), pairs).empty());

    CoalitionCollection none(3, {});
    CHECK(d_tilde(game, eq, R("1/3"), R("1/3"), none) ==
          level_collection(game, eq, R("0")));

    // x = (1,0,0), psi = 1, d_hat = {{2,3}}: the excess-0 coalitions are
    // {2},{3},{1,2},{1,3},N ({1} sits at -1) and none lie in span(011)
    Payoff skew = pay3("1", "0", "0");
    CoalitionCollection d_hat(3, {Coalition(0b110)});
    CHECK(d_tilde(game, skew, R("1"), R("1"), d_hat) ==
          CoalitionCollection(3, {Coalition(0b010), Coalition(0b011), Coalition(0b100),
                                  Coalition(0b101), Coalition(0b111)}));

    CHECK_THROWS_AS(d_tilde(game, eq, R("1/3"), R("1/3"), CoalitionCollection(3, {Coalition(1)})),
                    std::invalid_argument);
}

TEST_CASE("d_hat_next unions disjoint collections") {
    CoalitionCollection d0(3, {Coalition(0b011), Coalition(0b101), Coalition(0b110)});
    CHECK(d_hat_next(CoalitionCollection(3, {}), d0) == d0);
    CHECK(d_hat_next(d0, CoalitionCollection(3, {})) == d0);

    CoalitionCollection base(3, {Coalition(0b110)});
    CoalitionCollection fresh(3, {Coalition(0b010), Coalition(0b011), Coalition(0b100),
                                  Coalition(0b101), Coalition(0b111)});
    CHECK(d_hat_next(base, fresh).size() == 6);
    CHECK_THROWS_AS(d_hat_next(base, base), std::invalid_argument);
}

TEST_CASE("pruned verifier golden traces") {
    TUGame game = g3sym();
    SpanPrunedTrace accept = verify_prenucleolus_modified(game, pay3("1/3", "1/3", "1/3"));
    CHECK(accept.final == Verdict::IsSolution);
    REQUIRE(accept.steps.size() == 1);
    CHECK(accept.steps[0].psi == R("1/3"));
    CHECK(accept.steps[0].pruned ==
          CoalitionCollection(3, {Coalition(0b011), Coalition(0b101), Coalition(0b110)}));
    CHECK(accept.steps[0].rank_pruned == 3);

    SpanPrunedTrace reject = verify_prenucleolus_modified(game, pay3("1", "0", "0"));
    CHECK(reject.final == Verdict::NotSolution);
    CHECK(reject.reject_level == 0);
    CHECK(reject.steps[0].pruned == CoalitionCollection(3, {Coalition(0b110)}));
    CHECK(reject.steps[0].certificate ==
          std::vector<Rational>{R("-2/3"), R("1/3"), R("1/3")});

    TUGame solo(1);
    solo.set_worth(grand_coalition(1), Rational(2));
    CHECK(verify_prenucleolus_modified(solo, Payoff({Rational(2)})).final ==
          Verdict::IsSolution);
}

TEST_CASE("pruned verifier handles a bottom level with no gap below") {
    // top level has rank 2, so the recursion must descend to the deepest
    // level, where every coalition is already in D(psi) and eps is undefined
    TUGame game(3);
    game.set_worth(Coalition(0b011), Rational(4));
    game.set_worth(grand_coalition(3), Rational(4));
    SpanPrunedTrace trace = verify_prenucleolus_modified(game, pay3("2", "2", "0"));
    CHECK(trace.final == Verdict::IsSolution);
    REQUIRE(trace.steps.size() == 2);
    CHECK(trace.steps[0].rank_pruned == 2);
    CHECK_FALSE(trace.steps[1].eps.has_value());
    CHECK(trace.steps[1].rank_pruned == 3);
}

TEST_CASE("structural invariants across random accept traces") {
    for (std::uint64_t seed : {21u, 22u, 23u, 24u, 25u}) {
        TUGame game = random_game(4, seed, GameDist::UniformInt);
        Payoff x = prenucleolus(game).first;
        SpanPrunedTrace trace = verify_prenucleolus_modified(game, x);
        CHECK(trace.final == Verdict::IsSolution);
        for (const SpanPrunedStep& step : trace.steps) {
            if (step.eps) {
                CHECK(*step.eps > 0);
                CHECK(step.pruned.subset_of(
                    level_collection(game, x, step.psi - *step.eps)));
            }
        }
        for (std::size_t i = 0; i + 1 < trace.steps.size(); ++i) {
            CHECK(trace.steps[i].psi > trace.steps[i + 1].psi);
            CHECK(trace.steps[i].pruned.subset_of(trace.steps[i + 1].pruned));
        }
    }
}
