#include <doctest.h>

#include "helpers.hpp"
#include "nuc/io.hpp"
#include "nuc/random.hpp"

using namespace nuc;
using testutil::R;

TEST_CASE("game documents parse with defaults and comments") {
    TUGame game = parse_game("# symmetric three-player game\n"
                             "n 3\n"
                             "1 2 : 1\n"
                             "1 3 : 1\n"
                             "2 3 : 1\n"
                             "1 2 3 : 1\n");
    CHECK(game.players() == 3);
    CHECK(game.worth(Coalition(0b011)) == 1);
    CHECK(game.worth(Coalition(0b001)) == 0);

    TUGame tiny = parse_game("n 2\n1 2 : 1/2\n");
    CHECK(tiny.worth(grand_coalition(2)) == R("1/2"));
    CHECK(tiny.worth(Coalition(1)) == 0);
}

TEST_CASE("game parse errors name the offending line") {
    CHECK_THROWS_WITH_AS(parse_game("n 3\n1 : 0\n1 : 0\n"),
                         doctest::Contains("line 3"), ParseError);
    CHECK_THROWS_AS(parse_game("n 3\n4 : 1\n"), ParseError);
    CHECK_THROWS_AS(parse_game("n 3\n1 2 1\n"), ParseError);
    CHECK_THROWS_AS(parse_game("n 3\n1 2 : 1/0\n"), ParseError);
    CHECK_THROWS_AS(parse_game("n 0\n"), ParseError);
    CHECK_THROWS_AS(parse_game("1 2 : 1\n"), ParseError);
    CHECK_THROWS_AS(parse_game(""), ParseError);
}

TEST_CASE("emit produces the canonical document") {
    TUGame game = testutil::g3sym();
    const std::string doc = emit_game(game);
    CHECK(doc == "n 3\n1 2 : 1\n1 3 : 1\n2 3 : 1\n1 2 3 : 1\n");
    CHECK(emit_game(parse_game(doc)) == doc);
}

TEST_CASE("round trip holds on random games") {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        TUGame game = random_game(3 + static_cast<int>(seed % 3), seed, GameDist::UniformInt);
        const std::string doc = emit_game(game);
        CHECK(emit_game(parse_game(doc)) == doc);
    }
}

TEST_CASE("payoff documents") {
    Payoff x = parse_payoff("1/3 1/3  1/3\n");
    CHECK(x == Payoff({R("1/3"), R("1/3"), R("1/3")}));
    CHECK(emit_payoff(x) == "1/3 1/3 1/3\n");
    CHECK(parse_payoff(emit_payoff(x)) == x);
    CHECK_THROWS_AS(parse_payoff("# nothing\n"), ParseError);
    CHECK_THROWS_AS(parse_payoff("1 x 2\n"), ParseError);
}

TEST_CASE("rational canonicalization") {
    CHECK(to_canonical(R("2/4")) == "1/2");
    CHECK(to_canonical(R("-6/3")) == "-2");
    CHECK(to_canonical(Rational(0)) == "0");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}
