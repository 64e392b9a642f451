// End-to-end acceptance gate: one pass/fail line per criterion.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <random>
#include <sstream>
#include <vector>

#include "helpers.hpp"
#include "nuc/balance.hpp"
#include "nuc/bench.hpp"
#include "nuc/compare.hpp"
#include "nuc/io.hpp"
#include "nuc/kohlberg.hpp"
#include "nuc/nguyen.hpp"
#include "nuc/random.hpp"
#include "nuc/solver.hpp"
#include "nuc/span_pruned.hpp"

using namespace nuc;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("criterion %d: %s - %s\n", criterion, pass ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

struct Rejection {
    TUGame game{1};
    Payoff point;
    CoalitionCollection collection;
    std::vector<Rational> certificate;
};

std::vector<Rejection> rejections;  // harvested in criterion 2, consumed in 3

// ---- criterion 1: balancedness <=> Property I <=> Property II ----------

bool duality_agrees(const CoalitionCollection& c) {
    const bool balanced = check_balanced(c).kind == BalanceKind::Balanced;
    return balanced == property_I(c).holds && balanced == property_II(c).holds;
}

void criterion_1() {
    int checked = 0;
    bool ok = true;
    for (std::uint32_t subset = 1; subset < (1u << 7); ++subset) {
        std::vector<Coalition> members;
        for (int j = 0; j < 7; ++j)
            if ((subset >> j) & 1u) members.push_back(Coalition(j + 1));
        CoalitionCollection c(3, std::move(members));
        ok = ok && duality_agrees(c);
        ++checked;
    }
    std::mt19937_64 rng(4242);
    for (int n : {4, 5}) {
        for (int trial = 0; trial < 2500; ++trial) {
            ok = ok && duality_agrees(testutil::random_collection(n, rng));
            ++checked;
        }
    }
    std::ostringstream detail;
    detail << "duality equivalence on " << checked
           << " collections (127 exhaustive n=3, 5000 random n=4,5)";
    report(1, ok, detail.str());
}

// ---- criterion 2: verifier vs solver, accept and reject -----------------

Payoff perturb_efficient(const Payoff& x, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int n = x.size();
    const int i = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    int j = static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
    if (j >= i) ++j;
    Payoff moved = x;
    moved[i] += Rational(1, 7);
    moved[j] -= Rational(1, 7);
    return moved;
}

Payoff perturb_in_simplex(const TUGame& game, const Payoff& x) {
    const int n = x.size();
    int donor = 0;
    Rational best_slack = x[0] - game.worth(Coalition(1));
    for (int i = 1; i < n; ++i) {
        Rational slack = x[i] - game.worth(Coalition(1u << i));
        if (slack > best_slack) {
            best_slack = slack;
            donor = i;
        }
    }
    Payoff moved = x;
    moved[donor] -= Rational(1, 7);
    moved[(donor + 1) % n] += Rational(1, 7);
    return moved;
}

void criterion_2() {
    int accepts = 0, expected_accepts = 0, rejects = 0, expected_rejects = 0;
    for (int n : {3, 4, 5}) {
        for (int i = 0; i < 200; ++i) {
            TUGame game = random_game(n, mix_seed(1000 + n, i), GameDist::UniformInt);
            Payoff star = prenucleolus(game).first;
            ++expected_accepts;
            if (verify_prenucleolus(game, star).final == Verdict::IsSolution) ++accepts;

            Payoff off = perturb_efficient(star, mix_seed(1500 + n, i));
            VerificationTrace trace = verify_prenucleolus(game, off);
            ++expected_rejects;
            if (trace.final == Verdict::NotSolution) {
                ++rejects;
                const TraceStep& last = trace.steps.back();
                rejections.push_back({game, off, last.collection, last.certificate});
            }

            TUGame zgame = random_game(n, mix_seed(2000 + n, i), GameDist::ZeroNormalized);
            Payoff nstar = nucleolus(zgame).first;
            ++expected_accepts;
            if (verify_nucleolus(zgame, nstar, SingletonRule::Tight).final ==
                Verdict::IsSolution)
                ++accepts;

            Payoff noff = perturb_in_simplex(zgame, nstar);
            VerificationTrace ntrace = verify_nucleolus(zgame, noff, SingletonRule::Tight);
            ++expected_rejects;
            if (ntrace.final == Verdict::NotSolution) {
                ++rejects;
                const TraceStep& last = ntrace.steps.back();
                rejections.push_back({zgame, noff, last.collection, last.certificate});
            }
        }
    }
    std::ostringstream detail;
    detail << "solver/verifier agreement: " << accepts << "/" << expected_accepts
           << " accepts, " << rejects << "/" << expected_rejects
           << " rejects (200 games per n in {3,4,5}, both solution concepts)";
    report(2, accepts == expected_accepts && rejects == expected_rejects, detail.str());
}

void criterion_3() {
    int improved = 0;
    for (const Rejection& r : rejections) {
        try {
            improving_direction(r.game, r.point, r.collection, r.certificate);
            ++improved;
        } catch (const std::exception&) {
        }
    }
    std::ostringstream detail;
    detail << "improving direction certified for " << improved << "/" << rejections.size()
           << " rejections (exact theta recomputation)";
    report(3, !rejections.empty() && improved == static_cast<int>(rejections.size()),
           detail.str());
}

// ---- criterion 4: hand-worked golden traces -----------------------------

bool proportional_to_golden(const std::vector<Rational>& y) {
    return y.size() == 3 && y[1] > 0 && y[1] == y[2] && y[0] == -2 * y[1];
}

void criterion_4() {
    TUGame game = testutil::g3sym();
    Payoff eq = testutil::pay3("1/3", "1/3", "1/3");
    Payoff skew = testutil::pay3("1", "0", "0");
    CoalitionCollection pairs(3, {Coalition(0b011), Coalition(0b101), Coalition(0b110)});
    const std::vector<Rational> half = {Rational(1, 2), Rational(1, 2), Rational(1, 2)};
    bool ok = true;

    VerificationTrace ka = verify_prenucleolus(game, eq);
    ok = ok && ka.final == Verdict::IsSolution && ka.steps.size() == 1 &&
         ka.steps[0].psi == Rational(1, 3) && ka.steps[0].collection == pairs &&
         ka.steps[0].weights == half && ka.steps[0].rank == 3;

    SpanPrunedTrace ma = verify_prenucleolus_modified(game, eq);
    ok = ok && ma.final == Verdict::IsSolution && ma.steps.size() == 1 &&
         ma.steps[0].pruned == pairs && ma.steps[0].weights == half;

    VerificationTrace na = verify_nucleolus_nguyen(game, eq);
    ok = ok && na.final == Verdict::IsSolution && na.steps.size() == 1 &&
         na.steps[0].collection == pairs && na.steps[0].weights == half;

    CoalitionCollection lone(3, {Coalition(0b110)});
    VerificationTrace kr = verify_prenucleolus(game, skew);
    ok = ok && kr.final == Verdict::NotSolution && kr.steps[0].collection == lone &&
         proportional_to_golden(kr.steps[0].certificate);

    SpanPrunedTrace mr = verify_prenucleolus_modified(game, skew);
    ok = ok && mr.final == Verdict::NotSolution && mr.steps[0].pruned == lone &&
         proportional_to_golden(mr.steps[0].certificate);

    VerificationTrace nr = verify_nucleolus_nguyen(game, skew);
    ok = ok && nr.final == Verdict::NotSolution && nr.steps[0].collection == lone &&
         proportional_to_golden(nr.steps[0].certificate);

    report(4, ok,
           "golden traces: equal-split accept and (1,0,0) reject with Farkas "
           "proportional to (-2,1,1) across all three verifiers");
}

// ---- criteria 5-7: the comparison sweep ---------------------------------

std::vector<CompareRow> sweep_rows;
std::vector<std::string> sweep_files;
std::array<std::int64_t, 3> sweep_containment{};

void criterion_5() {
    const std::filesystem::path out_root = "acceptance_sweep";
    std::filesystem::remove_all(out_root);

    struct SweepPlan {
        int n;
        int count;
        PointRule rule;
        GameDist dist;
    };
    std::vector<SweepPlan> plans;
    const std::vector<int> counts_by_n = {300, 170, 120, 80};  // n = 3,4,5,6
    const PointRule rules[] = {PointRule::Oracle, PointRule::OraclePerturbed,
                               PointRule::RandomImputation};
    for (int n = 3; n <= 6; ++n)
        for (PointRule rule : rules)
            plans.push_back({n, counts_by_n[n - 3], rule,
                             rule == PointRule::RandomImputation ? GameDist::ZeroNormalized
                                                                 : GameDist::UniformInt});

    int total = 0, prenuc_disagreements = 0;
    bool ok = true;
    for (const SweepPlan& plan : plans) {
        CompareConfig config;
        config.n = plan.n;
        config.count = plan.count;
        config.seed = mix_seed(90, static_cast<std::uint64_t>(plan.n * 10 +
                                                              static_cast<int>(plan.rule)));
        config.dist = plan.dist;
        config.point_rule = plan.rule;
        config.out_dir = (out_root / (std::to_string(plan.n) + "_" +
                                      point_rule_name(plan.rule)))
                             .string();
        ComparisonReport report_ = compare_methods(config);
        total += static_cast<int>(report_.rows.size());
        prenuc_disagreements += report_.prenucleolus_disagreements;
        for (int c = 0; c < 3; ++c) sweep_containment[c] += report_.containment_totals[c];
        for (CompareRow& row : report_.rows) sweep_rows.push_back(std::move(row));
        for (const std::string& path : report_.counterexample_paths)
            sweep_files.push_back(path);
    }

    int replayed = 0;
    for (const std::string& path : sweep_files)
        if (replay_counterexample(read_file(path)).identical) ++replayed;
    ok = ok && total >= 2000 && replayed == static_cast<int>(sweep_files.size());

    std::ostringstream detail;
    detail << total << " (game, point) pairs over n in {3,4,5,6}; containment histogram i="
           << sweep_containment[0] << " ii=" << sweep_containment[1]
           << " iii=" << sweep_containment[2] << "; " << prenuc_disagreements
           << " kohlberg/modified disagreements, " << replayed << "/" << sweep_files.size()
           << " counterexample files replay identically";
    report(5, ok, detail.str());
}

void criterion_6() {
    int disagreements = 0, with_file = 0, replayed = 0;
    for (const CompareRow& row : sweep_rows) {
        if (!row.nucleolus_agree || *row.nucleolus_agree) continue;
        ++disagreements;
        if (row.counterexample_path.empty()) continue;
        ++with_file;
        if (replay_counterexample(read_file(row.counterexample_path)).identical) ++replayed;
    }
    std::ostringstream detail;
    detail << "replica search complete: " << disagreements
           << " nguyen/kohlberg-nucleolus disagreements found (count is a finding); "
           << replayed << "/" << with_file << " recorded files replay identically";
    report(6, disagreements == with_file && with_file == replayed, detail.str());
}

void criterion_7() {
    std::int64_t eps_checked = 0, violations = 0;
    for (const CompareRow& row : sweep_rows) {
        for (const SpanPrunedStep& step : row.modified_trace.steps) {
            if (step.eps) {
                ++eps_checked;
                if (!(*step.eps > 0)) ++violations;
                if (!step.pruned.subset_of(
                        level_collection(row.game, row.point, step.psi - *step.eps)))
                    ++violations;
            }
        }
        const auto& ksteps = row.kohlberg_trace.steps;
        for (std::size_t i = 0; i + 1 < ksteps.size(); ++i) {
            if (!(ksteps[i].psi > ksteps[i + 1].psi)) ++violations;
            if (!ksteps[i].collection.subset_of(ksteps[i + 1].collection)) ++violations;
        }
        ThetaVector t = theta(row.game, row.point);
        std::vector<Rational> direct;
        for (std::uint32_t m = 1; m <= row.game.coalition_count(); ++m)
            direct.push_back(excess(row.game, Coalition(m), row.point));
        std::vector<Rational> sorted = t.entries;
        std::sort(direct.begin(), direct.end());
        std::sort(sorted.begin(), sorted.end());
        if (direct != sorted) ++violations;
    }
    std::ostringstream detail;
    detail << "structural invariants over the sweep: epsilon > 0 and pruned-set containment ("
           << eps_checked << " steps), level monotonicity, theta permutation-soundness; "
           << violations << " violations";
    report(7, violations == 0 && !sweep_rows.empty(), detail.str());
}

void criterion_8() {
    std::vector<TUGame> games;
    std::vector<Payoff> points;
    for (int i = 0; i < 100; ++i) {
        TUGame game = random_game(6, mix_seed(777, i), GameDist::UniformInt);
        points.push_back(prenucleolus(game).first);
        games.push_back(std::move(game));
    }
    BenchTable first = bench_span_vs_lp(games, points);
    BenchTable second = bench_span_vs_lp(games, points);
    bool ok = first.levels.size() == second.levels.size();
    if (ok) {
        for (std::size_t i = 0; i < first.levels.size(); ++i)
            ok = ok && first.levels[i].span_ops == second.levels[i].span_ops &&
                 first.levels[i].modified_lp_pivots == second.levels[i].modified_lp_pivots &&
                 first.levels[i].kohlberg_lp_pivots == second.levels[i].kohlberg_lp_pivots;
    }
    ok = ok && first.total_span_ops == second.total_span_ops &&
         first.total_modified_pivots == second.total_modified_pivots &&
         first.total_kohlberg_pivots == second.total_kohlberg_pivots;
    std::ostringstream detail;
    detail << "100-game n=6 batch, two runs identical: span_ops=" << first.total_span_ops
           << " modified_lp_pivots=" << first.total_modified_pivots
           << " kohlberg_lp_pivots=" << first.total_kohlberg_pivots;
    report(8, ok, detail.str());
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    return failures == 0 ? 0 : 1;
}
