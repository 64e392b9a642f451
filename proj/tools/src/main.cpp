#include <algorithm>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nuc/bench.hpp"
#include "nuc/compare.hpp"
#include "nuc/io.hpp"
#include "nuc/kohlberg.hpp"
#include "nuc/nguyen.hpp"
#include "nuc/solver.hpp"
#include "nuc/span_pruned.hpp"

namespace {

constexpr int kExitIsSolution = 0;
constexpr int kExitNotSolution = 1;
constexpr int kExitError = 2;

int run_compute(const std::string& game_path, const std::string& solution, bool trace) {
    const nuc::TUGame game = nuc::parse_game(nuc::read_file(game_path));
    auto [x, solve_trace] =
        solution == "nucleolus" ? nuc::nucleolus(game) : nuc::prenucleolus(game);
    std::cout << nuc::emit_payoff(x);
    if (trace) {
        for (const nuc::SolveRound& round : solve_trace.rounds) {
            std::cout << "round: level=" << nuc::to_canonical(round.level) << " fixed=";
            for (int i = 0; i < round.fixed.size(); ++i) {
                if (i) std::cout << ",";
                std::cout << nuc::coalition_to_string(round.fixed.members()[i]);
            }
            for (int i : round.fixed_bounds) std::cout << " bound(" << (i + 1) << ")";
            std::cout << " remaining_dim=" << round.remaining_dim << "\n";
        }
    }
    return kExitIsSolution;
}

int run_verify(const std::string& game_path, const std::string& point_path,
               const std::string& method, const std::string& solution,
               const std::string& singleton_rule, bool trace) {
    const nuc::TUGame game = nuc::parse_game(nuc::read_file(game_path));
    const nuc::Payoff point = nuc::parse_payoff(nuc::read_file(point_path));
    if (point.size() != game.players())
        throw std::invalid_argument("point length does not match player count");

    nuc::Verdict verdict;
    std::string rendered;
    if (method == "kohlberg" && solution == "prenucleolus") {
        nuc::VerificationTrace t = nuc::verify_prenucleolus(game, point);
        verdict = t.final;
        rendered = nuc::format_trace(t);
    } else if (method == "kohlberg" && solution == "nucleolus") {
        auto rule = singleton_rule == "all" ? nuc::SingletonRule::All : nuc::SingletonRule::Tight;
        nuc::VerificationTrace t = nuc::verify_nucleolus(game, point, rule);
        verdict = t.final;
        rendered = nuc::format_trace(t);
    } else if (method == "modified") {
        if (solution != "prenucleolus")
            throw std::invalid_argument("method 'modified' verifies the prenucleolus only");
        nuc::SpanPrunedTrace t = nuc::verify_prenucleolus_modified(game, point);
        verdict = t.final;
        rendered = nuc::format_trace(t);
    } else if (method == "nguyen") {
        if (solution != "nucleolus")
            throw std::invalid_argument("method 'nguyen' verifies the nucleolus only");
        nuc::VerificationTrace t = nuc::verify_nucleolus_nguyen(game, point);
        verdict = t.final;
        rendered = nuc::format_trace(t);
    } else {
        throw std::invalid_argument("unsupported method/solution combination");
    }
    if (trace) std::cout << rendered;
    std::cout << (verdict == nuc::Verdict::IsSolution ? "IsSolution" : "NotSolution") << "\n";
    return verdict == nuc::Verdict::IsSolution ? kExitIsSolution : kExitNotSolution;
}

int run_compare(const nuc::CompareConfig& config) {
    nuc::ComparisonReport report = nuc::compare_methods(config);
    const std::string rendered = nuc::format_report(report);
    if (!config.out_dir.empty())
        nuc::write_file(config.out_dir + "/report.txt", rendered);
    std::cout << rendered;
    return kExitIsSolution;
}

int run_bench(const std::string& games_dir, const std::string& out_path) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(games_dir))
        if (entry.is_regular_file()) files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw std::invalid_argument("no game files in " + games_dir);

    std::vector<nuc::TUGame> games;
    std::vector<nuc::Payoff> points;
    for (const auto& path : files) {
        nuc::TUGame game = nuc::parse_game(nuc::read_file(path.string()));
        points.push_back(nuc::prenucleolus(game).first);
        games.push_back(std::move(game));
    }
    nuc::BenchTable table = nuc::bench_span_vs_lp(games, points);
    const std::string rendered = nuc::format_bench(table);
    if (!out_path.empty()) nuc::write_file(out_path, rendered);
    std::cout << rendered;
    return kExitIsSolution;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact nucleolus computation and Kohlberg-criterion verification"};
    app.require_subcommand(1);

    std::string game_path, point_path, solution = "prenucleolus";
    std::string method = "kohlberg", singleton_rule = "tight";
    bool trace = false;

    CLI::App* compute = app.add_subcommand("compute", "Compute the (pre-)nucleolus of a game");
    compute->add_option("--game", game_path, "Game file")->required();
    compute->add_option("--solution", solution, "prenucleolus or nucleolus")
        ->check(CLI::IsMember({"prenucleolus", "nucleolus"}));
    compute->add_flag("--trace", trace, "Print the per-round solve trace");

    CLI::App* verify = app.add_subcommand("verify", "Verify a candidate point");
    verify->add_option("--game", game_path, "Game file")->required();
    verify->add_option("--point", point_path, "Payoff file")->required();
    verify->add_option("--method", method, "kohlberg, modified, or nguyen")
        ->check(CLI::IsMember({"kohlberg", "modified", "nguyen"}));
    verify->add_option("--solution", solution, "prenucleolus or nucleolus")
        ->check(CLI::IsMember({"prenucleolus", "nucleolus"}));
    verify->add_option("--singleton-rule", singleton_rule, "all or tight (nucleolus only)")
        ->check(CLI::IsMember({"all", "tight"}));
    verify->add_flag("--trace", trace, "Print the verification trace");

    nuc::CompareConfig config;
    std::string dist = "uniform_int", point_rule = "oracle";
    CLI::App* compare = app.add_subcommand("compare", "Three-way verifier comparison sweep");
    compare->add_option("--n", config.n, "Players per game")->required();
    compare->add_option("--count", config.count, "Number of games")->required();
    compare->add_option("--seed", config.seed, "Sweep seed")->required();
    compare->add_option("--dist", dist, "uniform_int or zero_normalized")
        ->check(CLI::IsMember({"uniform_int", "zero_normalized"}));
    compare->add_option("--point-rule", point_rule, "oracle, oracle_perturbed, or random_imputation")
        ->check(CLI::IsMember({"oracle", "oracle_perturbed", "random_imputation"}));
    compare->add_option("--out", config.out_dir, "Report and counterexample directory")
        ->required();
    compare->add_option("--threads", config.threads, "Worker threads (0 = hardware)");

    std::string games_dir, bench_out;
    CLI::App* bench = app.add_subcommand("bench", "Span-check vs LP cost comparison");
    bench->add_option("--games", games_dir, "Directory of game files")->required();
    bench->add_option("--out", bench_out, "Output table file")->required();

    try {
        app.parse(argc, argv);
        if (compute->parsed()) return run_compute(game_path, solution, trace);
        if (verify->parsed())
            return run_verify(game_path, point_path, method, solution, singleton_rule, trace);
        if (compare->parsed()) {
            config.dist = nuc::parse_dist(dist);
            config.point_rule = nuc::parse_point_rule(point_rule);
            return run_compare(config);
        }
        if (bench->parsed()) return run_bench(games_dir, bench_out);
        return kExitError;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
