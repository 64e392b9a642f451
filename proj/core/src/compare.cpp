#include "nuc/compare.hpp"

#include <atomic>
#include <exception>
#include <filesystem>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "nuc/io.hpp"
#include "nuc/nguyen.hpp"
#include "nuc/solver.hpp"

namespace nuc {
namespace {

const char* verdict_name(Verdict v) {
    return v == Verdict::IsSolution ? "IsSolution" : "NotSolution";
}

Verdict parse_verdict(const std::string& s) {
    if (s == "IsSolution") return Verdict::IsSolution;
    if (s == "NotSolution") return Verdict::NotSolution;
    throw ParseError("bad verdict '" + s + "'");
}

Payoff candidate_point(const TUGame& game, PointRule rule, std::uint64_t row_seed) {
    Payoff x = prenucleolus(game).first;
    switch (rule) {
        case PointRule::Oracle:
            return x;
        case PointRule::OraclePerturbed: {
            std::mt19937_64 rng(mix_seed(row_seed, 1));
            const int n = game.players();
            if (n < 2) {
                x[0] += Rational(1, 7);  // no efficiency-preserving move exists; force a miss
                return x;
            }
            const int i = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
            int j = static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
            if (j >= i) ++j;
            x[i] += Rational(1, 7);
            x[j] -= Rational(1, 7);
            return x;
        }
        case PointRule::RandomImputation: {
            Rational surplus = game.worth(grand_coalition(game.players()));
            for (int i = 0; i < game.players(); ++i)
                surplus -= game.worth(Coalition(1u << i));
            if (surplus < 0) return x;  // no imputations; fall back to the solver point
            return random_imputation(game, mix_seed(row_seed, 1));
        }
    }
    throw std::logic_error("unreachable");
}

void run_row(const CompareConfig& config, int index, CompareRow& row) {
    row.index = index;
    row.game_seed = mix_seed(config.seed, static_cast<std::uint64_t>(index));
    row.game = random_game(config.n, row.game_seed, config.dist);
    row.game_hash = game_hash(row.game);
    row.point = candidate_point(row.game, config.point_rule, row.game_seed);

    row.kohlberg_trace = verify_prenucleolus(row.game, row.point);
    row.kohlberg = row.kohlberg_trace.final;
    row.modified_trace = verify_prenucleolus_modified(row.game, row.point);
    row.modified = row.modified_trace.final;
    for (const SpanPrunedStep& step : row.modified_trace.steps)
        if (step.containment) ++row.containment[static_cast<int>(*step.containment)];
    row.prenucleolus_agree = row.kohlberg == row.modified;

    if (is_imputation(row.game, row.point)) {
        row.nucleolus_trace = verify_nucleolus(row.game, row.point, SingletonRule::Tight);
        row.nucleolus = row.nucleolus_trace->final;
        row.nguyen_trace = verify_nucleolus_nguyen(row.game, row.point);
        row.nguyen = row.nguyen_trace->final;
        row.nucleolus_agree = *row.nucleolus == *row.nguyen;
    }
}

std::map<std::string, std::string> split_sections(const std::string& doc) {
    std::map<std::string, std::string> sections;
    std::istringstream in(doc);
    std::string line, current;
    while (std::getline(in, line)) {
        if (line.size() > 5 && line.rfind("== ", 0) == 0 &&
            line.compare(line.size() - 3, 3, " ==") == 0) {
            current = line.substr(3, line.size() - 6);
            sections[current];
            continue;
        }
        if (current.empty()) {
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                throw ParseError("content before first section header");
            continue;
        }
        sections[current] += line;
        sections[current] += '\n';
    }
    return sections;
}

}  // namespace

PointRule parse_point_rule(const std::string& name) {
    if (name == "oracle") return PointRule::Oracle;
    if (name == "oracle_perturbed") return PointRule::OraclePerturbed;
    if (name == "random_imputation") return PointRule::RandomImputation;
    throw std::invalid_argument("unknown point rule: " + name);
}

std::string point_rule_name(PointRule rule) {
    switch (rule) {
        case PointRule::Oracle: return "oracle";
        case PointRule::OraclePerturbed: return "oracle_perturbed";
        case PointRule::RandomImputation: return "random_imputation";
    }
    throw std::logic_error("unreachable");
}

std::string game_hash(const TUGame& game) {
    const std::string doc = emit_game(game);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : doc) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream out;
    out << std::hex;
    for (int shift = 60; shift >= 0; shift -= 4) out << ((h >> shift) & 0xf);
    return out.str();
}

ComparisonReport compare_methods(const CompareConfig& config) {
    if (config.count < 1) throw std::invalid_argument("count must be at least 1");
    if (config.n < 1 || config.n > kMaxPlayers)
        throw std::invalid_argument("player count out of range");

    ComparisonReport report;
    report.config = config;
    report.rows.resize(config.count);
    std::vector<std::exception_ptr> errors(config.count);

    int workers = config.threads > 0 ? config.threads
                                     : static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    if (workers > config.count) workers = config.count;

    std::atomic<int> next{0};
    auto work = [&] {
        for (;;) {
            const int index = next.fetch_add(1);
            if (index >= config.count) return;
            try {
                run_row(config, index, report.rows[index]);
            } catch (...) {
                errors[index] = std::current_exception();
            }
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    for (const auto& err : errors)
        if (err) std::rethrow_exception(err);

    if (!config.out_dir.empty()) std::filesystem::create_directories(config.out_dir);
    for (CompareRow& row : report.rows) {
        if (row.prenucleolus_agree) {
            ++report.prenucleolus_agreements;
        } else {
            ++report.prenucleolus_disagreements;
        }
        if (row.nucleolus_agree) {
            ++report.nucleolus_pairs;
            if (*row.nucleolus_agree) {
                ++report.nucleolus_agreements;
            } else {
                ++report.nucleolus_disagreements;
            }
        }
        for (int c = 0; c < 3; ++c) report.containment_totals[c] += row.containment[c];

        const bool disagrees =
            !row.prenucleolus_agree || (row.nucleolus_agree && !*row.nucleolus_agree);
        if (disagrees && !config.out_dir.empty()) {
            std::ostringstream name;
            name << config.out_dir << "/counterexample_" << row.index << ".txt";
            row.counterexample_path = name.str();
            write_file(row.counterexample_path, format_counterexample(row));
            report.counterexample_paths.push_back(row.counterexample_path);
        }
    }
    return report;
}

std::string format_report(const ComparisonReport& report) {
    std::ostringstream out;
    out << "n=" << report.config.n << " count=" << report.config.count
        << " seed=" << report.config.seed << " dist=" << dist_name(report.config.dist)
        << " point_rule=" << point_rule_name(report.config.point_rule) << "\n\n";
    for (const CompareRow& row : report.rows) {
        out << "row " << row.index << " seed=" << row.game_seed << " hash=" << row.game_hash
            << " point=" << emit_payoff(row.point);
        out << "  kohlberg=" << verdict_name(row.kohlberg)
            << " modified=" << verdict_name(row.modified);
        if (row.nucleolus) out << " nucleolus=" << verdict_name(*row.nucleolus);
        if (row.nguyen) out << " nguyen=" << verdict_name(*row.nguyen);
        out << " containment=i:" << row.containment[0] << ",ii:" << row.containment[1]
            << ",iii:" << row.containment[2];
        out << " agree=" << (row.prenucleolus_agree ? "yes" : "NO");
        if (row.nucleolus_agree)
            out << " nucleolus_agree=" << (*row.nucleolus_agree ? "yes" : "NO");
        if (!row.counterexample_path.empty()) out << " file=" << row.counterexample_path;
        out << "\n";
    }
    out << "\nsummary:\n";
    out << "  rows: " << report.rows.size() << "\n";
    out << "  prenucleolus agreements: " << report.prenucleolus_agreements << "\n";
    out << "  prenucleolus disagreements: " << report.prenucleolus_disagreements << "\n";
    out << "  nucleolus pairs: " << report.nucleolus_pairs << "\n";
    out << "  nucleolus agreements: " << report.nucleolus_agreements << "\n";
    out << "  nucleolus disagreements: " << report.nucleolus_disagreements << "\n";
    out << "  containment histogram: i=" << report.containment_totals[0]
        << " ii=" << report.containment_totals[1] << " iii=" << report.containment_totals[2]
        << "\n";
    out << "  counterexample files: " << report.counterexample_paths.size() << "\n";
    return out.str();
}

std::string format_counterexample(const CompareRow& row) {
    std::ostringstream out;
    out << "== game ==\n" << emit_game(row.game);
    out << "== point ==\n" << emit_payoff(row.point);
    out << "== verdicts ==\n";
    out << "kohlberg: " << verdict_name(row.kohlberg) << "\n";
    out << "modified: " << verdict_name(row.modified) << "\n";
    if (row.nucleolus) out << "nucleolus: " << verdict_name(*row.nucleolus) << "\n";
    if (row.nguyen) out << "nguyen: " << verdict_name(*row.nguyen) << "\n";
    out << "== trace kohlberg ==\n" << format_trace(row.kohlberg_trace);
    out << "== trace modified ==\n" << format_trace(row.modified_trace);
    if (row.nucleolus_trace)
        out << "== trace nucleolus ==\n" << format_trace(*row.nucleolus_trace);
    if (row.nguyen_trace) out << "== trace nguyen ==\n" << format_trace(*row.nguyen_trace);
    return out.str();
}

ReplayResult replay_counterexample(const std::string& doc) {
    auto sections = split_sections(doc);
    auto need = [&](const std::string& name) -> const std::string& {
        auto it = sections.find(name);
        if (it == sections.end()) throw ParseError("missing section '" + name + "'");
        return it->second;
    };
    const TUGame game = parse_game(need("game"));
    const Payoff point = parse_payoff(need("point"));

    std::map<std::string, Verdict> recorded;
    {
        std::istringstream in(need("verdicts"));
        std::string line;
        while (std::getline(in, line)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            auto colon = line.find(": ");
            if (colon == std::string::npos) throw ParseError("bad verdict line '" + line + "'");
            recorded[line.substr(0, colon)] = parse_verdict(line.substr(colon + 2));
        }
    }
    if (!recorded.count("kohlberg") || !recorded.count("modified"))
        throw ParseError("verdicts section must cover kohlberg and modified");

    auto check = [](const std::string& name, Verdict got, Verdict want,
                    const std::string& trace_got, const std::string& trace_want,
                    ReplayResult& result) {
        if (got != want) {
            result.identical = false;
            result.detail += name + ": verdict differs\n";
        } else if (trace_got != trace_want) {
            result.identical = false;
            result.detail += name + ": trace differs\n";
        }
    };

    ReplayResult result{true, ""};
    {
        VerificationTrace t = verify_prenucleolus(game, point);
        check("kohlberg", t.final, recorded.at("kohlberg"), format_trace(t),
              need("trace kohlberg"), result);
    }
    {
        SpanPrunedTrace t = verify_prenucleolus_modified(game, point);
        check("modified", t.final, recorded.at("modified"), format_trace(t),
              need("trace modified"), result);
    }
    if (recorded.count("nucleolus")) {
        VerificationTrace t = verify_nucleolus(game, point, SingletonRule::Tight);
        check("nucleolus", t.final, recorded.at("nucleolus"), format_trace(t),
              need("trace nucleolus"), result);
    }
    if (recorded.count("nguyen")) {
        VerificationTrace t = verify_nucleolus_nguyen(game, point);
        check("nguyen", t.final, recorded.at("nguyen"), format_trace(t), need("trace nguyen"),
              result);
    }
    if (result.identical) result.detail = "all recorded verdicts and traces reproduced";
    return result;
}

}  // namespace nuc
