#include "nuc/io.hpp"

#include <fstream>
#include <sstream>

namespace nuc {
namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) {
    return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

[[noreturn]] void fail(int line_no, const std::string& what) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

std::string format_weights(const CoalitionCollection& collection,
                           const std::vector<Rational>& weights) {
    std::ostringstream out;
    for (int i = 0; i < collection.size(); ++i) {
        if (i) out << ", ";
        out << coalition_to_string(collection.members()[i]) << ": "
            << to_canonical(weights[i]);
    }
    return out.str();
}

std::string format_collection(const CoalitionCollection& c) {
    std::ostringstream out;
    out << "{";
    for (int i = 0; i < c.size(); ++i) {
        if (i) out << ", ";
        out << coalition_to_string(c.members()[i]);
    }
    out << "}";
    return out.str();
}

std::string format_vector(const std::vector<Rational>& v) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ", ";
        out << to_canonical(v[i]);
    }
    out << ")";
    return out.str();
}

}  // namespace

TUGame parse_game(const std::string& doc) {
    std::istringstream in(doc);
    std::string raw;
    int line_no = 0;
    int n = -1;
    std::vector<bool> seen;
    TUGame game(1);

    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = strip_comment(raw);
        if (blank(line)) continue;
        std::istringstream fields(line);
        if (n < 0) {
            std::string key;
            fields >> key;
            if (key != "n") fail(line_no, "expected header 'n <players>', got '" + key + "'");
            if (!(fields >> n)) fail(line_no, "missing player count");
            if (n < 1 || n > kMaxPlayers)
                fail(line_no, "player count must be between 1 and " + std::to_string(kMaxPlayers));
            std::string extra;
            if (fields >> extra) fail(line_no, "trailing content after player count");
            game = TUGame(n);
            seen.assign(std::size_t(1) << n, false);
            continue;
        }
        std::uint32_t mask = 0;
        std::string tok;
        bool colon = false;
        while (fields >> tok) {
            if (tok == ":") {
                colon = true;
                break;
            }
            int player;
            try {
                std::size_t used;
                player = std::stoi(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                fail(line_no, "bad player index '" + tok + "'");
            }
            if (player < 1 || player > n)
                fail(line_no, "player index " + std::to_string(player) + " out of range 1.." +
                                  std::to_string(n));
            std::uint32_t bit = 1u << (player - 1);
            if (mask & bit) fail(line_no, "duplicate player " + std::to_string(player));
            if (bit < mask) fail(line_no, "player indices must be ascending");
            mask |= bit;
        }
        if (!colon) fail(line_no, "missing ':' separator");
        if (mask == 0) fail(line_no, "empty coalition");
        std::string value;
        if (!(fields >> value)) fail(line_no, "missing worth after ':'");
        std::string extra;
        if (fields >> extra) fail(line_no, "trailing content after worth");
        if (seen[mask]) fail(line_no, "coalition listed twice");
        seen[mask] = true;
        try {
            game.set_worth(Coalition(mask), parse_rational(value));
        } catch (const std::invalid_argument&) {
            fail(line_no, "bad rational '" + value + "'");
        }
    }
    if (n < 0) throw ParseError("missing 'n <players>' header");
    return game;
}

std::string emit_game(const TUGame& game) {
    std::ostringstream out;
    const int n = game.players();
    out << "n " << n << "\n";
    for (std::uint32_t m = 1; m <= game.coalition_count(); ++m) {
        Coalition s(m);
        if (game.worth(s) == 0) continue;
        bool first = true;
        for (int i = 0; i < n; ++i) {
            if (!s.contains(i)) continue;
            if (!first) out << " ";
            out << (i + 1);
            first = false;
        }
        out << " : " << to_canonical(game.worth(s)) << "\n";
    }
    return out.str();
}

Payoff parse_payoff(const std::string& doc) {
    std::istringstream in(doc);
    std::string raw;
    int line_no = 0;
    std::vector<Rational> values;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = strip_comment(raw);
        if (blank(line)) continue;
        std::istringstream fields(line);
        std::string tok;
        while (fields >> tok) {
            try {
                values.push_back(parse_rational(tok));
            } catch (const std::invalid_argument&) {
                fail(line_no, "bad rational '" + tok + "'");
            }
        }
    }
    if (values.empty()) throw ParseError("empty payoff document");
    return Payoff(std::move(values));
}

std::string emit_payoff(const Payoff& x) {
    std::ostringstream out;
    for (int i = 0; i < x.size(); ++i) {
        if (i) out << " ";
        out << to_canonical(x[i]);
    }
    out << "\n";
    return out.str();
}

std::string format_trace(const VerificationTrace& trace) {
    std::ostringstream out;
    out << "method: " << trace.method << "\n";
    if (!trace.note.empty()) out << "note: " << trace.note << "\n";
    for (const TraceStep& step : trace.steps) {
        out << "level " << step.k << ": psi=" << to_canonical(step.psi)
            << " collection=" << format_collection(step.collection)
            << " rank=" << step.rank << " verdict=" << step.verdict_label << "\n";
        if (step.accepted && !step.weights.empty())
            out << "  weights: " << format_weights(step.collection, step.weights) << "\n";
        if (!step.accepted && !step.certificate.empty())
            out << "  certificate y: " << format_vector(step.certificate) << "\n";
    }
    out << "result: "
        << (trace.final == Verdict::IsSolution ? "IsSolution" : "NotSolution") << "\n";
    if (trace.reject_level) out << "rejected at level " << *trace.reject_level << "\n";
    return out.str();
}

std::string format_trace(const SpanPrunedTrace& trace) {
    std::ostringstream out;
    out << "method: modified\n";
    for (const SpanPrunedStep& step : trace.steps) {
        out << "level " << step.k << ": psi=" << to_canonical(step.psi);
        if (step.eps) out << " eps=" << to_canonical(*step.eps);
        out << " pruned=" << format_collection(step.pruned)
            << " rank=" << step.rank_pruned << "/" << step.rank_full
            << " verdict=" << step.verdict_label << "\n";
        if (!step.dropped.empty())
            out << "  dropped: " << format_collection(step.dropped) << "\n";
        if (step.containment) {
            const char* label =
                *step.containment == ContainmentCase::I
                    ? "I (full level set inside pruned)"
                    : (*step.containment == ContainmentCase::II ? "II (incomparable)"
                                                                : "III (pruned strictly inside)");
            out << "  containment: " << label << "\n";
        }
        if (step.accepted && !step.weights.empty())
            out << "  weights: " << format_weights(step.pruned, step.weights) << "\n";
        if (!step.accepted && !step.certificate.empty())
            out << "  certificate y: " << format_vector(step.certificate) << "\n";
    }
    out << "result: "
        << (trace.final == Verdict::IsSolution ? "IsSolution" : "NotSolution") << "\n";
    if (trace.reject_level) out << "rejected at level " << *trace.reject_level << "\n";
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace nuc
