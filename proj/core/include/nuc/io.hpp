#pragma once

#include <iosfwd>
#include <string>

#include "nuc/game.hpp"
#include "nuc/kohlberg.hpp"
#include "nuc/span_pruned.hpp"

namespace nuc {

/// Thrown on malformed game or payoff documents; the message names the
/// offending line.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Game document: '#' comments, a line "n <players>", then one line per
/// coalition: ascending 1-based player indices, a colon, and a rational
/// worth ("p/q" or "p"). Omitted coalitions default to worth 0.
///
///   n 3
///   1 2 : 1
///   1 2 3 : 1
TUGame parse_game(const std::string& doc);

/// Canonical form: sorted by coalition mask, zero worths omitted,
/// rationals normalized.
std::string emit_game(const TUGame& game);

/// Payoff document: '#' comments, then whitespace-separated rationals.
Payoff parse_payoff(const std::string& doc);

std::string emit_payoff(const Payoff& x);

std::string format_trace(const VerificationTrace& trace);
std::string format_trace(const SpanPrunedTrace& trace);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace nuc
