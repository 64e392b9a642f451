#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nuc/balance.hpp"
#include "nuc/game.hpp"
#include "nuc/kohlberg.hpp"

namespace nuc {

/// Containment of the full level set versus the pruned cumulative set:
///  I:   D(psi_k) is contained in the pruned set,
///  II:  neither contains the other fully (pruned set still inside
///       D(psi_k - eps_k)),
///  III: the pruned set is strictly inside D(psi_k).
enum class ContainmentCase { I, II, III };

struct SpanPrunedStep {
    int k = 0;
    Rational psi;
    std::optional<Rational> eps;  // gap to the next excess level; absent when no level remains
    CoalitionCollection pruned;   // cumulative span-pruned collection tested at this level
    CoalitionCollection dropped;  // new-level coalitions discarded by the span check
    bool accepted = false;
    std::string verdict_label;
    std::vector<Rational> weights;
    std::vector<Rational> certificate;
    int rank_pruned = 0;
    int rank_full = 0;  // rank of the unpruned D(psi_k)
    std::optional<ContainmentCase> containment;
    std::int64_t lp_pivots = 0;
    std::int64_t span_ops = 0;
};

struct SpanPrunedTrace {
    std::vector<SpanPrunedStep> steps;
    Verdict final = Verdict::NotSolution;
    std::optional<int> reject_level;
    std::vector<Rational> reject_certificate;
};

/// eps(psi) = psi - max excess outside D(N,v;psi,x); strictly positive when
/// psi is an attained level. Throws when D(psi,x) already covers every
/// nonempty coalition.
Rational epsilon_tilde(const TUGame& game, const Payoff& x, const Rational& psi);

/// New-level coalitions whose characteristic vectors escape the span of the
/// current pruned set: {S in D(psi - eps, x) \ d_hat : 1_S not in
/// span(d_hat)}. d_hat must be a subset of D(psi, x).
CoalitionCollection d_tilde(const TUGame& game, const Payoff& x, const Rational& psi,
                            const Rational& eps, const CoalitionCollection& d_hat,
                            std::int64_t* span_ops = nullptr);

/// Disjoint union preserving canonical order. Throws on overlap.
CoalitionCollection d_hat_next(const CoalitionCollection& d_hat,
                               const CoalitionCollection& d_tilde);

/// Verifier built on the pruned-set recursion: start from D(psi_0), at each
/// level require the pruned cumulative set to be balanced and extend it only
/// by span-independent coalitions. Whether this agrees with the Kohlberg
/// verifier everywhere is an experimental question, not an assertion.
SpanPrunedTrace verify_prenucleolus_modified(const TUGame& game, const Payoff& x);

}  // namespace nuc
