#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "nuc/game.hpp"
#include "nuc/lp.hpp"

namespace nuc {

enum class BalanceKind { Balanced, WeaklyBalancedOnly, Unbalanced };

/// Verdict on a coalition collection. weights aligns with the collection's
/// canonical (ascending-mask) order; farkas_y is present whenever strictly
/// positive weights do not exist: y(S) >= 0 for all members, y(N) = 0, and
/// y(S) > 0 for at least one member.
struct BalanceVerdict {
    BalanceKind kind = BalanceKind::Unbalanced;
    std::vector<Rational> weights;
    std::vector<Rational> farkas_y;
    std::int64_t lp_pivots = 0;
};

/// Balanced iff max t s.t. sum w_S 1_S = 1_N, w_S >= t >= 0 has optimum
/// t* > 0. Throws std::invalid_argument on an empty collection.
BalanceVerdict check_balanced(const CoalitionCollection& c);

/// Feasibility of the nonnegative-weight system; same verdict content as
/// check_balanced (the kind distinguishes the strict regime).
BalanceVerdict check_weakly_balanced(const CoalitionCollection& c);

struct PropertyIResult {
    bool holds = false;
    std::optional<std::vector<Rational>> witness;  // y violating the property
    std::int64_t lp_pivots = 0;
};

struct PropertyIIResult {
    bool holds = false;
    std::optional<std::vector<Rational>> weights;  // over the tested collection
    std::int64_t lp_pivots = 0;
};

/// Property I: every y with y(S) >= 0 on c and y(N) = 0 has y(S) = 0 on c.
/// Decided by maximizing y(S) per member over the cone boxed to [-1,1]^n
/// (the cone is scale-invariant, so a positive value on the box iff one
/// exists at all).
PropertyIResult property_I(const CoalitionCollection& c);

/// Property II: strictly positive exact weights exist; identical verdict to
/// check_balanced.
PropertyIIResult property_II(const CoalitionCollection& c);

enum class PropertyMode { I, II };

struct NucleolusPropertyResult {
    bool holds = false;
    /// mode II: weights over c0 union c (canonical order of the union);
    /// mode I: violating y when not holding.
    std::vector<Rational> certificate;
    /// canonical union collection the certificate refers to
    CoalitionCollection tested;
    std::int64_t lp_pivots = 0;
};

/// Kohlberg's nucleolus-side property on C(psi) = c0 union c.
/// mode I:  every y >= 0 on C(psi) with y(N) = 0 has y(S) = 0 on d_required;
/// mode II: exists w >= 0 on C(psi) with sum w_S 1_S = 1_N and w_S > 0 on
///          d_required.
/// c0 must contain singletons only; d_required must be a subset of c.
NucleolusPropertyResult nucleolus_property(const CoalitionCollection& c,
                                           const CoalitionCollection& d_required,
                                           const CoalitionCollection& c0, PropertyMode mode);

/// Shared helper: exists w >= 0 over `collection` with sum w_S 1_S = 1_N and
/// w_S > 0 for S in `required` (decided by one max-t LP). Returns the
/// verdict plus weights or a shifted Farkas direction.
NucleolusPropertyResult positive_weight_system(const CoalitionCollection& collection,
                                               const CoalitionCollection& required);

}  // namespace nuc
