#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nuc/rational.hpp"

namespace nuc {

inline constexpr int kMaxPlayers = 16;

/// A coalition is a bitmask over players 0..n-1 (bit i set = player i present).
struct Coalition {
    std::uint32_t mask = 0;

    constexpr Coalition() = default;
    constexpr explicit Coalition(std::uint32_t m) : mask(m) {}

    [[nodiscard]] bool empty() const { return mask == 0; }
    [[nodiscard]] int size() const { return __builtin_popcount(mask); }
    [[nodiscard]] bool contains(int player) const { return (mask >> player) & 1u; }

    friend bool operator==(Coalition a, Coalition b) { return a.mask == b.mask; }
    friend bool operator!=(Coalition a, Coalition b) { return a.mask != b.mask; }
    friend bool operator<(Coalition a, Coalition b) { return a.mask < b.mask; }
};

/// Grand coalition over n players.
inline Coalition grand_coalition(int n) { return Coalition((1u << n) - 1u); }

/// 0/1 incidence vector of a coalition as rationals.
std::vector<Rational> indicator(Coalition s, int n);

/// Renders a coalition as "{1,3}" with 1-based player indices.
std::string coalition_to_string(Coalition s);

/// TU game: player count plus a dense worth table indexed by coalition mask.
/// worth(empty) is fixed at 0.
class TUGame {
public:
    explicit TUGame(int n);

    [[nodiscard]] int players() const { return n_; }
    [[nodiscard]] std::uint32_t coalition_count() const { return (1u << n_) - 1u; }

    [[nodiscard]] const Rational& worth(Coalition s) const { return worth_[s.mask]; }
    void set_worth(Coalition s, Rational value);

private:
    int n_;
    std::vector<Rational> worth_;  // index by mask; worth_[0] == 0 always
};

/// Exact payoff allocation of length n.
class Payoff {
public:
    Payoff() = default;
    explicit Payoff(std::vector<Rational> values) : values_(std::move(values)) {}

    [[nodiscard]] int size() const { return static_cast<int>(values_.size()); }
    [[nodiscard]] const Rational& operator[](int i) const { return values_[i]; }
    Rational& operator[](int i) { return values_[i]; }
    [[nodiscard]] const std::vector<Rational>& values() const { return values_; }

    /// x(S) = sum of payoffs of members of S.
    [[nodiscard]] Rational sum(Coalition s) const;

    friend bool operator==(const Payoff& a, const Payoff& b) { return a.values_ == b.values_; }

private:
    std::vector<Rational> values_;
};

/// Ordered, duplicate-free list of nonempty coalitions (ascending mask).
class CoalitionCollection {
public:
    CoalitionCollection() = default;
    /// Sorts ascending and rejects duplicates or empty members.
    CoalitionCollection(int n, std::vector<Coalition> members);

    [[nodiscard]] int ambient_players() const { return n_; }
    [[nodiscard]] int size() const { return static_cast<int>(members_.size()); }
    [[nodiscard]] bool empty() const { return members_.empty(); }
    [[nodiscard]] const std::vector<Coalition>& members() const { return members_; }
    [[nodiscard]] bool contains(Coalition s) const;
    [[nodiscard]] bool subset_of(const CoalitionCollection& other) const;

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    friend bool operator==(const CoalitionCollection& a, const CoalitionCollection& b) {
        return a.members_ == b.members_;
    }

private:
    int n_ = 0;
    std::vector<Coalition> members_;
};

/// All 2^n - 1 excesses sorted non-increasing; provenance records which
/// coalition produced each entry (ties broken by ascending mask).
struct ThetaVector {
    std::vector<Rational> entries;
    std::vector<Coalition> provenance;
};

enum class Ordering { Less, Equal, Greater };

/// e(S, x) = v(S) - x(S). Throws std::invalid_argument on the empty coalition.
Rational excess(const TUGame& game, Coalition s, const Payoff& x);

ThetaVector theta(const TUGame& game, const Payoff& x);

/// Lexicographic comparison of the value vectors. Throws on length mismatch.
Ordering lex_compare(const ThetaVector& a, const ThetaVector& b);

bool is_preimputation(const TUGame& game, const Payoff& x);
bool is_imputation(const TUGame& game, const Payoff& x);

/// D(N,v;psi,x): all nonempty S with excess >= psi.
CoalitionCollection level_collection(const TUGame& game, const Payoff& x, const Rational& psi);

/// Strictly decreasing distinct excess values attained at x.
std::vector<Rational> distinct_excess_levels(const TUGame& game, const Payoff& x);

}  // namespace nuc
