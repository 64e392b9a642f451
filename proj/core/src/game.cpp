#include "nuc/game.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace nuc {

std::vector<Rational> indicator(Coalition s, int n) {
    std::vector<Rational> v(n, Rational(0));
    for (int i = 0; i < n; ++i)
        if (s.contains(i)) v[i] = 1;
    return v;
}

std::string coalition_to_string(Coalition s) {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < 32; ++i) {
        if (!s.contains(i)) continue;
        if (!first) out += ",";
        out += std::to_string(i + 1);
        first = false;
    }
    out += "}";
    return out;
}

TUGame::TUGame(int n) : n_(n) {
    if (n < 1 || n > kMaxPlayers)
        throw std::invalid_argument("player count must be in 1.." + std::to_string(kMaxPlayers));
    worth_.assign(std::size_t(1) << n, Rational(0));
}

void TUGame::set_worth(Coalition s, Rational value) {
    if (s.mask >= worth_.size()) throw std::invalid_argument("coalition outside player set");
    if (s.empty()) {
        if (value != 0) throw std::invalid_argument("worth of the empty coalition is fixed at 0");
        return;
    }
    worth_[s.mask] = std::move(value);
}

Rational Payoff::sum(Coalition s) const {
    Rational total(0);
    for (int i = 0; i < size(); ++i)
        if (s.contains(i)) total += values_[i];
    return total;
}

CoalitionCollection::CoalitionCollection(int n, std::vector<Coalition> members)
    : n_(n), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (members_[i].empty()) throw std::invalid_argument("collection member is empty");
        if (members_[i].mask >= (1u << n)) throw std::invalid_argument("member outside player set");
        if (i > 0 && members_[i] == members_[i - 1])
            throw std::invalid_argument("duplicate coalition in collection");
    }
}

bool CoalitionCollection::contains(Coalition s) const {
    return std::binary_search(members_.begin(), members_.end(), s);
}

bool CoalitionCollection::subset_of(const CoalitionCollection& other) const {
    return std::all_of(members_.begin(), members_.end(),
                       [&](Coalition s) { return other.contains(s); });
}

Rational excess(const TUGame& game, Coalition s, const Payoff& x) {
    if (s.empty()) throw std::invalid_argument("excess of the empty coalition");
    if (x.size() != game.players()) throw std::invalid_argument("payoff length mismatch");
    return game.worth(s) - x.sum(s);
}

ThetaVector theta(const TUGame& game, const Payoff& x) {
    if (x.size() != game.players()) throw std::invalid_argument("payoff length mismatch");
    const std::uint32_t count = game.coalition_count();
    std::vector<std::pair<Rational, Coalition>> items;
    items.reserve(count);
    for (std::uint32_t m = 1; m <= count; ++m) {
        Coalition s(m);
        items.emplace_back(excess(game, s, x), s);
    }
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    ThetaVector t;
    t.entries.reserve(count);
    t.provenance.reserve(count);
    for (auto& [value, s] : items) {
        t.entries.push_back(std::move(value));
        t.provenance.push_back(s);
    }
    return t;
}

Ordering lex_compare(const ThetaVector& a, const ThetaVector& b) {
    if (a.entries.size() != b.entries.size())
        throw std::invalid_argument("theta vectors of different length");
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        if (a.entries[i] < b.entries[i]) return Ordering::Less;
        if (a.entries[i] > b.entries[i]) return Ordering::Greater;
    }
    return Ordering::Equal;
}

bool is_preimputation(const TUGame& game, const Payoff& x) {
    if (x.size() != game.players()) return false;
    return x.sum(grand_coalition(game.players())) == game.worth(grand_coalition(game.players()));
}

bool is_imputation(const TUGame& game, const Payoff& x) {
    if (!is_preimputation(game, x)) return false;
    for (int i = 0; i < game.players(); ++i)
        if (x[i] < game.worth(Coalition(1u << i))) return false;
    return true;
}

CoalitionCollection level_collection(const TUGame& game, const Payoff& x, const Rational& psi) {
    std::vector<Coalition> members;
    const std::uint32_t count = game.coalition_count();
    for (std::uint32_t m = 1; m <= count; ++m) {
        Coalition s(m);
        if (excess(game, s, x) >= psi) members.push_back(s);
    }
    return CoalitionCollection(game.players(), std::move(members));
}

std::vector<Rational> distinct_excess_levels(const TUGame& game, const Payoff& x) {
    std::vector<Rational> levels;
    const std::uint32_t count = game.coalition_count();
    for (std::uint32_t m = 1; m <= count; ++m) levels.push_back(excess(game, Coalition(m), x));
    std::sort(levels.begin(), levels.end(), std::greater<>());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    return levels;
}

}  // namespace nuc
