#include "nuc/balance.hpp"

#include <algorithm>
#include <stdexcept>

namespace nuc {
namespace {

// max t  s.t.  sum_S w_S 1_S = 1_N,  w_S >= 0,  w_S >= t for S in required,
// t >= 0.  t is automatically <= 1 because every player row caps its
// coalitions' weights at 1.
struct WeightSystem {
    LPOutcome outcome;
    int t_var;
};

WeightSystem solve_weight_system(const CoalitionCollection& collection,
                                 const CoalitionCollection& required) {
    const int n = collection.ambient_players();
    const int m = collection.size();
    std::vector<int> req_index;
    for (int j = 0; j < m; ++j)
        if (required.contains(collection.members()[j])) req_index.push_back(j);
    const int r = static_cast<int>(req_index.size());

    LPProblem p = LPProblem::make(m + 1 + r);  // w_1..w_m, t, s_1..s_r
    const int t_var = m;
    for (int j = 0; j <= m; ++j) p.lower[j] = Rational(0);
    for (int k = 0; k < r; ++k) p.lower[m + 1 + k] = Rational(0);
    p.objective[t_var] = 1;
    for (int i = 0; i < n; ++i) {
        std::vector<Rational> row(p.num_vars, Rational(0));
        for (int j = 0; j < m; ++j)
            if (collection.members()[j].contains(i)) row[j] = 1;
        p.eq_rows.push_back(std::move(row));
        p.eq_rhs.emplace_back(1);
    }
    for (int k = 0; k < r; ++k) {
        std::vector<Rational> row(p.num_vars, Rational(0));
        row[req_index[k]] = 1;
        row[t_var] = -1;
        row[m + 1 + k] = -1;
        p.eq_rows.push_back(std::move(row));
        p.eq_rhs.emplace_back(0);
    }
    return WeightSystem{solve(p), t_var};
}

// Preferred rejection certificate: the sum of the required members'
// indicator vectors, centered to y(N) = 0. Deterministic and independent of
// pivot order; valid only sometimes, so callers fall back to an LP-derived
// direction when the checks fail.
std::optional<std::vector<Rational>> canonical_certificate(const CoalitionCollection& tested,
                                                           const CoalitionCollection& required) {
    const int n = tested.ambient_players();
    std::vector<Rational> y(n, Rational(0));
    Rational total(0);
    for (Coalition s : required)
        for (int i = 0; i < n; ++i)
            if (s.contains(i)) {
                y[i] += 1;
                total += 1;
            }
    const Rational shift = total / n;
    for (auto& v : y) v -= shift;

    auto y_of = [&](Coalition s) {
        Rational sum(0);
        for (int i = 0; i < n; ++i)
            if (s.contains(i)) sum += y[i];
        return sum;
    };
    for (Coalition s : tested)
        if (y_of(s) < 0) return std::nullopt;
    for (Coalition s : required)
        if (y_of(s) > 0) return y;
    return std::nullopt;
}

// Turns an infeasibility certificate of the covering system into a direction
// with y(S) > 0 for every member and y(N) = 0.
std::vector<Rational> shifted_farkas(const std::vector<Rational>& farkas, int n) {
    std::vector<Rational> y(n);
    Rational total(0);
    for (int i = 0; i < n; ++i) {
        y[i] = -farkas[i];
        total += y[i];
    }
    const Rational shift = total / n;  // total < 0 for a valid certificate
    for (auto& v : y) v -= shift;
    return y;
}

// First member of `required` (canonical order) whose y(S) can be made
// positive over the cone {y(T) >= 0 on collection, y(N) = 0} boxed to
// [-1,1]^n; nullopt when every such maximum is 0.
std::optional<std::vector<Rational>> cone_witness(const CoalitionCollection& collection,
                                                  const CoalitionCollection& required,
                                                  std::int64_t* pivots) {
    const int n = collection.ambient_players();
    const int m = collection.size();
    for (Coalition target : required) {
        LPProblem p = LPProblem::make(n + m);  // y_1..y_n, u_1..u_m
        for (int i = 0; i < n; ++i) {
            p.lower[i] = Rational(-1);
            p.upper[i] = Rational(1);
            if (target.contains(i)) p.objective[i] = 1;
        }
        for (int k = 0; k < m; ++k) p.lower[n + k] = Rational(0);
        for (int k = 0; k < m; ++k) {
            std::vector<Rational> row(p.num_vars, Rational(0));
            for (int i = 0; i < n; ++i)
                if (collection.members()[k].contains(i)) row[i] = 1;
            row[n + k] = -1;
            p.eq_rows.push_back(std::move(row));
            p.eq_rhs.emplace_back(0);
        }
        std::vector<Rational> nrow(p.num_vars, Rational(0));
        for (int i = 0; i < n; ++i) nrow[i] = 1;
        p.eq_rows.push_back(std::move(nrow));
        p.eq_rhs.emplace_back(0);

        LPOutcome out = solve(p);
        if (pivots) *pivots += out.pivots;
        if (out.status != LPStatus::Optimal) throw std::logic_error("cone LP must be optimal");
        if (out.objective_value > 0)
            return std::vector<Rational>(out.primal.begin(), out.primal.begin() + n);
    }
    return std::nullopt;
}

CoalitionCollection union_collections(const CoalitionCollection& a, const CoalitionCollection& b) {
    std::vector<Coalition> members(a.members());
    for (Coalition s : b)
        if (!a.contains(s)) members.push_back(s);
    return CoalitionCollection(a.ambient_players(), std::move(members));
}

}  // namespace

BalanceVerdict check_balanced(const CoalitionCollection& c) {
    if (c.empty()) throw std::invalid_argument("balancedness of an empty collection");
    const int n = c.ambient_players();
    auto [out, t_var] = solve_weight_system(c, c);
    BalanceVerdict verdict;
    verdict.lp_pivots = out.pivots;
    if (out.status == LPStatus::Infeasible) {
        verdict.kind = BalanceKind::Unbalanced;
        if (auto y = canonical_certificate(c, c)) {
            verdict.farkas_y = *y;
        } else {
            verdict.farkas_y = shifted_farkas(out.farkas, n);
        }
        return verdict;
    }
    if (out.status != LPStatus::Optimal) throw std::logic_error("weight LP cannot be unbounded");
    verdict.weights.assign(out.primal.begin(), out.primal.begin() + c.size());
    if (out.primal[t_var] > 0) {
        verdict.kind = BalanceKind::Balanced;
    } else {
        verdict.kind = BalanceKind::WeaklyBalancedOnly;
        if (auto y = canonical_certificate(c, c)) {
            verdict.farkas_y = *y;
        } else if (auto w = cone_witness(c, c, &verdict.lp_pivots)) {
            verdict.farkas_y = *w;
        }
    }
    return verdict;
}

BalanceVerdict check_weakly_balanced(const CoalitionCollection& c) { return check_balanced(c); }

PropertyIResult property_I(const CoalitionCollection& c) {
    if (c.empty()) throw std::invalid_argument("Property I of an empty collection");
    PropertyIResult result;
    if (auto y = canonical_certificate(c, c)) {
        result.witness = *y;
    } else {
        result.witness = cone_witness(c, c, &result.lp_pivots);
    }
    result.holds = !result.witness.has_value();
    return result;
}

PropertyIIResult property_II(const CoalitionCollection& c) {
    BalanceVerdict verdict = check_balanced(c);
    PropertyIIResult result;
    result.lp_pivots = verdict.lp_pivots;
    result.holds = verdict.kind == BalanceKind::Balanced;
    if (result.holds) result.weights = verdict.weights;
    return result;
}

NucleolusPropertyResult positive_weight_system(const CoalitionCollection& collection,
                                               const CoalitionCollection& required) {
    NucleolusPropertyResult result;
    result.tested = collection;
    auto [out, t_var] = solve_weight_system(collection, required);
    result.lp_pivots = out.pivots;
    if (out.status == LPStatus::Infeasible) {
        result.holds = false;
        if (auto y = canonical_certificate(collection, required)) {
            result.certificate = *y;
        } else {
            result.certificate = shifted_farkas(out.farkas, collection.ambient_players());
        }
        return result;
    }
    if (out.status != LPStatus::Optimal) throw std::logic_error("weight LP cannot be unbounded");
    if (out.primal[t_var] > 0) {
        result.holds = true;
        result.certificate.assign(out.primal.begin(), out.primal.begin() + collection.size());
    } else {
        result.holds = false;
        if (auto y = canonical_certificate(collection, required)) {
            result.certificate = *y;
        } else if (auto w = cone_witness(collection, required, &result.lp_pivots)) {
            result.certificate = *w;
        }
    }
    return result;
}

NucleolusPropertyResult nucleolus_property(const CoalitionCollection& c,
                                           const CoalitionCollection& d_required,
                                           const CoalitionCollection& c0, PropertyMode mode) {
    for (Coalition s : c0)
        if (s.size() != 1) throw std::invalid_argument("c0 must contain singletons only");
    if (!d_required.subset_of(c)) throw std::invalid_argument("d_required must be a subset of c");
    const CoalitionCollection tested = union_collections(c, c0);
    if (mode == PropertyMode::II) return positive_weight_system(tested, d_required);

    NucleolusPropertyResult result;
    result.tested = tested;
    auto witness = cone_witness(tested, d_required, &result.lp_pivots);
    result.holds = !witness.has_value();
    if (witness) result.certificate = *witness;
    return result;
}

}  // namespace nuc
