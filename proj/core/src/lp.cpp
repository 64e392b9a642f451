#include "nuc/lp.hpp"

#include <stdexcept>

namespace nuc {
namespace {

// Standard computational form: min ctilde . xbar, Abar . xbar = bbar,
// xbar >= 0, bbar >= 0. Bounded-below variables are shifted by their lower
// bound, free variables split into a positive and a negative part, finite
// upper bounds become extra slack rows.
struct StandardForm {
    int m0 = 0;        // original equality row count
    int m = 0;         // total rows (m0 + upper-bound rows)
    int ns = 0;        // structural columns
    std::vector<std::vector<Rational>> a;  // m x ns
    std::vector<Rational> b;               // >= 0 after sign flips
    std::vector<Rational> c;               // minimize
    std::vector<int> row_sign;             // +-1 per row, applied to reach b >= 0
    // per original variable: column of positive part, column of negative part
    // (-1 when absent), lower shift
    std::vector<int> col_pos, col_neg;
    std::vector<Rational> shift;
    std::vector<int> upper_row;  // row index of the variable's upper-bound row, -1 if none
    std::vector<int> upper_vars;  // variables with finite upper, in row order
};

StandardForm standardize(const LPProblem& p) {
    const int nv = p.num_vars;
    if (static_cast<int>(p.objective.size()) != nv || static_cast<int>(p.lower.size()) != nv ||
        static_cast<int>(p.upper.size()) != nv || p.eq_rows.size() != p.eq_rhs.size())
        throw std::invalid_argument("LP dimensions inconsistent");
    for (const auto& row : p.eq_rows)
        if (static_cast<int>(row.size()) != nv) throw std::invalid_argument("LP row width mismatch");

    StandardForm sf;
    sf.m0 = static_cast<int>(p.eq_rows.size());
    sf.col_pos.assign(nv, -1);
    sf.col_neg.assign(nv, -1);
    sf.shift.assign(nv, Rational(0));
    sf.upper_row.assign(nv, -1);

    int ns = 0;
    for (int j = 0; j < nv; ++j) {
        if (p.lower[j]) {
            sf.col_pos[j] = ns++;
            sf.shift[j] = *p.lower[j];
        } else {
            sf.col_pos[j] = ns++;
            sf.col_neg[j] = ns++;
        }
        if (p.upper[j]) {
            if (p.lower[j] && *p.lower[j] > *p.upper[j])
                throw std::invalid_argument("lower bound exceeds upper bound");
            sf.upper_vars.push_back(j);
        }
    }
    const int mu = static_cast<int>(sf.upper_vars.size());
    // each upper-bound row gets its own slack column
    sf.ns = ns + mu;
    sf.m = sf.m0 + mu;
    sf.a.assign(sf.m, std::vector<Rational>(sf.ns, Rational(0)));
    sf.b.assign(sf.m, Rational(0));
    sf.c.assign(sf.ns, Rational(0));
    sf.row_sign.assign(sf.m, 1);

    for (int i = 0; i < sf.m0; ++i) {
        Rational rhs = p.eq_rhs[i];
        for (int j = 0; j < nv; ++j) {
            const Rational& aij = p.eq_rows[i][j];
            if (aij == 0) continue;
            sf.a[i][sf.col_pos[j]] += aij;
            if (sf.col_neg[j] >= 0) sf.a[i][sf.col_neg[j]] -= aij;
            rhs -= aij * sf.shift[j];
        }
        sf.b[i] = rhs;
    }
    for (int k = 0; k < mu; ++k) {
        const int j = sf.upper_vars[k];
        const int row = sf.m0 + k;
        sf.upper_row[j] = row;
        sf.a[row][sf.col_pos[j]] = 1;
        if (sf.col_neg[j] >= 0) sf.a[row][sf.col_neg[j]] = -1;
        sf.a[row][ns + k] = 1;  // slack
        sf.b[row] = *p.upper[j] - sf.shift[j];
    }
    for (int j = 0; j < nv; ++j) {
        // maximize c.w  ->  minimize -c.xbar
        sf.c[sf.col_pos[j]] -= p.objective[j];
        if (sf.col_neg[j] >= 0) sf.c[sf.col_neg[j]] += p.objective[j];
    }
    for (int i = 0; i < sf.m; ++i) {
        if (sf.b[i] < 0) {
            sf.row_sign[i] = -1;
            sf.b[i] = -sf.b[i];
            for (auto& v : sf.a[i]) v = -v;
        }
    }
    return sf;
}

// Tableau simplex over the standard form. Artificial columns are kept for
// the whole run so row prices stay readable from the cost row.
class Simplex {
public:
    explicit Simplex(const StandardForm& sf)
        : m_(sf.m), ns_(sf.ns), ncols_(sf.ns + sf.m), a_(sf.m), b_(sf.b), basis_(sf.m) {
        for (int i = 0; i < m_; ++i) {
            a_[i] = sf.a[i];
            a_[i].resize(ncols_, Rational(0));
            a_[i][ns_ + i] = 1;
            basis_[i] = ns_ + i;
        }
    }

    std::int64_t pivots() const { return pivots_; }

    // Returns true when feasible.
    bool phase1() {
        d_.assign(ncols_, Rational(0));
        z_ = 0;
        // phase-1 costs: 1 on artificials, 0 elsewhere; basis is all-artificial
        for (int j = 0; j < ns_; ++j)
            for (int i = 0; i < m_; ++i) d_[j] -= a_[i][j];
        for (int i = 0; i < m_; ++i) z_ += b_[i];
        run(/*allow_artificials=*/false, nullptr);
        if (z_ != 0) return false;
        drive_out_artificials();
        return true;
    }

    // Row prices of the current cost row read off the artificial columns,
    // with phase-dependent artificial cost ca.
    std::vector<Rational> row_prices(const Rational& ca) const {
        std::vector<Rational> y(m_);
        for (int i = 0; i < m_; ++i) y[i] = ca - d_[ns_ + i];
        return y;
    }

    // Returns false when unbounded; *unbounded_col then names the entering
    // column with no blocking row.
    bool phase2(const std::vector<Rational>& cost, int* unbounded_col) {
        d_ = cost;
        d_.resize(ncols_, Rational(0));
        z_ = 0;
        for (int i = 0; i < m_; ++i) {
            const Rational cb = basis_[i] < ns_ ? cost[basis_[i]] : Rational(0);
            if (cb == 0) continue;
            z_ += cb * b_[i];
            for (int j = 0; j < ncols_; ++j) d_[j] -= cb * a_[i][j];
        }
        // restore d of basic columns to exact zero (they are by construction)
        return run(/*allow_artificials=*/false, unbounded_col);
    }

    std::vector<Rational> primal() const {
        std::vector<Rational> x(ns_, Rational(0));
        for (int i = 0; i < m_; ++i)
            if (basis_[i] < ns_) x[basis_[i]] = b_[i];
        return x;
    }

    std::vector<Rational> ray(int entering) const {
        std::vector<Rational> dir(ns_, Rational(0));
        dir[entering] = 1;
        for (int i = 0; i < m_; ++i)
            if (basis_[i] < ns_) dir[basis_[i]] = -a_[i][entering];
        return dir;
    }

    const Rational& objective() const { return z_; }

private:
    // Bland's rule: entering = lowest-index column with negative reduced
    // cost, leaving = among minimum-ratio rows the one with the
    // lowest-index basic variable.
    bool run(bool allow_artificials, int* unbounded_col) {
        const int limit_cols = allow_artificials ? ncols_ : ns_;
        for (;;) {
            int e = -1;
            for (int j = 0; j < limit_cols; ++j) {
                if (d_[j] < 0) {
                    e = j;
                    break;
                }
            }
            if (e == -1) return true;
            int r = -1;
            Rational best;
            for (int i = 0; i < m_; ++i) {
                if (a_[i][e] <= 0) continue;
                Rational ratio = b_[i] / a_[i][e];
                if (r == -1 || ratio < best || (ratio == best && basis_[i] < basis_[r])) {
                    r = i;
                    best = ratio;
                }
            }
            if (r == -1) {
                if (unbounded_col) *unbounded_col = e;
                return false;
            }
            pivot(r, e);
        }
    }

    void pivot(int r, int e) {
        ++pivots_;
        const Rational p = a_[r][e];
        for (auto& v : a_[r]) v /= p;
        b_[r] /= p;
        for (int i = 0; i < m_; ++i) {
            if (i == r || a_[i][e] == 0) continue;
            const Rational f = a_[i][e];
            for (int j = 0; j < ncols_; ++j) a_[i][j] -= f * a_[r][j];
            b_[i] -= f * b_[r];
        }
        if (d_[e] != 0) {
            const Rational f = d_[e];
            for (int j = 0; j < ncols_; ++j) d_[j] -= f * a_[r][j];
            z_ += f * b_[r];
        }
        basis_[r] = e;
    }

    void drive_out_artificials() {
        for (int i = 0; i < m_; ++i) {
            if (basis_[i] < ns_) continue;
            int e = -1;
            for (int j = 0; j < ns_; ++j) {
                if (a_[i][j] != 0) {
                    e = j;
                    break;
                }
            }
            // all-zero structural row: redundant, artificial stays basic at 0
            if (e != -1) pivot(i, e);
        }
    }

    int m_, ns_, ncols_;
    std::vector<std::vector<Rational>> a_;
    std::vector<Rational> b_;
    std::vector<int> basis_;
    std::vector<Rational> d_;  // reduced costs of the active phase
    Rational z_ = 0;           // phase 1: infeasibility measure; phase 2: -objective progress
    std::int64_t pivots_ = 0;
};

std::vector<Rational> map_primal(const StandardForm& sf, const std::vector<Rational>& xbar,
                                 int nv) {
    std::vector<Rational> w(nv);
    for (int j = 0; j < nv; ++j) {
        w[j] = sf.shift[j] + xbar[sf.col_pos[j]];
        if (sf.col_neg[j] >= 0) w[j] -= xbar[sf.col_neg[j]];
    }
    return w;
}

}  // namespace

LPProblem LPProblem::make(int vars) {
    LPProblem p;
    p.num_vars = vars;
    p.objective.assign(vars, Rational(0));
    p.lower.assign(vars, std::nullopt);
    p.upper.assign(vars, std::nullopt);
    return p;
}

LPOutcome solve(const LPProblem& problem) {
    const StandardForm sf = standardize(problem);
    Simplex sx(sf);
    LPOutcome out;

    if (!sx.phase1()) {
        out.status = LPStatus::Infeasible;
        out.pivots = sx.pivots();
        // phase-1 prices: yb > 0, yA <= 0 on every standard-form column
        std::vector<Rational> y = sx.row_prices(Rational(1));
        out.farkas.resize(sf.m0);
        for (int i = 0; i < sf.m0; ++i) out.farkas[i] = Rational(sf.row_sign[i]) * y[i];
        out.farkas_upper.resize(sf.m - sf.m0);
        for (int i = sf.m0; i < sf.m; ++i)
            out.farkas_upper[i - sf.m0] = Rational(sf.row_sign[i]) * y[i];
        return out;
    }

    int unbounded_col = -1;
    const bool bounded = sx.phase2(sf.c, &unbounded_col);
    out.pivots = sx.pivots();
    if (!bounded) {
        out.status = LPStatus::Unbounded;
        out.primal = map_primal(sf, sx.primal(), problem.num_vars);
        std::vector<Rational> dirbar = sx.ray(unbounded_col);
        out.ray.assign(problem.num_vars, Rational(0));
        for (int j = 0; j < problem.num_vars; ++j) {
            out.ray[j] = dirbar[sf.col_pos[j]];
            if (sf.col_neg[j] >= 0) out.ray[j] -= dirbar[sf.col_neg[j]];
        }
        return out;
    }

    out.status = LPStatus::Optimal;
    out.primal = map_primal(sf, sx.primal(), problem.num_vars);
    out.objective_value = 0;
    for (int j = 0; j < problem.num_vars; ++j)
        out.objective_value += problem.objective[j] * out.primal[j];
    // row prices of min(-c): expose duals of the max problem
    std::vector<Rational> ybar = sx.row_prices(Rational(0));
    out.dual.resize(sf.m0);
    for (int i = 0; i < sf.m0; ++i) out.dual[i] = -Rational(sf.row_sign[i]) * ybar[i];
    out.dual_upper.resize(sf.m - sf.m0);
    for (int i = sf.m0; i < sf.m; ++i)
        out.dual_upper[i - sf.m0] = -Rational(sf.row_sign[i]) * ybar[i];
    return out;
}

bool lp_certificates_valid(const LPProblem& p, const LPOutcome& out) {
    const int nv = p.num_vars;
    const int m0 = static_cast<int>(p.eq_rows.size());
    auto eq_residuals_zero = [&](const std::vector<Rational>& w) {
        for (int i = 0; i < m0; ++i) {
            Rational lhs(0);
            for (int j = 0; j < nv; ++j) lhs += p.eq_rows[i][j] * w[j];
            if (lhs != p.eq_rhs[i]) return false;
        }
        return true;
    };
    auto bounds_hold = [&](const std::vector<Rational>& w) {
        for (int j = 0; j < nv; ++j) {
            if (p.lower[j] && w[j] < *p.lower[j]) return false;
            if (p.upper[j] && w[j] > *p.upper[j]) return false;
        }
        return true;
    };
    // yA restricted to equality rows plus the upper-bound multiplier of var j
    auto col_price = [&](const std::vector<Rational>& y, int j) {
        Rational s(0);
        for (int i = 0; i < m0; ++i) s += y[i] * p.eq_rows[i][j];
        return s;
    };

    switch (out.status) {
        case LPStatus::Optimal: {
            if (static_cast<int>(out.primal.size()) != nv) return false;
            if (!eq_residuals_zero(out.primal) || !bounds_hold(out.primal)) return false;
            Rational obj(0);
            for (int j = 0; j < nv; ++j) obj += p.objective[j] * out.primal[j];
            if (obj != out.objective_value) return false;
            if (static_cast<int>(out.dual.size()) != m0) return false;
            // KKT: c_j = yA_j + mu_j - lambda_j with mu, lambda >= 0 and
            // exact complementary slackness; this forces a zero duality gap.
            int uk = 0;
            for (int j = 0; j < nv; ++j) {
                Rational mu(0);
                if (p.upper[j]) {
                    if (uk >= static_cast<int>(out.dual_upper.size())) return false;
                    mu = out.dual_upper[uk++];
                    if (mu < 0) return false;
                    if (mu > 0 && out.primal[j] != *p.upper[j]) return false;
                }
                const Rational lambda = col_price(out.dual, j) + mu - p.objective[j];
                if (!p.lower[j]) {
                    if (lambda != 0) return false;
                } else {
                    if (lambda < 0) return false;
                    if (lambda > 0 && out.primal[j] != *p.lower[j]) return false;
                }
            }
            return true;
        }
        case LPStatus::Infeasible: {
            if (static_cast<int>(out.farkas.size()) != m0) return false;
            // y.(b - A.l - upper terms) > 0 while every column price is <= 0
            Rational gain(0);
            for (int i = 0; i < m0; ++i) gain += out.farkas[i] * p.eq_rhs[i];
            int uk = 0;
            for (int j = 0; j < nv; ++j) {
                Rational price = col_price(out.farkas, j);
                Rational fu(0);
                if (p.upper[j]) {
                    if (uk >= static_cast<int>(out.farkas_upper.size())) return false;
                    fu = out.farkas_upper[uk++];
                    price += fu;
                    // upper-bound rows w + s = u have nonnegative slack, so
                    // the certificate needs fu <= 0 on the slack column
                    if (fu > 0) return false;
                    gain += fu * *p.upper[j];
                }
                if (!p.lower[j]) {
                    if (price != 0) return false;
                } else {
                    if (price > 0) return false;
                    gain -= price * *p.lower[j];
                }
            }
            return gain > 0;
        }
        case LPStatus::Unbounded: {
            if (static_cast<int>(out.ray.size()) != nv ||
                static_cast<int>(out.primal.size()) != nv)
                return false;
            if (!eq_residuals_zero(out.primal) || !bounds_hold(out.primal)) return false;
            Rational gain(0);
            for (int i = 0; i < m0; ++i) {
                Rational lhs(0);
                for (int j = 0; j < nv; ++j) lhs += p.eq_rows[i][j] * out.ray[j];
                if (lhs != 0) return false;
            }
            for (int j = 0; j < nv; ++j) {
                if (p.lower[j] && out.ray[j] < 0) return false;
                if (p.upper[j] && out.ray[j] > 0) return false;
                gain += p.objective[j] * out.ray[j];
            }
            return gain > 0;
        }
    }
    return false;
}

}  // namespace nuc
