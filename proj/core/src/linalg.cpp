#include "nuc/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace nuc {

int SpanBasis::reduce(std::vector<Rational>& vec, ElimStats* stats) const {
    if (static_cast<int>(vec.size()) != dim_) throw std::invalid_argument("vector dimension mismatch");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const int pc = pivot_cols_[r];
        if (vec[pc] == 0) continue;
        const Rational factor = vec[pc];
        for (int c = pc; c < dim_; ++c) vec[c] -= factor * rows_[r][c];
        if (stats) stats->ops += dim_ - pc;
    }
    for (int c = 0; c < dim_; ++c)
        if (vec[c] != 0) return c;
    return -1;
}

bool SpanBasis::contains(const std::vector<Rational>& vec, ElimStats* stats) const {
    std::vector<Rational> work = vec;
    return reduce(work, stats) == -1;
}

bool SpanBasis::insert(const std::vector<Rational>& vec, ElimStats* stats) {
    std::vector<Rational> work = vec;
    const int pc = reduce(work, stats);
    if (pc == -1) return false;
    const Rational lead = work[pc];
    for (int c = pc; c < dim_; ++c) work[c] /= lead;
    if (stats) stats->ops += dim_ - pc;
    // back-substitute into existing rows so reduce() stays single-pass
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r][pc] == 0) continue;
        const Rational factor = rows_[r][pc];
        for (int c = pc; c < dim_; ++c) rows_[r][c] -= factor * work[c];
        if (stats) stats->ops += dim_ - pc;
    }
    auto pos = std::lower_bound(pivot_cols_.begin(), pivot_cols_.end(), pc);
    const auto idx = pos - pivot_cols_.begin();
    pivot_cols_.insert(pos, pc);
    rows_.insert(rows_.begin() + idx, std::move(work));
    return true;
}

int rank(const std::vector<std::vector<Rational>>& vectors, ElimStats* stats) {
    if (vectors.empty()) return 0;
    SpanBasis basis(static_cast<int>(vectors.front().size()));
    for (const auto& v : vectors) basis.insert(v, stats);
    return basis.rank();
}

bool in_span(const std::vector<Rational>& vec, const std::vector<std::vector<Rational>>& basis,
             ElimStats* stats) {
    SpanBasis b(static_cast<int>(vec.size()));
    for (const auto& v : basis) b.insert(v, stats);
    return b.contains(vec, stats);
}

std::optional<std::vector<Rational>> solve_unique(const std::vector<std::vector<Rational>>& rows,
                                                  const std::vector<Rational>& rhs) {
    if (rows.size() != rhs.size()) throw std::invalid_argument("system shape mismatch");
    if (rows.empty()) return std::nullopt;
    const int n = static_cast<int>(rows.front().size());
    // eliminate on [A | b]
    std::vector<std::vector<Rational>> aug;
    aug.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::vector<Rational> row = rows[i];
        row.push_back(rhs[i]);
        aug.push_back(std::move(row));
    }
    SpanBasis basis(n + 1);
    for (auto& row : aug) basis.insert(row);
    // inconsistent iff some reduced row is (0,...,0 | nonzero)
    std::vector<Rational> unit(n + 1, Rational(0));
    unit[n] = 1;
    if (basis.contains(unit)) return std::nullopt;
    if (basis.rank() != n) return std::nullopt;
    // with rank n and consistency, each variable column is a pivot; solve by
    // expressing e_i in terms of the reduced rows
    SpanBasis coeff(n);
    std::vector<std::vector<Rational>> reduced;
    for (const auto& row : aug) {
        std::vector<Rational> lhs(row.begin(), row.begin() + n);
        if (coeff.insert(lhs)) reduced.push_back(row);
    }
    // reduced now has n independent rows; plain back-solve
    std::vector<Rational> x(n, Rational(0));
    // Gaussian elimination to reduced row echelon on the n x (n+1) system
    std::vector<std::vector<Rational>> m = reduced;
    int r = 0;
    for (int c = 0; c < n && r < n; ++c) {
        int pr = -1;
        for (int i = r; i < n; ++i)
            if (m[i][c] != 0) { pr = i; break; }
        if (pr == -1) continue;
        std::swap(m[r], m[pr]);
        const Rational lead = m[r][c];
        for (int j = c; j <= n; ++j) m[r][j] /= lead;
        for (int i = 0; i < n; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational f = m[i][c];
            for (int j = c; j <= n; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    for (int i = 0; i < n; ++i) {
        for (int c = 0; c < n; ++c) {
            if (m[i][c] != 0) {
                x[c] = m[i][n];
                break;
            }
        }
    }
    return x;
}

}  // namespace nuc
