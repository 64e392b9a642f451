#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nuc/rational.hpp"

namespace nuc {

/// Counts exact elimination steps (row axpy operations) so span checks and
/// balancedness LPs can be compared on a common cost scale.
struct ElimStats {
    std::int64_t ops = 0;
};

/// Incremental row basis in reduced echelon-like form for repeated exact
/// rank and span-membership queries.
class SpanBasis {
public:
    explicit SpanBasis(int dim) : dim_(dim) {}

    [[nodiscard]] int dim() const { return dim_; }
    [[nodiscard]] int rank() const { return static_cast<int>(rows_.size()); }

    /// True iff vec is a rational linear combination of the inserted vectors.
    [[nodiscard]] bool contains(const std::vector<Rational>& vec, ElimStats* stats = nullptr) const;

    /// Inserts vec; returns true if it enlarged the span.
    bool insert(const std::vector<Rational>& vec, ElimStats* stats = nullptr);

private:
    /// Reduces vec against the basis in place; returns the first nonzero
    /// column, or -1 if vec reduced to zero.
    int reduce(std::vector<Rational>& vec, ElimStats* stats) const;

    int dim_;
    std::vector<std::vector<Rational>> rows_;  // each normalized to leading 1
    std::vector<int> pivot_cols_;              // strictly increasing insert keeps them sorted
};

/// Exact rank via Gaussian elimination.
int rank(const std::vector<std::vector<Rational>>& vectors, ElimStats* stats = nullptr);

/// True iff vec lies in the rational span of basis.
bool in_span(const std::vector<Rational>& vec, const std::vector<std::vector<Rational>>& basis,
             ElimStats* stats = nullptr);

/// Solves rows * x = rhs when the solution is unique; nullopt if the system
/// is inconsistent or underdetermined.
std::optional<std::vector<Rational>> solve_unique(const std::vector<std::vector<Rational>>& rows,
                                                  const std::vector<Rational>& rhs);

}  // namespace nuc
