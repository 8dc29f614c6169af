#pragma once

#include <optional>
#include <vector>

#include "feec/rational.hpp"

namespace feec {

/// Dense rational matrix with exact elimination. Rank, determinant,
/// nullspaces, and solves go through fraction-free (integer-pivot)
/// Gaussian elimination after clearing row denominators.
class ExactMatrix {
public:
    ExactMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j);
    const Rational& at(int i, int j) const;

    int rank() const;
    /// Exact determinant; throws NotSquare for non-square input.
    /// The empty 0x0 matrix has determinant 1.
    Rational determinant() const;
    /// Basis of the right nullspace, one vector per free column,
    /// in ascending free-column order.
    std::vector<std::vector<Rational>> nullspace() const;
    /// Particular solution of A x = b with free variables set to zero,
    /// or nullopt when the system is inconsistent.
    std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;

    std::vector<Rational> apply(const std::vector<Rational>& x) const;
    ExactMatrix transposed() const;

private:
    int rows_;
    int cols_;
    std::vector<Rational> data_;
};

} // namespace feec
