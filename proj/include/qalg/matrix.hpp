#pragma once

#include <optional>
#include <vector>

#include "qalg/scalar.hpp"

namespace qalg {

/**
 * Dense matrix over a cyclotomic field. All entries share one order; storing
 * an entry of a different order re-embeds the whole matrix into the lcm.
 * Rank, kernel and solve results are exact. Elimination uses a fixed pivot
 * rule (first nonzero entry in row-major scan order) so outputs are
 * bit-reproducible.
 */
class CycMatrix {
public:
    CycMatrix() : rows_(0), cols_(0), order_(1) {}
    CycMatrix(size_t rows, size_t cols, unsigned order = 1)
        : rows_(rows), cols_(cols), order_(order),
          a_(rows * cols, Cyclotomic(order, {Rational(0)})) {}

    static CycMatrix identity(size_t n, unsigned order = 1);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    unsigned order() const { return order_; }

    const Cyclotomic& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }
    void set(size_t i, size_t j, const Cyclotomic& v);

    CycMatrix operator+(const CycMatrix& rhs) const;
    CycMatrix operator-(const CycMatrix& rhs) const;
    CycMatrix operator*(const CycMatrix& rhs) const;
    CycMatrix scaled(const Cyclotomic& c) const;
    bool operator==(const CycMatrix& rhs) const;
    bool operator!=(const CycMatrix& rhs) const { return !(*this == rhs); }

    CycMatrix transpose() const;
    /// Entrywise complex conjugate (no transpose).
    CycMatrix conjugated() const;
    /// Kronecker product with the convention (A (x) B)(e_i (x) e_j) = A e_i (x) B e_j.
    CycMatrix kron(const CycMatrix& rhs) const;

    Cyclotomic trace() const;
    bool is_zero() const;
    bool is_identity() const;
    /// True when entries are exactly 0/1 forming a permutation matrix.
    bool is_permutation() const;

    size_t rank() const;
    Cyclotomic det() const;
    std::optional<CycMatrix> inverse() const;

    /// Exact basis of the right null space; returned as a matrix whose columns
    /// are the basis vectors (cols() == nullity). Empty (0 columns) iff injective.
    CycMatrix kernel_basis() const;

    /// Solves M x = rhs (rhs a column vector); returns std::nullopt when the
    /// system is inconsistent.
    std::optional<CycMatrix> solve(const CycMatrix& rhs) const;

    CycMatrix column(size_t j) const;
    CycMatrix row(size_t i) const;
    /// Horizontal concatenation.
    CycMatrix hcat(const CycMatrix& rhs) const;

    /// Swap map V (x) W -> W (x) V on tensor-product bases, dim V = m, dim W = n.
    static CycMatrix swap_map(size_t m, size_t n);

private:
    size_t rows_, cols_;
    unsigned order_;
    std::vector<Cyclotomic> a_;

    void raise_order(unsigned m);
    static void unify(CycMatrix& a, CycMatrix& b);

    // Row echelon reduction in place; returns pivot columns. When `reduced`
    // is set, back-eliminates to RREF and normalizes pivots to 1.
    std::vector<size_t> echelon(bool reduced);

    friend struct EliminationAccess;
};

} // namespace qalg
