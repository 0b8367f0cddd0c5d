#include "qalg/matrix.hpp"

#include <numeric>

namespace qalg {

CycMatrix CycMatrix::identity(size_t n, unsigned order) {
    CycMatrix m(n, n, order);
    Cyclotomic one = Cyclotomic(order, {Rational(1)});
    for (size_t i = 0; i < n; ++i) m.a_[i * n + i] = one;
    return m;
}

void CycMatrix::raise_order(unsigned m) {
    if (m == order_) return;
    for (auto& x : a_) x = x.embedded(m);
    order_ = m;
}

void CycMatrix::unify(CycMatrix& a, CycMatrix& b) {
    if (a.order_ == b.order_) return;
    unsigned l = std::lcm(a.order_, b.order_);
    a.raise_order(l);
    b.raise_order(l);
}

void CycMatrix::set(size_t i, size_t j, const Cyclotomic& v) {
    if (v.order() == order_) {
        a_[i * cols_ + j] = v;
        return;
    }
    unsigned l = std::lcm(order_, v.order());
    raise_order(l);
    a_[i * cols_ + j] = v.embedded(l);
}

CycMatrix CycMatrix::operator+(const CycMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error("matrix shape mismatch in +");
    CycMatrix a = *this, b = rhs;
    unify(a, b);
    for (size_t k = 0; k < a.a_.size(); ++k) a.a_[k] += b.a_[k];
    return a;
}

CycMatrix CycMatrix::operator-(const CycMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error("matrix shape mismatch in -");
    CycMatrix a = *this, b = rhs;
    unify(a, b);
    for (size_t k = 0; k < a.a_.size(); ++k) a.a_[k] -= b.a_[k];
    return a;
}

CycMatrix CycMatrix::operator*(const CycMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw Error("matrix shape mismatch in *");
    CycMatrix a = *this, b = rhs;
    unify(a, b);
    CycMatrix r(a.rows_, b.cols_, a.order_);
    for (size_t i = 0; i < a.rows_; ++i) {
        for (size_t k = 0; k < a.cols_; ++k) {
            const Cyclotomic& aik = a.a_[i * a.cols_ + k];
            if (aik.is_zero()) continue;
            for (size_t j = 0; j < b.cols_; ++j) {
                const Cyclotomic& bkj = b.a_[k * b.cols_ + j];
                if (bkj.is_zero()) continue;
                r.a_[i * r.cols_ + j] += aik * bkj;
            }
        }
    }
    return r;
}

CycMatrix CycMatrix::scaled(const Cyclotomic& c) const {
    CycMatrix r = *this;
    unsigned l = std::lcm(order_, c.order());
    r.raise_order(l);
    Cyclotomic ce = c.embedded(l);
    for (auto& x : r.a_) x *= ce;
    return r;
}

bool CycMatrix::operator==(const CycMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
    CycMatrix a = *this, b = rhs;
    unify(a, b);
    return a.a_ == b.a_;
}

CycMatrix CycMatrix::transpose() const {
    CycMatrix r(cols_, rows_, order_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.a_[j * rows_ + i] = a_[i * cols_ + j];
    return r;
}

CycMatrix CycMatrix::conjugated() const {
    CycMatrix r = *this;
    for (auto& x : r.a_) x = x.conjugate();
    return r;
}

CycMatrix CycMatrix::kron(const CycMatrix& rhs) const {
    CycMatrix a = *this, b = rhs;
    unify(a, b);
    CycMatrix r(a.rows_ * b.rows_, a.cols_ * b.cols_, a.order_);
    for (size_t i = 0; i < a.rows_; ++i)
        for (size_t j = 0; j < a.cols_; ++j) {
            const Cyclotomic& v = a.a_[i * a.cols_ + j];
            if (v.is_zero()) continue;
            for (size_t p = 0; p < b.rows_; ++p)
                for (size_t q = 0; q < b.cols_; ++q) {
                    const Cyclotomic& w = b.a_[p * b.cols_ + q];
                    if (w.is_zero()) continue;
                    r.a_[(i * b.rows_ + p) * r.cols_ + (j * b.cols_ + q)] = v * w;
                }
        }
    return r;
}

Cyclotomic CycMatrix::trace() const {
    if (rows_ != cols_) throw Error("trace of non-square matrix");
    Cyclotomic t(order_, {Rational(0)});
    for (size_t i = 0; i < rows_; ++i) t += a_[i * cols_ + i];
    return t;
}

bool CycMatrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

bool CycMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) {
            const Cyclotomic& x = a_[i * cols_ + j];
            if (i == j ? !x.is_one() : !x.is_zero()) return false;
        }
    return true;
}

bool CycMatrix::is_permutation() const {
    if (rows_ != cols_) return false;
    std::vector<int> col_hits(cols_, 0);
    for (size_t i = 0; i < rows_; ++i) {
        int row_hits = 0;
        for (size_t j = 0; j < cols_; ++j) {
            const Cyclotomic& x = a_[i * cols_ + j];
            if (x.is_zero()) continue;
            if (!x.is_one()) return false;
            ++row_hits;
            ++col_hits[j];
        }
        if (row_hits != 1) return false;
    }
    for (int h : col_hits)
        if (h != 1) return false;
    return true;
}

std::vector<size_t> CycMatrix::echelon(bool reduced) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < cols_ && row < rows_; ++col) {
        // Pivot rule: first nonzero entry scanning down the column.
        size_t p = row;
        while (p < rows_ && a_[p * cols_ + col].is_zero()) ++p;
        if (p == rows_) continue;
        if (p != row)
            for (size_t j = 0; j < cols_; ++j) std::swap(a_[p * cols_ + j], a_[row * cols_ + j]);
        const Cyclotomic pivot = a_[row * cols_ + col];
        for (size_t i = row + 1; i < rows_; ++i) {
            const Cyclotomic& head = a_[i * cols_ + col];
            if (head.is_zero()) continue;
            Cyclotomic f = head / pivot;
            for (size_t j = col; j < cols_; ++j)
                a_[i * cols_ + j] -= f * a_[row * cols_ + j];
        }
        pivots.push_back(col);
        ++row;
    }
    if (reduced) {
        for (size_t k = pivots.size(); k-- > 0;) {
            size_t col = pivots[k];
            Cyclotomic inv = a_[k * cols_ + col].inverse();
            for (size_t j = col; j < cols_; ++j) a_[k * cols_ + j] *= inv;
            for (size_t i = 0; i < k; ++i) {
                const Cyclotomic f = a_[i * cols_ + col];
                if (f.is_zero()) continue;
                for (size_t j = col; j < cols_; ++j)
                    a_[i * cols_ + j] -= f * a_[k * cols_ + j];
            }
        }
    }
    return pivots;
}

size_t CycMatrix::rank() const {
    CycMatrix work = *this;
    return work.echelon(false).size();
}

Cyclotomic CycMatrix::det() const {
    if (rows_ != cols_) throw Error("determinant of non-square matrix");
    CycMatrix work = *this;
    Cyclotomic d(order_, {Rational(1)});
    size_t row = 0;
    for (size_t col = 0; col < cols_ && row < rows_; ++col) {
        size_t p = row;
        while (p < rows_ && work.a_[p * cols_ + col].is_zero()) ++p;
        if (p == rows_) return Cyclotomic(order_, {Rational(0)});
        if (p != row) {
            for (size_t j = 0; j < cols_; ++j)
                std::swap(work.a_[p * cols_ + j], work.a_[row * cols_ + j]);
            d = -d;
        }
        const Cyclotomic pivot = work.a_[row * cols_ + col];
        d *= pivot;
        for (size_t i = row + 1; i < rows_; ++i) {
            const Cyclotomic& head = work.a_[i * cols_ + col];
            if (head.is_zero()) continue;
            Cyclotomic f = head / pivot;
            for (size_t j = col; j < cols_; ++j)
                work.a_[i * cols_ + j] -= f * work.a_[row * cols_ + j];
        }
        ++row;
    }
    return d;
}

std::optional<CycMatrix> CycMatrix::inverse() const {
    if (rows_ != cols_) throw Error("inverse of non-square matrix");
    CycMatrix work = hcat(identity(rows_, order_));
    std::vector<size_t> pivots = work.echelon(true);
    if (pivots.size() != rows_) return std::nullopt;
    for (size_t k = 0; k < pivots.size(); ++k)
        if (pivots[k] != k) return std::nullopt;
    CycMatrix inv(rows_, rows_, work.order_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < rows_; ++j) inv.a_[i * rows_ + j] = work.a_[i * work.cols_ + cols_ + j];
    return inv;
}

CycMatrix CycMatrix::kernel_basis() const {
    CycMatrix work = *this;
    std::vector<size_t> pivots = work.echelon(true);
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : pivots) is_pivot[c] = true;
    size_t nullity = cols_ - pivots.size();
    CycMatrix basis(cols_, nullity, work.order_);
    size_t out = 0;
    for (size_t free_col = 0; free_col < cols_; ++free_col) {
        if (is_pivot[free_col]) continue;
        // Free variable set to 1; pivot variables from back-substituted RREF.
        basis.a_[free_col * nullity + out] = Cyclotomic(work.order_, {Rational(1)});
        for (size_t k = 0; k < pivots.size(); ++k) {
            const Cyclotomic& v = work.a_[k * cols_ + free_col];
            if (!v.is_zero()) basis.a_[pivots[k] * nullity + out] = -v;
        }
        ++out;
    }
    return basis;
}

std::optional<CycMatrix> CycMatrix::solve(const CycMatrix& rhs) const {
    if (rhs.rows_ != rows_ || rhs.cols_ != 1) throw Error("solve expects a conforming column");
    CycMatrix work = hcat(rhs);
    std::vector<size_t> pivots = work.echelon(true);
    for (size_t c : pivots)
        if (c == cols_) return std::nullopt; // pivot in the augmented column
    CycMatrix x(cols_, 1, work.order_);
    for (size_t k = 0; k < pivots.size(); ++k) x.a_[pivots[k]] = work.a_[k * work.cols_ + cols_];
    return x;
}

CycMatrix CycMatrix::column(size_t j) const {
    CycMatrix c(rows_, 1, order_);
    for (size_t i = 0; i < rows_; ++i) c.a_[i] = a_[i * cols_ + j];
    return c;
}

CycMatrix CycMatrix::row(size_t i) const {
    CycMatrix r(1, cols_, order_);
    for (size_t j = 0; j < cols_; ++j) r.a_[j] = a_[i * cols_ + j];
    return r;
}

CycMatrix CycMatrix::hcat(const CycMatrix& rhs) const {
    if (rows_ != rhs.rows_) throw Error("hcat row mismatch");
    CycMatrix a = *this, b = rhs;
    unify(a, b);
    CycMatrix r(rows_, a.cols_ + b.cols_, a.order_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < a.cols_; ++j) r.a_[i * r.cols_ + j] = a.a_[i * a.cols_ + j];
        for (size_t j = 0; j < b.cols_; ++j) r.a_[i * r.cols_ + a.cols_ + j] = b.a_[i * b.cols_ + j];
    }
    return r;
}

CycMatrix CycMatrix::swap_map(size_t m, size_t n) {
    CycMatrix s(n * m, m * n, 1);
    Cyclotomic one(Rational(1));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < n; ++j) s.a_[(j * m + i) * (m * n) + (i * n + j)] = one;
    return s;
}

} // namespace qalg
