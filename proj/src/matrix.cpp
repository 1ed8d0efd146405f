#include "srees/matrix.hpp"

#include <algorithm>

namespace srees {

DenseMatrix DenseMatrix::identity(FieldSpec f, int n) {
    DenseMatrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& o) const {
    if (cols_ != o.rows_) throw BadField("matrix dimension mismatch in product");
    if (!(field_ == o.field_)) throw FieldMismatch("matrix fields differ");
    DenseMatrix r(field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& v = at(i, k);
            if (v.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j)
                r.at(i, j) = r.at(i, j) + v * o.at(k, j);
        }
    return r;
}

bool DenseMatrix::operator==(const DenseMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && a_ == o.a_;
}

int DenseMatrix::rank() const {
    if (!field_.is_rational()) {
        FpOps f(field_.prime);
        RowSpan span(f, static_cast<std::size_t>(cols_));
        std::vector<std::uint32_t> row(cols_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) row[j] = at(i, j).residue();
            span.add_row(row);
        }
        return static_cast<int>(span.rank());
    }
    // rational Gaussian elimination
    std::vector<std::vector<mpq_class>> m(rows_, std::vector<mpq_class>(cols_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m[i][j] = at(i, j).rational();
    int rank = 0;
    for (int col = 0; col < cols_ && rank < rows_; ++col) {
        int piv = -1;
        for (int i = rank; i < rows_; ++i)
            if (m[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[piv], m[rank]);
        for (int i = rank + 1; i < rows_; ++i) {
            if (m[i][col] == 0) continue;
            mpq_class factor = m[i][col] / m[rank][col];
            for (int j = col; j < cols_; ++j) m[i][j] -= factor * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

DenseMatrix DenseMatrix::inverse() const {
    if (rows_ != cols_) throw BadField("inverse of a non-square matrix");
    int n = rows_;
    DenseMatrix a = *this;
    DenseMatrix inv = identity(field_, n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (!a.at(i, col).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) throw BadField("matrix is singular");
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(piv, j), a.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        Scalar d = a.at(col, col).inv();
        for (int j = 0; j < n; ++j) {
            a.at(col, j) = a.at(col, j) * d;
            inv.at(col, j) = inv.at(col, j) * d;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || a.at(i, col).is_zero()) continue;
            Scalar f = a.at(i, col);
            for (int j = 0; j < n; ++j) {
                a.at(i, j) = a.at(i, j) - f * a.at(col, j);
                inv.at(i, j) = inv.at(i, j) - f * inv.at(col, j);
            }
        }
    }
    return inv;
}

FpOps::FpOps(std::uint32_t prime) : p(prime) {
    // Accumulating (p-1)^2 per pivot step in 64 bits: safe step count before
    // a renormalization is needed.
    std::uint64_t sq = static_cast<std::uint64_t>(p - 1) * (p - 1);
    lazy_budget = sq ? (~0ULL - p) / sq : ~0ULL;
}

RowSpan::RowSpan(FpOps f, std::size_t ncols) : f_(f), ncols_(ncols) {}

bool RowSpan::add_row(const std::vector<std::uint32_t>& row) {
    work_.assign(row.begin(), row.end());
    std::uint64_t steps = 0;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        std::size_t c = pivots_[k];
        std::uint32_t lead = static_cast<std::uint32_t>(work_[c] % f_.p);
        if (!lead) continue;
        std::uint64_t mult = f_.p - lead;
        const std::uint32_t* prow = rows_[k].data();
        std::uint64_t* w = work_.data();
        for (std::size_t j = c; j < ncols_; ++j) w[j] += mult * prow[j];
        if (++steps >= f_.lazy_budget) {
            for (std::size_t j = 0; j < ncols_; ++j) work_[j] %= f_.p;
            steps = 0;
        }
    }
    std::size_t piv = ncols_;
    for (std::size_t j = 0; j < ncols_; ++j) {
        work_[j] %= f_.p;
        if (piv == ncols_ && work_[j]) piv = j;
    }
    if (piv == ncols_) return false;
    std::uint32_t scale = f_.inv(static_cast<std::uint32_t>(work_[piv]));
    std::vector<std::uint32_t> nr(ncols_, 0);
    for (std::size_t j = piv; j < ncols_; ++j)
        nr[j] = f_.mul(static_cast<std::uint32_t>(work_[j]), scale);
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
    std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
    pivots_.insert(pos, piv);
    rows_.insert(rows_.begin() + idx, std::move(nr));
    return true;
}

}  // namespace srees
