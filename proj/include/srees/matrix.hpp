#ifndef SREES_MATRIX_HPP
#define SREES_MATRIX_HPP

#include <cstdint>
#include <vector>

#include "srees/field.hpp"

namespace srees {

// Rectangular matrix of exact scalars.
class DenseMatrix {
public:
    DenseMatrix(FieldSpec f, int rows, int cols)
        : field_(f), rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, Scalar::zero(f)) {}

    static DenseMatrix identity(FieldSpec f, int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    Scalar& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Scalar& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    DenseMatrix operator*(const DenseMatrix& o) const;
    bool operator==(const DenseMatrix& o) const;

    // Exact rank over the field (modular elimination for F_p, fraction-free
    // rational elimination otherwise).
    int rank() const;

    // Exact inverse; throws BadField when singular.
    DenseMatrix inverse() const;

private:
    FieldSpec field_;
    int rows_, cols_;
    std::vector<Scalar> a_;
};

// Arithmetic mod a word-sized prime, for the elimination kernels.
struct FpOps {
    std::uint32_t p;
    std::uint64_t lazy_budget;  // pivot steps between renormalizations

    explicit FpOps(std::uint32_t prime);

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b;
        return s >= p ? s - p : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : a + p - b;
    }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
    }
    std::uint32_t neg(std::uint32_t a) const { return a ? p - a : 0; }
    std::uint32_t inv(std::uint32_t a) const { return mod_inverse(a, p); }
};

// Incremental row-echelon basis over F_p.  Rows are inserted one at a time;
// the rank is the number of independent rows seen so far.  Copyable, so a
// common prefix (e.g. rows of a fixed ideal) can be echelonized once and
// extended several ways.
class RowSpan {
public:
    RowSpan(FpOps f, std::size_t ncols);

    // Returns true when the row enlarged the span.
    bool add_row(const std::vector<std::uint32_t>& row);

    std::size_t rank() const { return rows_.size(); }
    std::size_t ncols() const { return ncols_; }

private:
    FpOps f_;
    std::size_t ncols_;
    std::vector<std::vector<std::uint32_t>> rows_;  // sorted by pivot column
    std::vector<std::size_t> pivots_;
    std::vector<std::uint64_t> work_;
};

}  // namespace srees

#endif
