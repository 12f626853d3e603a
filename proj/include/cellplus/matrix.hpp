#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cellplus/ring.hpp"

namespace cellplus {

// Dense matrix over one RingSpec. Row-major. Desk-scale sizes; all exact.
class MatrixR {
public:
    MatrixR() : ring_(RingSpec::integers()), rows_(0), cols_(0) {}
    MatrixR(RingSpec ring, size_t rows, size_t cols);

    static MatrixR identity(const RingSpec& ring, size_t n);
    static MatrixR from_rows(const RingSpec& ring,
                             const std::vector<std::vector<Scalar>>& rows);
    static MatrixR from_int_rows(const RingSpec& ring,
                                 const std::vector<std::vector<long>>& rows);
    // Literal with ring-token prefix: "Z: [[2,4],[6,8]]".
    static MatrixR parse(const std::string& literal);

    const RingSpec& ring() const { return ring_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    const Scalar& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }
    Scalar& at(size_t i, size_t j) { return data_[i * cols_ + j]; }

    bool operator==(const MatrixR& o) const;
    MatrixR operator+(const MatrixR& o) const;
    MatrixR operator-(const MatrixR& o) const;
    MatrixR operator-() const;
    MatrixR operator*(const MatrixR& o) const;
    MatrixR transpose() const;
    bool is_zero() const;
    bool is_identity() const;

    MatrixR column(size_t j) const;
    MatrixR columns(const std::vector<size_t>& idx) const;
    MatrixR hstack(const MatrixR& o) const;
    MatrixR vstack(const MatrixR& o) const;

    void swap_rows(size_t i, size_t j);
    void swap_cols(size_t i, size_t j);
    // row_i += c * row_j / col_i += c * col_j
    void add_row_multiple(size_t i, size_t j, const Scalar& c);
    void add_col_multiple(size_t i, size_t j, const Scalar& c);
    void scale_row(size_t i, const Scalar& u);
    void scale_col(size_t j, const Scalar& u);

    // "[[2,4],[6,8]]" (no ring prefix)
    std::string str() const;

private:
    RingSpec ring_;
    size_t rows_, cols_;
    std::vector<Scalar> data_;
};

// Fraction-free determinant (Bareiss); used by tests and unimodularity checks.
Scalar det(const MatrixR& a);

// Entrywise coercion (e.g. Z -> Z/p reduction, Z -> Q). Fails when an entry
// has no image (imaginary part outside a Gaussian target).
MatrixR change_ring(const MatrixR& m, const RingSpec& target);

} // namespace cellplus
