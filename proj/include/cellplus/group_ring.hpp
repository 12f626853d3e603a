#pragma once

#include <functional>
#include <memory>

#include "cellplus/cayley.hpp"
#include "cellplus/matrix.hpp"

namespace cellplus {

using CayleyPtr = std::shared_ptr<const CayleyTable>;

// Element of R[G], G finite: dense coefficient vector indexed by element.
class GroupRingElement {
public:
    GroupRingElement(RingSpec ring, CayleyPtr table); // zero
    static GroupRingElement unit(RingSpec ring, CayleyPtr table);          // 1*e
    static GroupRingElement of(RingSpec ring, CayleyPtr table, size_t g); // 1*g

    const RingSpec& ring() const { return ring_; }
    const CayleyPtr& table() const { return table_; }
    size_t group_order() const { return coeff_.size(); }

    const Scalar& coeff(size_t g) const { return coeff_[g]; }
    void add_term(size_t g, const Scalar& c);

    bool is_zero() const;
    GroupRingElement operator+(const GroupRingElement& o) const;
    GroupRingElement operator-(const GroupRingElement& o) const;
    GroupRingElement operator-() const;
    GroupRingElement operator*(const GroupRingElement& o) const;
    GroupRingElement scale(const Scalar& c) const;

    friend bool operator==(const GroupRingElement& a, const GroupRingElement& b);
    friend bool operator!=(const GroupRingElement& a, const GroupRingElement& b) {
        return !(a == b);
    }

    Scalar augment() const; // sum of coefficients

    // coefficients re-indexed through a group map (summing collisions)
    GroupRingElement pushed(const CayleyPtr& target,
                            const std::function<size_t(size_t)>& fn) const;

    // |G| x |G| block over R: P(u)[g][h] = u_{g^-1 h}. Multiplicative:
    // P(uv) = P(u) P(v), and P commutes with the left-translation blocks.
    MatrixR regular_block() const;

    std::string str(const std::vector<std::string>& names) const;

private:
    void check_compatible(const GroupRingElement& o) const;

    RingSpec ring_;
    CayleyPtr table_;
    std::vector<Scalar> coeff_;
};

// Dense matrix over R[G]. Row convention for boundaries: rows index q-cells,
// columns (q-1)-cells, so d2 * d1 composes with ordinary multiplication.
class GroupRingMatrix {
public:
    GroupRingMatrix(RingSpec ring, CayleyPtr table, size_t rows, size_t cols);
    static GroupRingMatrix identity(RingSpec ring, CayleyPtr table, size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const RingSpec& ring() const { return ring_; }
    const CayleyPtr& table() const { return table_; }

    GroupRingElement& at(size_t i, size_t j);
    const GroupRingElement& at(size_t i, size_t j) const;

    bool is_zero() const;
    GroupRingMatrix operator+(const GroupRingMatrix& o) const;
    GroupRingMatrix operator-(const GroupRingMatrix& o) const;
    GroupRingMatrix operator*(const GroupRingMatrix& o) const;
    friend bool operator==(const GroupRingMatrix& a, const GroupRingMatrix& b);

    MatrixR blowup() const;  // entrywise regular_block, row convention kept
    MatrixR augmented() const; // entrywise augmentation

    std::string str(const std::vector<std::string>& names) const;

private:
    RingSpec ring_;
    CayleyPtr table_;
    size_t rows_, cols_;
    std::vector<GroupRingElement> entries_;
};

} // namespace cellplus
