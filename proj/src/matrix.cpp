#include "cellplus/matrix.hpp"

#include <sstream>

namespace cellplus {

MatrixR::MatrixR(RingSpec ring, size_t rows, size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols),
      data_(rows * cols, Scalar::zero(ring_)) {}

MatrixR MatrixR::identity(const RingSpec& ring, size_t n) {
    MatrixR m(ring, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(ring);
    return m;
}

MatrixR MatrixR::from_rows(const RingSpec& ring,
                           const std::vector<std::vector<Scalar>>& rows) {
    size_t r = rows.size();
    size_t c = r ? rows[0].size() : 0;
    MatrixR m(ring, r, c);
    for (size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            fail(Error::Kind::Invariant, "ragged matrix rows");
        for (size_t j = 0; j < c; ++j) {
            if (rows[i][j].ring() != ring)
                fail(Error::Kind::RingMismatch, "matrix entry ring mismatch");
            m.at(i, j) = rows[i][j];
        }
    }
    return m;
}

MatrixR MatrixR::from_int_rows(const RingSpec& ring,
                               const std::vector<std::vector<long>>& rows) {
    size_t r = rows.size();
    size_t c = r ? rows[0].size() : 0;
    MatrixR m(ring, r, c);
    for (size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            fail(Error::Kind::Invariant, "ragged matrix rows");
        for (size_t j = 0; j < c; ++j) m.at(i, j) = Scalar::from_int(ring, rows[i][j]);
    }
    return m;
}

MatrixR MatrixR::parse(const std::string& literal) {
    size_t open = literal.find("[[");
    if (open == std::string::npos) fail(Error::Kind::Parse, "matrix literal needs [[..]]");
    std::string prefix = literal.substr(0, open);
    while (!prefix.empty() && (std::isspace(static_cast<unsigned char>(prefix.back())) || prefix.back() == ':'))
        prefix.pop_back();
    RingSpec ring = RingSpec::parse(prefix);

    std::string body = literal.substr(open);
    std::vector<std::vector<Scalar>> rows;
    size_t i = 0;
    auto skip_ws = [&] { while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i; };
    auto expect = [&](char c) {
        skip_ws();
        if (i >= body.size() || body[i] != c)
            fail(Error::Kind::Parse, std::string("matrix literal: expected '") + c + "'");
        ++i;
    };
    expect('[');
    while (true) {
        expect('[');
        std::vector<Scalar> row;
        skip_ws();
        if (i < body.size() && body[i] == ']') {
            ++i;
        } else {
            while (true) {
                size_t start = i;
                while (i < body.size() && body[i] != ',' && body[i] != ']') ++i;
                row.push_back(Scalar::parse(ring, body.substr(start, i - start)));
                if (i < body.size() && body[i] == ',') { ++i; continue; }
                expect(']');
                break;
            }
        }
        rows.push_back(std::move(row));
        skip_ws();
        if (i < body.size() && body[i] == ',') { ++i; continue; }
        expect(']');
        break;
    }
    skip_ws();
    if (i != body.size()) fail(Error::Kind::Parse, "trailing junk after matrix literal");
    return from_rows(ring, rows);
}

bool MatrixR::operator==(const MatrixR& o) const {
    if (ring_ != o.ring_ || rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t k = 0; k < data_.size(); ++k)
        if (data_[k] != o.data_[k]) return false;
    return true;
}

MatrixR MatrixR::operator+(const MatrixR& o) const {
    if (ring_ != o.ring_ || rows_ != o.rows_ || cols_ != o.cols_)
        fail(Error::Kind::Invariant, "matrix shape/ring mismatch in +");
    MatrixR m = *this;
    for (size_t k = 0; k < data_.size(); ++k) m.data_[k] += o.data_[k];
    return m;
}

MatrixR MatrixR::operator-(const MatrixR& o) const { return *this + (-o); }

MatrixR MatrixR::operator-() const {
    MatrixR m = *this;
    for (auto& s : m.data_) s = -s;
    return m;
}

MatrixR MatrixR::operator*(const MatrixR& o) const {
    if (ring_ != o.ring_) fail(Error::Kind::RingMismatch, "matrix ring mismatch in *");
    if (cols_ != o.rows_) fail(Error::Kind::Invariant, "matrix shape mismatch in *");
    MatrixR m(ring_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                const Scalar& b = o.at(k, j);
                if (!b.is_zero()) m.at(i, j) += a * b;
            }
        }
    return m;
}

MatrixR MatrixR::transpose() const {
    MatrixR m(ring_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

bool MatrixR::is_zero() const {
    for (const auto& s : data_)
        if (!s.is_zero()) return false;
    return true;
}

bool MatrixR::is_identity() const {
    if (rows_ != cols_) return false;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) {
            if (i == j && !at(i, j).is_one()) return false;
            if (i != j && !at(i, j).is_zero()) return false;
        }
    return true;
}

MatrixR MatrixR::column(size_t j) const {
    MatrixR m(ring_, rows_, 1);
    for (size_t i = 0; i < rows_; ++i) m.at(i, 0) = at(i, j);
    return m;
}

MatrixR MatrixR::columns(const std::vector<size_t>& idx) const {
    MatrixR m(ring_, rows_, idx.size());
    for (size_t j = 0; j < idx.size(); ++j)
        for (size_t i = 0; i < rows_; ++i) m.at(i, j) = at(i, idx[j]);
    return m;
}

MatrixR MatrixR::hstack(const MatrixR& o) const {
    if (o.rows_ != rows_ || o.ring_ != ring_)
        fail(Error::Kind::Invariant, "hstack shape/ring mismatch");
    MatrixR m(ring_, rows_, cols_ + o.cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
        for (size_t j = 0; j < o.cols_; ++j) m.at(i, cols_ + j) = o.at(i, j);
    }
    return m;
}

MatrixR MatrixR::vstack(const MatrixR& o) const {
    if (o.cols_ != cols_ || o.ring_ != ring_)
        fail(Error::Kind::Invariant, "vstack shape/ring mismatch");
    MatrixR m(ring_, rows_ + o.rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    for (size_t i = 0; i < o.rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) m.at(rows_ + i, j) = o.at(i, j);
    return m;
}

void MatrixR::swap_rows(size_t i, size_t j) {
    if (i == j) return;
    for (size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void MatrixR::swap_cols(size_t i, size_t j) {
    if (i == j) return;
    for (size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void MatrixR::add_row_multiple(size_t i, size_t j, const Scalar& c) {
    if (c.is_zero()) return;
    for (size_t k = 0; k < cols_; ++k)
        if (!at(j, k).is_zero()) at(i, k) += c * at(j, k);
}

void MatrixR::add_col_multiple(size_t i, size_t j, const Scalar& c) {
    if (c.is_zero()) return;
    for (size_t k = 0; k < rows_; ++k)
        if (!at(k, j).is_zero()) at(k, i) += c * at(k, j);
}

void MatrixR::scale_row(size_t i, const Scalar& u) {
    for (size_t k = 0; k < cols_; ++k) at(i, k) *= u;
}

void MatrixR::scale_col(size_t j, const Scalar& u) {
    for (size_t k = 0; k < rows_; ++k) at(k, j) *= u;
}

std::string MatrixR::str() const {
    std::string s = "[";
    for (size_t i = 0; i < rows_; ++i) {
        if (i) s += ",";
        s += "[";
        for (size_t j = 0; j < cols_; ++j) {
            if (j) s += ",";
            s += at(i, j).str();
        }
        s += "]";
    }
    return s + "]";
}

Scalar det(const MatrixR& a) {
    if (a.rows() != a.cols()) fail(Error::Kind::Invariant, "det of non-square matrix");
    size_t n = a.rows();
    const RingSpec& R = a.ring();
    if (n == 0) return Scalar::one(R);
    MatrixR m = a;
    Scalar prev = Scalar::one(R);
    bool negate = false;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k).is_zero()) {
            size_t pivot = k + 1;
            while (pivot < n && m.at(pivot, k).is_zero()) ++pivot;
            if (pivot == n) return Scalar::zero(R);
            m.swap_rows(k, pivot);
            negate = !negate;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Scalar num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                auto q = num.exact_div(prev);
                if (!q) fail(Error::Kind::Invariant, "Bareiss division not exact");
                m.at(i, j) = *q;
            }
            m.at(i, k) = Scalar::zero(R);
        }
        prev = m.at(k, k);
    }
    Scalar d = m.at(n - 1, n - 1);
    return negate ? -d : d;
}

MatrixR change_ring(const MatrixR& m, const RingSpec& target) {
    MatrixR out(target, m.rows(), m.cols());
    bool gaussian = target.kind() == RingKind::GaussianIntegers;
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) {
            const Scalar& e = m.at(i, j);
            if (gaussian) {
                if (e.rat().get_den() != 1 || e.imag().get_den() != 1)
                    fail(Error::Kind::RingMismatch, "change_ring: non-integral entry");
                out.at(i, j) = Scalar::gaussian(e.rat().get_num(), e.imag().get_num());
            } else {
                if (e.imag() != 0)
                    fail(Error::Kind::RingMismatch, "change_ring: imaginary entry");
                out.at(i, j) = Scalar::from_mpq(target, e.rat());
            }
        }
    return out;
}

} // namespace cellplus
