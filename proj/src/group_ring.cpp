#include "cellplus/group_ring.hpp"

namespace cellplus {

GroupRingElement::GroupRingElement(RingSpec ring, CayleyPtr table)
    : ring_(std::move(ring)), table_(std::move(table)) {
    if (!table_) fail(Error::Kind::Invariant, "group ring: missing table");
    coeff_.assign(table_->order(), Scalar::zero(ring_));
}

GroupRingElement GroupRingElement::unit(RingSpec ring, CayleyPtr table) {
    return of(std::move(ring), std::move(table), 0);
}

GroupRingElement GroupRingElement::of(RingSpec ring, CayleyPtr table, size_t g) {
    GroupRingElement e(std::move(ring), std::move(table));
    if (g >= e.coeff_.size()) fail(Error::Kind::Invariant, "group ring: bad element");
    e.coeff_[g] = Scalar::one(e.ring_);
    return e;
}

void GroupRingElement::add_term(size_t g, const Scalar& c) {
    if (g >= coeff_.size()) fail(Error::Kind::Invariant, "group ring: bad element");
    coeff_[g] = coeff_[g] + c;
}

void GroupRingElement::check_compatible(const GroupRingElement& o) const {
    if (ring_ != o.ring_ || table_ != o.table_)
        fail(Error::Kind::RingMismatch, "group ring: mixed rings or groups");
}

bool GroupRingElement::is_zero() const {
    for (const Scalar& c : coeff_)
        if (!c.is_zero()) return false;
    return true;
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const {
    check_compatible(o);
    GroupRingElement out = *this;
    for (size_t g = 0; g < coeff_.size(); ++g) out.coeff_[g] = out.coeff_[g] + o.coeff_[g];
    return out;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& o) const {
    check_compatible(o);
    GroupRingElement out = *this;
    for (size_t g = 0; g < coeff_.size(); ++g) out.coeff_[g] = out.coeff_[g] - o.coeff_[g];
    return out;
}

GroupRingElement GroupRingElement::operator-() const {
    GroupRingElement out = *this;
    for (Scalar& c : out.coeff_) c = -c;
    return out;
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& o) const {
    check_compatible(o);
    GroupRingElement out(ring_, table_);
    for (size_t g = 0; g < coeff_.size(); ++g) {
        if (coeff_[g].is_zero()) continue;
        for (size_t h = 0; h < coeff_.size(); ++h) {
            if (o.coeff_[h].is_zero()) continue;
            size_t k = table_->mul(g, h);
            out.coeff_[k] = out.coeff_[k] + coeff_[g] * o.coeff_[h];
        }
    }
    return out;
}

GroupRingElement GroupRingElement::scale(const Scalar& c) const {
    GroupRingElement out = *this;
    for (Scalar& x : out.coeff_) x = x * c;
    return out;
}

bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
    a.check_compatible(b);
    return a.coeff_ == b.coeff_;
}

Scalar GroupRingElement::augment() const {
    Scalar s = Scalar::zero(ring_);
    for (const Scalar& c : coeff_) s = s + c;
    return s;
}

GroupRingElement GroupRingElement::pushed(const CayleyPtr& target,
                                          const std::function<size_t(size_t)>& fn) const {
    GroupRingElement out(ring_, target);
    for (size_t g = 0; g < coeff_.size(); ++g)
        if (!coeff_[g].is_zero()) out.add_term(fn(g), coeff_[g]);
    return out;
}

MatrixR GroupRingElement::regular_block() const {
    size_t n = coeff_.size();
    MatrixR m(ring_, n, n);
    for (size_t g = 0; g < n; ++g) {
        size_t gi = table_->inverse(g);
        for (size_t h = 0; h < n; ++h) m.at(g, h) = coeff_[table_->mul(gi, h)];
    }
    return m;
}

std::string GroupRingElement::str(const std::vector<std::string>& names) const {
    std::string out;
    for (size_t g = 0; g < coeff_.size(); ++g) {
        if (coeff_[g].is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string cs = coeff_[g].str();
        std::string gs = g == 0 ? "" : table_->rep_word(g).str(names);
        if (gs.empty()) out += cs;
        else if (cs == "1") out += gs;
        else out += cs + "*" + gs;
    }
    return out.empty() ? "0" : out;
}

GroupRingMatrix::GroupRingMatrix(RingSpec ring, CayleyPtr table, size_t rows, size_t cols)
    : ring_(std::move(ring)), table_(std::move(table)), rows_(rows), cols_(cols) {
    entries_.assign(rows_ * cols_, GroupRingElement(ring_, table_));
}

GroupRingMatrix GroupRingMatrix::identity(RingSpec ring, CayleyPtr table, size_t n) {
    GroupRingMatrix m(ring, table, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = GroupRingElement::unit(ring, table);
    return m;
}

GroupRingElement& GroupRingMatrix::at(size_t i, size_t j) {
    if (i >= rows_ || j >= cols_) fail(Error::Kind::Invariant, "group ring matrix: index");
    return entries_[i * cols_ + j];
}

const GroupRingElement& GroupRingMatrix::at(size_t i, size_t j) const {
    if (i >= rows_ || j >= cols_) fail(Error::Kind::Invariant, "group ring matrix: index");
    return entries_[i * cols_ + j];
}

bool GroupRingMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

GroupRingMatrix GroupRingMatrix::operator+(const GroupRingMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        fail(Error::Kind::Invariant, "group ring matrix: shape mismatch");
    GroupRingMatrix out = *this;
    for (size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k] + o.entries_[k];
    return out;
}

GroupRingMatrix GroupRingMatrix::operator-(const GroupRingMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        fail(Error::Kind::Invariant, "group ring matrix: shape mismatch");
    GroupRingMatrix out = *this;
    for (size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k] - o.entries_[k];
    return out;
}

GroupRingMatrix GroupRingMatrix::operator*(const GroupRingMatrix& o) const {
    if (cols_ != o.rows_) fail(Error::Kind::Invariant, "group ring matrix: shape mismatch");
    GroupRingMatrix out(ring_, table_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const GroupRingElement& a = at(i, k);
            if (a.is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                const GroupRingElement& b = o.at(k, j);
                if (b.is_zero()) continue;
                out.at(i, j) = out.at(i, j) + a * b;
            }
        }
    return out;
}

bool operator==(const GroupRingMatrix& a, const GroupRingMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

MatrixR GroupRingMatrix::blowup() const {
    size_t n = table_->order();
    MatrixR m(ring_, rows_ * n, cols_ * n);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) {
            const GroupRingElement& e = at(i, j);
            if (e.is_zero()) continue;
            MatrixR block = e.regular_block();
            for (size_t g = 0; g < n; ++g)
                for (size_t h = 0; h < n; ++h)
                    m.at(i * n + g, j * n + h) = block.at(g, h);
        }
    return m;
}

MatrixR GroupRingMatrix::augmented() const {
    MatrixR m(ring_, rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).augment();
    return m;
}

std::string GroupRingMatrix::str(const std::vector<std::string>& names) const {
    std::string out = "[";
    for (size_t i = 0; i < rows_; ++i) {
        if (i) out += ",";
        out += "[";
        for (size_t j = 0; j < cols_; ++j) {
            if (j) out += ",";
            out += at(i, j).str(names);
        }
        out += "]";
    }
    return out + "]";
}

} // namespace cellplus
