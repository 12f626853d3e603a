#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "cellplus/word.hpp"

namespace cellplus {

// Formal Z-linear combination of free-group words (element of the free-group
// ring). Terms are kept sorted by word with nonzero combined coefficients.
class FoxTerm {
public:
    FoxTerm() = default;
    static FoxTerm of(Word w, mpz_class c = 1);

    const std::vector<std::pair<Word, mpz_class>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    FoxTerm operator+(const FoxTerm& o) const;
    FoxTerm operator-(const FoxTerm& o) const;
    FoxTerm operator-() const;
    FoxTerm operator*(const FoxTerm& o) const;
    FoxTerm left_mul(const Word& w) const;  // w * this
    FoxTerm right_mul(const Word& w) const; // this * w

    friend bool operator==(const FoxTerm& a, const FoxTerm& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const FoxTerm& a, const FoxTerm& b) { return !(a == b); }

    std::string str(const std::vector<std::string>& names) const;

private:
    void insert(const Word& w, const mpz_class& c);

    std::vector<std::pair<Word, mpz_class>> terms_;
};

// Fox derivative with respect to generator j.
FoxTerm fox_derivative(const Word& w, int j);

} // namespace cellplus
