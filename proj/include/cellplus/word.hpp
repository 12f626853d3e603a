#pragma once

#include <string>
#include <vector>

#include "cellplus/error.hpp"

namespace cellplus {

// One letter of a free-group word: generator index with exponent sign.
struct Letter {
    int gen;
    int sign; // +1 or -1

    friend bool operator==(const Letter& a, const Letter& b) {
        return a.gen == b.gen && a.sign == b.sign;
    }
    friend bool operator!=(const Letter& a, const Letter& b) { return !(a == b); }
};

// Freely reduced word in a free group.
class Word {
public:
    Word() = default;
    static Word gen(int g, int sign = 1);
    static Word from_letters(std::vector<Letter> ls); // reduces

    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    size_t length() const { return letters_.size(); }
    int max_gen() const; // largest generator index used, -1 if empty

    Word inverse() const;
    Word operator*(const Word& o) const; // concat, then reduce at the seam
    Word pow(long e) const;

    friend bool operator==(const Word& a, const Word& b) {
        return a.letters_ == b.letters_;
    }
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
    friend bool operator<(const Word& a, const Word& b); // length, then lex

    // exponent sum of a generator
    long exponent_sum(int g) const;

    std::string str(const std::vector<std::string>& names) const;

private:
    std::vector<Letter> letters_;
};

} // namespace cellplus
