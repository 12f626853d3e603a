#include "cellplus/word.hpp"

namespace cellplus {

Word Word::gen(int g, int sign) {
    if (g < 0 || (sign != 1 && sign != -1))
        fail(Error::Kind::Invariant, "Word::gen: bad letter");
    Word w;
    w.letters_.push_back({g, sign});
    return w;
}

Word Word::from_letters(std::vector<Letter> ls) {
    Word w;
    for (const Letter& l : ls) {
        if (l.gen < 0 || (l.sign != 1 && l.sign != -1))
            fail(Error::Kind::Invariant, "Word: bad letter");
        if (!w.letters_.empty() && w.letters_.back().gen == l.gen &&
            w.letters_.back().sign == -l.sign)
            w.letters_.pop_back();
        else
            w.letters_.push_back(l);
    }
    return w;
}

int Word::max_gen() const {
    int m = -1;
    for (const Letter& l : letters_)
        if (l.gen > m) m = l.gen;
    return m;
}

Word Word::inverse() const {
    Word w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        w.letters_.push_back({it->gen, -it->sign});
    return w;
}

Word Word::operator*(const Word& o) const {
    std::vector<Letter> ls = letters_;
    for (const Letter& l : o.letters_) {
        if (!ls.empty() && ls.back().gen == l.gen && ls.back().sign == -l.sign)
            ls.pop_back();
        else
            ls.push_back(l);
    }
    Word w;
    w.letters_ = std::move(ls);
    return w;
}

Word Word::pow(long e) const {
    Word base = e < 0 ? inverse() : *this;
    if (e < 0) e = -e;
    Word out;
    for (long i = 0; i < e; ++i) out = out * base;
    return out;
}

bool operator<(const Word& a, const Word& b) {
    if (a.letters_.size() != b.letters_.size())
        return a.letters_.size() < b.letters_.size();
    for (size_t i = 0; i < a.letters_.size(); ++i) {
        const Letter &x = a.letters_[i], &y = b.letters_[i];
        if (x.gen != y.gen) return x.gen < y.gen;
        if (x.sign != y.sign) return x.sign > y.sign; // positive first
    }
    return false;
}

long Word::exponent_sum(int g) const {
    long s = 0;
    for (const Letter& l : letters_)
        if (l.gen == g) s += l.sign;
    return s;
}

std::string Word::str(const std::vector<std::string>& names) const {
    if (letters_.empty()) return "1";
    std::string out;
    size_t i = 0;
    while (i < letters_.size()) {
        size_t j = i;
        while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
        long e = static_cast<long>(j - i) * letters_[i].sign;
        if (!out.empty()) out += "*";
        size_t g = static_cast<size_t>(letters_[i].gen);
        out += g < names.size() ? names[g] : "g" + std::to_string(g);
        if (e != 1) out += "^" + std::to_string(e);
        i = j;
    }
    return out;
}

} // namespace cellplus
