#include "cellplus/fox.hpp"

#include <algorithm>

namespace cellplus {

FoxTerm FoxTerm::of(Word w, mpz_class c) {
    FoxTerm t;
    if (c != 0) t.terms_.emplace_back(std::move(w), std::move(c));
    return t;
}

void FoxTerm::insert(const Word& w, const mpz_class& c) {
    if (c == 0) return;
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), w,
        [](const std::pair<Word, mpz_class>& t, const Word& x) { return t.first < x; });
    if (it != terms_.end() && it->first == w) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    } else {
        terms_.insert(it, {w, c});
    }
}

FoxTerm FoxTerm::operator+(const FoxTerm& o) const {
    FoxTerm out = *this;
    for (const auto& [w, c] : o.terms_) out.insert(w, c);
    return out;
}

FoxTerm FoxTerm::operator-(const FoxTerm& o) const {
    FoxTerm out = *this;
    for (const auto& [w, c] : o.terms_) out.insert(w, -c);
    return out;
}

FoxTerm FoxTerm::operator-() const {
    FoxTerm out;
    for (const auto& [w, c] : terms_) out.terms_.emplace_back(w, -c);
    return out;
}

FoxTerm FoxTerm::operator*(const FoxTerm& o) const {
    FoxTerm out;
    for (const auto& [wa, ca] : terms_)
        for (const auto& [wb, cb] : o.terms_) out.insert(wa * wb, ca * cb);
    return out;
}

FoxTerm FoxTerm::left_mul(const Word& w) const {
    FoxTerm out;
    for (const auto& [t, c] : terms_) out.insert(w * t, c);
    return out;
}

FoxTerm FoxTerm::right_mul(const Word& w) const {
    FoxTerm out;
    for (const auto& [t, c] : terms_) out.insert(t * w, c);
    return out;
}

std::string FoxTerm::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
        mpz_class a = abs(c);
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (a != 1 || w.empty()) {
            out += a.get_str();
            if (!w.empty()) out += "*";
        }
        if (!w.empty()) out += w.str(names);
    }
    return out;
}

FoxTerm fox_derivative(const Word& w, int j) {
    // d(l1...lk)/dx = sum_i (l1...l_{i-1}) * dl_i/dx,
    // with dg/dx = [g=x], dg^{-1}/dx = -[g=x] g^{-1}.
    FoxTerm out;
    Word prefix;
    for (const Letter& l : w.letters()) {
        if (l.gen == j) {
            if (l.sign == 1)
                out = out + FoxTerm::of(prefix);
            else
                out = out - FoxTerm::of(prefix * Word::gen(l.gen, -1));
        }
        prefix = prefix * Word::gen(l.gen, l.sign);
    }
    return out;
}

} // namespace cellplus
