#include "doctest.h"

#include <random>

#include "cellplus/fox.hpp"
#include "cellplus/word.hpp"

using namespace cellplus;

namespace {

Word W(std::initializer_list<std::pair<int, int>> ls) {
    std::vector<Letter> v;
    for (auto [g, s] : ls) v.push_back({g, s});
    return Word::from_letters(v);
}

Word random_word(std::mt19937& rng, int gens, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> pick(0, gens - 1);
    std::uniform_int_distribution<int> sgn(0, 1);
    std::vector<Letter> ls;
    int n = len(rng);
    for (int i = 0; i < n; ++i) ls.push_back({pick(rng), sgn(rng) ? 1 : -1});
    return Word::from_letters(ls);
}

// Independent recheck of the derivative: recurse by splitting at random
// midpoints and folding the product axiom d(uv) = du + u.dv.
FoxTerm fox_oracle(const Word& w, int j, std::mt19937& rng) {
    const auto& ls = w.letters();
    if (ls.empty()) return {};
    if (ls.size() == 1) {
        if (ls[0].gen != j) return {};
        if (ls[0].sign == 1) return FoxTerm::of(Word());
        return -FoxTerm::of(Word::gen(j, -1));
    }
    std::uniform_int_distribution<size_t> cut(1, ls.size() - 1);
    size_t k = cut(rng);
    Word u = Word::from_letters({ls.begin(), ls.begin() + k});
    Word v = Word::from_letters({ls.begin() + k, ls.end()});
    return fox_oracle(u, j, rng) + fox_oracle(v, j, rng).left_mul(u);
}

} // namespace

TEST_CASE("free reduction, inverse, concatenation") {
    Word a = Word::gen(0), b = Word::gen(1);

    CHECK(W({{0, 1}, {0, -1}, {1, 1}}) == b);            // a a^-1 b -> b
    CHECK((a * b).inverse() == W({{1, -1}, {0, -1}}));   // (ab)^-1 = b^-1 a^-1
    CHECK((a * a.inverse()).empty());                    // a a^-1 -> 1
    CHECK(W({{0, 1}, {1, 1}, {1, -1}, {0, -1}}).empty());

    CHECK(a.pow(3) == W({{0, 1}, {0, 1}, {0, 1}}));
    CHECK(a.pow(-2) == W({{0, -1}, {0, -1}}));
    CHECK(a.pow(0).empty());

    Word comm = a * b * a.inverse() * b.inverse();
    CHECK(comm.length() == 4);
    CHECK(comm.exponent_sum(0) == 0);
    CHECK(comm.exponent_sum(1) == 0);
    CHECK((a * b).exponent_sum(0) == 1);
    CHECK(comm.max_gen() == 1);

    std::vector<std::string> names{"a", "b"};
    CHECK(comm.str(names) == "a*b*a^-1*b^-1");
    CHECK(a.pow(3).str(names) == "a^3");
    CHECK(Word().str(names) == "1");
}

TEST_CASE("word group laws on random words") {
    std::mt19937 rng(2311);
    for (int it = 0; it < 300; ++it) {
        Word u = random_word(rng, 3, 10), v = random_word(rng, 3, 10),
             w = random_word(rng, 3, 10);
        CHECK((u * v) * w == u * (v * w));
        CHECK((u * u.inverse()).empty());
        CHECK((u * v).inverse() == v.inverse() * u.inverse());
        CHECK(u * Word() == u);
    }
}

TEST_CASE("fox derivative base examples") {
    Word a = Word::gen(0), b = Word::gen(1);

    // d(a^n)/da = 1 + a + ... + a^{n-1}
    for (int n = 1; n <= 5; ++n) {
        FoxTerm expect;
        for (int i = 0; i < n; ++i) expect = expect + FoxTerm::of(a.pow(i));
        CHECK(fox_derivative(a.pow(n), 0) == expect);
    }

    // d(aba^-1b^-1)/da = 1 - aba^-1
    Word comm = a * b * a.inverse() * b.inverse();
    FoxTerm expect = FoxTerm::of(Word()) - FoxTerm::of(a * b * a.inverse());
    CHECK(fox_derivative(comm, 0) == expect);

    CHECK(fox_derivative(b, 0).is_zero());
    CHECK(fox_derivative(Word(), 0).is_zero());
    CHECK(fox_derivative(a.inverse(), 0) == -FoxTerm::of(a.inverse()));

    std::vector<std::string> names{"a", "b"};
    CHECK(fox_derivative(comm, 0).str(names) == "1 - a*b*a^-1");
}

TEST_CASE("fox axioms on random words") {
    std::mt19937 rng(40961);
    for (int it = 0; it < 200; ++it) {
        Word u = random_word(rng, 3, 8), v = random_word(rng, 3, 8);
        for (int j = 0; j < 3; ++j) {
            // product axiom
            CHECK(fox_derivative(u * v, j) ==
                  fox_derivative(u, j) + fox_derivative(v, j).left_mul(u));
            // random-split oracle
            CHECK(fox_derivative(u, j) == fox_oracle(u, j, rng));
        }
    }
}

TEST_CASE("fundamental fox identity") {
    // sum_j dw/dx_j * (x_j - 1) = w - 1 in the free-group ring
    std::mt19937 rng(517);
    for (int it = 0; it < 150; ++it) {
        Word w = random_word(rng, 3, 10);
        FoxTerm lhs;
        for (int j = 0; j < 3; ++j) {
            FoxTerm d = fox_derivative(w, j);
            lhs = lhs + (d.right_mul(Word::gen(j)) - d);
        }
        CHECK(lhs == FoxTerm::of(w) - FoxTerm::of(Word()));
    }
}
