#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "cellplus/grammar.hpp"
#include "cellplus/todd_coxeter.hpp"

using namespace cellplus;

namespace {

// Oracle: close explicit permutations under composition (independent of the
// coset enumerator).
using Perm = std::vector<int>;

Perm compose(const Perm& f, const Perm& g) { // apply f, then g
    Perm h(f.size());
    for (size_t i = 0; i < f.size(); ++i) h[i] = g[static_cast<size_t>(f[i])];
    return h;
}

std::vector<Perm> closure(std::vector<Perm> gens) {
    std::vector<Perm> elems;
    Perm id(gens[0].size());
    for (size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
    elems.push_back(id);
    for (size_t i = 0; i < elems.size(); ++i)
        for (const Perm& g : gens) {
            Perm x = compose(elems[i], g);
            if (std::find(elems.begin(), elems.end(), x) == elems.end())
                elems.push_back(x);
        }
    return elems;
}

int perm_order(const Perm& p) {
    Perm id(p.size());
    for (size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
    Perm x = p;
    int n = 1;
    while (x != id) {
        x = compose(x, p);
        ++n;
    }
    return n;
}

std::multiset<int> order_multiset(const std::vector<Perm>& elems) {
    std::multiset<int> out;
    for (const Perm& p : elems) out.insert(perm_order(p));
    return out;
}

CayleyTable enumerate(const char* text, size_t budget = 5000) {
    CosetResult r = todd_coxeter(parse_group(text), budget);
    REQUIRE(std::holds_alternative<CayleyTable>(r));
    return std::get<CayleyTable>(r);
}

} // namespace

TEST_CASE("coset enumeration of small groups") {
    CHECK(enumerate("group { gens: a; rels: a^5 }").order() == 5);
    CHECK(enumerate("group { gens:; rels: }").order() == 1);
    CHECK(enumerate("group { gens: a; rels: a }").order() == 1);
    CHECK(enumerate("group { gens: a b; rels: a^2 b^3 (a*b)^2 }").order() == 6);
    CHECK(enumerate("group { gens: a b; rels: a^2 b^3 (a*b)^5 }").order() == 60);
    CHECK(enumerate("group { gens: s t; rels: s^2 t^3 (s*t)^3 }").order() == 12);
    // |table| = abelianization order for abelian presentations
    CHECK(enumerate("group { gens: a b; rels: a^2 b^4 a*b*a^-1*b^-1 }").order() == 8);
    CHECK(enumerate("group { gens: a; rels: a^6 a^10 }").order() == 2); // gcd
}

TEST_CASE("overflow on infinite or underbudgeted groups") {
    Presentation z2 = parse_group("group { gens: a b; rels: a*b*a^-1*b^-1 }");
    CosetResult r = todd_coxeter(z2, 500);
    REQUIRE(std::holds_alternative<Overflow>(r));
    CHECK(std::get<Overflow>(r).budget == 500);

    Presentation a5 = parse_group("group { gens: a b; rels: a^2 b^3 (a*b)^5 }");
    CHECK(std::holds_alternative<Overflow>(todd_coxeter(a5, 10)));

    CHECK_THROWS_AS(todd_coxeter(z2, 0), Error);
}

TEST_CASE("tables satisfy the presentation and the group axioms") {
    for (const char* text :
         {"group { gens: a; rels: a^5 }", "group { gens: a b; rels: a^2 b^3 (a*b)^2 }",
          "group { gens: s t; rels: s^2 t^3 (s*t)^3 }",
          "group { gens: a b; rels: a^2 b^4 a*b*a^-1*b^-1 }"}) {
        Presentation p = parse_group(text);
        CayleyTable t = enumerate(text);
        t.check_presentation(p);
        size_t n = t.order();
        for (size_t x = 0; x < n; ++x) {
            CHECK(t.mul(0, x) == x);
            CHECK(t.mul(x, 0) == x);
            CHECK(t.mul(x, t.inverse(x)) == 0);
            CHECK(t.eval(t.rep_word(x)) == x);
        }
        for (size_t x = 0; x < n; ++x)
            for (size_t y = 0; y < n; ++y)
                for (size_t z = 0; z < n; ++z)
                    REQUIRE(t.mul(t.mul(x, y), z) == t.mul(x, t.mul(y, z)));
    }
}

TEST_CASE("S3 table matches the symmetric-group oracle") {
    CayleyTable t = enumerate("group { gens: a b; rels: a^2 b^3 (a*b)^2 }");
    // oracle: a = (0 1), b = (0 1 2) generate S3
    std::vector<Perm> s3 = closure({{1, 0, 2}, {1, 2, 0}});
    REQUIRE(s3.size() == 6);
    CHECK(t.order() == 6);

    // element-order multisets agree (labeling-independent)
    std::multiset<int> got;
    for (size_t x = 0; x < t.order(); ++x)
        got.insert(static_cast<int>(t.element_order(x)));
    CHECK(got == order_multiset(s3));

    // non-abelian: ab and ba are distinct elements
    Word a = Word::gen(0), b = Word::gen(1);
    CHECK(evaluate_word(t, a * b) != evaluate_word(t, b * a));
    CHECK(evaluate_word(t, a.pow(2)) == 0);
    CHECK(evaluate_word(t, Word()) == 0);
}

TEST_CASE("A4 and A5 tables match the alternating-group oracles") {
    CayleyTable a4 = enumerate("group { gens: s t; rels: s^2 t^3 (s*t)^3 }");
    // s = (0 1)(2 3), t = (0 1 2)
    std::vector<Perm> oracle4 = closure({{1, 0, 3, 2}, {1, 2, 0, 3}});
    REQUIRE(oracle4.size() == 12);
    std::multiset<int> got4;
    for (size_t x = 0; x < a4.order(); ++x)
        got4.insert(static_cast<int>(a4.element_order(x)));
    CHECK(got4 == order_multiset(oracle4));

    CayleyTable a5 = enumerate("group { gens: a b; rels: a^2 b^3 (a*b)^5 }");
    // a = (0 1)(2 3), b = (0 2 4); their product is the 5-cycle (0 1 2 3 4)
    std::vector<Perm> oracle5 = closure({{1, 0, 3, 2, 4}, {2, 1, 4, 3, 0}});
    REQUIRE(oracle5.size() == 60);
    std::multiset<int> got5;
    for (size_t x = 0; x < a5.order(); ++x)
        got5.insert(static_cast<int>(a5.element_order(x)));
    CHECK(got5 == order_multiset(oracle5));
}

TEST_CASE("evaluate_word is a homomorphism of the regular action") {
    CayleyTable t = enumerate("group { gens: a b; rels: a^2 b^3 (a*b)^2 }");
    std::mt19937 rng(97);
    std::uniform_int_distribution<int> len(0, 8), pick(0, 1), sgn(0, 1);
    for (int it = 0; it < 200; ++it) {
        std::vector<Letter> lu, lv;
        for (int i = 0, n = len(rng); i < n; ++i) lu.push_back({pick(rng), sgn(rng) ? 1 : -1});
        for (int i = 0, n = len(rng); i < n; ++i) lv.push_back({pick(rng), sgn(rng) ? 1 : -1});
        Word u = Word::from_letters(lu), v = Word::from_letters(lv);
        CHECK(evaluate_word(t, u * v) == t.eval(v, evaluate_word(t, u)));
        CHECK(t.mul(evaluate_word(t, u), evaluate_word(t, v)) == evaluate_word(t, u * v));
    }
}
