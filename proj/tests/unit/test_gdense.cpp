#include "doctest.h"

#include "cellplus/error.hpp"
#include "cellplus/gdense.hpp"
#include "cellplus/grammar.hpp"
#include "cellplus/smith.hpp"
#include "cellplus/todd_coxeter.hpp"

using namespace cellplus;

namespace {

const RingSpec Z = RingSpec::integers();
const RingSpec Q = RingSpec::rationals();

Presentation pres(const std::string& text) { return parse_group(text); }

CayleyPtr table_of(const Presentation& p) {
    return std::make_shared<const CayleyTable>(std::get<CayleyTable>(todd_coxeter(p, 512)));
}

GroupHom hom(Presentation src, Presentation tgt, std::vector<Word> images,
             bool certified = false) {
    return GroupHom{std::move(src), std::move(tgt), std::move(images), certified};
}

} // namespace

TEST_CASE("matrix criterion finds small witnesses") {
    DenseRingSpec rat = dense_constant(Q, pres("group { gens: ; rels: }"));
    CriterionVerdict v = matrix_criterion(MatrixR::identity(Q, 2), 1, rat, 3);
    REQUIRE(std::holds_alternative<Witness>(v));
    CHECK(std::get<Witness>(v).b == MatrixR::from_int_rows(Z, {{1, 0}}));

    DenseRingSpec f5 = dense_constant(RingSpec::parse("Z/5"), pres("group { gens: ; rels: }"));
    MatrixR a = MatrixR::parse("Z/5: [[2,4],[1,3]]");
    v = matrix_criterion(a, 1, f5, 3);
    REQUIRE(std::holds_alternative<Witness>(v));
    // product with the first column is 0*2 + 1*1 = 1, already a unit
    CHECK(std::get<Witness>(v).b == MatrixR::from_int_rows(Z, {{0, 1}}));
    v = matrix_criterion(a, 2, f5, 3);
    REQUIRE(std::holds_alternative<Witness>(v));
    CHECK(invertible(change_ring(std::get<Witness>(v).b, a.ring()) * a));

    // budget 0 only ever tries B = 0
    v = matrix_criterion(MatrixR::identity(Q, 2), 1, rat, 0);
    REQUIRE(std::holds_alternative<Unknown>(v));
    CHECK(std::get<Unknown>(v).budget == 0);
}

TEST_CASE("matrix criterion rejects malformed inputs") {
    DenseRingSpec rat = dense_constant(Q, pres("group { gens: ; rels: }"));
    CHECK_THROWS_AS(matrix_criterion(MatrixR(Q, 2, 3), 1, rat, 3), Error);
    CHECK_THROWS_AS(matrix_criterion(MatrixR::identity(Q, 2), 0, rat, 3), Error);
    CHECK_THROWS_AS(matrix_criterion(MatrixR::identity(Q, 2), 3, rat, 3), Error);
    CHECK_THROWS_AS(matrix_criterion(MatrixR::identity(Z, 2), 1, rat, 3), Error);
    CHECK_THROWS_AS(matrix_criterion(MatrixR::parse("Q: [[1,0],[0,0]]"), 1, rat, 3), Error);
    CHECK_THROWS_AS(matrix_criterion(MatrixR::parse("Z: [[2,0],[0,1]]"), 1,
                                     dense_constant(Z, pres("group { gens: ; rels: }")), 3),
                    Error);

    // group-algebra targets are out of the search's reach
    Presentation c2 = pres("group { gens: g; rels: g^2 }");
    DenseRingSpec alg{RingSpec::parse("Z/5"), c2, table_of(c2), {}};
    alg.validate();
    CHECK_THROWS_AS(matrix_criterion(MatrixR::identity(RingSpec::parse("Z/5"), 2), 1, alg, 3),
                    Error);
    // and the scalar field of an algebra spec must actually be a field
    DenseRingSpec bad{Z, c2, table_of(c2), {}};
    CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("gaussian refuter settles k = 1 exactly") {
    MatrixR a = MatrixR::parse("Z[i]: [[3,2-i],[2+i,2]]");
    CHECK(det(a).is_one()); // the matrix is in SL_2(Z[i])

    DenseRingSpec gauss =
        dense_constant(RingSpec::gaussian_integers(), pres("group { gens: ; rels: }"));
    CriterionVerdict v = matrix_criterion(a, 1, gauss, 3);
    REQUIRE(std::holds_alternative<Refuted>(v));
    const Refuted& ref = std::get<Refuted>(v);
    REQUIRE(ref.cases.size() == 5); // unit inventory plus one line per unit
    CHECK(ref.cases[0].find("1, -1, i, -i") != std::string::npos);
    for (size_t j = 1; j < 5; ++j)
        CHECK(ref.cases[j].find("no integers") != std::string::npos);

    // k = 2 escapes the refutation: B = I works since A itself is invertible
    v = matrix_criterion(a, 2, gauss, 3);
    REQUIRE(std::holds_alternative<Witness>(v));

    v = gaussian_refuter(MatrixR::parse("Z[i]: [[1],[0]]"));
    REQUIRE(std::holds_alternative<Witness>(v));
    CHECK(std::get<Witness>(v).b == MatrixR::from_int_rows(Z, {{1, 0}}));

    // first solvable unit is u = i: 2*b1 = 0, b2 = 1
    v = gaussian_refuter(MatrixR::parse("Z[i]: [[2],[i]]"));
    REQUIRE(std::holds_alternative<Witness>(v));
    CHECK(std::get<Witness>(v).b == MatrixR::from_int_rows(Z, {{0, 1}}));

    CHECK_THROWS_AS(gaussian_refuter(MatrixR::identity(Z, 2)), Error);
}

TEST_CASE("extract_basis absorbs constant-ring coefficients") {
    // Z/3, f = id: nothing to do
    MatrixR one3 = MatrixR::identity(RingSpec::parse("Z/3"), 1);
    CHECK(extract_basis(one3, one3) == MatrixR::identity(Z, 1));

    // residue lift: 1 = 2 * 3 in Z/5
    RingSpec f5 = RingSpec::parse("Z/5");
    MatrixR c = extract_basis(MatrixR::parse("Z/5: [[2]]"), MatrixR::identity(f5, 1));
    CHECK(c == MatrixR::from_int_rows(Z, {{3}}));

    // denominator clearing over Z[1/2]: basis 1/2 rescales by the unit 2
    RingSpec half = RingSpec::parse("Z[1/2]");
    MatrixR target(half, 1, 1);
    target.at(0, 0) = Scalar::from_mpq(half, mpq_class(1, 2));
    c = extract_basis(MatrixR::identity(half, 1), target);
    CHECK(c == MatrixR::identity(Z, 1));

    MatrixR tq(Q, 1, 1);
    tq.at(0, 0) = Scalar::from_mpq(Q, mpq_class(2, 3));
    c = extract_basis(MatrixR::identity(Q, 1), tq);
    CHECK(c == MatrixR::from_int_rows(Z, {{2}}));

    // more generators than rank: any integer recombination is accepted as
    // long as the result stays a basis
    MatrixR span = MatrixR::parse("Z: [[1,0,1],[0,1,1]]");
    c = extract_basis(span, MatrixR::identity(Z, 2));
    CHECK(invertible(span * c));

    CHECK_THROWS_AS(extract_basis(MatrixR::parse("Z: [[2]]"), MatrixR::identity(Z, 1)), Error);
    CHECK_THROWS_AS(extract_basis(MatrixR::identity(Z, 1), MatrixR::parse("Z: [[0]]")), Error);
    CHECK_THROWS_AS(extract_basis(MatrixR::identity(Z, 1), MatrixR::identity(Q, 1)), Error);
    CHECK_THROWS_AS(extract_basis(MatrixR::identity(RingSpec::gaussian_integers(), 1),
                                  MatrixR::identity(RingSpec::gaussian_integers(), 1)),
                    Error);
}

TEST_CASE("extract_basis lifts group-algebra coefficients") {
    Presentation c2 = pres("group { gens: g; rels: g^2 }");
    CayleyPtr t = table_of(c2);
    RingSpec f7 = RingSpec::parse("Z/7");

    // basis 3 + 2g of the rank-one free module, lifted coefficientwise
    GroupRingMatrix span = GroupRingMatrix::identity(f7, t, 1);
    GroupRingMatrix target(f7, t, 1, 1);
    target.at(0, 0).add_term(0, Scalar::from_int(f7, 3));
    target.at(0, 0).add_term(1, Scalar::from_int(f7, 2));
    REQUIRE(invertible(target.blowup()));
    GroupRingMatrix c = extract_basis(span, target);
    CHECK(c.ring() == Z);
    CHECK(c.at(0, 0).coeff(0) == Scalar::from_int(Z, 3));
    CHECK(c.at(0, 0).coeff(1) == Scalar::from_int(Z, 2));

    // over Z/5 the same element is a zero divisor ((3+2g)^2 = 3+2g), so it
    // cannot be handed in as a basis
    RingSpec f5 = RingSpec::parse("Z/5");
    GroupRingMatrix span5 = GroupRingMatrix::identity(f5, t, 1);
    GroupRingMatrix bad(f5, t, 1, 1);
    bad.at(0, 0).add_term(0, Scalar::from_int(f5, 3));
    bad.at(0, 0).add_term(1, Scalar::from_int(f5, 2));
    CHECK((bad.at(0, 0) * bad.at(0, 0)) == bad.at(0, 0));
    CHECK_THROWS_AS(extract_basis(span5, bad), Error);

    // rational scalars clear denominators row by row
    GroupRingMatrix spanq = GroupRingMatrix::identity(Q, t, 1);
    GroupRingMatrix tq(Q, t, 1, 1);
    tq.at(0, 0).add_term(0, Scalar::from_mpq(Q, mpq_class(1, 2)));
    tq.at(0, 0).add_term(1, Scalar::from_mpq(Q, mpq_class(1, 3)));
    REQUIRE(invertible(tq.blowup()));
    GroupRingMatrix cq = extract_basis(spanq, tq);
    CHECK(cq.at(0, 0).coeff(0) == Scalar::from_int(Z, 3));
    CHECK(cq.at(0, 0).coeff(1) == Scalar::from_int(Z, 2));

    // a genuinely two-generator span: recombine e and (1+g) into a basis
    // of the rank-two free module
    GroupRingMatrix wide(f7, t, 2, 2);
    wide.at(0, 0) = GroupRingElement::unit(f7, t);
    wide.at(1, 0).add_term(0, Scalar::from_int(f7, 1));
    wide.at(1, 0).add_term(1, Scalar::from_int(f7, 1));
    wide.at(1, 1) = GroupRingElement::unit(f7, t);
    GroupRingMatrix id2 = GroupRingMatrix::identity(f7, t, 2);
    GroupRingMatrix cw = extract_basis(wide, id2);
    GroupRingMatrix ck(f7, t, 2, 2);
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j)
            for (size_t g = 0; g < 2; ++g)
                ck.at(i, j).add_term(g, Scalar::from_mpq(f7, cw.at(i, j).coeff(g).rat()));
    CHECK(invertible((ck * wide).blowup()));
}

TEST_CASE("induced specs compose quotient chains") {
    Presentation triv = pres("group { gens: ; rels: }");
    Presentation c4 = pres("group { gens: a; rels: a^4 }");
    Presentation c2 = pres("group { gens: b; rels: b^2 }");

    DenseRingSpec base = dense_constant(RingSpec::parse("Z/5"), triv);
    DenseRingSpec over_c2 = induced_spec(base, hom(c2, triv, {Word{}}));
    DenseRingSpec over_c4 = induced_spec(over_c2, hom(c4, c2, {Word::gen(0)}));
    CHECK(over_c4.hops.size() == 2);
    CHECK(over_c4.group.gens == c4.gens);
    CHECK(phi_class(over_c4, Word::gen(0)).empty());
    CHECK(phi_class(over_c2, Word::gen(0)).empty());

    // composing the two homs by hand gives the same classes
    DenseRingSpec direct = induced_spec(base, hom(c4, triv, {Word{}}));
    CHECK(phi_class(direct, Word::gen(0).pow(3)) ==
          phi_class(over_c4, Word::gen(0).pow(3)));

    // b -> a^2 is a homomorphism but lands in a proper subgroup
    CHECK_THROWS_AS(induced_spec(dense_constant(Q, c4), hom(c2, c4, {Word::gen(0).pow(2)})),
                    Error);
    // b -> a is onto but b^2 -> a^2 != 1
    CHECK_THROWS_AS(induced_spec(dense_constant(Q, c4), hom(c2, c4, {Word::gen(0)})), Error);
    // mismatched chain
    CHECK_THROWS_AS(induced_spec(base, hom(c4, c2, {Word::gen(0)})), Error);

    // non-enumerable target needs a certificate
    Presentation zfree = pres("group { gens: t; rels: }");
    Presentation f2 = pres("group { gens: x y; rels: }");
    CHECK_THROWS_AS(induced_spec(dense_constant(Q, zfree),
                                 hom(f2, zfree, {Word::gen(0), Word::gen(0)})),
                    Error);
    DenseRingSpec certified = induced_spec(
        dense_constant(Q, zfree), hom(f2, zfree, {Word::gen(0), Word::gen(0)}, true));
    CHECK(certified.hops.size() == 1);
    CHECK(phi_class(certified, Word::gen(1)) == Word::gen(0));
}
