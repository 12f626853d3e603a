#include "cellplus/gdense.hpp"

#include <cstdlib>

#include "cellplus/error.hpp"
#include "cellplus/smith.hpp"
#include "cellplus/todd_coxeter.hpp"

namespace cellplus {

namespace {

bool same_presentation(const Presentation& a, const Presentation& b) {
    return a.gens == b.gens && a.relators == b.relators;
}

// subgroup closure of the generator images
bool images_generate(const CayleyTable& t, const std::vector<Word>& images) {
    std::vector<size_t> gens;
    for (const Word& w : images) gens.push_back(evaluate_word(t, w));
    std::vector<char> seen(t.order(), 0);
    std::vector<size_t> frontier{0};
    seen[0] = 1;
    size_t count = 1;
    while (!frontier.empty()) {
        size_t x = frontier.back();
        frontier.pop_back();
        for (size_t g : gens)
            for (size_t y : {t.mul(x, g), t.mul(x, t.inverse(g))})
                if (!seen[y]) {
                    seen[y] = 1;
                    ++count;
                    frontier.push_back(y);
                }
    }
    return count == t.order();
}

// rows stay rows; group-ring entry (i,j) spreads over columns j*|G|+g
MatrixR coeff_rows(const GroupRingMatrix& m) {
    size_t n = m.table()->order();
    MatrixR out(m.ring(), m.rows(), m.cols() * n);
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            for (size_t g = 0; g < n; ++g) out.at(i, j * n + g) = m.at(i, j).coeff(g);
    return out;
}

// integer preimage of one coefficient under phi restricted to Z: residue
// lift for Z/p, denominator already cleared for the Q-subrings, identity
// over Z. Gaussian targets have no absorption case and are rejected by the
// callers before we get here.
mpz_class lift_coefficient(const Scalar& c) {
    if (c.rat().get_den() != 1)
        fail(Error::Kind::Invariant, "coefficient lift: denominator survived clearing");
    return c.rat().get_num();
}

// lcm of the denominators in one row/column slice
mpz_class denominator_lcm(const std::vector<Scalar>& entries) {
    mpz_class l = 1;
    for (const Scalar& e : entries) {
        mpz_class d = e.rat().get_den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        l = l / g * d;
    }
    return l;
}

Witness make_witness(MatrixR b, const MatrixR& ak, const RingSpec& r) {
    if (!invertible(change_ring(b, r) * ak))
        fail(Error::Kind::Invariant, "matrix criterion: witness failed re-verification");
    return Witness{std::move(b)};
}

} // namespace

void DenseRingSpec::validate() const {
    group.validate();
    if (algebra && !ring.is_field())
        fail(Error::Kind::Domain,
             "dense-ring spec: group-algebra coefficients need a field of scalars");
    const Presentation* at = &group;
    for (const GroupHom& h : hops) {
        h.validate_shape();
        if (!same_presentation(h.source, *at))
            fail(Error::Kind::Domain, "dense-ring spec: quotient chain does not compose");
        at = &h.target;
    }
    if (algebra) algebra->check_presentation(*at);
}

DenseRingSpec dense_constant(RingSpec r, Presentation g) {
    DenseRingSpec spec{std::move(r), std::move(g), nullptr, {}};
    spec.validate();
    return spec;
}

DenseRingSpec induced_spec(const DenseRingSpec& spec, const GroupHom& quotient) {
    spec.validate();
    quotient.validate_shape();
    if (!same_presentation(quotient.target, spec.group))
        fail(Error::Kind::Domain, "induced spec: quotient must land in the spec's group");
    CosetResult res = todd_coxeter(quotient.target, 2000);
    if (const CayleyTable* t = std::get_if<CayleyTable>(&res)) {
        for (const Word& r : quotient.source.relators)
            if (evaluate_word(*t, quotient.apply(r)) != 0)
                fail(Error::Kind::Certificate,
                     "induced spec: relator has nontrivial image (not a homomorphism)");
        if (!images_generate(*t, quotient.images))
            fail(Error::Kind::Certificate, "induced spec: generator images do not generate");
    } else if (!quotient.certified) {
        fail(Error::Kind::Tier,
             "induced spec: target not enumerable within 2000 cosets and the "
             "surjection is not certified");
    }
    DenseRingSpec out = spec;
    out.group = quotient.source;
    out.hops.insert(out.hops.begin(), quotient);
    out.validate();
    return out;
}

Word phi_class(const DenseRingSpec& spec, const Word& w) {
    Word out = w;
    for (const GroupHom& h : spec.hops) out = h.apply(out);
    return out;
}

bool invertible(const MatrixR& m) {
    if (m.rows() != m.cols()) return false;
    size_t units = 0;
    for (const Scalar& d : smith_diagonal(m))
        if (d.is_unit()) ++units;
    return units == m.rows();
}

CriterionVerdict matrix_criterion(const MatrixR& a, size_t k,
                                  const DenseRingSpec& spec, long budget) {
    spec.validate();
    if (spec.algebra)
        fail(Error::Kind::Tier,
             "matrix criterion: group-algebra targets are not searchable here; "
             "pass a constant ring");
    if (a.ring() != spec.ring)
        fail(Error::Kind::RingMismatch,
             "matrix criterion: matrix ring differs from the spec ring");
    if (a.rows() != a.cols() || a.rows() == 0)
        fail(Error::Kind::Domain, "matrix criterion: A must be square and nonempty");
    size_t n = a.rows();
    if (k < 1 || k > n) fail(Error::Kind::Domain, "matrix criterion: k out of range");
    if (!invertible(a))
        fail(Error::Kind::Domain, "matrix criterion: A is not invertible over the ring");
    if (budget < 0) fail(Error::Kind::Input, "matrix criterion: negative budget");

    if (spec.ring.kind() == RingKind::GaussianIntegers && k == 1)
        return gaussian_refuter(a);

    std::vector<size_t> first(k);
    for (size_t j = 0; j < k; ++j) first[j] = j;
    MatrixR ak = a.columns(first);

    // The action is trivial (constant target), so phi factors through the
    // augmentation and integer coefficient tuples are fully general. Shells
    // of exact max-norm m, lexicographic inside a shell with per-entry value
    // order 0, 1, -1, 2, -2, ...
    const RingSpec z = RingSpec::integers();
    size_t cells = k * n;
    for (long m = 0; m <= budget; ++m) {
        std::vector<long> values{0};
        for (long v = 1; v <= m; ++v) {
            values.push_back(v);
            values.push_back(-v);
        }
        std::vector<size_t> idx(cells, 0);
        for (;;) {
            long maxabs = 0;
            for (size_t c = 0; c < cells; ++c)
                maxabs = std::max(maxabs, std::labs(values[idx[c]]));
            if (maxabs == m) {
                MatrixR b(z, k, n);
                for (size_t c = 0; c < cells; ++c)
                    b.at(c / n, c % n) = Scalar::from_int(z, values[idx[c]]);
                if (invertible(change_ring(b, spec.ring) * ak))
                    return make_witness(std::move(b), ak, spec.ring);
            }
            bool exhausted = true;
            for (size_t c = cells; c-- > 0;) {
                if (++idx[c] < values.size()) {
                    exhausted = false;
                    break;
                }
                idx[c] = 0;
            }
            if (exhausted) break;
        }
    }
    return Unknown{budget};
}

CriterionVerdict gaussian_refuter(const MatrixR& a) {
    if (a.ring().kind() != RingKind::GaussianIntegers)
        fail(Error::Kind::RingMismatch, "gaussian refuter: matrix must live over Z[i]");
    if (a.rows() == 0 || a.cols() == 0)
        fail(Error::Kind::Domain, "gaussian refuter: empty matrix");
    size_t n = a.rows();

    // unit scan: everything of norm <= 1; the refutation is exhaustive only
    // because this comes out as exactly {1, -1, i, -i}
    size_t found = 0;
    for (long re = -1; re <= 1; ++re)
        for (long im = -1; im <= 1; ++im)
            if (Scalar::gaussian(re, im).is_unit()) ++found;
    if (found != 4)
        fail(Error::Kind::Invariant, "gaussian refuter: unit scan surprised us");

    const RingSpec z = RingSpec::integers();
    MatrixR sys(z, 2, n);
    for (size_t j = 0; j < n; ++j) {
        const Scalar& e = a.at(j, 0);
        sys.at(0, j) = Scalar::from_mpz(z, e.rat().get_num());
        sys.at(1, j) = Scalar::from_mpz(z, e.imag().get_num());
    }
    SnfSolver solver(sys);

    struct Unit {
        const char* name;
        long re, im;
    };
    const Unit units[] = {{"1", 1, 0}, {"-1", -1, 0}, {"i", 0, 1}, {"-i", 0, -1}};
    std::vector<std::string> cases;
    cases.push_back("units of Z[i]: 1, -1, i, -i (norm <= 1 scan)");
    for (const Unit& u : units) {
        MatrixR rhs(z, 2, 1);
        rhs.at(0, 0) = Scalar::from_int(z, u.re);
        rhs.at(1, 0) = Scalar::from_int(z, u.im);
        if (auto x = solver.solve(rhs))
            return make_witness(x->transpose(), a.column(0), a.ring());
        cases.push_back(std::string("u = ") + u.name +
                        ": no integers b with Re/Im(sum b_j a_j1) = (" +
                        std::to_string(u.re) + ", " + std::to_string(u.im) + ")");
    }
    return Refuted{std::move(cases)};
}

MatrixR extract_basis(const MatrixR& span, const MatrixR& target) {
    if (span.ring() != target.ring())
        fail(Error::Kind::RingMismatch, "extract basis: mixed rings");
    const RingSpec& r = span.ring();
    if (r.kind() == RingKind::GaussianIntegers)
        fail(Error::Kind::Domain, "extract basis: no absorption case covers Z[i]");
    if (span.rows() != target.rows() || target.rows() != target.cols())
        fail(Error::Kind::Domain, "extract basis: target must be square in the span's codomain");
    if (!invertible(target))
        fail(Error::Kind::Domain, "extract basis: target columns are not a basis");
    if (!cokernel(span).is_zero())
        fail(Error::Kind::Domain, "extract basis: the span is not a surjection onto F");

    std::optional<MatrixR> x = SnfSolver(span).solve(target);
    if (!x) fail(Error::Kind::Solve, "extract basis: basis not expressible in the span");

    const RingSpec z = RingSpec::integers();
    MatrixR c(z, x->rows(), x->cols());
    for (size_t j = 0; j < x->cols(); ++j) {
        std::vector<Scalar> col;
        for (size_t i = 0; i < x->rows(); ++i) col.push_back(x->at(i, j));
        // n_j is a unit in R: trivially for fields, and over Z[1/S] every
        // canonical denominator is S-smooth
        mpz_class nj = denominator_lcm(col);
        Scalar scale = Scalar::from_mpz(r, nj);
        if (!scale.is_unit())
            fail(Error::Kind::Invariant, "extract basis: clearing factor is not a unit");
        for (size_t i = 0; i < x->rows(); ++i)
            c.at(i, j) = Scalar::from_mpz(z, lift_coefficient(x->at(i, j) * scale));
    }
    if (!invertible(span * change_ring(c, r)))
        fail(Error::Kind::Invariant, "extract basis: absorption broke the basis");
    return c;
}

GroupRingMatrix extract_basis(const GroupRingMatrix& span, const GroupRingMatrix& target) {
    if (span.ring() != target.ring() || span.table() != target.table())
        fail(Error::Kind::RingMismatch, "extract basis: mixed group rings");
    const RingSpec& k = span.ring();
    if (k.kind() == RingKind::GaussianIntegers)
        fail(Error::Kind::Domain, "extract basis: no absorption case covers Z[i]");
    if (span.cols() != target.cols() || target.rows() != target.cols())
        fail(Error::Kind::Domain, "extract basis: target must be square in the span's codomain");
    if (!invertible(target.blowup()))
        fail(Error::Kind::Domain, "extract basis: target rows are not a basis");
    MatrixR blown = span.blowup().transpose();
    if (!cokernel(blown).is_zero())
        fail(Error::Kind::Domain, "extract basis: the span is not a surjection onto F");

    // Row convention: solving X * span = target linearizes coefficientwise to
    // coeff_rows(X) * blowup(span) = coeff_rows(target), because the blowup
    // P(v)[g][h] = v_{g^-1 h} is exactly right multiplication on coefficients.
    std::optional<MatrixR> yt = SnfSolver(blown).solve(coeff_rows(target).transpose());
    if (!yt) fail(Error::Kind::Solve, "extract basis: basis not expressible in the span");

    size_t order = span.table()->order();
    size_t d = target.rows(), s = span.rows();
    const RingSpec z = RingSpec::integers();
    GroupRingMatrix c(z, span.table(), d, s);
    GroupRingMatrix ck(k, span.table(), d, s);
    for (size_t rr = 0; rr < d; ++rr) {
        std::vector<Scalar> row;
        for (size_t t = 0; t < s * order; ++t) row.push_back(yt->at(t, rr));
        mpz_class nr = denominator_lcm(row);
        Scalar scale = Scalar::from_mpz(k, nr);
        if (!scale.is_unit())
            fail(Error::Kind::Invariant, "extract basis: clearing factor is not a unit");
        for (size_t j = 0; j < s; ++j)
            for (size_t g = 0; g < order; ++g) {
                mpz_class e = lift_coefficient(yt->at(j * order + g, rr) * scale);
                if (e != 0) {
                    c.at(rr, j).add_term(g, Scalar::from_mpz(z, e));
                    ck.at(rr, j).add_term(g, Scalar::from_mpz(k, e));
                }
            }
    }
    if (!invertible((ck * span).blowup()))
        fail(Error::Kind::Invariant, "extract basis: absorption broke the basis");
    return c;
}

} // namespace cellplus
