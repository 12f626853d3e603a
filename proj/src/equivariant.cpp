#include "cellplus/equivariant.hpp"

#include "cellplus/fox.hpp"
#include "cellplus/smith.hpp"

namespace cellplus {

namespace {

// rows stay rows; group-ring entry (i,j) spreads over columns j*|G|+g
MatrixR coeff_rows(const GroupRingMatrix& m) {
    size_t n = m.table()->order();
    MatrixR out(m.ring(), m.rows(), m.cols() * n);
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            for (size_t g = 0; g < n; ++g) out.at(i, j * n + g) = m.at(i, j).coeff(g);
    return out;
}

// inverse of coeff_rows on transposed data: column i of x describes row i
GroupRingMatrix rows_from_coeff_columns(const RingSpec& ring, const CayleyPtr& table,
                                        const MatrixR& x, size_t rows, size_t cols) {
    size_t n = table->order();
    GroupRingMatrix out(ring, table, rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j)
            for (size_t g = 0; g < n; ++g) out.at(i, j).add_term(g, x.at(j * n + g, i));
    return out;
}

GroupRingMatrix push_matrix(const GroupRingMatrix& m, const CayleyPtr& target,
                            const std::vector<size_t>& fn) {
    GroupRingMatrix out(m.ring(), target, m.rows(), m.cols());
    auto f = [&fn](size_t g) { return fn[g]; };
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j).pushed(target, f);
    return out;
}

// left translation by g0 on kernel coordinates (cell i, group g) = i*|G|+g
MatrixR orbit_columns(const CayleyTable& t, const MatrixR& c, size_t cells) {
    size_t n = t.order();
    MatrixR out(c.ring(), c.rows(), n);
    for (size_t g0 = 0; g0 < n; ++g0)
        for (size_t i = 0; i < cells; ++i)
            for (size_t g = 0; g < n; ++g)
                out.at(i * n + t.mul(g0, g), g0) = c.at(i * n + g, 0);
    return out;
}

} // namespace

EquivariantChainComplex::EquivariantChainComplex(CayleyPtr group,
                                                 std::vector<size_t> cells,
                                                 std::vector<GroupRingMatrix> boundaries)
    : group_(std::move(group)),
      ring_(boundaries.empty() ? RingSpec::integers() : boundaries[0].ring()),
      cells_(std::move(cells)),
      boundaries_(std::move(boundaries)) {
    if (!group_) fail(Error::Kind::Invariant, "equivariant complex: no group table");
    if (cells_.empty()) fail(Error::Kind::Invariant, "equivariant complex: no degrees");
    if (boundaries_.size() + 1 != cells_.size())
        fail(Error::Kind::Invariant,
             "equivariant complex: need one boundary per degree >= 1");
    for (size_t q = 1; q < cells_.size(); ++q) {
        const GroupRingMatrix& d = boundaries_[q - 1];
        if (d.table() != group_ || d.ring() != ring_)
            fail(Error::Kind::RingMismatch, "equivariant complex: mixed group rings");
        if (d.rows() != cells_[q] || d.cols() != cells_[q - 1])
            fail(Error::Kind::Invariant, "equivariant complex: boundary shape mismatch");
        if (q >= 2 && !(boundaries_[q - 1] * boundaries_[q - 2]).is_zero())
            fail(Error::Kind::Invariant,
                 "equivariant complex: d.d != 0 at degree " + std::to_string(q));
    }
}

GroupRingMatrix EquivariantChainComplex::boundary(size_t q) const {
    if (q >= 1 && q < cells_.size()) return boundaries_[q - 1];
    return GroupRingMatrix(ring_, group_, rank(q), q == 0 ? 0 : rank(q - 1));
}

MatrixR EquivariantChainComplex::blown_boundary(size_t q) const {
    return boundary(q).blowup();
}

EquivariantChainComplex equivariant_chains(const SpaceModel& space,
                                           const GroupHom& alpha, CayleyPtr cayley) {
    space.validate();
    alpha.validate_shape();
    if (alpha.source.rank() != space.base.rank())
        fail(Error::Kind::Domain, "equivariant chains: hom source does not match the space");
    if (cayley->rank() != alpha.target.rank())
        fail(Error::Kind::Domain, "equivariant chains: table rank does not match hom target");
    for (const Word& r : space.base.relators)
        if (evaluate_word(*cayley, alpha.apply(r)) != 0)
            fail(Error::Kind::Domain, "equivariant chains: alpha does not kill a relator");
    for (const Word& w : space.extra_2cells)
        if (evaluate_word(*cayley, alpha.apply(w)) != 0)
            fail(Error::Kind::Domain,
                 "equivariant chains: extra 2-cell word is not in ker(alpha)");

    RingSpec zz = RingSpec::integers();
    size_t m1 = space.base.rank();
    std::vector<Word> cells2 = space.all_2cells();

    GroupRingMatrix d1(zz, cayley, m1, 1);
    for (size_t j = 0; j < m1; ++j) {
        size_t img = evaluate_word(*cayley, alpha.apply(Word::gen(static_cast<int>(j))));
        d1.at(j, 0) = GroupRingElement::of(zz, cayley, img) -
                      GroupRingElement::unit(zz, cayley);
    }

    GroupRingMatrix d2(zz, cayley, cells2.size(), m1);
    for (size_t i = 0; i < cells2.size(); ++i)
        for (size_t j = 0; j < m1; ++j) {
            FoxTerm dw = fox_derivative(cells2[i], static_cast<int>(j));
            for (const auto& [prefix, c] : dw.terms())
                d2.at(i, j).add_term(evaluate_word(*cayley, alpha.apply(prefix)),
                                     Scalar::from_mpz(zz, c));
        }

    return EquivariantChainComplex(cayley, {1, m1, cells2.size()}, {d1, d2});
}

GroupRingMatrix kernel_module_generators(const EquivariantChainComplex& e, size_t q) {
    const CayleyTable& t = *e.group();
    size_t n = t.order(), cells = e.rank(q);
    MatrixR k = kernel_basis(e.blown_boundary(q).transpose());

    MatrixR span(k.ring(), k.rows(), 0);
    std::vector<size_t> chosen;
    std::vector<size_t> pending(k.cols());
    for (size_t i = 0; i < pending.size(); ++i) pending[i] = i;
    while (!pending.empty()) {
        SnfSolver solver(span);
        size_t adopt = SIZE_MAX;
        std::vector<size_t> rest;
        for (size_t idx : pending) {
            if (adopt != SIZE_MAX) rest.push_back(idx);
            else if (!solver.solve(k.column(idx))) adopt = idx;
        }
        if (adopt == SIZE_MAX) break;
        chosen.push_back(adopt);
        span = span.hstack(orbit_columns(t, k.column(adopt), cells));
        pending = std::move(rest);
    }

    GroupRingMatrix out(e.ring(), e.group(), chosen.size(), cells);
    for (size_t r = 0; r < chosen.size(); ++r)
        for (size_t i = 0; i < cells; ++i)
            for (size_t g = 0; g < n; ++g)
                out.at(r, i).add_term(g, k.at(i * n + g, chosen[r]));
    return out;
}

EquivariantChainComplex extend_to_degree3(const EquivariantChainComplex& e) {
    if (e.top_degree() != 2)
        fail(Error::Kind::Domain, "extend_to_degree3: need degrees exactly 0..2");
    GroupRingMatrix d3 = kernel_module_generators(e, 2);
    return EquivariantChainComplex(e.group(), {e.rank(0), e.rank(1), e.rank(2), d3.rows()},
                                   {e.boundary(1), e.boundary(2), d3});
}

ChainComplexR augmented_complex(const EquivariantChainComplex& e, const RingSpec& r) {
    std::vector<size_t> ranks;
    std::vector<MatrixR> bnds;
    for (size_t q = 0; q <= e.top_degree(); ++q) {
        ranks.push_back(e.rank(q));
        if (q >= 1) bnds.push_back(change_ring(e.boundary(q).augmented(), r).transpose());
    }
    return ChainComplexR(r, std::move(ranks), std::move(bnds));
}

ChainComplexR blown_complex(const EquivariantChainComplex& e, const RingSpec& r) {
    size_t n = e.group()->order();
    std::vector<size_t> ranks;
    std::vector<MatrixR> bnds;
    for (size_t q = 0; q <= e.top_degree(); ++q) {
        ranks.push_back(e.rank(q) * n);
        if (q >= 1) bnds.push_back(change_ring(e.blown_boundary(q), r).transpose());
    }
    return ChainComplexR(r, std::move(ranks), std::move(bnds));
}

std::vector<size_t> element_map(const CayleyTable& src, const CayleyTable& tgt,
                                const GroupHom& along) {
    along.validate_shape();
    if (along.source.rank() != src.rank() || along.target.rank() != tgt.rank())
        fail(Error::Kind::Domain, "element_map: table ranks do not match the hom");
    std::vector<size_t> fn(src.order());
    for (size_t g = 0; g < src.order(); ++g)
        fn[g] = evaluate_word(tgt, along.apply(src.rep_word(g)));
    for (size_t g = 0; g < src.order(); ++g)
        for (int j = 0; j < static_cast<int>(src.rank()); ++j) {
            size_t img = evaluate_word(tgt, along.apply(Word::gen(j)));
            if (fn[src.act(g, Letter{j, 1})] != tgt.mul(fn[g], img))
                fail(Error::Kind::Domain, "element_map: images do not define a homomorphism");
        }
    return fn;
}

EquivariantChainMap lift_chain_map(const EquivariantChainComplex& src,
                                   const EquivariantChainComplex& tgt,
                                   const std::vector<size_t>& fn) {
    if (src.rank(0) != 1 || tgt.rank(0) != 1)
        fail(Error::Kind::Domain, "chain lift: complexes need a single 0-cell");
    if (fn.size() != src.group()->order())
        fail(Error::Kind::Domain, "chain lift: element map has the wrong size");
    if (src.ring() != tgt.ring())
        fail(Error::Kind::RingMismatch, "chain lift: coefficient rings differ");

    const RingSpec& r = tgt.ring();
    const CayleyPtr& table = tgt.group();

    GroupRingMatrix f0(r, table, 1, 1);
    f0.at(0, 0) = GroupRingElement::unit(r, table);
    EquivariantChainMap out{{f0}};

    for (size_t q = 1; q <= src.top_degree(); ++q) {
        GroupRingMatrix rhs = push_matrix(src.boundary(q), table, fn) * out.f[q - 1];
        auto x = SnfSolver(tgt.blown_boundary(q).transpose())
                     .solve(coeff_rows(rhs).transpose());
        if (!x)
            fail(Error::Kind::Invariant,
                 "chain lift: no solution at degree " + std::to_string(q) +
                     " (target complex is not exact there)");
        GroupRingMatrix fq = rows_from_coeff_columns(r, table, *x, src.rank(q), tgt.rank(q));
        if (!(fq * tgt.boundary(q) == rhs))
            fail(Error::Kind::Invariant, "chain lift: commutation check failed");
        out.f.push_back(std::move(fq));
    }
    return out;
}

ChainMapR augmented_map(const EquivariantChainMap& f, const ChainComplexR& src,
                        const ChainComplexR& tgt) {
    std::vector<MatrixR> maps;
    for (const GroupRingMatrix& fq : f.f)
        maps.push_back(change_ring(fq.augmented(), src.ring()).transpose());
    return make_chain_map(src, tgt, std::move(maps));
}

} // namespace cellplus
