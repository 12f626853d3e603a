#include "cellplus/chain.hpp"

namespace cellplus {

bool lattice_contains(const MatrixR& a, const MatrixR& b) {
    return SnfSolver(a).solve(b).has_value();
}

MatrixR kernel_preimage(const MatrixR& m, const MatrixR& x) {
    if (m.rows() != x.rows())
        fail(Error::Kind::Invariant, "kernel_preimage: row mismatch");
    MatrixR k = kernel_basis(m.hstack(-x));
    MatrixR out(m.ring(), m.cols(), k.cols());
    for (size_t i = 0; i < m.cols(); ++i)
        for (size_t j = 0; j < k.cols(); ++j) out.at(i, j) = k.at(i, j);
    return out;
}

ChainComplexR::ChainComplexR(RingSpec ring, std::vector<size_t> ranks,
                             std::vector<MatrixR> boundaries)
    : ring_(std::move(ring)), ranks_(std::move(ranks)), boundaries_(std::move(boundaries)) {
    if (ranks_.empty()) fail(Error::Kind::Invariant, "chain complex: no degrees");
    if (boundaries_.size() + 1 != ranks_.size())
        fail(Error::Kind::Invariant, "chain complex: need one boundary per degree >= 1");
    for (size_t q = 1; q < ranks_.size(); ++q) {
        const MatrixR& d = boundaries_[q - 1];
        if (d.ring() != ring_) fail(Error::Kind::RingMismatch, "chain complex: ring mismatch");
        if (d.rows() != ranks_[q - 1] || d.cols() != ranks_[q])
            fail(Error::Kind::Invariant, "chain complex: boundary shape mismatch");
        if (q >= 2 && !(boundaries_[q - 2] * d).is_zero())
            fail(Error::Kind::Invariant,
                 "chain complex: d.d != 0 at degree " + std::to_string(q));
    }
}

MatrixR ChainComplexR::boundary(size_t q) const {
    if (q >= 1 && q < ranks_.size()) return boundaries_[q - 1];
    return MatrixR(ring_, q == 0 ? 0 : rank(q - 1), rank(q));
}

HomologyData homology_data(const ChainComplexR& c, size_t q) {
    MatrixR k = kernel_basis(c.boundary(q));
    auto x = SnfSolver(k).solve(c.boundary(q + 1));
    if (!x)
        fail(Error::Kind::Invariant, "homology: boundary image escapes the cycle lattice");
    return HomologyData{k, *x, cokernel(*x)};
}

ModulePresentation ChainComplexR::homology(size_t q) const {
    return homology_data(*this, q).module;
}

ChainMapR make_chain_map(const ChainComplexR& src, const ChainComplexR& tgt,
                         std::vector<MatrixR> maps) {
    size_t top = std::max(src.top_degree(), tgt.top_degree());
    if (maps.size() > top + 1)
        fail(Error::Kind::Invariant, "chain map: more degrees than the complexes");
    for (size_t q = 0; q < maps.size(); ++q)
        if (maps[q].rows() != tgt.rank(q) || maps[q].cols() != src.rank(q))
            fail(Error::Kind::Invariant, "chain map: shape mismatch at degree " +
                                             std::to_string(q));
    while (maps.size() <= top)
        maps.push_back(MatrixR(src.ring(), tgt.rank(maps.size()), src.rank(maps.size())));
    for (size_t q = 1; q <= top; ++q)
        if (!(tgt.boundary(q) * maps[q] == maps[q - 1] * src.boundary(q)))
            fail(Error::Kind::Invariant,
                 "chain map: does not commute with boundaries at degree " +
                     std::to_string(q));
    return ChainMapR{std::move(maps)};
}

ChainMapR identity_chain_map(const ChainComplexR& c) {
    std::vector<MatrixR> maps;
    for (size_t q = 0; q <= c.top_degree(); ++q)
        maps.push_back(MatrixR::identity(c.ring(), c.rank(q)));
    return make_chain_map(c, c, std::move(maps));
}

ChainComplexR mapping_cone(const ChainComplexR& src, const ChainComplexR& tgt,
                           const ChainMapR& f) {
    const RingSpec& R = src.ring();
    size_t top = std::max(src.top_degree() + 1, tgt.top_degree());
    std::vector<size_t> ranks;
    for (size_t q = 0; q <= top; ++q)
        ranks.push_back((q >= 1 ? src.rank(q - 1) : 0) + tgt.rank(q));
    auto fmap = [&](size_t q) {
        return q < f.maps.size() ? f.maps[q] : MatrixR(R, tgt.rank(q), src.rank(q));
    };
    std::vector<MatrixR> bnds;
    for (size_t q = 1; q <= top; ++q) {
        // rows: src(q-2) then tgt(q-1); cols: src(q-1) then tgt(q)
        MatrixR top_blocks = (-src.boundary(q - 1)).hstack(
            MatrixR(R, q >= 2 ? src.rank(q - 2) : 0, tgt.rank(q)));
        MatrixR bot_blocks = (-fmap(q - 1)).hstack(tgt.boundary(q));
        bnds.push_back(top_blocks.vstack(bot_blocks));
    }
    return ChainComplexR(R, std::move(ranks), std::move(bnds));
}

InducedMap induced_homology_map(const HomologyData& src, const HomologyData& tgt,
                                const MatrixR& chain_map_q) {
    MatrixR cycles = chain_map_q * src.kernel;
    auto m = SnfSolver(tgt.kernel).solve(cycles);
    if (!m)
        fail(Error::Kind::Invariant, "induced map: image cycle escapes the cycle lattice");
    InducedMap out{*m, false, false};

    // surjective: image plus relations spans the target cycle coordinates
    ModulePresentation cok = cokernel(out.matrix.hstack(tgt.relations));
    out.surjective = cok.free_rank == 0 && cok.invariant_factors.empty();

    // injective: preimage of im(relations_tgt) is contained in im(relations_src)
    MatrixR pre = kernel_preimage(out.matrix, tgt.relations);
    out.injective = lattice_contains(src.relations, pre);
    return out;
}

bool exact_at_joint(const HomologyData& mid, const MatrixR& incoming,
                    const HomologyData& tgt, const MatrixR& outgoing) {
    MatrixR ker_span = kernel_preimage(outgoing, tgt.relations);
    MatrixR im_span = incoming.hstack(mid.relations);
    return lattice_contains(im_span, ker_span) && lattice_contains(ker_span, im_span);
}

} // namespace cellplus
