#pragma once

#include <vector>

#include "cellplus/chain.hpp"
#include "cellplus/group_ring.hpp"
#include "cellplus/presentation.hpp"

namespace cellplus {

// Cellular chains of the cover of a presentation 2-complex along a surjection
// onto a finite group G, as free left Z[G]-modules. Row convention: rows of
// boundary(q) index q-cells, columns (q-1)-cells, and chains are coefficient
// row vectors acted on from the right, so d2 * d1 is the ordinary product.
class EquivariantChainComplex {
public:
    EquivariantChainComplex(CayleyPtr group, std::vector<size_t> cells,
                            std::vector<GroupRingMatrix> boundaries); // d.d = 0

    const CayleyPtr& group() const { return group_; }
    const RingSpec& ring() const { return ring_; }
    size_t top_degree() const { return cells_.size() - 1; }
    size_t rank(size_t q) const { return q < cells_.size() ? cells_[q] : 0; }
    // zero-shaped outside 1..top
    GroupRingMatrix boundary(size_t q) const;

    // integer picture: free abelian coordinate (cell i, group g) = i*|G| + g
    MatrixR blown_boundary(size_t q) const;

private:
    CayleyPtr group_;
    RingSpec ring_;
    std::vector<size_t> cells_;
    std::vector<GroupRingMatrix> boundaries_;
};

// Chains of the ker(alpha) cover: one 0-cell, a 1-cell per generator with
// d1 row alpha(x_j) - 1, a 2-cell per relator and extra word with d2 row the
// Fox derivatives pushed through alpha. Rejects words outside ker(alpha).
EquivariantChainComplex equivariant_chains(const SpaceModel& space,
                                           const GroupHom& alpha, CayleyPtr cayley);

// Z[G]-generators of { x : x * boundary(q) = 0 }, one generator per row,
// chosen greedily along the integer kernel basis until the G-orbits span the
// whole kernel lattice.
GroupRingMatrix kernel_module_generators(const EquivariantChainComplex& e, size_t q);

// One fresh 3-cell per Z[G]-generator of the degree-2 cycle module, so the
// blown-up complex becomes exact in degree 2.
EquivariantChainComplex extend_to_degree3(const EquivariantChainComplex& e);

// Plain complexes (column convention). augmented: tensor over Z[G] with the
// trivial module R. blown: restriction of scalars, one R-coordinate per
// (cell, group element) pair.
ChainComplexR augmented_complex(const EquivariantChainComplex& e, const RingSpec& r);
ChainComplexR blown_complex(const EquivariantChainComplex& e, const RingSpec& r);

// src element -> tgt element realizing `along` on the underlying groups
std::vector<size_t> element_map(const CayleyTable& src, const CayleyTable& tgt,
                                const GroupHom& along);

// Equivariant lift of the identity of Z along fn: f[q] has one row per src
// q-cell, written over tgt q-cells; f[q] * d_tgt(q) = push(d_src(q)) * f[q-1].
struct EquivariantChainMap {
    std::vector<GroupRingMatrix> f;
};

EquivariantChainMap lift_chain_map(const EquivariantChainComplex& src,
                                   const EquivariantChainComplex& tgt,
                                   const std::vector<size_t>& fn);

// The lift tensored down to plain complexes over their common constant ring.
ChainMapR augmented_map(const EquivariantChainMap& f, const ChainComplexR& src,
                        const ChainComplexR& tgt);

} // namespace cellplus
