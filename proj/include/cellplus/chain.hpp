#pragma once

#include <vector>

#include "cellplus/matrix.hpp"
#include "cellplus/smith.hpp"

namespace cellplus {

// colspan(b) contained in the column lattice of a, over the common ring
bool lattice_contains(const MatrixR& a, const MatrixR& b);

// spanning set of { y : M y in colspan(X) } (full preimage sublattice)
MatrixR kernel_preimage(const MatrixR& m, const MatrixR& x);

// Chain complex of finitely generated free R-modules, column convention:
// boundary(q) : C_q -> C_{q-1} has rank(q-1) rows and rank(q) columns.
class ChainComplexR {
public:
    ChainComplexR(RingSpec ring, std::vector<size_t> ranks,
                  std::vector<MatrixR> boundaries); // validates d.d = 0

    const RingSpec& ring() const { return ring_; }
    size_t top_degree() const { return ranks_.size() - 1; }
    size_t rank(size_t q) const { return q < ranks_.size() ? ranks_[q] : 0; }
    // d_q for 1 <= q <= top; a zero matrix of the right shape otherwise
    MatrixR boundary(size_t q) const;

    ModulePresentation homology(size_t q) const;

private:
    RingSpec ring_;
    std::vector<size_t> ranks_;
    std::vector<MatrixR> boundaries_; // boundaries_[q-1] = d_q
};

// H_q presented in cycle coordinates: columns of `kernel` form a basis of the
// cycle lattice; `relations` expresses im d_{q+1} in that basis.
struct HomologyData {
    MatrixR kernel;
    MatrixR relations;
    ModulePresentation module;
};

HomologyData homology_data(const ChainComplexR& c, size_t q);

// Degreewise map of complexes; commutation checked on construction.
struct ChainMapR {
    std::vector<MatrixR> maps; // maps[q] : C_q(src) -> C_q(tgt)
};

ChainMapR make_chain_map(const ChainComplexR& src, const ChainComplexR& tgt,
                         std::vector<MatrixR> maps);

ChainMapR identity_chain_map(const ChainComplexR& c);

// Cone_q = C_{q-1}(src) + C_q(tgt), D(x,y) = (-dx, d'y - fx).
ChainComplexR mapping_cone(const ChainComplexR& src, const ChainComplexR& tgt,
                           const ChainMapR& f);

// Induced map on homology in cycle coordinates, with exact verdicts.
struct InducedMap {
    MatrixR matrix; // src cycle basis -> tgt cycle coordinates
    bool injective = false, surjective = false;
    bool iso() const { return injective && surjective; }
};

InducedMap induced_homology_map(const HomologyData& src, const HomologyData& tgt,
                                const MatrixR& chain_map_q);

// im(f) = ker(g) inside the middle homology, all in cycle coordinates
bool exact_at_joint(const HomologyData& mid, const MatrixR& incoming,
                    const HomologyData& tgt, const MatrixR& outgoing);

} // namespace cellplus
