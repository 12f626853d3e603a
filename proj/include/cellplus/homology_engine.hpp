#pragma once

#include <vector>

#include "cellplus/equivariant.hpp"
#include "cellplus/todd_coxeter.hpp"

namespace cellplus {

// Realization tier of a presented group. Finite groups carry their regular
// action; otherwise the caller may assert the presentation 2-complex is
// aspherical, which pins H_q for q <= 2. Nothing else is computable here.
struct GroupModel {
    Presentation presentation;
    CayleyPtr finite;        // set on the finite tier
    bool aspherical = false; // set on the asserted-aspherical tier

    static GroupModel finite_via(Presentation p, CayleyPtr table);
    static GroupModel aspherical_complex(Presentation p);
};

// Enumerate cosets within the budget; fall back to the aspherical tier only
// when the caller asserted it. Throws Error::Tier otherwise.
GroupModel realize_group(const Presentation& p, size_t max_cosets, bool aspherical_ok);

// one 0-cell, one 1-cell per generator, one 2-cell per relator / extra word
SpaceModel build_presentation_complex(const Presentation& p,
                                      std::vector<Word> extras = {});

// Degrees 0..3 of a free Z[G]-resolution of Z, from the group's own
// presentation complex (finite tier only).
EquivariantChainComplex group_resolution(const GroupModel& g);

// q <= 2. Finite tier: resolution prefix tensored down to R. Aspherical
// tier: homology of the presentation 2-complex over R.
ModulePresentation group_homology(const GroupModel& g, const RingSpec& r, size_t q);

// Cellular chain complex of the space with constant coefficients (single
// vertex, so d1 = 0 and d2 is the exponent-sum matrix of the 2-cell words).
ChainComplexR space_complex(const SpaceModel& s, const RingSpec& r);

// Constant coefficients: cellular homology of the space itself, degrees 0..2.
std::vector<ModulePresentation> space_homology(const SpaceModel& s, const RingSpec& r);

// k[G] coefficients by restriction of scalars to the field k, degrees 0..top;
// e carries the chains of the G-cover of the space.
std::vector<ModulePresentation> space_homology(const EquivariantChainComplex& e,
                                               const RingSpec& k);

// The degree-2 part of the cover/space/group exact sequence, recomputed from
// chain level: image of H2(cover) -> H2(X;V) -> H2(G;V) -> 0.
struct HopfCertificate {
    ModulePresentation h2_space, h2_group;
    size_t cover_generators = 0; // Z[G]-generators of H2 of the cover used
    bool exact_middle = false, right_surjective = false;
    bool ok() const { return exact_middle && right_surjective; }
};

// e = chains of the ker(alpha) cover of the space; gpres presents the deck
// group on the same generators the cover's table enumerates.
HopfCertificate hopf_check(const EquivariantChainComplex& e, const Presentation& gpres,
                           const RingSpec& v);

// H2(pi) -> H2(pi/N) -> N/[pi,N] -> H1(pi) -> H1(pi/N) -> 0 over Z, with the
// middle term computed as degree-2 homology of the mapping cone of a lifted
// chain map. Every verdict is computed, never assumed.
struct FiveTermReport {
    ModulePresentation h2_pi, h2_quot, middle, h1_pi, h1_quot;
    bool exact_at_h2_quot = false;
    bool exact_at_middle = false;
    bool exact_at_h1_pi = false;
    bool right_surjective = false;
    // verdicts of the two outer induced maps (feed the corollary checks)
    bool h1_injective = false;
    bool h2_surjective = false;

    bool all_exact() const {
        return exact_at_h2_quot && exact_at_middle && exact_at_h1_pi &&
               right_surjective;
    }
};

FiveTermReport five_term(const GroupModel& pi, const std::vector<Word>& n_gens,
                         const RingSpec& r, size_t max_cosets = 20000);

} // namespace cellplus
