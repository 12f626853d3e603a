#pragma once

#include <string>
#include <variant>
#include <vector>

#include "cellplus/group_ring.hpp"
#include "cellplus/presentation.hpp"

namespace cellplus {

// R together with phi : Z[G] -> R. Every supported target carries the
// trivial G-action, so phi is the augmentation into R's prime ring; what
// varies is the quotient chain phi may be composed with, and whether R is
// the constant ring itself or the group algebra ring[algebra].
struct DenseRingSpec {
    RingSpec ring;
    Presentation group;          // the G of phi
    CayleyPtr algebra;           // set iff R = ring[algebra]
    std::vector<GroupHom> hops;  // quotient chain starting at `group`

    void validate() const; // chain composes and every hop surjects
};

DenseRingSpec dense_constant(RingSpec r, Presentation g);

// Compose with a further quotient pi ->> spec.group.
DenseRingSpec induced_spec(const DenseRingSpec& spec, const GroupHom& quotient);

// Image of a word of spec.group after all hops.
Word phi_class(const DenseRingSpec& spec, const Word& w);

// All diagonal invariants exist and are units.
bool invertible(const MatrixR& m);

struct Witness {
    MatrixR b; // integer k x n with phi(b) * A_k invertible, re-verified
};
struct Refuted {
    std::vector<std::string> cases; // the unit scan plus one line per unit
};
struct Unknown {
    long budget;
};
using CriterionVerdict = std::variant<Witness, Refuted, Unknown>;

// Bounded search for B with phi(B) * A_k invertible over spec.ring: integer
// coefficient tuples by increasing max-norm, then lexicographically with
// entries ordered 0, 1, -1, 2, -2, ... Gaussian targets with k = 1 route
// through the exhaustive refuter instead of the search.
CriterionVerdict matrix_criterion(const MatrixR& a, size_t k,
                                  const DenseRingSpec& spec, long budget);

// k = 1 over Z[i], coefficients in Z: one exact integer linear system
// Re/Im(sum_j b_j a_j1) = (Re u, Im u) per unit u; Refuted iff all four fail.
CriterionVerdict gaussian_refuter(const MatrixR& a);

// Coefficient absorption over a constant ring: columns of `span` are the
// images f(x_j (x) 1), columns of `target` a basis of F = R^m. Returns an
// integer matrix C such that span * C is again a basis (re-verified), i.e.
// the R-coefficients expressing the basis in the span have been replaced by
// integers: residue lifts for Z/p, denominator clearing for subrings of Q.
MatrixR extract_basis(const MatrixR& span, const MatrixR& target);

// Group-algebra variant, R = k[G]: rows of `span` are f(x_j (x) 1) in R^m,
// rows of `target` a basis of R^m. Returns a matrix over Z[G] whose rows
// recombine the span into a basis, re-verified through the blowup over k.
GroupRingMatrix extract_basis(const GroupRingMatrix& span,
                              const GroupRingMatrix& target);

} // namespace cellplus
