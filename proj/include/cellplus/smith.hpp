#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cellplus/matrix.hpp"

namespace cellplus {

// U*A*V = D with U, V unimodular, D diagonal with d1 | d2 | ... and each
// diagonal entry the canonical associate. Uinv/Vinv are carried along so
// callers can change bases without re-solving.
struct SmithForm {
    MatrixR U, D, V;
    MatrixR Uinv, Vinv;
    size_t rank = 0;

    std::vector<Scalar> diagonal() const;
    // nonzero, non-unit diagonal entries, in chain order
    std::vector<Scalar> invariant_factors() const;
};

SmithForm smith_normal_form(const MatrixR& a);

// Diagonal of the Smith form without carrying the transforms (much cheaper
// on wide matrices; cokernel-style callers only need the invariants).
std::vector<Scalar> smith_diagonal(const MatrixR& a);

// Basis of { x : A x = 0 } as matrix columns. Over Z (and any non-field
// Euclidean ring here) the basis spans the full saturated kernel lattice.
MatrixR kernel_basis(const MatrixR& a);

// Finitely generated module over a Euclidean domain in canonical form.
struct ModulePresentation {
    RingSpec ring;
    size_t free_rank = 0;
    std::vector<Scalar> invariant_factors;

    bool is_zero() const { return free_rank == 0 && invariant_factors.empty(); }
    // "Z^2 + Z/2 + Z/6", "Q", "0", ...
    std::string str() const;
};

bool module_iso(const ModulePresentation& a, const ModulePresentation& b);

// R^rows(A) modulo the column span of A.
ModulePresentation cokernel(const MatrixR& a);

// Exact linear solves A x = b reusing one Smith factorization of A.
class SnfSolver {
public:
    explicit SnfSolver(MatrixR a);

    // Solves column-wise; nullopt if any column has no solution over the ring.
    std::optional<MatrixR> solve(const MatrixR& b) const;
    bool contains(const MatrixR& b) const { return solve(b).has_value(); }

    const SmithForm& form() const { return snf_; }
    const MatrixR& matrix() const { return a_; }

private:
    MatrixR a_;
    SmithForm snf_;
};

} // namespace cellplus
