#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cellplus/homology_engine.hpp"

namespace cellplus {

// Coefficients for the pipeline: a constant ring, or the group algebra
// scalars[G] of the pipeline's target group (restriction of scalars does
// the actual work, so scalars must be a field in that case).
struct PipelineRing {
    RingSpec scalars;
    bool group_algebra = false;

    std::string token() const;
};

enum class Gate { Pid, RelH1Zero, Rejected };

// The two homology hypotheses plus the coefficient gate, all computed from
// chain level. h1/h2 are the induced maps H_q(X;R) -> H_q(target;R); for a
// 2-complex X the H2 composite is equivalent to the group-level hypothesis
// by right-exactness of the Hopf sequence.
struct HypothesesReport {
    InducedMap h1, h2;
    ModulePresentation h1_src, h1_tgt, h2_src, h2_tgt;
    Gate gate = Gate::Rejected;
    std::string gate_note;

    bool pass() const {
        return h1.injective && h2.surjective && gate != Gate::Rejected;
    }
};

// Everything Y acquires on top of X, with provenance.
struct CellLedger {
    enum class Provenance { KillKernel, NewRelation, SphereWedge };
    struct TwoCell {
        Word attach;
        Provenance why;
    };
    std::vector<std::string> one_cells; // new generator names
    std::vector<TwoCell> two_cells;
    // attaching 2-cycles over Z[G], one row per 3-cell (finite tier)
    std::optional<GroupRingMatrix> three_cells;

    size_t three_cell_count() const { return three_cells ? three_cells->rows() : 0; }
};

// Accepted plus-construction: Y = W + 3-cells, with every certificate
// recomputed from raw chain data before this value is handed out.
struct PlusResult {
    SpaceModel w; // the 2-skeleton of Y, presenting the target group
    CellLedger ledger;
    HypothesesReport hypotheses;
    std::optional<EquivariantChainComplex> y_cover; // finite tier, degrees 0..3
    std::vector<size_t> cell_counts;                // of Y, degrees 0..3
    bool finite = false;

    ModulePresentation h0_y, h1_y, h1_g, h2_x, h2_y, h3_y;
    bool h0_ok = false; // H0(Y;R) = R, via the inclusion
    bool h1_ok = false; // H1(Y;R) = H1(G;R)
    bool h2_ok = false; // H2(X;R) -> H2(Y;R) iso, inclusion-induced
    bool h3_ok = false; // H3(Y;R) = 0 = H3(X;R)
    bool certified() const { return h0_ok && h1_ok && h2_ok && h3_ok; }
};

struct MooreRejection {
    ModulePresentation h2; // the nonzero H2(G;R)
};

HypothesesReport check_hypotheses(const SpaceModel& x, const GroupHom& alpha,
                                  const GroupModel& g, const PipelineRing& r);

// W = X + kill-kernel 2-cells + the target's new 1-cells and 2-cells. The
// pieces must assemble to g_pres literally (gens: X's then new; relators:
// X's, then ker_normal_gens, then new), and alpha must be the tautological
// map x_j -> x_j into g_pres, so pi_1(W) = g_pres by construction.
std::pair<SpaceModel, CellLedger> build_W(const SpaceModel& x, const GroupHom& alpha,
                                          const std::vector<Word>& ker_normal_gens,
                                          const Presentation& g_pres);

// Tietze assembly for a non-tautological alpha: adjoin the target's
// generators and relators plus one mixed relator x_j * alpha(x_j)^-1 per
// source generator. Returns the assembled presentation and the tautological
// alpha into it (which presents the same group).
std::pair<Presentation, GroupHom> assemble_target(const SpaceModel& x,
                                                  const GroupHom& alpha,
                                                  const std::vector<Word>& ker_normal_gens);

// Basis of H2(W, X; R) in new-2-cell coordinates (columns), plus the
// sphere-wedge count. The relative complex has the ledger's cells only; over
// a PID the kernel basis is already a basis, and with no new 1-cells the
// relative boundary vanishes so the free-module basis is the standard one
// even over a group algebra. Anything else is a tier rejection.
std::pair<MatrixR, size_t> relative_h2_basis(const SpaceModel& x, const CellLedger& ledger,
                                             const PipelineRing& r);

// Integer 2-cycles of the W-cover (rows over Z[G]) whose classes in
// H2(W, X; R) form a basis; coefficient absorption via extract_basis.
GroupRingMatrix spherical_lift(const EquivariantChainComplex& w_cover, const SpaceModel& x,
                               const CellLedger& ledger, const MatrixR& basis,
                               const PipelineRing& r);

// Glue the 3-cells on and recompute every certificate from chain level.
// cycles is empty (nullopt) exactly on the no-3-cell tiers. Throws on any
// certificate failure, naming the degree.
PlusResult attach_3cells_and_verify(const SpaceModel& w, CellLedger ledger,
                                    std::optional<GroupRingMatrix> cycles,
                                    const SpaceModel& x, const GroupHom& alpha,
                                    const GroupModel& g, const PipelineRing& r,
                                    HypothesesReport hyp);

// The full pipeline. alpha may be any hom out of pi_1(X); it is brought to
// tautological shape first. Throws Error::Certificate when the hypotheses
// fail (message carries the verdicts).
PlusResult plus_construct(const SpaceModel& x, const GroupHom& alpha,
                          const std::vector<Word>& ker_normal_gens, const PipelineRing& r,
                          size_t max_cosets = 20000, bool target_aspherical = false);

// X = point, alpha: 1 -> G. Rejection carries the nonzero H2(G;R).
std::variant<PlusResult, MooreRejection> moore_space(const GroupModel& g, const RingSpec& r);

// true iff N/[pi,N] = 0, decided by the two outer five-term verdicts.
std::pair<bool, FiveTermReport> relatively_perfect(const GroupModel& pi,
                                                   const std::vector<Word>& n_gens,
                                                   size_t max_cosets = 20000);

// Partial k-completion along pi -> pi/P for a k-perfect normal P, with
// R = k[pi/P] coefficients. pi must be finite-tier.
PlusResult partial_completion(const GroupModel& pi, const std::vector<Word>& p_gens,
                              const RingSpec& k, size_t max_cosets = 20000);

} // namespace cellplus
