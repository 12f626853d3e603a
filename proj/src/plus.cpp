#include "cellplus/plus.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "cellplus/error.hpp"
#include "cellplus/gdense.hpp"

namespace cellplus {

std::string PipelineRing::token() const {
    return group_algebra ? scalars.token() + "[G]" : scalars.token();
}

namespace {

bool same_presentation(const Presentation& a, const Presentation& b) {
    return a.gens == b.gens && a.relators == b.relators;
}

bool tautological_images(const GroupHom& alpha) {
    for (size_t j = 0; j < alpha.images.size(); ++j)
        if (alpha.images[j] != Word::gen(static_cast<int>(j))) return false;
    return true;
}

// gens: X's then new; relators: X's, then the kernel words, then new
bool is_assembled(const SpaceModel& x, const Presentation& g_pres,
                  const std::vector<Word>& ker) {
    size_t xr = x.base.rank(), xn = x.base.relators.size(), s = ker.size();
    if (g_pres.rank() < xr || g_pres.relators.size() < xn + s) return false;
    for (size_t j = 0; j < xr; ++j)
        if (g_pres.gens[j] != x.base.gens[j]) return false;
    for (size_t j = 0; j < xn; ++j)
        if (g_pres.relators[j] != x.base.relators[j]) return false;
    for (size_t j = 0; j < s; ++j)
        if (g_pres.relators[xn + j] != ker[j]) return false;
    return true;
}

void check_kernel_letters(const SpaceModel& x, const std::vector<Word>& ker,
                          const char* who) {
    for (const Word& w : ker)
        for (const Letter& l : w.letters())
            if (l.gen < 0 || static_cast<size_t>(l.gen) >= x.base.rank())
                fail(Error::Kind::Input,
                     std::string(who) + ": kernel words must use the space's generators");
}

std::vector<size_t> identity_elements(size_t n) {
    std::vector<size_t> fn(n);
    for (size_t g = 0; g < n; ++g) fn[g] = g;
    return fn;
}

GroupRingElement to_ring(const GroupRingElement& e, const RingSpec& k) {
    GroupRingElement out(k, e.table());
    for (size_t g = 0; g < e.group_order(); ++g)
        if (!e.coeff(g).is_zero()) out.add_term(g, Scalar::from_mpq(k, e.coeff(g).rat()));
    return out;
}

// constant matrix embedded as coefficients of the identity element
GroupRingMatrix constant_rows(const MatrixR& m, const CayleyPtr& table) {
    GroupRingMatrix out(m.ring(), table, m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero()) out.at(i, j).add_term(0, m.at(i, j));
    return out;
}

EquivariantChainComplex cover_complex(const Presentation& p, const CayleyPtr& table) {
    return equivariant_chains(build_presentation_complex(p), identity_hom(p), table);
}

// restriction of scalars applied degreewise to an equivariant lift
ChainMapR blown_map(const EquivariantChainMap& f, const ChainComplexR& src,
                    const ChainComplexR& tgt) {
    std::vector<MatrixR> maps;
    for (const GroupRingMatrix& fq : f.f)
        maps.push_back(change_ring(fq.blowup(), src.ring()).transpose());
    return make_chain_map(src, tgt, std::move(maps));
}

void fill_hypotheses(HypothesesReport& rep, const ChainComplexR& cx,
                     const ChainComplexR& cg, const ChainMapR& f, const PipelineRing& r) {
    HomologyData h1x = homology_data(cx, 1), h1g = homology_data(cg, 1);
    HomologyData h2x = homology_data(cx, 2), h2g = homology_data(cg, 2);
    rep.h1 = induced_homology_map(h1x, h1g, f.maps[1]);
    rep.h2 = induced_homology_map(h2x, h2g, f.maps[2]);
    rep.h1_src = h1x.module;
    rep.h1_tgt = h1g.module;
    rep.h2_src = h2x.module;
    rep.h2_tgt = h2g.module;
    if (!r.group_algebra) {
        rep.gate = Gate::Pid;
        rep.gate_note = r.scalars.token() + " is a PID";
        return;
    }
    ModulePresentation rel1 = mapping_cone(cx, cg, f).homology(1);
    if (rel1.is_zero()) {
        rep.gate = Gate::RelH1Zero;
        rep.gate_note = "relative H1 over " + r.token() + " vanishes";
    } else {
        rep.gate = Gate::Rejected;
        rep.gate_note = "relative H1 over " + r.token() + " is " + rel1.str();
    }
}

std::string yn(bool b) { return b ? "yes" : "no"; }

} // namespace

HypothesesReport check_hypotheses(const SpaceModel& x, const GroupHom& alpha,
                                  const GroupModel& g, const PipelineRing& r) {
    x.validate();
    g.presentation.validate();
    alpha.validate_shape();
    if (!same_presentation(alpha.source, x.base))
        fail(Error::Kind::Domain, "hypotheses: alpha must start at the space's group");
    if (!same_presentation(alpha.target, g.presentation))
        fail(Error::Kind::Domain, "hypotheses: alpha must land in the supplied group");
    if (r.group_algebra && !r.scalars.is_field())
        fail(Error::Kind::Domain, "hypotheses: group-algebra coefficients need field scalars");

    HypothesesReport rep;
    if (g.finite) {
        EquivariantChainComplex ex = equivariant_chains(x, alpha, g.finite);
        EquivariantChainComplex res =
            extend_to_degree3(cover_complex(g.presentation, g.finite));
        EquivariantChainMap lift =
            lift_chain_map(ex, res, identity_elements(g.finite->order()));
        if (r.group_algebra) {
            ChainComplexR cx = blown_complex(ex, r.scalars);
            ChainComplexR cg = blown_complex(res, r.scalars);
            fill_hypotheses(rep, cx, cg, blown_map(lift, cx, cg), r);
        } else {
            ChainComplexR cx = augmented_complex(ex, r.scalars);
            ChainComplexR cg = augmented_complex(res, r.scalars);
            fill_hypotheses(rep, cx, cg, augmented_map(lift, cx, cg), r);
        }
        return rep;
    }
    if (r.group_algebra)
        fail(Error::Kind::Tier, "hypotheses: group-algebra coefficients need a finite target");
    if (x.base.rank() != 0 || !x.all_2cells().empty())
        fail(Error::Kind::Tier, "hypotheses: a non-finite target needs X = point");
    if (!g.aspherical)
        fail(Error::Kind::Tier, "hypotheses: the target group has no usable realization");
    // aspherical tier: the presentation complex is already the target's
    // classifying space through degree 2
    ChainComplexR cx = space_complex(x, r.scalars);
    ChainComplexR cg = space_complex(build_presentation_complex(g.presentation), r.scalars);
    std::vector<MatrixR> maps;
    maps.push_back(MatrixR::identity(r.scalars, 1));
    fill_hypotheses(rep, cx, cg, make_chain_map(cx, cg, std::move(maps)), r);
    return rep;
}

std::pair<Presentation, GroupHom> assemble_target(const SpaceModel& x, const GroupHom& alpha,
                                                  const std::vector<Word>& ker_normal_gens) {
    x.validate();
    alpha.validate_shape();
    if (!same_presentation(alpha.source, x.base))
        fail(Error::Kind::Domain, "assemble target: alpha must start at the space's group");
    check_kernel_letters(x, ker_normal_gens, "assemble target");
    if (tautological_images(alpha) && is_assembled(x, alpha.target, ker_normal_gens))
        return {alpha.target, alpha};

    const Presentation& t = alpha.target;
    size_t xr = x.base.rank();
    Presentation out;
    out.gens = x.base.gens;
    for (const std::string& name : t.gens) {
        std::string fresh = name;
        while (std::find(out.gens.begin(), out.gens.end(), fresh) != out.gens.end())
            fresh += "'";
        out.gens.push_back(fresh);
    }
    auto shifted = [xr](const Word& w) {
        std::vector<Letter> ls;
        for (const Letter& l : w.letters())
            ls.push_back({l.gen + static_cast<int>(xr), l.sign});
        return Word::from_letters(std::move(ls));
    };
    out.relators = x.base.relators;
    for (const Word& w : ker_normal_gens) out.relators.push_back(w);
    for (const Word& rho : t.relators) out.relators.push_back(shifted(rho));
    // x_j and its image become the same element, so the x-generators are
    // redundant and the result presents the original target
    for (size_t j = 0; j < xr; ++j)
        out.relators.push_back(Word::gen(static_cast<int>(j)) *
                               shifted(alpha.images[j]).inverse());
    out.validate();
    GroupHom taut{x.base, out, {}, true};
    for (size_t j = 0; j < xr; ++j) taut.images.push_back(Word::gen(static_cast<int>(j)));
    return {out, taut};
}

std::pair<SpaceModel, CellLedger> build_W(const SpaceModel& x, const GroupHom& alpha,
                                          const std::vector<Word>& ker_normal_gens,
                                          const Presentation& g_pres) {
    x.validate();
    g_pres.validate();
    alpha.validate_shape();
    if (!same_presentation(alpha.source, x.base) ||
        !same_presentation(alpha.target, g_pres) || !tautological_images(alpha))
        fail(Error::Kind::Domain,
             "build W: alpha must be the tautological map into the assembled target "
             "(run assemble_target first)");
    check_kernel_letters(x, ker_normal_gens, "build W");
    if (!is_assembled(x, g_pres, ker_normal_gens))
        fail(Error::Kind::Input, "build W: space, kernel words and target do not assemble");

    size_t xn = x.base.relators.size(), s = ker_normal_gens.size();
    CellLedger ledger;
    for (size_t j = x.base.rank(); j < g_pres.rank(); ++j)
        ledger.one_cells.push_back(g_pres.gens[j]);
    for (size_t j = 0; j < s; ++j)
        ledger.two_cells.push_back(
            {ker_normal_gens[j], CellLedger::Provenance::KillKernel});
    for (size_t j = xn + s; j < g_pres.relators.size(); ++j)
        ledger.two_cells.push_back({g_pres.relators[j], CellLedger::Provenance::NewRelation});
    SpaceModel w{g_pres, x.extra_2cells, false};
    w.validate();
    return {w, ledger};
}

std::pair<MatrixR, size_t> relative_h2_basis(const SpaceModel& x, const CellLedger& ledger,
                                             const PipelineRing& r) {
    size_t n1 = ledger.one_cells.size(), n2 = ledger.two_cells.size();
    if (r.group_algebra) {
        if (n1 != 0)
            fail(Error::Kind::Tier,
                 "relative basis: new 1-cells with group-algebra coefficients "
                 "are beyond this tier");
        // zero relative boundary, so the new 2-cells are already a basis
        return {MatrixR::identity(r.scalars, n2), 0};
    }
    // relative chains carry the new cells only; the boundary of a new 2-cell
    // is its exponent sum at the new generators
    MatrixR d2(r.scalars, n1, n2);
    for (size_t j = 0; j < n2; ++j)
        for (size_t i = 0; i < n1; ++i)
            d2.at(i, j) = Scalar::from_int(
                r.scalars,
                ledger.two_cells[j].attach.exponent_sum(static_cast<int>(x.base.rank() + i)));
    return {kernel_basis(d2), 0};
}

GroupRingMatrix spherical_lift(const EquivariantChainComplex& w_cover, const SpaceModel& x,
                               const CellLedger& ledger, const MatrixR& basis,
                               const PipelineRing& r) {
    size_t xn = x.base.relators.size(), xe = x.extra_2cells.size();
    size_t n2 = ledger.two_cells.size();
    size_t rel_new = 0;
    for (const auto& tc : ledger.two_cells)
        if (tc.why != CellLedger::Provenance::SphereWedge) ++rel_new;
    // positions of the new 2-cells among W's: relator cells follow X's
    // relators, wedge cells follow X's extra cells
    std::vector<size_t> idx;
    size_t rel_seen = 0, wedge_seen = 0;
    for (const auto& tc : ledger.two_cells) {
        if (tc.why == CellLedger::Provenance::SphereWedge)
            idx.push_back(xn + rel_new + xe + wedge_seen++);
        else
            idx.push_back(xn + rel_seen++);
    }
    if (w_cover.rank(2) != xn + rel_new + xe + wedge_seen)
        fail(Error::Kind::Invariant, "spherical lift: cover and ledger disagree on 2-cells");
    if (basis.rows() != n2)
        fail(Error::Kind::Domain, "spherical lift: basis is not in new-2-cell coordinates");

    GroupRingMatrix gens = kernel_module_generators(w_cover, 2);
    size_t d = basis.cols();

    if (r.group_algebra) {
        if (!basis.is_identity())
            fail(Error::Kind::Tier, "spherical lift: expected the standard relative basis");
        GroupRingMatrix span(r.scalars, w_cover.group(), gens.rows(), n2);
        for (size_t i = 0; i < gens.rows(); ++i)
            for (size_t j = 0; j < n2; ++j)
                span.at(i, j) = to_ring(gens.at(i, idx[j]), r.scalars);
        GroupRingMatrix target =
            GroupRingMatrix::identity(r.scalars, w_cover.group(), n2);
        return extract_basis(span, target) * gens;
    }

    // Classes of the generators in basis coordinates. The class map factors
    // through augmentation, so the generators' classes span the same lattice
    // as the classes of the whole cycle module.
    SnfSolver in_basis(basis);
    MatrixR span(r.scalars, d, gens.rows());
    for (size_t i = 0; i < gens.rows(); ++i) {
        MatrixR v(r.scalars, n2, 1);
        for (size_t j = 0; j < n2; ++j)
            v.at(j, 0) = Scalar::from_mpq(r.scalars, gens.at(i, idx[j]).augment().rat());
        std::optional<MatrixR> coords = in_basis.solve(v);
        if (!coords)
            fail(Error::Kind::Invariant,
                 "spherical lift: a cycle class fell outside the relative kernel");
        for (size_t row = 0; row < d; ++row) span.at(row, i) = coords->at(row, 0);
    }
    if (!cokernel(span).is_zero())
        fail(Error::Kind::Invariant,
             "spherical lift: cycle classes do not surject onto the relative kernel");
    MatrixR c = extract_basis(span, MatrixR::identity(r.scalars, d));
    return constant_rows(c.transpose(), w_cover.group()) * gens;
}

PlusResult attach_3cells_and_verify(const SpaceModel& w, CellLedger ledger,
                                    std::optional<GroupRingMatrix> cycles,
                                    const SpaceModel& x, const GroupHom& alpha,
                                    const GroupModel& g, const PipelineRing& r,
                                    HypothesesReport hyp) {
    w.validate();
    x.validate();
    if (!same_presentation(w.base, g.presentation))
        fail(Error::Kind::Domain, "attach: W must present the target group");

    size_t xr = x.base.rank(), xn = x.base.relators.size(), xe = x.extra_2cells.size();
    // X's cells inside W: 1-cells and relator 2-cells are literal prefixes,
    // X's extra 2-cells follow all of W's relator cells
    std::vector<size_t> incl2;
    for (size_t j = 0; j < xn; ++j) incl2.push_back(j);
    for (size_t j = 0; j < xe; ++j) incl2.push_back(w.base.relators.size() + j);

    size_t d3 = cycles ? cycles->rows() : 0;
    PlusResult out;
    out.hypotheses = std::move(hyp);
    out.finite = static_cast<bool>(g.finite);

    std::optional<ChainComplexR> cyo, cxo;
    size_t mult = 1;
    if (g.finite) {
        EquivariantChainComplex wc = equivariant_chains(w, identity_hom(w.base), g.finite);
        if (cycles && (cycles->cols() != wc.rank(2) || cycles->table() != wc.group()))
            fail(Error::Kind::Domain, "attach: 3-cell rows do not live over W's 2-cells");
        std::vector<size_t> cells = {1, wc.rank(1), wc.rank(2), d3};
        std::vector<GroupRingMatrix> bnds = {wc.boundary(1), wc.boundary(2)};
        bnds.push_back(cycles ? *cycles
                              : GroupRingMatrix(RingSpec::integers(), g.finite, 0,
                                                wc.rank(2)));
        // the constructor rejects non-cycles via d.d = 0
        EquivariantChainComplex yc(g.finite, std::move(cells), std::move(bnds));
        if (r.group_algebra) {
            mult = g.finite->order();
            cyo = blown_complex(yc, r.scalars);
            cxo = blown_complex(equivariant_chains(x, alpha, g.finite), r.scalars);
        } else {
            cyo = augmented_complex(yc, r.scalars);
            cxo = space_complex(x, r.scalars);
        }
        out.y_cover = std::move(yc);
    } else {
        if (d3 > 0)
            fail(Error::Kind::Tier, "attach: 3-cells need a finite-tier target");
        if (r.group_algebra)
            fail(Error::Kind::Tier, "attach: group-algebra coefficients need a finite target");
        cyo = space_complex(w, r.scalars);
        cxo = space_complex(x, r.scalars);
    }
    const ChainComplexR& cy = *cyo;
    const ChainComplexR& cx = *cxo;

    auto block = [&](const std::vector<size_t>& cellmap, size_t tgt_rank) {
        MatrixR m(r.scalars, tgt_rank, cellmap.size() * mult);
        for (size_t i = 0; i < cellmap.size(); ++i)
            for (size_t e = 0; e < mult; ++e)
                m.at(cellmap[i] * mult + e, i * mult + e) = Scalar::one(r.scalars);
        return m;
    };
    std::vector<size_t> incl1;
    for (size_t j = 0; j < xr; ++j) incl1.push_back(j);
    std::vector<MatrixR> jmaps = {block({0}, cy.rank(0)), block(incl1, cy.rank(1)),
                                  block(incl2, cy.rank(2))};
    ChainMapR incl = make_chain_map(cx, cy, std::move(jmaps));

    HomologyData h0x = homology_data(cx, 0), h0y = homology_data(cy, 0);
    HomologyData h2x = homology_data(cx, 2), h2y = homology_data(cy, 2);
    InducedMap i0 = induced_homology_map(h0x, h0y, incl.maps[0]);
    InducedMap i2 = induced_homology_map(h2x, h2y, incl.maps[2]);

    out.h0_y = h0y.module;
    out.h0_ok = i0.iso() && h0y.module.free_rank == 1 &&
                h0y.module.invariant_factors.empty();
    out.h1_y = cy.homology(1);
    out.h1_g = r.group_algebra
                   ? blown_complex(cover_complex(g.presentation, g.finite), r.scalars)
                         .homology(1)
                   : group_homology(g, r.scalars, 1);
    out.h1_ok = module_iso(out.h1_y, out.h1_g);
    out.h2_x = h2x.module;
    out.h2_y = h2y.module;
    out.h2_ok = i2.iso();
    out.h3_y = cy.homology(3);
    out.h3_ok = out.h3_y.is_zero();

    out.w = w;
    ledger.three_cells = std::move(cycles);
    out.ledger = std::move(ledger);
    out.cell_counts = {1, w.base.rank(), w.all_2cells().size(), d3};

    if (!out.h0_ok)
        fail(Error::Kind::Certificate, "plus: degree-0 certificate failed (H0(Y) = " +
                                           out.h0_y.str() + ")");
    if (!out.h1_ok)
        fail(Error::Kind::Certificate, "plus: degree-1 certificate failed (H1(Y) = " +
                                           out.h1_y.str() + ", H1(G) = " + out.h1_g.str() +
                                           ")");
    if (!out.h2_ok)
        fail(Error::Kind::Certificate,
             "plus: degree-2 certificate failed (H2(X) = " + out.h2_x.str() +
                 ", H2(Y) = " + out.h2_y.str() + ", inclusion not an isomorphism)");
    if (!out.h3_ok)
        fail(Error::Kind::Certificate,
             "plus: degree-3 certificate failed (H3(Y) = " + out.h3_y.str() + ")");
    return out;
}

namespace {

PlusResult run_pipeline(const SpaceModel& x, const GroupHom& alpha,
                        const std::vector<Word>& ker, const GroupModel& g,
                        const PipelineRing& r, HypothesesReport hyp) {
    auto built = build_W(x, alpha, ker, g.presentation);
    SpaceModel& w = built.first;
    CellLedger& ledger = built.second;
    MatrixR basis = relative_h2_basis(x, ledger, r).first;
    std::optional<GroupRingMatrix> cycles;
    if (g.finite) {
        EquivariantChainComplex wc = equivariant_chains(w, identity_hom(w.base), g.finite);
        cycles = spherical_lift(wc, x, ledger, basis, r);
    } else if (basis.cols() > 0) {
        fail(Error::Kind::Tier, "plus: 3-cells are only realized over a finite-tier target");
    }
    return attach_3cells_and_verify(w, std::move(ledger), std::move(cycles), x, alpha, g, r,
                                    std::move(hyp));
}

} // namespace

PlusResult plus_construct(const SpaceModel& x, const GroupHom& alpha,
                          const std::vector<Word>& ker_normal_gens, const PipelineRing& r,
                          size_t max_cosets, bool target_aspherical) {
    auto assembled = assemble_target(x, alpha, ker_normal_gens);
    const Presentation& g_pres = assembled.first;
    const GroupHom& taut = assembled.second;
    GroupModel g = realize_group(g_pres, max_cosets, target_aspherical);
    HypothesesReport hyp = check_hypotheses(x, taut, g, r);
    if (!hyp.pass())
        fail(Error::Kind::Certificate,
             "plus: hypotheses rejected (H1 injective: " + yn(hyp.h1.injective) +
                 ", H2 surjective: " + yn(hyp.h2.surjective) + ", gate: " + hyp.gate_note +
                 ")");
    return run_pipeline(x, taut, ker_normal_gens, g, r, std::move(hyp));
}

std::variant<PlusResult, MooreRejection> moore_space(const GroupModel& g, const RingSpec& r) {
    SpaceModel point{};
    GroupHom alpha{point.base, g.presentation, {}, true};
    PipelineRing pr{r, false};
    HypothesesReport hyp = check_hypotheses(point, alpha, g, pr);
    if (!hyp.h2.surjective) return MooreRejection{hyp.h2_tgt};
    if (!hyp.pass())
        fail(Error::Kind::Invariant, "moore: point hypotheses failed outside degree 2");
    return run_pipeline(point, alpha, {}, g, pr, std::move(hyp));
}

std::pair<bool, FiveTermReport> relatively_perfect(const GroupModel& pi,
                                                   const std::vector<Word>& n_gens,
                                                   size_t max_cosets) {
    FiveTermReport rep = five_term(pi, n_gens, RingSpec::integers(), max_cosets);
    if (!rep.all_exact())
        fail(Error::Kind::Invariant, "relatively perfect: five-term exactness failed");
    return {rep.h1_injective && rep.h2_surjective, rep};
}

namespace {

std::set<size_t> closure(const CayleyTable& t, const std::vector<size_t>& gens) {
    std::set<size_t> seen{0};
    std::vector<size_t> queue{0};
    auto push = [&](size_t e) {
        if (seen.insert(e).second) queue.push_back(e);
    };
    while (!queue.empty()) {
        size_t e = queue.back();
        queue.pop_back();
        for (size_t ge : gens) {
            push(t.mul(e, ge));
            push(t.mul(e, t.inverse(ge)));
        }
    }
    return seen;
}

} // namespace

PlusResult partial_completion(const GroupModel& pi, const std::vector<Word>& p_gens,
                              const RingSpec& k, size_t max_cosets) {
    pi.presentation.validate();
    if (k.kind() != RingKind::ModP && k.kind() != RingKind::Rationals)
        fail(Error::Kind::Domain, "partial completion: coefficients must be Z/p or Q");
    if (!pi.finite)
        fail(Error::Kind::Tier, "partial completion: the ambient group must be finite-tier");
    const CayleyTable& t = *pi.finite;

    std::vector<size_t> gen_elems;
    for (const Word& w : p_gens) gen_elems.push_back(evaluate_word(t, w));
    std::set<size_t> p = closure(t, gen_elems);
    for (size_t j = 0; j < pi.presentation.rank(); ++j) {
        size_t ge = evaluate_word(t, Word::gen(static_cast<int>(j)));
        for (size_t e : p)
            if (!p.count(t.mul(t.mul(ge, e), t.inverse(ge))))
                fail(Error::Kind::Certificate,
                     "partial completion: the given subgroup is not normal");
    }
    // H1(P;k) = P^ab (x) k: trivial over Q; over Z/p trivial iff p does not
    // divide |P^ab|
    std::vector<size_t> commutators;
    for (size_t a : p)
        for (size_t b : p)
            commutators.push_back(
                t.mul(t.mul(a, b), t.mul(t.inverse(a), t.inverse(b))));
    size_t ab_order = p.size() / closure(t, commutators).size();
    if (k.kind() == RingKind::ModP && mpz_class(static_cast<unsigned long>(ab_order)) % k.modulus() == 0)
        fail(Error::Kind::Certificate,
             "partial completion: the subgroup is not k-perfect (H1(P;" + k.token() +
                 ") is nonzero)");

    Presentation q_pres = quotient_presentation(pi.presentation, p_gens);
    GroupModel g = realize_group(q_pres, max_cosets, false);
    SpaceModel xsp{pi.presentation, {}, false};
    GroupHom taut{pi.presentation, q_pres, {}, true};
    for (size_t j = 0; j < pi.presentation.rank(); ++j)
        taut.images.push_back(Word::gen(static_cast<int>(j)));
    PipelineRing r{k, true};
    HypothesesReport hyp = check_hypotheses(xsp, taut, g, r);
    if (!hyp.pass())
        fail(Error::Kind::Invariant,
             "partial completion: hypotheses failed for a k-perfect normal subgroup");
    return run_pipeline(xsp, taut, p_gens, g, r, std::move(hyp));
}

} // namespace cellplus
