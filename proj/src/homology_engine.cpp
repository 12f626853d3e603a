#include "cellplus/homology_engine.hpp"

namespace cellplus {

namespace {

// cellular complex of the space itself (single vertex, so d1 = 0 and d2 is
// the exponent-sum matrix of the attaching words)
ChainComplexR constant_space_complex(size_t gens, const std::vector<Word>& cells2,
                                     const RingSpec& r) {
    MatrixR d1(r, 1, gens);
    MatrixR d2(r, gens, cells2.size());
    for (size_t j = 0; j < cells2.size(); ++j)
        for (size_t g = 0; g < gens; ++g)
            d2.at(g, j) = Scalar::from_int(r, cells2[j].exponent_sum(static_cast<int>(g)));
    return ChainComplexR(r, {1, gens, cells2.size()}, {std::move(d1), std::move(d2)});
}

EquivariantChainComplex cover_of_presentation(const Presentation& p, CayleyPtr t) {
    return equivariant_chains(SpaceModel{p, {}, false}, identity_hom(p), std::move(t));
}

CayleyPtr enumerate_or_tier(const Presentation& p, size_t max_cosets,
                            const std::string& who) {
    CosetResult r = todd_coxeter(p, max_cosets);
    if (const Overflow* o = std::get_if<Overflow>(&r))
        fail(Error::Kind::Tier, who + ": coset enumeration gave up after " +
                                    std::to_string(o->budget) + " cosets");
    return std::make_shared<const CayleyTable>(std::get<CayleyTable>(std::move(r)));
}

} // namespace

GroupModel GroupModel::finite_via(Presentation p, CayleyPtr table) {
    p.validate();
    table->check_presentation(p);
    return GroupModel{std::move(p), std::move(table), false};
}

GroupModel GroupModel::aspherical_complex(Presentation p) {
    p.validate();
    return GroupModel{std::move(p), nullptr, true};
}

GroupModel realize_group(const Presentation& p, size_t max_cosets, bool aspherical_ok) {
    p.validate();
    CosetResult r = todd_coxeter(p, max_cosets);
    if (CayleyTable* t = std::get_if<CayleyTable>(&r))
        return GroupModel::finite_via(p, std::make_shared<const CayleyTable>(std::move(*t)));
    if (aspherical_ok) return GroupModel::aspherical_complex(p);
    fail(Error::Kind::Tier,
         "group is not confirmed finite within " + std::to_string(max_cosets) +
             " cosets and the aspherical assertion was not given");
}

SpaceModel build_presentation_complex(const Presentation& p, std::vector<Word> extras) {
    SpaceModel s{p, std::move(extras), false};
    s.validate();
    return s;
}

EquivariantChainComplex group_resolution(const GroupModel& g) {
    if (!g.finite)
        fail(Error::Kind::Tier, "group resolution: finite realization required");
    return extend_to_degree3(cover_of_presentation(g.presentation, g.finite));
}

ModulePresentation group_homology(const GroupModel& g, const RingSpec& r, size_t q) {
    if (q > 2)
        fail(Error::Kind::Domain, "group homology: supported degrees are 0..2");
    if (g.finite) return augmented_complex(group_resolution(g), r).homology(q);
    if (g.aspherical)
        return constant_space_complex(g.presentation.rank(), g.presentation.relators, r)
            .homology(q);
    fail(Error::Kind::Tier, "group homology: no realization available");
}

ChainComplexR space_complex(const SpaceModel& s, const RingSpec& r) {
    s.validate();
    return constant_space_complex(s.base.rank(), s.all_2cells(), r);
}

std::vector<ModulePresentation> space_homology(const SpaceModel& s, const RingSpec& r) {
    ChainComplexR c = space_complex(s, r);
    std::vector<ModulePresentation> out;
    for (size_t q = 0; q <= 2; ++q) out.push_back(c.homology(q));
    return out;
}

std::vector<ModulePresentation> space_homology(const EquivariantChainComplex& e,
                                               const RingSpec& k) {
    if (k.kind() != RingKind::ModP && k.kind() != RingKind::Rationals)
        fail(Error::Kind::Tier, "group-ring coefficients need a field k (Z/p or Q)");
    ChainComplexR c = blown_complex(e, k);
    std::vector<ModulePresentation> out;
    for (size_t q = 0; q <= c.top_degree(); ++q) out.push_back(c.homology(q));
    return out;
}

HopfCertificate hopf_check(const EquivariantChainComplex& e, const Presentation& gpres,
                           const RingSpec& v) {
    if (e.top_degree() != 2)
        fail(Error::Kind::Domain, "hopf check: pass the raw 2-dimensional cover chains");
    e.group()->check_presentation(gpres);

    EquivariantChainComplex res =
        extend_to_degree3(cover_of_presentation(gpres, e.group()));
    std::vector<size_t> id(e.group()->order());
    for (size_t g = 0; g < id.size(); ++g) id[g] = g;
    EquivariantChainMap lift = lift_chain_map(e, res, id);

    ChainComplexR cx = augmented_complex(e, v);
    ChainComplexR cg = augmented_complex(res, v);
    ChainMapR f = augmented_map(lift, cx, cg);
    HomologyData h2x = homology_data(cx, 2), h2g = homology_data(cg, 2);
    InducedMap right = induced_homology_map(h2x, h2g, f.maps[2]);

    GroupRingMatrix gens = kernel_module_generators(e, 2);
    auto incoming =
        SnfSolver(h2x.kernel).solve(change_ring(gens.augmented(), v).transpose());
    if (!incoming)
        fail(Error::Kind::Invariant, "hopf check: cover cycle failed to augment to a cycle");

    HopfCertificate cert;
    cert.h2_space = h2x.module;
    cert.h2_group = h2g.module;
    cert.cover_generators = gens.rows();
    cert.exact_middle = exact_at_joint(h2x, *incoming, h2g, right.matrix);
    cert.right_surjective = right.surjective;
    return cert;
}

FiveTermReport five_term(const GroupModel& pi, const std::vector<Word>& n_gens,
                         const RingSpec& r, size_t max_cosets) {
    if (r.kind() != RingKind::Integers)
        fail(Error::Kind::Domain, "five-term sequence: coefficients are Z");
    bool n_trivial = true;
    for (const Word& w : n_gens) n_trivial = n_trivial && w.empty();

    ChainComplexR src_plain(r, {1}, {});
    ChainComplexR tgt_plain = src_plain;
    ChainMapR f;

    if (pi.finite) {
        EquivariantChainComplex src = group_resolution(pi);
        src_plain = augmented_complex(src, r);
        if (n_trivial) {
            tgt_plain = src_plain;
            f = identity_chain_map(src_plain);
        } else {
            Presentation quot = quotient_presentation(pi.presentation, n_gens);
            CayleyPtr tq = enumerate_or_tier(quot, max_cosets, "five-term quotient");
            EquivariantChainComplex tgt = extend_to_degree3(cover_of_presentation(quot, tq));
            tgt_plain = augmented_complex(tgt, r);
            GroupHom proj{pi.presentation, quot, {}, false};
            for (size_t j = 0; j < pi.presentation.rank(); ++j)
                proj.images.push_back(Word::gen(static_cast<int>(j)));
            EquivariantChainMap lift =
                lift_chain_map(src, tgt, element_map(*pi.finite, *tq, proj));
            f = augmented_map(lift, src_plain, tgt_plain);
        }
    } else if (pi.aspherical) {
        src_plain =
            constant_space_complex(pi.presentation.rank(), pi.presentation.relators, r);
        if (n_trivial) {
            tgt_plain = src_plain;
            f = identity_chain_map(src_plain);
        } else if (!pi.presentation.relators.empty()) {
            fail(Error::Kind::Tier,
                 "five-term on the aspherical tier needs a free presentation "
                 "(no canonical chain lift exists otherwise)");
        } else {
            Presentation quot = quotient_presentation(pi.presentation, n_gens);
            CayleyPtr tq = enumerate_or_tier(quot, max_cosets, "five-term quotient");
            EquivariantChainComplex tgt = extend_to_degree3(cover_of_presentation(quot, tq));
            tgt_plain = augmented_complex(tgt, r);
            // single vertex both sides; generators map to themselves
            std::vector<MatrixR> maps{MatrixR::identity(r, 1),
                                      MatrixR::identity(r, pi.presentation.rank())};
            f = make_chain_map(src_plain, tgt_plain, std::move(maps));
        }
    } else {
        fail(Error::Kind::Tier, "five-term: no realization available for the group");
    }

    ChainComplexR cone = mapping_cone(src_plain, tgt_plain, f);
    HomologyData h2s = homology_data(src_plain, 2), h2t = homology_data(tgt_plain, 2);
    HomologyData h1s = homology_data(src_plain, 1), h1t = homology_data(tgt_plain, 1);
    HomologyData h2c = homology_data(cone, 2);

    InducedMap inflation = induced_homology_map(h2s, h2t, f.maps[2]);
    // H2(pi/N) -> H2(cone): y -> (0, y) in the (src, tgt) block coordinates
    MatrixR j2 = MatrixR(r, src_plain.rank(1), tgt_plain.rank(2))
                     .vstack(MatrixR::identity(r, tgt_plain.rank(2)));
    InducedMap incl = induced_homology_map(h2t, h2c, j2);
    // H2(cone) -> H1(pi): project a cone cycle onto its src block
    MatrixR p2 = MatrixR::identity(r, src_plain.rank(1))
                     .hstack(MatrixR(r, src_plain.rank(1), tgt_plain.rank(2)));
    InducedMap bnd = induced_homology_map(h2c, h1s, p2);
    InducedMap m1 = induced_homology_map(h1s, h1t, f.maps[1]);

    FiveTermReport rep;
    rep.h2_pi = h2s.module;
    rep.h2_quot = h2t.module;
    rep.middle = h2c.module;
    rep.h1_pi = h1s.module;
    rep.h1_quot = h1t.module;
    rep.exact_at_h2_quot = exact_at_joint(h2t, inflation.matrix, h2c, incl.matrix);
    rep.exact_at_middle = exact_at_joint(h2c, incl.matrix, h1s, bnd.matrix);
    rep.exact_at_h1_pi = exact_at_joint(h1s, bnd.matrix, h1t, m1.matrix);
    rep.right_surjective = m1.surjective;
    rep.h1_injective = m1.injective;
    rep.h2_surjective = inflation.surjective;
    return rep;
}

} // namespace cellplus
