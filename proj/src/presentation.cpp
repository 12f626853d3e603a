#include "cellplus/presentation.hpp"

#include <set>

namespace cellplus {

int Presentation::gen_index(const std::string& name) const {
    for (size_t i = 0; i < gens.size(); ++i)
        if (gens[i] == name) return static_cast<int>(i);
    return -1;
}

void Presentation::validate() const {
    std::set<std::string> seen;
    for (const auto& g : gens) {
        if (g.empty()) fail(Error::Kind::Invariant, "empty generator name");
        if (!seen.insert(g).second)
            fail(Error::Kind::Invariant, "duplicate generator '" + g + "'");
    }
    for (const Word& r : relators)
        if (r.max_gen() >= static_cast<int>(gens.size()))
            fail(Error::Kind::Invariant, "relator uses unknown generator");
}

Presentation free_group(std::vector<std::string> names) {
    Presentation p{std::move(names), {}};
    p.validate();
    return p;
}

MatrixR exponent_matrix(const Presentation& p) {
    RingSpec Z = RingSpec::integers();
    MatrixR m(Z, p.gens.size(), p.relators.size());
    for (size_t j = 0; j < p.relators.size(); ++j)
        for (size_t i = 0; i < p.gens.size(); ++i)
            m.at(i, j) = Scalar::from_int(Z, p.relators[j].exponent_sum(static_cast<int>(i)));
    return m;
}

ModulePresentation abelianization(const Presentation& p) {
    return cokernel(exponent_matrix(p));
}

Presentation quotient_presentation(const Presentation& p,
                                   const std::vector<Word>& extra_relators,
                                   const std::vector<std::string>& new_gens) {
    Presentation q = p;
    for (const auto& g : new_gens) q.gens.push_back(g);
    for (const Word& w : extra_relators) q.relators.push_back(w);
    q.validate();
    return q;
}

Word GroupHom::apply(const Word& w) const {
    Word out;
    for (const Letter& l : w.letters()) {
        if (l.gen >= static_cast<int>(images.size()))
            fail(Error::Kind::Invariant, "hom: word uses unknown generator");
        const Word& im = images[static_cast<size_t>(l.gen)];
        out = out * (l.sign == 1 ? im : im.inverse());
    }
    return out;
}

void GroupHom::validate_shape() const {
    source.validate();
    target.validate();
    if (images.size() != source.gens.size())
        fail(Error::Kind::Invariant, "hom: one image per source generator required");
    for (const Word& im : images)
        if (im.max_gen() >= static_cast<int>(target.gens.size()))
            fail(Error::Kind::Invariant, "hom: image uses unknown target generator");
}

GroupHom identity_hom(const Presentation& p) {
    GroupHom h{p, p, {}, true};
    for (size_t i = 0; i < p.gens.size(); ++i)
        h.images.push_back(Word::gen(static_cast<int>(i)));
    return h;
}

void SpaceModel::validate() const {
    base.validate();
    for (const Word& w : extra_2cells)
        if (w.max_gen() >= static_cast<int>(base.gens.size()))
            fail(Error::Kind::Invariant, "extra 2-cell uses unknown generator");
    if (aspherical && !extra_2cells.empty())
        fail(Error::Kind::Invariant, "aspherical flag requires no extra 2-cells");
}

std::vector<Word> SpaceModel::all_2cells() const {
    std::vector<Word> out = base.relators;
    out.insert(out.end(), extra_2cells.begin(), extra_2cells.end());
    return out;
}

} // namespace cellplus
