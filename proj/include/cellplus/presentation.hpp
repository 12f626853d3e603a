#pragma once

#include <string>
#include <vector>

#include "cellplus/matrix.hpp"
#include "cellplus/smith.hpp"
#include "cellplus/word.hpp"

namespace cellplus {

// Finite presentation <gens | relators>.
struct Presentation {
    std::vector<std::string> gens;
    std::vector<Word> relators;

    size_t rank() const { return gens.size(); }
    int gen_index(const std::string& name) const; // -1 if absent
    void validate() const; // unique names, letters in range
};

Presentation free_group(std::vector<std::string> names);

// Exponent-sum matrix over Z: one row per generator, one column per relator
// (the abelianized 2-boundary of the presentation complex).
MatrixR exponent_matrix(const Presentation& p);

// H_1 of the presented group.
ModulePresentation abelianization(const Presentation& p);

// Append fresh generators, then extra relators.
Presentation quotient_presentation(const Presentation& p,
                                   const std::vector<Word>& extra_relators,
                                   const std::vector<std::string>& new_gens = {});

// Homomorphism source -> target given on generators.
struct GroupHom {
    Presentation source, target;
    std::vector<Word> images; // one word over target per source generator
    bool certified = false;   // caller vouches for relator triviality
                              // (needed when the target is not enumerable)

    Word apply(const Word& w) const; // push through, freely reduced
    void validate_shape() const;     // sizes and letter ranges only
};

GroupHom identity_hom(const Presentation& p);

// Model of a CW complex: presentation 2-complex plus extra 2-cells
// (trivial attaching word = wedged 2-sphere).
struct SpaceModel {
    Presentation base;
    std::vector<Word> extra_2cells;
    bool aspherical = false;

    void validate() const;
    std::vector<Word> all_2cells() const; // relators then extras
};

} // namespace cellplus
