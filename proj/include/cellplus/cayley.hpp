#pragma once

#include <cstddef>
#include <vector>

#include "cellplus/presentation.hpp"

namespace cellplus {

// Regular action of a finite group: states are the elements, 0 the identity,
// one permutation per generator acting by right multiplication.
class CayleyTable {
public:
    CayleyTable(size_t order, std::vector<std::vector<size_t>> action);

    size_t order() const { return order_; }
    size_t rank() const { return action_.size(); }
    const std::vector<std::vector<size_t>>& action() const { return action_; }

    size_t act(size_t x, const Letter& l) const;
    size_t eval(const Word& w, size_t from = 0) const;
    size_t mul(size_t x, size_t y) const { return mult_[x][y]; }
    size_t inverse(size_t x) const { return inv_[x]; }
    const Word& rep_word(size_t x) const { return reps_[x]; } // Schreier word

    size_t element_order(size_t x) const;

    // relators act trivially and generator count matches
    void check_presentation(const Presentation& p) const;

private:
    size_t order_;
    std::vector<std::vector<size_t>> action_;     // [gen][state]
    std::vector<std::vector<size_t>> inv_action_; // [gen][state]
    std::vector<Word> reps_;
    std::vector<std::vector<size_t>> mult_;
    std::vector<size_t> inv_;
};

// image of w under the regular action applied to the identity
size_t evaluate_word(const CayleyTable& t, const Word& w);

CayleyTable trivial_group_table(size_t rank = 0);

} // namespace cellplus
