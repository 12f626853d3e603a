#include "cellplus/cayley.hpp"

#include <queue>

namespace cellplus {

CayleyTable::CayleyTable(size_t order, std::vector<std::vector<size_t>> action)
    : order_(order), action_(std::move(action)) {
    if (order_ == 0) fail(Error::Kind::Invariant, "cayley: empty group");
    inv_action_.assign(action_.size(), std::vector<size_t>(order_, order_));
    for (size_t g = 0; g < action_.size(); ++g) {
        if (action_[g].size() != order_)
            fail(Error::Kind::Invariant, "cayley: action size mismatch");
        for (size_t x = 0; x < order_; ++x) {
            size_t y = action_[g][x];
            if (y >= order_ || inv_action_[g][y] != order_)
                fail(Error::Kind::Invariant, "cayley: action not a permutation");
            inv_action_[g][y] = x;
        }
    }

    // Schreier representative words by BFS from the identity
    reps_.assign(order_, Word());
    std::vector<bool> seen(order_, false);
    seen[0] = true;
    std::queue<size_t> bfs;
    bfs.push(0);
    size_t reached = 1;
    while (!bfs.empty()) {
        size_t x = bfs.front();
        bfs.pop();
        for (size_t g = 0; g < action_.size(); ++g)
            for (int sign : {1, -1}) {
                size_t y = sign == 1 ? action_[g][x] : inv_action_[g][x];
                if (!seen[y]) {
                    seen[y] = true;
                    ++reached;
                    reps_[y] = reps_[x] * Word::gen(static_cast<int>(g), sign);
                    bfs.push(y);
                }
            }
    }
    if (reached != order_)
        fail(Error::Kind::Invariant, "cayley: action not transitive from identity");

    mult_.assign(order_, std::vector<size_t>(order_));
    for (size_t x = 0; x < order_; ++x)
        for (size_t y = 0; y < order_; ++y) mult_[x][y] = eval(reps_[y], x);
    inv_.assign(order_, 0);
    for (size_t x = 0; x < order_; ++x)
        for (size_t y = 0; y < order_; ++y)
            if (mult_[x][y] == 0) inv_[x] = y;
}

size_t CayleyTable::act(size_t x, const Letter& l) const {
    size_t g = static_cast<size_t>(l.gen);
    if (g >= action_.size()) fail(Error::Kind::Invariant, "cayley: unknown generator");
    return l.sign == 1 ? action_[g][x] : inv_action_[g][x];
}

size_t CayleyTable::eval(const Word& w, size_t from) const {
    size_t x = from;
    for (const Letter& l : w.letters()) x = act(x, l);
    return x;
}

size_t CayleyTable::element_order(size_t x) const {
    size_t n = 1, y = x;
    while (y != 0) {
        y = mul(y, x);
        ++n;
    }
    return n;
}

void CayleyTable::check_presentation(const Presentation& p) const {
    if (p.gens.size() != action_.size())
        fail(Error::Kind::Invariant, "cayley: generator count mismatch");
    for (const Word& r : p.relators)
        for (size_t x = 0; x < order_; ++x)
            if (eval(r, x) != x)
                fail(Error::Kind::Invariant, "cayley: relator does not act trivially");
}

size_t evaluate_word(const CayleyTable& t, const Word& w) { return t.eval(w, 0); }

CayleyTable trivial_group_table(size_t rank) {
    std::vector<std::vector<size_t>> action(rank, std::vector<size_t>{0});
    return CayleyTable(1, std::move(action));
}

} // namespace cellplus
