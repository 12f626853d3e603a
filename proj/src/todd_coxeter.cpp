#include "cellplus/todd_coxeter.hpp"

#include <deque>
#include <limits>

namespace cellplus {

namespace {

constexpr size_t UNDEF = std::numeric_limits<size_t>::max();

struct Enumerator {
    size_t ngen, cap;
    std::vector<std::vector<size_t>> tab; // per coset, 2*ngen edges
    std::vector<size_t> parent;           // union-find
    std::deque<std::pair<size_t, size_t>> pending;
    size_t live = 0;
    bool changed = false;

    Enumerator(size_t ngen, size_t cap) : ngen(ngen), cap(cap) { fresh(); }

    static size_t col(const Letter& l) {
        return 2 * static_cast<size_t>(l.gen) + (l.sign == 1 ? 0 : 1);
    }

    size_t find(size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    // returns UNDEF once the budget is exhausted
    size_t fresh() {
        if (tab.size() >= cap) return UNDEF;
        tab.emplace_back(2 * ngen, UNDEF);
        parent.push_back(tab.size() - 1);
        ++live;
        changed = true;
        return tab.size() - 1;
    }

    // record edge x -c-> y (and its reverse), queueing coincidences
    void deduce(size_t x, size_t c, size_t y) {
        x = find(x);
        y = find(y);
        if (tab[x][c] == UNDEF) {
            tab[x][c] = y;
            changed = true;
        } else if (find(tab[x][c]) != y) {
            pending.push_back({find(tab[x][c]), y});
        }
        size_t ic = c ^ 1;
        if (tab[y][ic] == UNDEF) {
            tab[y][ic] = x;
            changed = true;
        } else if (find(tab[y][ic]) != x) {
            pending.push_back({find(tab[y][ic]), x});
        }
        merge_pending();
    }

    void merge_pending() {
        while (!pending.empty()) {
            auto [a, b] = pending.front();
            pending.pop_front();
            a = find(a);
            b = find(b);
            if (a == b) continue;
            if (b < a) std::swap(a, b);
            parent[b] = a;
            --live;
            changed = true;
            for (size_t c = 0; c < 2 * ngen; ++c) {
                size_t y = tab[b][c];
                if (y == UNDEF) continue;
                tab[b][c] = UNDEF;
                y = find(y);
                size_t ic = c ^ 1;
                if (tab[a][c] == UNDEF) tab[a][c] = y;
                else if (find(tab[a][c]) != y) pending.push_back({find(tab[a][c]), y});
                if (tab[y][ic] == UNDEF) tab[y][ic] = a;
                else if (find(tab[y][ic]) != a) pending.push_back({find(tab[y][ic]), a});
            }
        }
    }

    // trace relator w from q, defining cosets for missing edges;
    // returns false when the budget runs out
    bool scan_and_fill(size_t q, const Word& w) {
        const auto& ls = w.letters();
        size_t f = find(q), i = 0;
        size_t b = find(q), j = ls.size();
        while (true) {
            while (i < j && tab[f][col(ls[i])] != UNDEF) {
                f = find(tab[f][col(ls[i])]);
                ++i;
            }
            while (j > i && tab[b][col(ls[j - 1]) ^ 1] != UNDEF) {
                b = find(tab[b][col(ls[j - 1]) ^ 1]);
                --j;
            }
            if (i == j) {
                if (f != b) {
                    pending.push_back({f, b});
                    merge_pending();
                }
                return true;
            }
            if (i + 1 == j) {
                deduce(f, col(ls[i]), b);
                return true;
            }
            size_t n = fresh();
            if (n == UNDEF) return false;
            deduce(f, col(ls[i]), n);
            f = find(n);
            // deductions may have moved q entirely; positions stay valid
            // because f is tracked as a representative
            ++i;
            b = find(b);
        }
    }

    CosetResult run(const Presentation& p) {
        // fixed point: every live coset scans every relator and has a
        // fully defined row
        do {
            changed = false;
            for (size_t q = 0; q < tab.size(); ++q) {
                if (find(q) != q) continue;
                for (const Word& r : p.relators) {
                    if (!scan_and_fill(q, r)) return Overflow{cap};
                    if (find(q) != q) break; // q merged away; survivor rescans
                }
                if (find(q) != q) continue;
                for (size_t c = 0; c < 2 * ngen; ++c) {
                    if (tab[q][c] != UNDEF) continue;
                    size_t n = fresh();
                    if (n == UNDEF) return Overflow{cap};
                    deduce(q, c, n);
                    if (find(q) != q) break;
                }
            }
        } while (changed);

        // compress live cosets in increasing order; 0 survives every merge
        std::vector<size_t> index(tab.size(), UNDEF);
        size_t next = 0;
        for (size_t q = 0; q < tab.size(); ++q)
            if (find(q) == q) index[q] = next++;
        std::vector<std::vector<size_t>> action(ngen, std::vector<size_t>(next));
        for (size_t q = 0; q < tab.size(); ++q) {
            if (find(q) != q) continue;
            for (size_t g = 0; g < ngen; ++g)
                action[g][index[q]] = index[find(tab[q][2 * g])];
        }
        return CayleyTable(next, std::move(action));
    }
};

} // namespace

CosetResult todd_coxeter(const Presentation& p, size_t max_cosets) {
    if (max_cosets < 1) fail(Error::Kind::Domain, "todd_coxeter: budget must be >= 1");
    p.validate();
    Enumerator e(p.gens.size(), max_cosets);
    return e.run(p);
}

} // namespace cellplus
