#pragma once

// Unnormalized bar resolution tensored down to trivial coefficients, built
// straight from a multiplication table. Degree q has one cell per q-tuple
// [g1|...|gq] (index g1*n^(q-1) + ... + gq) and
//   d[g1|...|gq] = [g2|..|gq] + sum_i (-1)^i [..|g_i g_{i+1}|..]
//                + (-1)^q [g1|..|g_{q-1}],
// the inhomogeneous formula with the leading G-action collapsed. Its homology
// in degrees <= 2 is H_q(G; R), computed with no presentation, Fox calculus,
// or resolution-extension code involved — an independent cross-check.

#include "cellplus/cayley.hpp"
#include "cellplus/chain.hpp"

namespace cellplus {

inline ChainComplexR bar_complex(const CayleyTable& t, const RingSpec& r) {
    const size_t n = t.order();
    auto bump = [&](MatrixR& m, size_t i, size_t j, long c) {
        m.at(i, j) = m.at(i, j) + Scalar::from_int(r, c);
    };

    MatrixR d1(r, 1, n); // d[g] = [] - [] = 0
    MatrixR d2(r, n, n * n);
    for (size_t g = 0; g < n; ++g)
        for (size_t h = 0; h < n; ++h) {
            size_t col = g * n + h;
            bump(d2, h, col, 1);
            bump(d2, t.mul(g, h), col, -1);
            bump(d2, g, col, 1);
        }
    MatrixR d3(r, n * n, n * n * n);
    for (size_t g = 0; g < n; ++g)
        for (size_t h = 0; h < n; ++h)
            for (size_t k = 0; k < n; ++k) {
                size_t col = (g * n + h) * n + k;
                bump(d3, h * n + k, col, 1);
                bump(d3, t.mul(g, h) * n + k, col, -1);
                bump(d3, g * n + t.mul(h, k), col, 1);
                bump(d3, g * n + h, col, -1);
            }
    return ChainComplexR(r, {1, n, n * n, n * n * n},
                         {std::move(d1), std::move(d2), std::move(d3)});
}

} // namespace cellplus
