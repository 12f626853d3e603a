#include "cellplus/smith.hpp"

namespace cellplus {

std::vector<Scalar> SmithForm::diagonal() const {
    std::vector<Scalar> d;
    size_t n = std::min(D.rows(), D.cols());
    for (size_t i = 0; i < n; ++i) d.push_back(D.at(i, i));
    return d;
}

std::vector<Scalar> SmithForm::invariant_factors() const {
    std::vector<Scalar> out;
    for (const auto& d : diagonal())
        if (!d.is_zero() && !d.is_unit()) out.push_back(d);
    return out;
}

namespace {

// Tracks D = U*A*V while applying elementary operations to D. With track
// off only D is updated (cheap path for callers needing the diagonal).
struct SmithWork {
    MatrixR D, U, V, Uinv, Vinv;
    bool track;

    explicit SmithWork(const MatrixR& a, bool track_transforms = true)
        : D(a), track(track_transforms) {
        if (track) {
            U = MatrixR::identity(a.ring(), a.rows());
            V = MatrixR::identity(a.ring(), a.cols());
            Uinv = U;
            Vinv = V;
        }
    }

    void swap_rows(size_t i, size_t j) {
        D.swap_rows(i, j);
        if (!track) return;
        U.swap_rows(i, j);
        Uinv.swap_cols(i, j);
    }
    void swap_cols(size_t i, size_t j) {
        D.swap_cols(i, j);
        if (!track) return;
        V.swap_cols(i, j);
        Vinv.swap_rows(i, j);
    }
    // row_i += c * row_j
    void add_row(size_t i, size_t j, const Scalar& c) {
        D.add_row_multiple(i, j, c);
        if (!track) return;
        U.add_row_multiple(i, j, c);
        Uinv.add_col_multiple(j, i, -c);
    }
    // col_i += c * col_j
    void add_col(size_t i, size_t j, const Scalar& c) {
        D.add_col_multiple(i, j, c);
        if (!track) return;
        V.add_col_multiple(i, j, c);
        Vinv.add_row_multiple(j, i, -c);
    }
    void scale_row(size_t i, const Scalar& u) {
        D.scale_row(i, u);
        if (!track) return;
        U.scale_row(i, u);
        Uinv.scale_col(i, u.inverse());
    }

    // (row_i, row_j) <- (a*row_i + b*row_j, c*row_i + d*row_j); ad - bc a unit
    void rows2(size_t i, size_t j, const Scalar& a, const Scalar& b,
               const Scalar& c, const Scalar& d) {
        combine_rows(D, i, j, a, b, c, d);
        if (!track) return;
        combine_rows(U, i, j, a, b, c, d);
        Scalar idet = (a * d - b * c).inverse();
        combine_cols(Uinv, i, j, d * idet, -c * idet, -b * idet, a * idet);
    }
    // (col_i, col_j) <- (a*col_i + b*col_j, c*col_i + d*col_j); ad - bc a unit
    void cols2(size_t i, size_t j, const Scalar& a, const Scalar& b,
               const Scalar& c, const Scalar& d) {
        combine_cols(D, i, j, a, b, c, d);
        if (!track) return;
        combine_cols(V, i, j, a, b, c, d);
        Scalar idet = (a * d - b * c).inverse();
        combine_rows(Vinv, i, j, d * idet, -c * idet, -b * idet, a * idet);
    }

private:
    static void combine_rows(MatrixR& M, size_t i, size_t j, const Scalar& a,
                             const Scalar& b, const Scalar& c, const Scalar& d) {
        for (size_t k = 0; k < M.cols(); ++k) {
            Scalar x = M.at(i, k), y = M.at(j, k);
            M.at(i, k) = a * x + b * y;
            M.at(j, k) = c * x + d * y;
        }
    }
    static void combine_cols(MatrixR& M, size_t i, size_t j, const Scalar& a,
                             const Scalar& b, const Scalar& c, const Scalar& d) {
        for (size_t k = 0; k < M.rows(); ++k) {
            Scalar x = M.at(k, i), y = M.at(k, j);
            M.at(k, i) = a * x + b * y;
            M.at(k, j) = c * x + d * y;
        }
    }
};

// Smallest nonzero Euclidean norm in D[t.., t..], earliest position breaking
// ties (row-major). Returns false if the submatrix is zero.
bool find_pivot(const MatrixR& D, size_t t, size_t& pi, size_t& pj) {
    bool found = false;
    mpz_class best;
    for (size_t i = t; i < D.rows(); ++i)
        for (size_t j = t; j < D.cols(); ++j) {
            const Scalar& s = D.at(i, j);
            if (s.is_zero()) continue;
            mpz_class n = s.norm();
            if (!found || n < best) {
                found = true;
                best = n;
                pi = i;
                pj = j;
            }
        }
    return found;
}

size_t smith_reduce(SmithWork& w) {
    size_t m = w.D.rows(), n = w.D.cols();
    size_t bound = std::min(m, n);
    size_t rank = 0;

    for (size_t t = 0; t < bound; ++t) {
        size_t pi = 0, pj = 0;
        if (!find_pivot(w.D, t, pi, pj)) break;
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);

        for (bool dirty = true; dirty;) {
            dirty = false;
            // Clear the pivot column.  A gcd step replaces the pivot by a
            // strict divisor but fills in row t, so the pass must rerun.
            for (size_t i = t + 1; i < m; ++i) {
                const Scalar& e = w.D.at(i, t);
                if (e.is_zero()) continue;
                Scalar p = w.D.at(t, t);
                if (auto q = e.exact_div(p)) {
                    w.add_row(i, t, -*q);
                } else {
                    ExtGcd eg = ext_gcd(p, e);
                    w.rows2(t, i, eg.a, eg.b, -*e.exact_div(eg.g),
                            *p.exact_div(eg.g));
                    dirty = true;
                }
            }
            // clear the pivot row
            for (size_t j = t + 1; j < n; ++j) {
                const Scalar& e = w.D.at(t, j);
                if (e.is_zero()) continue;
                Scalar p = w.D.at(t, t);
                if (auto q = e.exact_div(p)) {
                    w.add_col(j, t, -*q);
                } else {
                    ExtGcd eg = ext_gcd(p, e);
                    w.cols2(t, j, eg.a, eg.b, -*e.exact_div(eg.g),
                            *p.exact_div(eg.g));
                    dirty = true;
                }
            }
            if (dirty) continue;
            // enforce divisibility of the remaining block by the pivot
            for (size_t i = t + 1; i < m && !dirty; ++i)
                for (size_t j = t + 1; j < n && !dirty; ++j)
                    if (!w.D.at(t, t).divides(w.D.at(i, j))) {
                        w.add_row(t, i, Scalar::one(w.D.ring()));
                        dirty = true;
                    }
        }

        // normalize pivot to its canonical associate
        Scalar d = w.D.at(t, t);
        Scalar canon = d.canonical_associate();
        if (d != canon) {
            Scalar u = *canon.exact_div(d);
            w.scale_row(t, u);
        }
        ++rank;
    }
    return rank;
}

} // namespace

SmithForm smith_normal_form(const MatrixR& a) {
    SmithWork w(a);
    size_t rank = smith_reduce(w);
    SmithForm f{std::move(w.U), std::move(w.D), std::move(w.V),
                std::move(w.Uinv), std::move(w.Vinv), rank};
    return f;
}

std::vector<Scalar> smith_diagonal(const MatrixR& a) {
    SmithWork w(a, false);
    smith_reduce(w);
    std::vector<Scalar> d;
    size_t n = std::min(w.D.rows(), w.D.cols());
    for (size_t i = 0; i < n; ++i) d.push_back(w.D.at(i, i));
    return d;
}

MatrixR kernel_basis(const MatrixR& a) {
    SmithForm f = smith_normal_form(a);
    std::vector<size_t> idx;
    for (size_t j = f.rank; j < a.cols(); ++j) idx.push_back(j);
    return f.V.columns(idx);
}

std::string ModulePresentation::str() const {
    std::string tok = ring.token();
    if (tok.find('/') != std::string::npos) tok = "(" + tok + ")";
    std::string s;
    auto append = [&](const std::string& piece) {
        if (!s.empty()) s += " + ";
        s += piece;
    };
    if (free_rank == 1) append(tok);
    else if (free_rank > 1) append(tok + "^" + std::to_string(free_rank));
    for (const auto& d : invariant_factors) {
        std::string ds = d.str();
        bool simple = ds.find_first_not_of("0123456789") == std::string::npos;
        if (ring.kind() == RingKind::Integers && simple) append("Z/" + ds);
        else append(ring.token() + "/(" + ds + ")");
    }
    return s.empty() ? "0" : s;
}

bool module_iso(const ModulePresentation& a, const ModulePresentation& b) {
    if (a.ring != b.ring || a.free_rank != b.free_rank) return false;
    if (a.invariant_factors.size() != b.invariant_factors.size()) return false;
    for (size_t i = 0; i < a.invariant_factors.size(); ++i)
        if (a.invariant_factors[i].canonical_associate() !=
            b.invariant_factors[i].canonical_associate())
            return false;
    return true;
}

ModulePresentation cokernel(const MatrixR& a) {
    std::vector<Scalar> diag = smith_diagonal(a);
    size_t rank = 0;
    std::vector<Scalar> factors;
    for (const Scalar& d : diag) {
        if (d.is_zero()) continue;
        ++rank;
        if (!d.is_unit()) factors.push_back(d);
    }
    ModulePresentation p{a.ring(), a.rows() - rank, std::move(factors)};
    return p;
}

SnfSolver::SnfSolver(MatrixR a) : a_(std::move(a)), snf_(smith_normal_form(a_)) {}

std::optional<MatrixR> SnfSolver::solve(const MatrixR& b) const {
    if (b.rows() != a_.rows() || b.ring() != a_.ring())
        fail(Error::Kind::Invariant, "solve: shape/ring mismatch");
    MatrixR ub = snf_.U * b;
    MatrixR y(a_.ring(), a_.cols(), b.cols());
    size_t diag = std::min(a_.rows(), a_.cols());
    for (size_t c = 0; c < b.cols(); ++c) {
        for (size_t i = 0; i < a_.rows(); ++i) {
            if (i < diag && i < snf_.rank) {
                auto q = ub.at(i, c).exact_div(snf_.D.at(i, i));
                if (!q) return std::nullopt;
                y.at(i, c) = *q;
            } else if (!ub.at(i, c).is_zero()) {
                return std::nullopt;
            }
        }
    }
    return snf_.V * y;
}

} // namespace cellplus
