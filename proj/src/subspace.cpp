#include "chainlls/subspace.hpp"

#include "chainlls/rng.hpp"

namespace chainlls {

Subspace::Subspace(const Field& f, std::size_t ambient)
    : f_(f), ambient_(ambient), basis_(f, 0, ambient) {}

Subspace Subspace::span(const Matrix& generators) {
    Subspace s(generators.field(), generators.cols());
    s.basis_ = generators.rref(&s.pivots_);
    return s;
}

Subspace Subspace::zero(const Field& f, std::size_t ambient) {
    return Subspace(f, ambient);
}

Subspace Subspace::full(const Field& f, std::size_t ambient) {
    return span(Matrix::identity(f, ambient));
}

RowVec Subspace::reduce(const RowVec& v) const {
    if (v.size() != ambient_) throw InternalError("ambient mismatch in reduce");
    RowVec rem(v);
    for (std::size_t r = 0; r < basis_.rows(); ++r) {
        const Scalar& c = rem[pivots_[r]];
        if (!c.is_zero()) rem = sub(rem, scale(c, basis_.row(r)));
    }
    return rem;
}

bool Subspace::contains(const RowVec& v) const { return is_zero_vec(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) {
        throw InternalError("ambient mismatch in contains");
    }
    for (std::size_t r = 0; r < other.basis_.rows(); ++r) {
        if (!contains(other.basis_.row(r))) return false;
    }
    return true;
}

bool Subspace::operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && f_ == o.f_ && basis_ == o.basis_;
}

bool Subspace::operator<(const Subspace& o) const {
    if (ambient_ != o.ambient_) return ambient_ < o.ambient_;
    if (dim() != o.dim()) return dim() < o.dim();
    for (std::size_t r = 0; r < basis_.rows(); ++r) {
        for (std::size_t c = 0; c < ambient_; ++c) {
            const BigRat& a = basis_.at(r, c).value();
            const BigRat& b = o.basis_.at(r, c).value();
            if (a != b) return a < b;
        }
    }
    return false;
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim() || u.field() != v.field()) {
        throw InternalError("subspace mismatch in sum");
    }
    return Subspace::span(Matrix::vstack(u.basis(), v.basis()));
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim() || u.field() != v.field()) {
        throw InternalError("subspace mismatch in intersect");
    }
    // Solve sum a_j u_j = sum b_k v_k: kernel of [U^T | -V^T], then read
    // off the a-part and map back through U.
    const Matrix ut = u.basis().transpose();
    Matrix vt = v.basis().transpose();
    for (std::size_t r = 0; r < vt.rows(); ++r) {
        for (std::size_t c = 0; c < vt.cols(); ++c) vt.at(r, c) = -vt.at(r, c);
    }
    const Matrix m = Matrix::hstack(ut, vt);
    const Subspace ker = map_kernel(m);

    std::vector<RowVec> gens;
    for (std::size_t r = 0; r < ker.dim(); ++r) {
        const RowVec coeffs = ker.basis().row(r);
        RowVec w = zero_vec(u.field(), u.ambient_dim());
        for (std::size_t j = 0; j < u.dim(); ++j) {
            w = add(w, scale(coeffs[j], u.basis().row(j)));
        }
        gens.push_back(w);
    }
    return Subspace::span(Matrix::from_rows(u.field(), gens, u.ambient_dim()));
}

Subspace map_image(const Matrix& m, const Subspace& w) {
    if (m.cols() != w.ambient_dim()) {
        throw InternalError("shape mismatch in map_image");
    }
    std::vector<RowVec> rows;
    rows.reserve(w.dim());
    for (std::size_t r = 0; r < w.dim(); ++r) {
        rows.push_back(m.apply(w.basis().row(r)));
    }
    return Subspace::span(Matrix::from_rows(m.field(), rows, m.rows()));
}

Subspace map_preimage(const Matrix& m, const Subspace& w) {
    if (m.rows() != w.ambient_dim()) {
        throw InternalError("shape mismatch in map_preimage");
    }
    // x is in the preimage iff m x = sum c_k w_k for some c, i.e. (x, c)
    // lies in the kernel of [m | -W^T]; project kernel vectors to x.
    Matrix wt = w.basis().transpose();
    for (std::size_t r = 0; r < wt.rows(); ++r) {
        for (std::size_t c = 0; c < wt.cols(); ++c) wt.at(r, c) = -wt.at(r, c);
    }
    const Matrix aug = Matrix::hstack(m, wt);
    const Subspace ker = map_kernel(aug);

    std::vector<RowVec> gens;
    for (std::size_t r = 0; r < ker.dim(); ++r) {
        RowVec full = ker.basis().row(r);
        gens.emplace_back(full.begin(), full.begin() + m.cols());
    }
    return Subspace::span(Matrix::from_rows(m.field(), gens, m.cols()));
}

Subspace map_kernel(const Matrix& m) {
    std::vector<std::size_t> pivots;
    const Matrix r = m.rref(&pivots);

    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : pivots) is_pivot[p] = true;

    std::vector<RowVec> gens;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        RowVec v = zero_vec(m.field(), m.cols());
        v[c] = Scalar::one(m.field());
        for (std::size_t pr = 0; pr < pivots.size(); ++pr) {
            v[pivots[pr]] = -r.at(pr, c);
        }
        gens.push_back(v);
    }
    // The standard free-variable basis is not reduced row-echelon in
    // general, so canonicalize through span().
    return Subspace::span(Matrix::from_rows(m.field(), gens, m.cols()));
}

std::vector<RowVec> complement_basis(const Subspace& inner, const Subspace& outer) {
    if (!outer.contains(inner)) {
        throw InternalError("complement_basis: inner not contained in outer");
    }
    std::vector<RowVec> out;
    Subspace running = inner;
    for (std::size_t r = 0; r < outer.dim(); ++r) {
        const RowVec v = outer.basis().row(r);
        if (running.contains(v)) continue;
        out.push_back(v);
        running = subspace_sum(
            running, Subspace::span(Matrix::from_rows(outer.field(), {v},
                                                      outer.ambient_dim())));
    }
    if (inner.dim() + out.size() != outer.dim()) {
        throw InternalError("complement_basis: dimension accounting failed");
    }
    return out;
}

RowVec lift(const Matrix& m, const RowVec& target) {
    if (target.size() != m.rows()) {
        throw InternalError("target length mismatch in lift");
    }
    const Matrix tcol = Matrix::from_rows(m.field(), {target}, m.rows()).transpose();
    std::vector<std::size_t> pivots;
    const Matrix r = Matrix::hstack(m, tcol).rref(&pivots);

    RowVec x = zero_vec(m.field(), m.cols());
    for (std::size_t pr = 0; pr < pivots.size(); ++pr) {
        if (pivots[pr] == m.cols()) throw Error("lift: target not in image");
        x[pivots[pr]] = r.at(pr, m.cols());
    }
    return x;
}

RowVec lift_seeded(const Matrix& m, const RowVec& target, Rng& rng) {
    RowVec x = lift(m, target);
    const Subspace ker = map_kernel(m);
    for (std::size_t r = 0; r < ker.dim(); ++r) {
        x = add(x, scale(rng.small_scalar(m.field()), ker.basis().row(r)));
    }
    return x;
}

}  // namespace chainlls
