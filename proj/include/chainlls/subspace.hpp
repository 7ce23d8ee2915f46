// Linear subspaces of k^n with a canonical reduced row-echelon basis.
// Two subspaces are equal exactly when their canonical bases are identical;
// every operation below is deterministic, with ties broken by lowest column
// index so repeated runs produce byte-identical results.
#pragma once

#include <cstdint>
#include <vector>

#include "chainlls/matrix.hpp"

namespace chainlls {

class Rng;

class Subspace {
  public:
    // The zero subspace of k^ambient.
    Subspace(const Field& f, std::size_t ambient);

    static Subspace span(const Matrix& generators);
    static Subspace zero(const Field& f, std::size_t ambient);
    static Subspace full(const Field& f, std::size_t ambient);

    const Field& field() const { return f_; }
    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    bool is_zero() const { return dim() == 0; }
    // Canonical RREF basis, one row per basis vector, no zero rows.
    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivot_cols() const { return pivots_; }

    bool contains(const RowVec& v) const;
    bool contains(const Subspace& other) const;
    // Residual of v after elimination against the basis; zero iff contained.
    RowVec reduce(const RowVec& v) const;

    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }
    // Lexicographic order on (ambient, dim, basis entries); used only to
    // keep collections of subspaces in a deterministic order.
    bool operator<(const Subspace& o) const;

  private:
    Field f_;
    std::size_t ambient_;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

Subspace subspace_sum(const Subspace& u, const Subspace& v);
Subspace subspace_intersect(const Subspace& u, const Subspace& v);

// Image of w under the linear map m (columns index the source space).
Subspace map_image(const Matrix& m, const Subspace& w);
// Full preimage m^{-1}(w), including the kernel of m.
Subspace map_preimage(const Matrix& m, const Subspace& w);
// Kernel of m as a canonical subspace of the source space.
Subspace map_kernel(const Matrix& m);

// Basis vectors extending `inner` to `outer`: scans the canonical basis
// rows of `outer` in order and keeps those that enlarge the running span.
// Requires inner to be contained in outer.
std::vector<RowVec> complement_basis(const Subspace& inner, const Subspace& outer);

// One solution x of m x = target, free variables set to zero.
// Throws Error if target is not in the image of m.
RowVec lift(const Matrix& m, const RowVec& target);
// Same particular solution shifted by a random kernel element with small
// integer coefficients drawn from rng.
RowVec lift_seeded(const Matrix& m, const RowVec& target, Rng& rng);

}  // namespace chainlls
