// Exact linear algebra checked against brute-force enumeration over F_3
// and against textbook identities over Q.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "chainlls/rng.hpp"
#include "chainlls/subspace.hpp"

using namespace chainlls;

namespace {

std::string key(const RowVec& v) {
    std::string out;
    for (const auto& x : v) {
        out += x.str();
        out += ",";
    }
    return out;
}

// All p^n vectors of F_p^n, in counting order.
std::vector<RowVec> all_vectors(const Field& f, std::size_t n) {
    std::size_t total = 1;
    for (std::size_t k = 0; k < n; ++k) total *= static_cast<std::size_t>(f.p);
    std::vector<RowVec> out;
    out.reserve(total);
    for (std::size_t code = 0; code < total; ++code) {
        RowVec v = zero_vec(f, n);
        std::size_t rest = code;
        for (std::size_t k = 0; k < n; ++k) {
            v[k] = Scalar(f, static_cast<long long>(rest % f.p));
            rest /= static_cast<std::size_t>(f.p);
        }
        out.push_back(v);
    }
    return out;
}

// The set of all vectors spanned by the rows of gens, by enumerating every
// coefficient tuple. Exponential and only for small prime-field oracles.
std::set<std::string> span_set(const Field& f, const std::vector<RowVec>& gens,
                               std::size_t ambient) {
    std::set<std::string> out;
    const auto coeffs = all_vectors(f, gens.size());
    for (const auto& c : coeffs) {
        RowVec w = zero_vec(f, ambient);
        for (std::size_t j = 0; j < gens.size(); ++j) {
            w = add(w, scale(c[j], gens[j]));
        }
        out.insert(key(w));
    }
    return out;
}

std::set<std::string> subspace_set(const Subspace& s) {
    std::vector<RowVec> rows;
    for (std::size_t r = 0; r < s.dim(); ++r) rows.push_back(s.basis().row(r));
    return span_set(s.field(), rows, s.ambient_dim());
}

Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, Rng& rng,
                     std::int64_t lo = -4, std::int64_t hi = 4) {
    Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rng.small_scalar(f, lo, hi);
    }
    return m;
}

Subspace random_subspace(const Field& f, std::size_t ambient, std::size_t gens,
                         Rng& rng) {
    return Subspace::span(random_matrix(f, gens, ambient, rng));
}

Matrix mat(const Field& f, const std::vector<std::vector<long long>>& rows,
           std::size_t cols) {
    std::vector<RowVec> conv;
    for (const auto& r : rows) {
        RowVec rv;
        for (long long x : r) rv.emplace_back(f, x);
        conv.push_back(rv);
    }
    return Matrix::from_rows(f, conv, cols);
}

}  // namespace

TEST_CASE("scalar arithmetic over Q and F_p") {
    const Field q = Field::rationals();
    CHECK(Scalar::parse(q, "2/4").str() == "1/2");
    CHECK(Scalar::parse(q, "-6/4").str() == "-3/2");
    CHECK(Scalar::parse(q, "0").str() == "0");
    CHECK((Scalar(q, 1) / Scalar(q, 3)).str() == "1/3");
    CHECK_THROWS_AS(Scalar::parse(q, "1.5"), Error);
    CHECK_THROWS_AS(Scalar::parse(q, ""), Error);

    const Field f5 = Field::prime(5);
    CHECK(Scalar(f5, -1).str() == "4");
    CHECK(Scalar(f5, 7).str() == "2");
    CHECK((Scalar(f5, 2) / Scalar(f5, 3)).str() == "4");
    CHECK(Scalar::parse(f5, "1/2").str() == "3");
    CHECK_THROWS_AS(Scalar::parse(f5, "1/5"), Error);
    CHECK_THROWS_AS(Field::prime(6), Error);
    CHECK_THROWS_AS(Scalar(q, 1) + Scalar(f5, 1), InternalError);
}

TEST_CASE("rref canonical form") {
    const Field q = Field::rationals();
    // Proportional rows collapse to one normalized row.
    const Matrix m = mat(q, {{2, 4}, {1, 2}}, 2);
    const Matrix r = m.rref();
    CHECK(r == mat(q, {{1, 2}}, 2));

    CHECK(Matrix(q, 3, 3).rref().rows() == 0);
    CHECK(Matrix::identity(q, 4).rref() == Matrix::identity(q, 4));

    // Zero-dimensional shapes are legal.
    CHECK(Matrix(q, 0, 3).rref().rows() == 0);
    CHECK(Matrix(q, 3, 0).rref().rows() == 0);
}

TEST_CASE("rref is invariant under row operations") {
    const Field q = Field::rationals();
    Rng rng(101);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 5));
        const std::size_t rows = static_cast<std::size_t>(rng.uniform_int(1, 4));
        Matrix m = random_matrix(q, rows, n, rng);
        Matrix shuffled = m;
        // Apply a few random row operations.
        for (int k = 0; k < 6; ++k) {
            const std::size_t a = static_cast<std::size_t>(rng.uniform_int(0, rows - 1));
            const std::size_t b = static_cast<std::size_t>(rng.uniform_int(0, rows - 1));
            if (a == b) continue;
            const Scalar c = rng.small_scalar(q);
            for (std::size_t col = 0; col < n; ++col) {
                shuffled.at(a, col) += c * shuffled.at(b, col);
            }
        }
        CHECK(m.rref() == shuffled.rref());
    }
}

TEST_CASE("exhaustive F_3 oracle: kernel, preimage, intersection") {
    const Field f3 = Field::prime(3);
    Rng rng(2024);
    int checked = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 4));
        const std::size_t m_rows = static_cast<std::size_t>(rng.uniform_int(1, 3));
        const Matrix m = random_matrix(f3, m_rows, n, rng, 0, 2);
        const Subspace w =
            random_subspace(f3, m_rows, static_cast<std::size_t>(rng.uniform_int(0, 2)), rng);

        // Kernel oracle: try every vector.
        std::set<std::string> ker_oracle;
        for (const auto& v : all_vectors(f3, n)) {
            if (is_zero_vec(m.apply(v))) ker_oracle.insert(key(v));
        }
        CHECK(subspace_set(map_kernel(m)) == ker_oracle);

        // Preimage oracle: every vector whose image lands in w.
        const auto w_set = subspace_set(w);
        std::set<std::string> pre_oracle;
        for (const auto& v : all_vectors(f3, n)) {
            if (w_set.count(key(m.apply(v))) != 0) pre_oracle.insert(key(v));
        }
        CHECK(subspace_set(map_preimage(m, w)) == pre_oracle);

        // Intersection oracle: set intersection of two span sets.
        const Subspace u1 =
            random_subspace(f3, n, static_cast<std::size_t>(rng.uniform_int(0, 3)), rng);
        const Subspace u2 =
            random_subspace(f3, n, static_cast<std::size_t>(rng.uniform_int(0, 3)), rng);
        const auto s1 = subspace_set(u1);
        const auto s2 = subspace_set(u2);
        std::set<std::string> both;
        std::set_intersection(s1.begin(), s1.end(), s2.begin(), s2.end(),
                              std::inserter(both, both.begin()));
        CHECK(subspace_set(subspace_intersect(u1, u2)) == both);

        // Image oracle: exact set of images of elements of u1.
        std::set<std::string> img_oracle;
        for (const auto& v : all_vectors(f3, n)) {
            if (s1.count(key(v)) != 0) img_oracle.insert(key(m.apply(v)));
        }
        CHECK(subspace_set(map_image(m, u1)) == img_oracle);
        ++checked;
    }
    CHECK(checked == 40);
}

TEST_CASE("dimension formula on random pairs") {
    for (const Field f : {Field::rationals(), Field::prime(7)}) {
        Rng rng(f.is_prime_field() ? 7 : 11);
        for (int trial = 0; trial < 120; ++trial) {
            const std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 7));
            const Subspace u = random_subspace(
                f, n, static_cast<std::size_t>(rng.uniform_int(0, n)), rng);
            const Subspace v = random_subspace(
                f, n, static_cast<std::size_t>(rng.uniform_int(0, n)), rng);
            const Subspace s = subspace_sum(u, v);
            const Subspace i = subspace_intersect(u, v);
            CHECK(s.dim() + i.dim() == u.dim() + v.dim());
            CHECK(s.contains(u));
            CHECK(s.contains(v));
            CHECK(u.contains(i));
            CHECK(v.contains(i));
        }
    }
}

TEST_CASE("image preimage adjunction on random maps") {
    for (const Field f : {Field::rationals(), Field::prime(11)}) {
        Rng rng(f.is_prime_field() ? 13 : 17);
        for (int trial = 0; trial < 120; ++trial) {
            const std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 6));
            const std::size_t m_rows = static_cast<std::size_t>(rng.uniform_int(1, 6));
            const Matrix m = random_matrix(f, m_rows, n, rng);
            const Subspace w = random_subspace(
                f, m_rows, static_cast<std::size_t>(rng.uniform_int(0, m_rows)), rng);

            const Subspace pre = map_preimage(m, w);
            const Subspace total_image = map_image(m, Subspace::full(f, n));
            CHECK(map_image(m, pre) == subspace_intersect(w, total_image));
            CHECK(pre.contains(map_kernel(m)));

            // Rank-nullity.
            CHECK(map_kernel(m).dim() + total_image.dim() == n);
        }
    }
}

TEST_CASE("modular distributivity holds or fails symmetrically") {
    // For subspaces A, B, C the three statements
    //   A cap (B + C) = (A cap B) + (A cap C)   (and cyclic)
    // are equivalent; random triples usually violate all three at once.
    for (const Field f : {Field::rationals(), Field::prime(5)}) {
        Rng rng(f.is_prime_field() ? 23 : 29);
        int violations = 0;
        for (int trial = 0; trial < 80; ++trial) {
            const std::size_t n = static_cast<std::size_t>(rng.uniform_int(2, 5));
            const Subspace a = random_subspace(f, n, 1 + (trial % 2), rng);
            const Subspace b = random_subspace(f, n, 1 + (trial % 2), rng);
            const Subspace c = random_subspace(f, n, 1, rng);
            const auto distributes = [](const Subspace& x, const Subspace& y,
                                        const Subspace& z) {
                return subspace_intersect(x, subspace_sum(y, z)) ==
                       subspace_sum(subspace_intersect(x, y), subspace_intersect(x, z));
            };
            const bool d1 = distributes(a, b, c);
            const bool d2 = distributes(b, a, c);
            const bool d3 = distributes(c, a, b);
            CHECK(d1 == d2);
            CHECK(d2 == d3);
            if (!d1) ++violations;
        }
        CHECK(violations > 0);
    }
}

TEST_CASE("complement basis extends inner to outer") {
    const Field q = Field::rationals();
    Rng rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 6));
        const Subspace outer = random_subspace(
            q, n, static_cast<std::size_t>(rng.uniform_int(0, n)), rng);
        // Build an inner subspace from a prefix of outer combinations.
        std::vector<RowVec> picks;
        for (std::size_t r = 0; r < outer.dim(); r += 2) picks.push_back(outer.basis().row(r));
        const Subspace inner = Subspace::span(Matrix::from_rows(q, picks, n));

        const auto comp = complement_basis(inner, outer);
        CHECK(inner.dim() + comp.size() == outer.dim());
        Subspace rebuilt = inner;
        for (const auto& v : comp) {
            CHECK(outer.contains(v));
            CHECK_FALSE(rebuilt.contains(v));
            rebuilt = subspace_sum(rebuilt, Subspace::span(Matrix::from_rows(q, {v}, n)));
        }
        CHECK(rebuilt == outer);
    }
    const Subspace inner = Subspace::span(mat(q, {{1, 0, 0}}, 3));
    const Subspace not_outer = Subspace::span(mat(q, {{0, 1, 0}}, 3));
    CHECK_THROWS_AS(complement_basis(inner, not_outer), InternalError);
}

TEST_CASE("lift solves and reports unsolvable targets") {
    const Field q = Field::rationals();
    const Matrix m = mat(q, {{1, 0, 1}, {0, 1, 1}}, 3);
    RowVec target{Scalar(q, 3), Scalar(q, 5)};
    const RowVec x = lift(m, target);
    CHECK(m.apply(x) == target);
    // Free variable fixed to zero makes the solution canonical.
    CHECK(x == RowVec{Scalar(q, 3), Scalar(q, 5), Scalar(q, 0)});

    const Matrix sing = mat(q, {{1, 0}, {1, 0}}, 2);
    RowVec bad{Scalar(q, 1), Scalar(q, 2)};
    CHECK_THROWS_AS(lift(sing, bad), Error);

    Rng rng(37);
    for (int trial = 0; trial < 50; ++trial) {
        const Matrix mm = random_matrix(q, 3, 4, rng);
        const RowVec xs{rng.small_scalar(q), rng.small_scalar(q), rng.small_scalar(q),
                        rng.small_scalar(q)};
        const RowVec t = mm.apply(xs);
        CHECK(mm.apply(lift(mm, t)) == t);
        Rng lr(Rng::derive(37, static_cast<std::uint64_t>(trial), 0, 0));
        CHECK(mm.apply(lift_seeded(mm, t, lr)) == t);
    }
}

TEST_CASE("subspace equality is basis identity") {
    const Field q = Field::rationals();
    const Subspace a = Subspace::span(mat(q, {{1, 1, 0}, {0, 0, 1}}, 3));
    const Subspace b = Subspace::span(mat(q, {{2, 2, 2}, {0, 0, 5}}, 3));
    CHECK(a == b);
    CHECK(a.basis() == b.basis());
    const Subspace c = Subspace::span(mat(q, {{1, 0, 0}}, 3));
    CHECK(a != c);
    CHECK(Subspace::zero(q, 3).dim() == 0);
    CHECK(Subspace::full(q, 3).dim() == 3);
}
