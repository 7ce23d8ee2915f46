#include "chainlls/curve.hpp"

#include <algorithm>

namespace chainlls {

ChainCurve::ChainCurve(int degree) : d(degree) {
    if (degree < 1) {
        throw Error("total degree must be at least 1, got " + std::to_string(degree));
    }
}

bool valid_multidegree(const ChainCurve& c, Multidegree md) {
    return md.i >= 0 && md.l >= 0 && md.i + md.l <= c.d;
}

void require_valid(const ChainCurve& c, Multidegree md) {
    if (!valid_multidegree(c, md)) {
        throw Error("multidegree " + md_str(c, md) + " out of range for d=" +
                    std::to_string(c.d));
    }
}

int middle(const ChainCurve& c, Multidegree md) { return c.d - md.i - md.l; }

std::string md_str(const ChainCurve& c, Multidegree md) {
    return "(" + std::to_string(md.i) + "," + std::to_string(middle(c, md)) + "," +
           std::to_string(md.l) + ")";
}

std::vector<Multidegree> grid_points(const ChainCurve& c) {
    std::vector<Multidegree> out;
    for (int i = 0; i <= c.d; ++i) {
        for (int l = 0; i + l <= c.d; ++l) out.push_back(Multidegree{i, l});
    }
    return out;
}

SectionSpace::SectionSpace(const ChainCurve& c, const Field& f, Multidegree md)
    : c_(c), f_(f), md_(md), chart_to_raw_(f, 0, 0), raw_to_chart_(f, 0, 0) {
    require_valid(c, md);
    const std::size_t raw = raw_dim();
    const int m = middle(c, md);

    // Gluing constraints: s1_0 - s2_0 = 0 (at A) and s2_m - s3_0 = 0 (at B).
    Matrix constraints(f, 2, raw);
    constraints.at(0, block_offset(1)) = Scalar::one(f);
    constraints.at(0, block_offset(2)) -= Scalar::one(f);
    constraints.at(1, block_offset(2) + static_cast<std::size_t>(m)) +=
        Scalar::one(f);
    constraints.at(1, block_offset(3)) -= Scalar::one(f);

    const Subspace glued = map_kernel(constraints);
    if (glued.dim() != dim()) {
        throw InternalError("glued chart has dimension " +
                            std::to_string(glued.dim()) + ", expected " +
                            std::to_string(dim()));
    }
    chart_to_raw_ = glued.basis().transpose();

    Matrix sel(f, dim(), raw);
    for (std::size_t j = 0; j < dim(); ++j) {
        sel.at(j, glued.pivot_cols()[j]) = Scalar::one(f);
    }
    raw_to_chart_ = sel;
}

std::size_t SectionSpace::block_offset(int q) const {
    const int m = middle(c_, md_);
    switch (q) {
        case 1: return 0;
        case 2: return static_cast<std::size_t>(md_.i) + 1;
        case 3: return static_cast<std::size_t>(md_.i + m) + 2;
        default: throw InternalError("component index must be 1, 2 or 3");
    }
}

std::size_t SectionSpace::block_len(int q) const {
    const int m = middle(c_, md_);
    switch (q) {
        case 1: return static_cast<std::size_t>(md_.i) + 1;
        case 2: return static_cast<std::size_t>(m) + 1;
        case 3: return static_cast<std::size_t>(md_.l) + 1;
        default: throw InternalError("component index must be 1, 2 or 3");
    }
}

bool SectionSpace::is_glued(const RowVec& raw) const {
    if (raw.size() != raw_dim()) return false;
    const int m = middle(c_, md_);
    const bool at_a = raw[block_offset(1)] == raw[block_offset(2)];
    const bool at_b = raw[block_offset(2) + static_cast<std::size_t>(m)] ==
                      raw[block_offset(3)];
    return at_a && at_b;
}

SectionSpace ambient(const ChainCurve& c, const Field& f, Multidegree md) {
    return SectionSpace(c, f, md);
}

Matrix alpha(const ChainCurve& c, const SectionSpace& ss, int q) {
    const std::size_t n = ss.dim();
    Matrix raw_sel(ss.field(), n, ss.raw_dim());
    // Degree shift of the inclusion into the degree-d chart of X_q.
    std::size_t shift = 0;
    switch (q) {
        case 1: shift = static_cast<std::size_t>(c.d - ss.md().i); break;
        case 2: shift = static_cast<std::size_t>(ss.md().i); break;
        case 3: shift = static_cast<std::size_t>(c.d - ss.md().l); break;
        default: throw InternalError("component index must be 1, 2 or 3");
    }
    for (std::size_t k = 0; k < ss.block_len(q); ++k) {
        raw_sel.at(shift + k, ss.block_offset(q) + k) = Scalar::one(ss.field());
    }
    return raw_sel * ss.chart_to_raw();
}

Subspace twist(const Subspace& v, int ord0, int ordInf) {
    if (ord0 < 0 || ordInf < 0) throw Error("twist orders must be nonnegative");
    const int n = static_cast<int>(v.ambient_dim()) - 1;
    std::vector<RowVec> window;
    for (int k = ord0; k <= n - ordInf; ++k) {
        RowVec e = zero_vec(v.field(), v.ambient_dim());
        e[static_cast<std::size_t>(k)] = Scalar::one(v.field());
        window.push_back(e);
    }
    const Subspace w =
        Subspace::span(Matrix::from_rows(v.field(), window, v.ambient_dim()));
    return subspace_intersect(v, w);
}

std::vector<int> vanishing_sequence(const Subspace& v, NodeSide side) {
    Matrix rows = v.basis();
    if (side == NodeSide::at_infinity) {
        // Order at infinity of degree k in an ambient of degree n is n - k,
        // so reverse the coordinates and read orders at zero.
        Matrix rev(v.field(), rows.rows(), rows.cols());
        for (std::size_t r = 0; r < rows.rows(); ++r) {
            for (std::size_t c = 0; c < rows.cols(); ++c) {
                rev.at(r, rows.cols() - 1 - c) = rows.at(r, c);
            }
        }
        rows = rev;
    }
    std::vector<std::size_t> pivots;
    rows.rref(&pivots);
    // The distinct vanishing orders of a polynomial subspace at a point are
    // exactly the pivot columns of its canonical basis in that chart.
    std::vector<int> out;
    out.reserve(pivots.size());
    for (std::size_t p : pivots) out.push_back(static_cast<int>(p));
    std::sort(out.begin(), out.end());
    return out;
}

Subspace twist_series(const ChainCurve& c, const ComponentSeries& v, int ordA,
                      int ordB) {
    (void)c;
    switch (v.q) {
        case 1:
            if (ordB != 0) throw Error("X1 does not meet the node B");
            return twist(v.space, ordA, 0);
        case 2:
            return twist(v.space, ordA, ordB);
        case 3:
            if (ordA != 0) throw Error("X3 does not meet the node A");
            return twist(v.space, ordB, 0);
        default:
            throw InternalError("component index must be 1, 2 or 3");
    }
}

std::vector<int> sequence_at_node(const ComponentSeries& v, char node) {
    if (node != 'A' && node != 'B') throw Error("node must be 'A' or 'B'");
    switch (v.q) {
        case 1:
            if (node != 'A') throw Error("X1 does not meet the node B");
            return vanishing_sequence(v.space, NodeSide::at_zero);
        case 2:
            return vanishing_sequence(
                v.space, node == 'A' ? NodeSide::at_zero : NodeSide::at_infinity);
        case 3:
            if (node != 'B') throw Error("X3 does not meet the node A");
            return vanishing_sequence(v.space, NodeSide::at_zero);
        default:
            throw InternalError("component index must be 1, 2 or 3");
    }
}

Subspace vanishing_subspace(const SectionSpace& ss,
                            const std::vector<int>& components) {
    std::size_t rows = 0;
    for (int q : components) rows += ss.block_len(q);
    Matrix sel(ss.field(), rows, ss.raw_dim());
    std::size_t r = 0;
    for (int q : components) {
        for (std::size_t k = 0; k < ss.block_len(q); ++k) {
            sel.at(r++, ss.block_offset(q) + k) = Scalar::one(ss.field());
        }
    }
    return map_kernel(sel * ss.chart_to_raw());
}

}  // namespace chainlls
