#include "chainlls/kernel.hpp"

namespace chainlls {

namespace {

// The three twisted component spaces cutting out K_il.
struct Twists {
    Subspace t1, t2, t3;
};

Twists kernel_twists(const RefinedSeries& h, Multidegree md) {
    const int d = h.curve.d;
    return Twists{twist_series(h.curve, h.vx1, d - md.i, 0),
                  twist_series(h.curve, h.vx2, md.i, md.l),
                  twist_series(h.curve, h.vx3, 0, d - md.l)};
}

}  // namespace

Subspace kernel_K(const RefinedSeries& h, Multidegree md) {
    require_valid(h.curve, md);
    const SectionSpace ss = ambient(h.curve, h.field, md);
    const Twists tw = kernel_twists(h, md);
    const Subspace p1 = map_preimage(alpha(h.curve, ss, 1), tw.t1);
    const Subspace p2 = map_preimage(alpha(h.curve, ss, 2), tw.t2);
    const Subspace p3 = map_preimage(alpha(h.curve, ss, 3), tw.t3);
    return subspace_intersect(subspace_intersect(p1, p2), p3);
}

int kernel_dim_predicted(const RefinedSeries& h, Multidegree md) {
    require_valid(h.curve, md);
    const int d = h.curve.d;
    const Twists tw = kernel_twists(h, md);

    const bool drop_a =
        twist_series(h.curve, h.vx1, d - md.i + 1, 0).dim() != tw.t1.dim() ||
        twist_series(h.curve, h.vx2, md.i + 1, md.l).dim() != tw.t2.dim();
    const bool drop_b =
        twist_series(h.curve, h.vx3, 0, d - md.l + 1).dim() != tw.t3.dim() ||
        twist_series(h.curve, h.vx2, md.i, md.l + 1).dim() != tw.t2.dim();
    const int rank = (drop_a ? 1 : 0) + (drop_b ? 1 : 0);

    return static_cast<int>(tw.t1.dim() + tw.t2.dim() + tw.t3.dim()) - rank;
}

KernelGrid::KernelGrid(const RefinedSeries& h) : h_(h) {
    for (Multidegree md : grid_points(h.curve)) {
        cells_.emplace(md, kernel_K(h, md));
    }
}

const Subspace& KernelGrid::at(Multidegree md) const {
    const auto it = cells_.find(md);
    if (it == cells_.end()) {
        throw Error("kernel grid has no cell " + md_str(h_.curve, md));
    }
    return it->second;
}

Subspace KernelGrid::vanishing_part(Multidegree md,
                                    const std::vector<int>& components) const {
    const SectionSpace ss = ambient(h_.curve, h_.field, md);
    return subspace_intersect(at(md), vanishing_subspace(ss, components));
}

}  // namespace chainlls
