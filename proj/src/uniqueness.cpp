#include "chainlls/uniqueness.hpp"

#include <algorithm>
#include <sstream>

#include "chainlls/rng.hpp"

namespace chainlls {

namespace {

std::string seq_str(const std::vector<int>& seq) {
    std::ostringstream out;
    out << "(";
    for (std::size_t j = 0; j < seq.size(); ++j)
        out << (j ? "," : "") << seq[j];
    out << ")";
    return out.str();
}

// Interval indices (j, k) of a grid point, when both exist.
struct RegionIndex {
    int j = 0;
    int k = 0;
};

std::optional<RegionIndex> region_index(const RefinedSeries& h,
                                        Multidegree md) {
    const auto j = interval_index(h.b, md.i);
    const auto k = interval_index(h.bp, md.l);
    if (!j || !k || *j + *k > h.r + 1) return std::nullopt;
    return RegionIndex{*j, *k};
}

}  // namespace

std::optional<int> interval_index(const std::vector<int>& seq, int x) {
    for (std::size_t j = 0; j < seq.size(); ++j)
        if (x <= seq[j]) return static_cast<int>(j);
    return std::nullopt;
}

std::vector<Multidegree> uniqueness_region(const RefinedSeries& h) {
    std::vector<Multidegree> out;
    for (const Multidegree md : grid_points(h.curve))
        if (region_index(h, md)) out.push_back(md);
    return out;
}

bool dim_condition(const RefinedSeries& h, const KernelGrid& kg) {
    for (const Multidegree md : uniqueness_region(h))
        if (kg.dim(md) != h.r + 1) return false;
    return true;
}

bool chain_adaptable(const RefinedSeries& h) {
    for (const Multidegree md : uniqueness_region(h)) {
        const RegionIndex idx = *region_index(h, md);
        const Subspace twisted = twist_series(h.curve, h.vx2, md.i, md.l);
        if (static_cast<int>(twisted.dim()) != h.r + 1 - idx.j - idx.k)
            return false;
    }
    return true;
}

UniquenessVerdict decide_unique(const RefinedSeries& h, const KernelGrid& kg,
                                int trials, std::uint64_t seed) {
    if (trials < 0) throw Error("the number of sweep trials cannot be negative");
    UniquenessVerdict v;
    v.region = uniqueness_region(h);
    for (const Multidegree md : v.region)
        if (kg.dim(md) != h.r + 1) v.failures.emplace_back(md, kg.dim(md));
    v.unique = v.failures.empty();
    v.adaptable = chain_adaptable(h);
    if (v.adaptable != v.unique)
        throw InternalError(
            "kernel-dimension and twist-dimension criteria disagree");
    v.trials = trials;
    v.seed = seed;
    for (int t = 0; t < trials; ++t) {
        const std::uint64_t trial_seed =
            Rng::derive(seed, static_cast<std::uint64_t>(t), 0, 1);
        GridCells cells =
            build_extension(h, kg, ChoiceStrategy::seeded(trial_seed)).cells();
        if (std::find(v.distinct_grids.begin(), v.distinct_grids.end(),
                      cells) == v.distinct_grids.end())
            v.distinct_grids.push_back(std::move(cells));
    }
    v.witness_found = v.distinct_grids.size() >= 2;
    if (v.unique && v.witness_found)
        throw InternalError(
            "unique verdict contradicted by distinct seeded builds");
    v.no_witness = !v.unique && !v.witness_found;
    return v;
}

UniquenessVerdict decide_unique(const RefinedSeries& h, int trials,
                                std::uint64_t seed) {
    const KernelGrid kg(h);
    return decide_unique(h, kg, trials, seed);
}

CheckReport check_remark_vacio(const RefinedSeries& h,
                               const ExtensionGrid& grid) {
    CheckReport rep;
    rep.name = "remark_middle_vanishing";
    int cells_checked = 0;
    for (int j = 1; j <= h.r; ++j) {
        const int imin = h.b[static_cast<std::size_t>(j - 1)] + 1;
        const int lmin = h.bp[static_cast<std::size_t>(h.r - j)] + 1;
        for (const Multidegree md : grid_points(h.curve)) {
            if (md.i < imin || md.l < lmin) continue;
            const Subspace& v = grid.at(md);
            const SectionSpace ss = ambient(h.curve, h.field, md);
            const bool pass =
                v == subspace_intersect(v, vanishing_subspace(ss, {2}));
            rep.add(md.i, md.l, "middle_part_fills_cell", pass,
                    {{"j", std::to_string(j)}});
            ++cells_checked;
        }
    }
    rep.add(-1, -1, "cells_checked", true,
            {{"count", std::to_string(cells_checked)}});
    return rep;
}

CheckReport check_remark_ordenes(const RefinedSeries& h) {
    CheckReport rep;
    rep.name = "remark_twist_orders";
    for (int j = 0; j <= h.r; ++j) {
        const Subspace twisted =
            twist_series(h.curve, h.vx2, h.b[static_cast<std::size_t>(j)], 0);
        const std::vector<int> got =
            vanishing_sequence(twisted, NodeSide::at_infinity);
        const std::vector<int> want(h.bp.begin(),
                                    h.bp.begin() + (h.r - j + 1));
        rep.add(-1, -1, "orders_at_B_after_twist_" + std::to_string(j),
                got == want, {{"got", seq_str(got)}, {"want", seq_str(want)}});
    }
    for (int k = 0; k <= h.r; ++k) {
        const Subspace twisted =
            twist_series(h.curve, h.vx2, 0, h.bp[static_cast<std::size_t>(k)]);
        const std::vector<int> got =
            vanishing_sequence(twisted, NodeSide::at_zero);
        const std::vector<int> want(h.b.begin(), h.b.begin() + (h.r - k + 1));
        rep.add(-1, -1, "orders_at_A_after_twist_" + std::to_string(k),
                got == want, {{"got", seq_str(got)}, {"want", seq_str(want)}});
    }
    return rep;
}

CheckReport check_statement5(const RefinedSeries& h, const KernelGrid& kg) {
    CheckReport rep;
    rep.name = "top_order_after_twist";
    for (int j = 1; j <= h.r; ++j) {
        bool premise = true;
        for (const Multidegree md : uniqueness_region(h))
            if (region_index(h, md)->j == j && kg.dim(md) != h.r + 1)
                premise = false;
        const Subspace twisted =
            twist_series(h.curve, h.vx2, h.b[static_cast<std::size_t>(j)], 0);
        const std::vector<int> orders =
            vanishing_sequence(twisted, NodeSide::at_infinity);
        const int want = h.bp[static_cast<std::size_t>(h.r - j)];
        const bool top_matches = !orders.empty() && orders.back() == want;
        rep.add(-1, -1, "top_order_j" + std::to_string(j),
                !premise || top_matches,
                {{"premise", premise ? "holds" : "fails"},
                 {"got", orders.empty() ? "none" : std::to_string(orders.back())},
                 {"want", std::to_string(want)}});
    }
    return rep;
}

CheckReport check_statement5(const RefinedSeries& h) {
    const KernelGrid kg(h);
    return check_statement5(h, kg);
}

CheckReport check_region_sanity(const RefinedSeries& h) {
    CheckReport rep;
    rep.name = "region_sanity";
    const std::vector<Multidegree> region = uniqueness_region(h);
    for (int j = 0; j <= h.r; ++j) {
        const int bi = h.b[static_cast<std::size_t>(j)];
        const int bpl = h.bp[static_cast<std::size_t>(h.r - j)];
        rep.add(bi, bpl, "order_sum_within_degree", bi + bpl <= h.curve.d,
                {{"sum", std::to_string(bi + bpl)}});
        const bool member =
            std::find(region.begin(), region.end(), Multidegree{bi, bpl}) !=
            region.end();
        rep.add(bi, bpl, "order_pair_in_region", member);
    }
    return rep;
}

CheckReport check_dimension_igual(const KernelGrid& kg) {
    const RefinedSeries& h = kg.series();
    CheckReport rep;
    rep.name = "equal_dims_when_up_image_fills";
    TransferCache tc(h.curve, h.field);
    for (const Multidegree md : grid_points(h.curve)) {
        if (md.i < 1) continue;
        const Multidegree left{md.i - 1, md.l};
        const Subspace up_img = map_image(
            tc.phi(left, 1, Direction::up).matrix, kg.at(left));
        const bool premise = up_img == kg.vanishing_part(md, {2, 3});
        const bool dims_equal = kg.dim(md) == kg.dim(left);
        rep.add(md.i, md.l, "equal_dims_when_up_image_fills",
                !premise || dims_equal,
                {{"premise", premise ? "holds" : "fails"},
                 {"dim", std::to_string(kg.dim(md))},
                 {"dim_left", std::to_string(kg.dim(left))}});
    }
    return rep;
}

}  // namespace chainlls
