// Uniqueness of the exact extension: the kernel-dimension criterion over
// the index region of the middle component's vanishing sequences, the
// equivalent twist-dimension criterion, a corroborating seeded build
// sweep, and the satellite consequences that hold in the unique case.
#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "chainlls/extension.hpp"

namespace chainlls {

// Least index j with x <= seq[j], for a strictly increasing seq and the
// convention seq[-1] = -1 (so every x in [0, seq[0]] gets j = 0); empty
// when x exceeds the last entry.
std::optional<int> interval_index(const std::vector<int>& seq, int x);

// The region of grid points (i,l) whose interval indices j (for i in b)
// and k (for l in bp) both exist and satisfy j + k <= r+1, in
// lexicographic order.
std::vector<Multidegree> uniqueness_region(const RefinedSeries& h);

// Kernel-dimension criterion: every kernel cell over the region has
// dimension exactly r+1.
bool dim_condition(const RefinedSeries& h, const KernelGrid& kg);

// Twist-dimension criterion: dim V_X2(-iA-lB) = r+1-j-k over the region.
// Equivalent to dim_condition; computed independently from the middle
// series alone.
bool chain_adaptable(const RefinedSeries& h);

struct UniquenessVerdict {
    bool unique = false;
    std::vector<Multidegree> region;
    // Region cells whose kernel dimension is not r+1, with that dimension.
    std::vector<std::pair<Multidegree, int>> failures;
    // Corroborating evidence. `adaptable` always agrees with `unique`
    // (disagreement throws). The sweep builds `trials` seeded extensions;
    // `distinct_grids` keeps one representative per distinct grid in sweep
    // order. Two or more representatives are a non-uniqueness witness; a
    // single one under a not-unique verdict sets `no_witness` (the sweep
    // failed to corroborate, which is reported, never treated as proof).
    bool adaptable = false;
    int trials = 0;
    std::uint64_t seed = 0;
    bool witness_found = false;
    bool no_witness = false;
    std::vector<GridCells> distinct_grids;
};

// Decides uniqueness from the kernel-dimension criterion (authoritative),
// cross-checks the twist-dimension criterion, and runs the seeded sweep.
// The sweep strategy seed of trial t is derive(seed, t, 0, 1). Throws
// InternalError when the two criteria disagree or when distinct grids
// appear under a unique verdict.
UniquenessVerdict decide_unique(const RefinedSeries& h, const KernelGrid& kg,
                                int trials = 10, std::uint64_t seed = 0);
UniquenessVerdict decide_unique(const RefinedSeries& h, int trials = 10,
                                std::uint64_t seed = 0);

// In the unique case the extension is supported off the middle component
// deep in the region: V = V^{X2,0} at every (i,l) with i > b_{j-1} and
// l > bp_{r-j}, for every j in 1..r.
CheckReport check_remark_vacio(const RefinedSeries& h,
                               const ExtensionGrid& grid);

// In the unique case the twists of the middle series by b_j at the first
// node vanish at the second node exactly to the orders bp_0..bp_{r-j},
// and dually with the roles of the nodes exchanged.
CheckReport check_remark_ordenes(const RefinedSeries& h);

// For each j in 1..r: when the kernel-dimension criterion holds on the
// i-interval of index j, the top vanishing order of V_X2(-b_j A) at the
// second node equals bp_{r-j}.
CheckReport check_statement5(const RefinedSeries& h, const KernelGrid& kg);
CheckReport check_statement5(const RefinedSeries& h);

// Order-sum bounds of the sequences: b_j + bp_{r-j} <= d and the point
// (b_j, bp_{r-j}) lies in the region, for every j.
CheckReport check_region_sanity(const RefinedSeries& h);

// Conditional dimension identity along horizontal edges: whenever the up
// image of K_{i-1,l} fills the complement vanishing part of K_il, the two
// kernel cells have equal dimension.
CheckReport check_dimension_igual(const KernelGrid& kg);

}  // namespace chainlls
