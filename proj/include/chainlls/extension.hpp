// Column-by-column construction of exact extensions of a refined series.
//
// Cells are built with i ascending and, inside column i, with l from d-i
// down to 0. Each new cell V at (i,l) is assembled from already-built
// neighbours: d'' = (i-1,l) to the left, d' = (i-1,l-1) on the lower-left
// diagonal, d''' = (i,l+1) above. The base of the cell is the sum of the
// transfer images of the required neighbours; the remaining beta dimensions
// are free choices of lifts, which is exactly where distinct exact
// extensions branch apart.
#pragma once

#include <cstdint>

#include "chainlls/kernel.hpp"

namespace chainlls {

struct ChoiceStrategy {
    enum class Mode { deterministic, seeded };
    Mode mode = Mode::deterministic;
    std::uint64_t seed = 0;

    static ChoiceStrategy deterministic() { return {Mode::deterministic, 0}; }
    static ChoiceStrategy seeded(std::uint64_t s) { return {Mode::seeded, s}; }
};

// Per-cell record of which case was applied and which choices were made.
// u vectors live in the chart of (i-1,l), v vectors in the chart of (i,l).
struct StepTrace {
    Multidegree md;
    std::string step;  // column0 | step1 | step2 | step3 | closure
    int beta = 0;
    std::vector<RowVec> us;
    std::vector<RowVec> vs;
};

using GridCells = std::map<Multidegree, Subspace>;

class ExtensionGrid {
  public:
    ExtensionGrid(const RefinedSeries& h, GridCells cells,
                  std::vector<StepTrace> traces)
        : h_(h), cells_(std::move(cells)), traces_(std::move(traces)) {}

    const RefinedSeries& series() const { return h_; }
    const GridCells& cells() const { return cells_; }
    const std::vector<StepTrace>& traces() const { return traces_; }
    const Subspace& at(Multidegree md) const;
    bool operator==(const ExtensionGrid& o) const { return cells_ == o.cells_; }
    bool operator!=(const ExtensionGrid& o) const { return !(*this == o); }

  private:
    RefinedSeries h_;
    GridCells cells_;
    std::vector<StepTrace> traces_;
};

// The forced start of every extension: V at (0,l) is the kernel cell, of
// dimension r+1 for every l. Returned in l order 0..d.
std::vector<Subspace> init_column_zero(const KernelGrid& kg);

// Builds the whole grid with the given strategy. Asserts, cell by cell,
// the case equalities of the construction and, at the end, the closure
// V(i,0) = K(i,0) and the corner identities.
ExtensionGrid build_extension(const RefinedSeries& h,
                              const ChoiceStrategy& strategy);
ExtensionGrid build_extension(const RefinedSeries& h, const KernelGrid& kg,
                              const ChoiceStrategy& strategy);

// Exactness of a full grid: on every edge, the down image equals the
// target's vanishing part on the moved component and the up image equals
// the source's vanishing part on the complement; every cell has dimension
// r+1 and sits inside its kernel cell.
CheckReport verify_exact(const RefinedSeries& h, const KernelGrid& kg,
                         const GridCells& cells);
CheckReport verify_exact(const ExtensionGrid& grid);

// Whether the grid restricts to the input series at the three corners.
bool verify_extends(const RefinedSeries& h, const GridCells& cells);
bool verify_extends(const ExtensionGrid& grid);

// Rebuilds a grid from its own extracted choices: at each cell the lift
// vectors are read off as a complement of the base inside the given cell.
// Throws Error when the given cells are not a valid exact extension.
ExtensionGrid replay_extension(const GridCells& cells, const RefinedSeries& h);

// Exhaustive enumeration of all exact extensions over a small prime field
// (p <= 5, d <= 4): walks the build order and branches over every valid
// choice subspace at every cell. Stops after max_grids grids when
// max_grids > 0. Throws Error outside the supported range.
std::vector<GridCells> enumerate_extensions(const RefinedSeries& h,
                                            std::size_t max_grids);

}  // namespace chainlls
