// The kernel spaces K_il: candidate section spaces cut out by the three
// component series inside each glued chart. Every exact extension lives
// cell by cell inside these.
#pragma once

#include <map>

#include "chainlls/series.hpp"
#include "chainlls/transfer.hpp"

namespace chainlls {

// K_il = intersection over q of alpha_q^{-1}(twist of V_Xq), computed in
// the glued chart of (i, d-i-l, l).
Subspace kernel_K(const RefinedSeries& h, Multidegree md);

// Predicted dimension from twist dimensions and the rank of the node
// evaluation map, which gains one on the A side iff the A twist of V_X1
// or V_X2 drops one step further, and dually on the B side.
int kernel_dim_predicted(const RefinedSeries& h, Multidegree md);

// All kernels of the grid, computed once.
class KernelGrid {
  public:
    explicit KernelGrid(const RefinedSeries& h);

    const RefinedSeries& series() const { return h_; }
    const Subspace& at(Multidegree md) const;
    int dim(Multidegree md) const { return static_cast<int>(at(md).dim()); }

    // K restricted to sections vanishing identically on the listed
    // components of the curve.
    Subspace vanishing_part(Multidegree md, const std::vector<int>& components) const;

  private:
    RefinedSeries h_;
    std::map<Multidegree, Subspace> cells_;
};

}  // namespace chainlls
