// A refined limit linear series on the chain: one series per component,
// with complementary vanishing sequences at both nodes.
#pragma once

#include "chainlls/curve.hpp"
#include "chainlls/report.hpp"

namespace chainlls {

struct RefinedSeries {
    ChainCurve curve;
    Field field;
    int r = 0;
    ComponentSeries vx1, vx2, vx3;
    // Vanishing sequences (strictly increasing, length r+1):
    // a of V_X1 at A, b of V_X2 at A, bp of V_X2 at B, c of V_X3 at B.
    std::vector<int> a, b, bp, c;

    RefinedSeries(const ChainCurve& cu, const Field& f, int rank,
                  const ComponentSeries& v1, const ComponentSeries& v2,
                  const ComponentSeries& v3);
};

// Builds the series, computes the four sequences, and validates. Throws
// Error with the validation report text when the data is not refined.
RefinedSeries make_refined_series(const ChainCurve& c, const Field& f, int r,
                                  const Subspace& v1, const Subspace& v2,
                                  const Subspace& v3);

// The extreme space of component q embedded into the glued chart of its
// corner multidegree: (d,0,0) for X1, (0,d,0) for X2, (0,0,d) for X3.
// Sections are constant on the other components, matching node values.
Subspace embed_extreme(const RefinedSeries& h, int q);

// Corner multidegree of component q.
Multidegree extreme_md(const ChainCurve& c, int q);

}  // namespace chainlls
