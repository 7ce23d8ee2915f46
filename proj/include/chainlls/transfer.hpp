// Transfer maps between glued section spaces of adjacent multidegrees.
//
// For each component q there is an elementary move on the grid:
//   q = 1: (i, m, l) -> (i-1, m+1, l)    needs i >= 1
//   q = 2: (i, m, l) -> (i+1, m-2, l+1)  needs m >= 2
//   q = 3: (i, m, l) -> (i, m+1, l-1)    needs l >= 1
// The down map along an edge kills the part of a section living on X_q's
// complement and is multiplication by node coordinates elsewhere; the up
// map goes the other way, restricting to X_q and including. Down and up
// compose to zero in both orders along one edge.
#pragma once

#include <map>
#include <optional>

#include "chainlls/curve.hpp"

namespace chainlls {

enum class Direction { down, up };

// Destination of the elementary move of component q starting at md, or
// nullopt when the move leaves the grid.
std::optional<Multidegree> q_shift(const ChainCurve& c, Multidegree md, int q);
// Inverse move: the multidegree whose q-shift is md, when valid.
std::optional<Multidegree> q_unshift(const ChainCurve& c, Multidegree md, int q);

struct TransferMap {
    Multidegree source;
    Multidegree target;
    int q = 1;
    Direction direction = Direction::down;
    Matrix matrix;  // (d+1) x (d+1), glued chart to glued chart

    TransferMap(Multidegree src, Multidegree tgt, int which, Direction dir,
                const Matrix& m)
        : source(src), target(tgt), q(which), direction(dir), matrix(m) {}
};

// The transfer map with the given source multidegree. For `down` the target
// is q_shift(source); for `up` it is q_unshift(source). Throws Error when
// the target would leave the grid.
TransferMap phi(const ChainCurve& c, const Field& f, Multidegree src, int q,
                Direction dir);

// One path step: which component moves and in which direction.
struct PathStep {
    int q;
    Direction dir;
};

// Composite of transfer maps along consecutive steps starting at `start`.
TransferMap composite(const ChainCurve& c, const Field& f, Multidegree start,
                      const std::vector<PathStep>& path);

// Memo cache for composites, keyed by start point and path shape. Purely
// an evaluation cache; results are identical with or without it.
class TransferCache {
  public:
    TransferCache(const ChainCurve& c, const Field& f) : c_(c), f_(f) {}

    const TransferMap& phi(Multidegree src, int q, Direction dir);

  private:
    ChainCurve c_;
    Field f_;
    std::map<std::tuple<int, int, int, int>, TransferMap> memo_;
};

}  // namespace chainlls
