// Model of a compact-type curve with three rational components in a chain:
// X1 meets X2 at the node A, X2 meets X3 at the node B.
//
// Coordinate conventions, fixed once and used everywhere:
//   X1 carries t with A at t = 0;
//   X2 carries u with A at u = 0 and B at u = infinity;
//   X3 carries v with B at v = 0.
// A section of multidegree (i, m, l) with m = d - i - l is a triple of
// polynomials (s1, s2, s3) with deg s1 <= i, deg s2 <= m, deg s3 <= l,
// glued by s1(0) = s2(0) at A and by s2[m] = s3(0) at B, where s2[m] is
// the top coefficient of s2 in its degree-m chart (the value at infinity).
// The order of vanishing at infinity of a degree-bounded polynomial is the
// chart bound minus its degree. All trivialization scalings are 1.
#pragma once

#include <string>
#include <vector>

#include "chainlls/subspace.hpp"

namespace chainlls {

struct ChainCurve {
    int d = 1;  // total degree; every glued section space has dimension d+1

    explicit ChainCurve(int degree);
};

// A point (i, l) of the multidegree grid; the middle entry is d - i - l.
struct Multidegree {
    int i = 0;
    int l = 0;

    bool operator==(const Multidegree& o) const { return i == o.i && l == o.l; }
    bool operator!=(const Multidegree& o) const { return !(*this == o); }
    bool operator<(const Multidegree& o) const {
        return i != o.i ? i < o.i : l < o.l;
    }
};

bool valid_multidegree(const ChainCurve& c, Multidegree md);
void require_valid(const ChainCurve& c, Multidegree md);
// Middle entry m = d - i - l.
int middle(const ChainCurve& c, Multidegree md);
std::string md_str(const ChainCurve& c, Multidegree md);
// All valid grid points in lexicographic (i, l) order.
std::vector<Multidegree> grid_points(const ChainCurve& c);

// The glued section space of one multidegree, with its canonical chart.
// Raw coordinates list all polynomial coefficients low to high degree:
// s1_0..s1_i, s2_0..s2_m, s3_0..s3_l (d+3 numbers, 2 gluing constraints).
// The chart basis is the canonical RREF basis of the constraint kernel,
// so chart coordinates are read off raw vectors at the basis pivots.
class SectionSpace {
  public:
    SectionSpace(const ChainCurve& c, const Field& f, Multidegree md);

    const ChainCurve& curve() const { return c_; }
    const Field& field() const { return f_; }
    Multidegree md() const { return md_; }
    std::size_t dim() const { return static_cast<std::size_t>(c_.d) + 1; }
    std::size_t raw_dim() const { return static_cast<std::size_t>(c_.d) + 3; }

    // (d+3) x (d+1): chart coordinates to raw coefficients.
    const Matrix& chart_to_raw() const { return chart_to_raw_; }
    // (d+1) x (d+3): reads chart coordinates off a glued raw vector.
    const Matrix& raw_to_chart() const { return raw_to_chart_; }

    // Offset of the coefficient block of component q (1, 2 or 3) and the
    // block length (degree bound + 1).
    std::size_t block_offset(int q) const;
    std::size_t block_len(int q) const;

    RowVec to_raw(const RowVec& chart) const { return chart_to_raw_.apply(chart); }
    RowVec to_chart(const RowVec& raw) const { return raw_to_chart_.apply(raw); }
    // Whether a raw coefficient vector satisfies both gluing constraints.
    bool is_glued(const RowVec& raw) const;

  private:
    ChainCurve c_;
    Field f_;
    Multidegree md_;
    Matrix chart_to_raw_;
    Matrix raw_to_chart_;
};

SectionSpace ambient(const ChainCurve& c, const Field& f, Multidegree md);

// Linear series on one component: a subspace of the degree-d polynomial
// space of X_q in monomial coordinates (ambient dimension d+1).
struct ComponentSeries {
    int q = 1;
    Subspace space;

    ComponentSeries(int which, const Subspace& s) : q(which), space(s) {}
};

// Restriction to component q followed by the degree-d inclusion: sends the
// glued chart of md to the degree-d monomial chart of X_q by multiplying
// with the appropriate power of the local coordinate (t^(d-i), u^i, v^(d-l)).
// Returns the (d+1) x (d+1) matrix.
Matrix alpha(const ChainCurve& c, const SectionSpace& ss, int q);

// Subspace of sections vanishing to order >= ord0 at 0 and >= ordInf at
// infinity inside a degree-(n) coefficient chart (ambient n+1).
Subspace twist(const Subspace& v, int ord0, int ordInf);

enum class NodeSide { at_zero, at_infinity };

// Strictly increasing vanishing orders of v at the chosen point; the list
// length equals dim v.
std::vector<int> vanishing_sequence(const Subspace& v, NodeSide side);

// Twist of a component series at its actual node points: for X1 only A
// exists (ordB must be 0), for X3 only B exists (ordA must be 0), and on
// X2 the node A sits at u = 0 and B at u = infinity.
Subspace twist_series(const ChainCurve& c, const ComponentSeries& v, int ordA,
                      int ordB);

// Vanishing sequence of a component series at node A or B ('A' or 'B').
std::vector<int> sequence_at_node(const ComponentSeries& v, char node);

// Sections of the glued chart whose polynomial parts vanish identically on
// every component listed in `components` (subset of {1,2,3}).
Subspace vanishing_subspace(const SectionSpace& ss,
                            const std::vector<int>& components);

}  // namespace chainlls
