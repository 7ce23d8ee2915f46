// Column-by-column construction, verification, replay and enumeration of
// exact extensions. The builder asserts every defining equality as it goes:
// a violation means a bug in the construction, so those checks throw
// InternalError instead of being reported.
#include "chainlls/extension.hpp"

#include <set>
#include <string>
#include <utility>

#include "chainlls/rng.hpp"

namespace chainlls {

namespace {

const std::vector<int>& complement_components(int q) {
    static const std::vector<int> c1{2, 3}, c2{1, 3}, c3{1, 2};
    switch (q) {
        case 1: return c1;
        case 2: return c2;
        case 3: return c3;
        default: throw InternalError("component index out of range");
    }
}

// Sections of v (a subspace of the glued chart at md) whose polynomial
// parts vanish identically on every listed component.
Subspace part(const RefinedSeries& h, Multidegree md, const Subspace& v,
              const std::vector<int>& components) {
    const SectionSpace ss = ambient(h.curve, h.field, md);
    return subspace_intersect(v, vanishing_subspace(ss, components));
}

// Shared state of the strategy-driven build and the extraction replay.
// Cells are produced in a fixed order: column 0 bottom-up, then each
// column i = 1..d-1 with l descending from d-i to 0, then the (d,0) corner.
struct Builder {
    const RefinedSeries& h;
    const KernelGrid& kg;
    TransferCache tc;
    GridCells cells;
    std::vector<StepTrace> traces;

    Builder(const RefinedSeries& series, const KernelGrid& kernels)
        : h(series), kg(kernels), tc(series.curve, series.field) {}

    void require(bool ok, Multidegree md, const std::string& what) const {
        if (!ok)
            throw InternalError("construction invariant failed at " +
                                md_str(h.curve, md) + ": " + what);
    }

    const Subspace& cell(Multidegree md) const {
        auto it = cells.find(md);
        if (it == cells.end())
            throw InternalError("cell " + md_str(h.curve, md) +
                                " used before it was built");
        return it->second;
    }

    Subspace image(Multidegree src, int q, Direction dir,
                   const Subspace& v) {
        return map_image(tc.phi(src, q, dir).matrix, v);
    }

    // The two defining equalities of the edge src --q--> q_shift(src):
    // the down image fills the vanishing part of the target on the moved
    // component, the up image fills the complement vanishing part of the
    // source.
    void check_edge(Multidegree src, int q) {
        const auto tgt = q_shift(h.curve, src, q);
        require(tgt.has_value(), src, "edge leaves the grid");
        const Subspace down_img = image(src, q, Direction::down, cell(src));
        require(down_img == part(h, *tgt, cell(*tgt), {q}), src,
                "down image along component " + std::to_string(q) +
                    " does not fill the vanishing part of the target");
        const Subspace up_img = image(*tgt, q, Direction::up, cell(*tgt));
        require(up_img == part(h, src, cell(src), complement_components(q)),
                src,
                "up image along component " + std::to_string(q) +
                    " does not fill the complement vanishing part of the "
                    "source");
    }

    void take_column_zero() {
        for (int l = 0; l <= h.curve.d; ++l) {
            const Multidegree md{0, l};
            const Subspace& k = kg.at(md);
            require(static_cast<int>(k.dim()) == h.r + 1, md,
                    "column zero kernel cell does not have dimension r+1");
            cells.emplace(md, k);
            traces.push_back(StepTrace{md, "column0", 0, {}, {}});
        }
    }

    // Everything about one cell that does not depend on the choices: the
    // case label, the forced base, and the number beta of free directions.
    struct CellFrame {
        Multidegree md;
        Multidegree left;  // (i-1, l), sharing the component-1 edge
        std::string step;
        Subspace x1part;   // left cell's part vanishing on X1
        Subspace dsum;     // parts supported on X2 alone and X3 alone
        Subspace base;
        int beta = 0;
    };

    CellFrame frame(Multidegree md) {
        const int i = md.i, l = md.l, d = h.curve.d;
        const Multidegree left{i - 1, l};
        const Subspace& vleft = cell(left);
        CellFrame f{md,
                    left,
                    "",
                    part(h, left, vleft, {1}),
                    Subspace::zero(h.field, vleft.ambient_dim()),
                    Subspace::zero(h.field, vleft.ambient_dim()),
                    0};
        const Subspace only2 = part(h, left, vleft, {1, 3});
        const Subspace only3 = part(h, left, vleft, {1, 2});
        require(subspace_intersect(only2, only3).is_zero(), left,
                "the one-component parts of the left cell are not "
                "independent");
        f.dsum = subspace_sum(only2, only3);
        f.beta = static_cast<int>(f.x1part.dim()) -
                 static_cast<int>(f.dsum.dim());
        require(f.beta >= 0, md, "negative number of free directions");
        if (i + l == d) {
            f.step = "step1";
            require(only2.is_zero(), left,
                    "top diagonal cell expects no part supported on the "
                    "middle component");
            const Multidegree diag{i - 1, l - 1};
            f.base = image(diag, 2, Direction::down, cell(diag));
        } else if (l >= 1) {
            f.step = "step2";
            const Multidegree diag{i - 1, l - 1};
            const Multidegree above{i, l + 1};
            const Subspace from_diag =
                image(diag, 2, Direction::down, cell(diag));
            const Subspace from_above =
                image(above, 3, Direction::down, cell(above));
            require(subspace_intersect(from_diag, from_above) ==
                        image(left, 1, Direction::up, vleft),
                    md,
                    "overlap of the two base images differs from the up "
                    "image of the left cell");
            f.base = subspace_sum(from_diag, from_above);
        } else {
            f.step = "step3";
            require(only3.is_zero(), left,
                    "bottom row cell expects no part supported on the last "
                    "component");
            const Multidegree above{i, 1};
            f.base = image(above, 3, Direction::down, cell(above));
        }
        require(static_cast<int>(f.base.dim()) == h.r + 1 - f.beta, md,
                "base dimension does not match the free direction count");
        return f;
    }

    // Common tail of build and replay: form the cell, assert its defining
    // properties, record it with its trace, and check all edges behind it.
    void finish(const CellFrame& f, std::vector<RowVec> us,
                std::vector<RowVec> vs) {
        const Subspace& k = kg.at(f.md);
        Subspace v = f.base;
        if (!vs.empty())
            v = subspace_sum(
                f.base, Subspace::span(Matrix::from_rows(
                            h.field, vs, static_cast<std::size_t>(h.curve.d) + 1)));
        require(static_cast<int>(v.dim()) == h.r + 1, f.md,
                "built cell does not have dimension r+1");
        require(k.contains(v), f.md, "built cell leaves its kernel cell");
        cells.emplace(f.md, v);
        traces.push_back(
            StepTrace{f.md, f.step, f.beta, std::move(us), std::move(vs)});
        check_edge(f.md, 1);
        if (f.step != "step3") check_edge({f.md.i - 1, f.md.l - 1}, 2);
        if (f.step != "step1") check_edge({f.md.i, f.md.l + 1}, 3);
    }

    // Strategy-driven cell: pick u's completing the one-component parts
    // inside the left cell's X1-vanishing part, then lift each through the
    // component-1 down map without leaving the kernel cell. The lift is
    // where distinct exact extensions branch; the deterministic strategy
    // zeroes all free coordinates, the seeded one shifts by a random
    // kernel element.
    void build_cell(Multidegree md, const ChoiceStrategy& strategy) {
        const CellFrame f = frame(md);
        std::vector<RowVec> us = complement_basis(f.dsum, f.x1part);
        require(static_cast<int>(us.size()) == f.beta, md,
                "free direction count mismatch");
        const Subspace& k = kg.at(md);
        const Matrix bt = k.basis().transpose();
        const Matrix restricted = tc.phi(md, 1, Direction::down).matrix * bt;
        Rng rng(Rng::derive(strategy.seed, static_cast<std::uint64_t>(md.i),
                            static_cast<std::uint64_t>(md.l), 0));
        std::vector<RowVec> vs;
        for (const RowVec& u : us) {
            const RowVec x = strategy.mode == ChoiceStrategy::Mode::seeded
                                 ? lift_seeded(restricted, u, rng)
                                 : lift(restricted, u);
            vs.push_back(bt.apply(x));
        }
        finish(f, std::move(us), std::move(vs));
    }

    // Extraction-driven cell: read the choices off the given cell instead
    // of making them. The lift vectors are a complement of the base inside
    // the given cell and the u's are their down images.
    void replay_cell(Multidegree md, const Subspace& given) {
        const CellFrame f = frame(md);
        require(given.contains(f.base), md,
                "replayed cell does not contain its base");
        std::vector<RowVec> vs = complement_basis(f.base, given);
        require(static_cast<int>(vs.size()) == f.beta, md,
                "extracted choice count mismatch");
        const Matrix& down1 = tc.phi(md, 1, Direction::down).matrix;
        std::vector<RowVec> us;
        Subspace spanned = f.dsum;
        for (const RowVec& v : vs) {
            RowVec u = down1.apply(v);
            require(f.x1part.contains(u), md,
                    "extracted choice does not map into the X1-vanishing "
                    "part of the left cell");
            us.push_back(std::move(u));
        }
        if (!us.empty())
            spanned = subspace_sum(
                spanned, Subspace::span(Matrix::from_rows(
                             h.field, us,
                             static_cast<std::size_t>(h.curve.d) + 1)));
        require(spanned == f.x1part, md,
                "extracted choices do not complete the one-component parts");
        finish(f, std::move(us), std::move(vs));
        require(cell(md) == given, md,
                "replayed cell differs from the grid cell");
    }

    // The (d,0) corner is forced to the kernel cell; by then the whole
    // bottom row agrees with the kernel cells, the column-0 vertical edges
    // and the final horizontal edge are exact, and the three corners carry
    // the embedded input series.
    void closure() {
        const int d = h.curve.d;
        const Multidegree corner{d, 0};
        const Subspace& k = kg.at(corner);
        require(static_cast<int>(k.dim()) == h.r + 1, corner,
                "kernel corner cell does not have dimension r+1");
        cells.emplace(corner, k);
        traces.push_back(StepTrace{corner, "closure", 0, {}, {}});
        check_edge(corner, 1);
        for (int i = 1; i < d; ++i)
            require(cell({i, 0}) == kg.at({i, 0}), {i, 0},
                    "bottom row cell differs from its kernel cell");
        for (int l = 0; l < d; ++l) check_edge({0, l + 1}, 3);
        for (int q = 1; q <= 3; ++q)
            require(cell(extreme_md(h.curve, q)) == embed_extreme(h, q),
                    extreme_md(h.curve, q),
                    "corner cell is not the embedded input series");
    }

    ExtensionGrid run(const ChoiceStrategy& strategy) {
        take_column_zero();
        for (int i = 1; i < h.curve.d; ++i)
            for (int l = h.curve.d - i; l >= 0; --l)
                build_cell({i, l}, strategy);
        closure();
        return ExtensionGrid(h, std::move(cells), std::move(traces));
    }

    ExtensionGrid rerun(const GridCells& given) {
        take_column_zero();
        for (int l = 0; l <= h.curve.d; ++l)
            require(cell({0, l}) == given.at({0, l}), {0, l},
                    "column zero cell differs from the grid cell");
        for (int i = 1; i < h.curve.d; ++i)
            for (int l = h.curve.d - i; l >= 0; --l)
                replay_cell({i, l}, given.at({i, l}));
        closure();
        require(cell({h.curve.d, 0}) == given.at({h.curve.d, 0}),
                {h.curve.d, 0}, "corner cell differs from the grid cell");
        return ExtensionGrid(h, std::move(cells), std::move(traces));
    }
};

// All k-dimensional subspaces of F_p^n, one canonical reduced row-echelon
// matrix each: choose the pivot columns, then run an odometer over the
// free entries (right of each pivot, outside pivot columns).
void pivot_combinations(int n, int k, int start, std::vector<int>& cur,
                        std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int c = start; c <= n - (k - static_cast<int>(cur.size())); ++c) {
        cur.push_back(c);
        pivot_combinations(n, k, c + 1, cur, out);
        cur.pop_back();
    }
}

std::vector<Matrix> all_subspace_rrefs(const Field& f, int n, int k) {
    std::vector<Matrix> out;
    if (k < 0 || k > n) return out;
    if (k == 0) {
        out.push_back(Matrix(f, 0, static_cast<std::size_t>(n)));
        return out;
    }
    std::vector<std::vector<int>> pivot_sets;
    std::vector<int> cur;
    pivot_combinations(n, k, 0, cur, pivot_sets);
    for (const auto& piv : pivot_sets) {
        const std::set<int> pivset(piv.begin(), piv.end());
        std::vector<std::pair<int, int>> free_pos;
        for (int r = 0; r < k; ++r)
            for (int c = piv[static_cast<std::size_t>(r)] + 1; c < n; ++c)
                if (!pivset.count(c)) free_pos.emplace_back(r, c);
        std::vector<std::int64_t> vals(free_pos.size(), 0);
        while (true) {
            Matrix m(f, static_cast<std::size_t>(k),
                     static_cast<std::size_t>(n));
            for (int r = 0; r < k; ++r)
                m.at(static_cast<std::size_t>(r),
                     static_cast<std::size_t>(piv[static_cast<std::size_t>(r)])) =
                    Scalar::one(f);
            for (std::size_t idx = 0; idx < free_pos.size(); ++idx)
                m.at(static_cast<std::size_t>(free_pos[idx].first),
                     static_cast<std::size_t>(free_pos[idx].second)) =
                    Scalar(f, static_cast<long long>(vals[idx]));
            out.push_back(std::move(m));
            std::size_t pos = 0;
            while (pos < vals.size() && ++vals[pos] == f.p) {
                vals[pos] = 0;
                ++pos;
            }
            if (pos == vals.size()) break;
        }
    }
    return out;
}

// Depth-first enumeration over the build order. A cell candidate is any
// subspace of the kernel cell of dimension r+1 containing the down images
// of the already-chosen neighbours; a candidate survives only if every
// edge to an already-chosen neighbour satisfies both defining equalities,
// so completed grids are exactly the exact extensions.
struct Enumerator {
    const RefinedSeries& h;
    const KernelGrid& kg;
    TransferCache tc;
    std::vector<Multidegree> order;
    std::size_t cap;
    GridCells current;
    std::vector<GridCells> results;

    Enumerator(const RefinedSeries& series, const KernelGrid& kernels,
               std::size_t max_grids)
        : h(series), kg(kernels), tc(series.curve, series.field),
          cap(max_grids) {
        const int d = h.curve.d;
        for (int l = 0; l <= d; ++l) order.push_back({0, l});
        for (int i = 1; i < d; ++i)
            for (int l = d - i; l >= 0; --l) order.push_back({i, l});
        order.push_back({d, 0});
    }

    bool full() const { return cap > 0 && results.size() >= cap; }

    bool edges_ok(Multidegree md, const Subspace& w) {
        for (int q = 1; q <= 3; ++q) {
            if (const auto tgt = q_shift(h.curve, md, q);
                tgt && current.count(*tgt)) {
                const Subspace& other = current.at(*tgt);
                if (map_image(tc.phi(md, q, Direction::down).matrix, w) !=
                    part(h, *tgt, other, {q}))
                    return false;
                if (map_image(tc.phi(*tgt, q, Direction::up).matrix, other) !=
                    part(h, md, w, complement_components(q)))
                    return false;
            }
            if (const auto src = q_unshift(h.curve, md, q);
                src && current.count(*src)) {
                const Subspace& other = current.at(*src);
                if (map_image(tc.phi(*src, q, Direction::down).matrix,
                              other) != part(h, md, w, {q}))
                    return false;
                if (map_image(tc.phi(md, q, Direction::up).matrix, w) !=
                    part(h, *src, other, complement_components(q)))
                    return false;
            }
        }
        return true;
    }

    std::vector<Subspace> candidates(Multidegree md) {
        const Subspace& k = kg.at(md);
        const int r1 = h.r + 1;
        if (md.i == 0 || md == Multidegree{h.curve.d, 0}) {
            if (static_cast<int>(k.dim()) != r1)
                throw InternalError(
                    "forced kernel cell does not have dimension r+1 at " +
                    md_str(h.curve, md));
            return {k};
        }
        Subspace base = Subspace::zero(h.field, k.ambient_dim());
        for (int q = 1; q <= 3; ++q)
            if (const auto src = q_unshift(h.curve, md, q);
                src && current.count(*src))
                base = subspace_sum(
                    base, map_image(tc.phi(*src, q, Direction::down).matrix,
                                    current.at(*src)));
        if (!k.contains(base)) return {};
        const int beta = r1 - static_cast<int>(base.dim());
        if (beta < 0) return {};
        if (beta == 0) return {base};
        const std::vector<RowVec> comp = complement_basis(base, k);
        const int n = static_cast<int>(comp.size());
        if (beta > n) return {};
        std::vector<Subspace> out;
        for (const Matrix& qm : all_subspace_rrefs(h.field, n, beta)) {
            std::vector<RowVec> rows;
            for (std::size_t r = 0; r < qm.rows(); ++r) {
                RowVec v = zero_vec(h.field, k.ambient_dim());
                for (int c = 0; c < n; ++c)
                    v = add(v, scale(qm.at(r, static_cast<std::size_t>(c)),
                                     comp[static_cast<std::size_t>(c)]));
                rows.push_back(std::move(v));
            }
            out.push_back(subspace_sum(
                base, Subspace::span(Matrix::from_rows(h.field, rows,
                                                       k.ambient_dim()))));
        }
        return out;
    }

    void dfs(std::size_t idx) {
        if (full()) return;
        if (idx == order.size()) {
            results.push_back(current);
            return;
        }
        const Multidegree md = order[idx];
        for (const Subspace& w : candidates(md)) {
            if (full()) return;
            if (!edges_ok(md, w)) continue;
            current.emplace(md, w);
            dfs(idx + 1);
            current.erase(md);
        }
    }
};

}  // namespace

const Subspace& ExtensionGrid::at(Multidegree md) const {
    auto it = cells_.find(md);
    if (it == cells_.end())
        throw Error("extension grid has no cell at " + md_str(h_.curve, md));
    return it->second;
}

std::vector<Subspace> init_column_zero(const KernelGrid& kg) {
    const RefinedSeries& h = kg.series();
    std::vector<Subspace> out;
    for (int l = 0; l <= h.curve.d; ++l) {
        const Subspace& k = kg.at({0, l});
        if (static_cast<int>(k.dim()) != h.r + 1)
            throw InternalError(
                "column zero kernel cell does not have dimension r+1 at " +
                md_str(h.curve, {0, l}));
        out.push_back(k);
    }
    return out;
}

ExtensionGrid build_extension(const RefinedSeries& h, const KernelGrid& kg,
                              const ChoiceStrategy& strategy) {
    Builder b(h, kg);
    return b.run(strategy);
}

ExtensionGrid build_extension(const RefinedSeries& h,
                              const ChoiceStrategy& strategy) {
    const KernelGrid kg(h);
    return build_extension(h, kg, strategy);
}

CheckReport verify_exact(const RefinedSeries& h, const KernelGrid& kg,
                         const GridCells& cells) {
    CheckReport rep;
    rep.name = "exact_extension";
    const auto pts = grid_points(h.curve);
    bool complete = cells.size() == pts.size();
    for (const auto& md : pts) {
        const auto it = cells.find(md);
        complete = complete && it != cells.end() &&
                   it->second.ambient_dim() ==
                       static_cast<std::size_t>(h.curve.d) + 1 &&
                   it->second.field() == h.field;
    }
    rep.add(-1, -1, "grid_complete", complete,
            {{"cells", std::to_string(cells.size())},
             {"expected", std::to_string(pts.size())}});
    if (!complete) return rep;

    TransferCache tc(h.curve, h.field);
    for (const auto& md : pts) {
        const Subspace& v = cells.at(md);
        rep.add(md.i, md.l, "dim_r_plus_1",
                static_cast<int>(v.dim()) == h.r + 1,
                {{"dim", std::to_string(v.dim())}});
        rep.add(md.i, md.l, "inside_kernel", kg.at(md).contains(v));
        for (int q = 1; q <= 3; ++q) {
            const auto tgt = q_shift(h.curve, md, q);
            if (!tgt) continue;
            const Subspace down_img =
                map_image(tc.phi(md, q, Direction::down).matrix, v);
            rep.add(md.i, md.l, "down" + std::to_string(q) + "_image",
                    down_img == part(h, *tgt, cells.at(*tgt), {q}),
                    {{"target", md_str(h.curve, *tgt)}});
            const Subspace up_img = map_image(
                tc.phi(*tgt, q, Direction::up).matrix, cells.at(*tgt));
            rep.add(md.i, md.l, "up" + std::to_string(q) + "_image",
                    up_img == part(h, md, v, complement_components(q)),
                    {{"source", md_str(h.curve, *tgt)}});
        }
    }
    return rep;
}

CheckReport verify_exact(const ExtensionGrid& grid) {
    const KernelGrid kg(grid.series());
    return verify_exact(grid.series(), kg, grid.cells());
}

bool verify_extends(const RefinedSeries& h, const GridCells& cells) {
    for (int q = 1; q <= 3; ++q) {
        const Multidegree md = extreme_md(h.curve, q);
        const auto it = cells.find(md);
        if (it == cells.end()) return false;
        if (it->second != embed_extreme(h, q)) return false;
    }
    return true;
}

bool verify_extends(const ExtensionGrid& grid) {
    return verify_extends(grid.series(), grid.cells());
}

ExtensionGrid replay_extension(const GridCells& cells,
                               const RefinedSeries& h) {
    const KernelGrid kg(h);
    const CheckReport rep = verify_exact(h, kg, cells);
    if (!rep.all_pass()) {
        for (const auto& item : rep.items)
            if (!item.pass)
                throw Error("grid is not an exact extension: " + item.check +
                            " fails at (" + std::to_string(item.i) + "," +
                            std::to_string(item.l) + ")");
    }
    if (!verify_extends(h, cells))
        throw Error(
            "grid does not restrict to the input series at the corners");
    Builder b(h, kg);
    return b.rerun(cells);
}

std::vector<GridCells> enumerate_extensions(const RefinedSeries& h,
                                            std::size_t max_grids) {
    if (!h.field.is_prime_field() || h.field.p > 5)
        throw Error("exhaustive enumeration needs a prime field with p <= 5");
    if (h.curve.d > 4)
        throw Error("exhaustive enumeration needs total degree d <= 4");
    const KernelGrid kg(h);
    Enumerator e(h, kg, max_grids);
    e.dfs(0);
    return std::move(e.results);
}

}  // namespace chainlls
