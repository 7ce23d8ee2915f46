#include "chainlls/series.hpp"

#include <sstream>

#include "chainlls/instance.hpp"

namespace chainlls {

RefinedSeries::RefinedSeries(const ChainCurve& cu, const Field& f, int rank,
                             const ComponentSeries& v1, const ComponentSeries& v2,
                             const ComponentSeries& v3)
    : curve(cu), field(f), r(rank), vx1(v1), vx2(v2), vx3(v3) {
    if (rank < 0) throw Error("rank must be nonnegative");
    const std::size_t amb = static_cast<std::size_t>(cu.d) + 1;
    for (const ComponentSeries* v : {&vx1, &vx2, &vx3}) {
        if (v->space.ambient_dim() != amb) {
            throw Error("component space of X" + std::to_string(v->q) +
                        " must live in the degree-" + std::to_string(cu.d) +
                        " chart (ambient " + std::to_string(amb) + ")");
        }
        if (v->space.field() != f) {
            throw Error("component space field mismatch on X" + std::to_string(v->q));
        }
    }
    a = sequence_at_node(vx1, 'A');
    b = sequence_at_node(vx2, 'A');
    bp = sequence_at_node(vx2, 'B');
    c = sequence_at_node(vx3, 'B');
}

RefinedSeries make_refined_series(const ChainCurve& c, const Field& f, int r,
                                  const Subspace& v1, const Subspace& v2,
                                  const Subspace& v3) {
    RefinedSeries h(c, f, r, ComponentSeries(1, v1), ComponentSeries(2, v2),
                    ComponentSeries(3, v3));
    const CheckReport report = validate(h);
    if (!report.all_pass()) {
        std::ostringstream os;
        os << "series data is not a refined limit linear series:";
        for (const auto& item : report.items) {
            if (item.pass) continue;
            os << "\n  " << item.check;
            for (const auto& [k, v] : item.details) os << " " << k << "=" << v;
        }
        throw Error(os.str());
    }
    return h;
}

Multidegree extreme_md(const ChainCurve& c, int q) {
    switch (q) {
        case 1: return Multidegree{c.d, 0};
        case 2: return Multidegree{0, 0};
        case 3: return Multidegree{0, c.d};
        default: throw InternalError("component index must be 1, 2 or 3");
    }
}

Subspace embed_extreme(const RefinedSeries& h, int q) {
    const ChainCurve& c = h.curve;
    const SectionSpace ss = ambient(c, h.field, extreme_md(c, q));
    const ComponentSeries& v = q == 1 ? h.vx1 : q == 2 ? h.vx2 : h.vx3;
    const std::size_t n = static_cast<std::size_t>(c.d);

    std::vector<RowVec> chart_rows;
    for (std::size_t row = 0; row < v.space.dim(); ++row) {
        const RowVec p = v.space.basis().row(row);
        RowVec raw = zero_vec(h.field, ss.raw_dim());
        for (std::size_t k = 0; k <= n; ++k) {
            raw[ss.block_offset(q) + k] = p[k];
        }
        // The other two components are the constants matching node values.
        switch (q) {
            case 1:
                raw[ss.block_offset(2)] = p[0];
                raw[ss.block_offset(3)] = p[0];
                break;
            case 2:
                raw[ss.block_offset(1)] = p[0];
                raw[ss.block_offset(3)] = p[n];
                break;
            case 3:
                raw[ss.block_offset(1)] = p[0];
                raw[ss.block_offset(2)] = p[0];
                break;
            default:
                throw InternalError("component index must be 1, 2 or 3");
        }
        if (!ss.is_glued(raw)) {
            throw InternalError("extreme embedding produced a non-glued vector");
        }
        chart_rows.push_back(ss.to_chart(raw));
    }
    return Subspace::span(Matrix::from_rows(h.field, chart_rows, ss.dim()));
}

}  // namespace chainlls
