#include "chainlls/transfer.hpp"

namespace chainlls {

std::optional<Multidegree> q_shift(const ChainCurve& c, Multidegree md, int q) {
    require_valid(c, md);
    Multidegree out = md;
    switch (q) {
        case 1: out.i -= 1; break;                 // (i-1, m+1, l)
        case 2: out.i += 1; out.l += 1; break;     // (i+1, m-2, l+1)
        case 3: out.l -= 1; break;                 // (i, m+1, l-1)
        default: throw InternalError("component index must be 1, 2 or 3");
    }
    if (!valid_multidegree(c, out)) return std::nullopt;
    return out;
}

std::optional<Multidegree> q_unshift(const ChainCurve& c, Multidegree md, int q) {
    require_valid(c, md);
    Multidegree out = md;
    switch (q) {
        case 1: out.i += 1; break;
        case 2: out.i -= 1; out.l -= 1; break;
        case 3: out.l += 1; break;
        default: throw InternalError("component index must be 1, 2 or 3");
    }
    if (!valid_multidegree(c, out)) return std::nullopt;
    return out;
}

namespace {

// Copies block `q` of src into block `q` of tgt with the coefficient shift
// given by `shift` (multiplication by the shift-th power of the local
// coordinate). Bounds are checked so a mistaken shift throws.
void copy_block(Matrix& raw_map, const SectionSpace& tgt, const SectionSpace& src,
                int q, std::size_t shift) {
    for (std::size_t k = 0; k < src.block_len(q); ++k) {
        const std::size_t row = tgt.block_offset(q) + shift + k;
        if (shift + k >= tgt.block_len(q)) {
            throw InternalError("transfer block overflow on component " +
                                std::to_string(q));
        }
        raw_map.at(row, src.block_offset(q) + k) = Scalar::one(src.field());
    }
}

}  // namespace

TransferMap phi(const ChainCurve& c, const Field& f, Multidegree src, int q,
                Direction dir) {
    const std::optional<Multidegree> tgt_opt =
        dir == Direction::down ? q_shift(c, src, q) : q_unshift(c, src, q);
    if (!tgt_opt) {
        throw Error("transfer map of component " + std::to_string(q) + " from " +
                    md_str(c, src) + " leaves the grid");
    }
    const Multidegree tgt = *tgt_opt;
    const SectionSpace s_src = ambient(c, f, src);
    const SectionSpace s_tgt = ambient(c, f, tgt);

    Matrix raw_map(f, s_tgt.raw_dim(), s_src.raw_dim());
    if (dir == Direction::down) {
        switch (q) {
            case 1:
                // (s1, s2, s3) -> (0, u s2, s3): X1 part dies, X2 gains a
                // zero at A, X3 untouched.
                copy_block(raw_map, s_tgt, s_src, 2, 1);
                copy_block(raw_map, s_tgt, s_src, 3, 0);
                break;
            case 2:
                // (s1, s2, s3) -> (t s1, 0, v s3).
                copy_block(raw_map, s_tgt, s_src, 1, 1);
                copy_block(raw_map, s_tgt, s_src, 3, 1);
                break;
            case 3:
                // (s1, s2, s3) -> (s1, s2 seen in the larger chart, 0):
                // the degree bound at B grows, coefficients are unchanged.
                copy_block(raw_map, s_tgt, s_src, 1, 0);
                copy_block(raw_map, s_tgt, s_src, 2, 0);
                break;
            default:
                throw InternalError("component index must be 1, 2 or 3");
        }
    } else {
        // Up maps restrict to X_q and include, multiplying by the node
        // coordinates of the nodes X_q shares with its complement.
        switch (q) {
            case 1: copy_block(raw_map, s_tgt, s_src, 1, 1); break;  // t s1
            case 2: copy_block(raw_map, s_tgt, s_src, 2, 1); break;  // u s2
            case 3: copy_block(raw_map, s_tgt, s_src, 3, 1); break;  // v s3
            default: throw InternalError("component index must be 1, 2 or 3");
        }
    }

    const Matrix chart = s_tgt.raw_to_chart() * raw_map * s_src.chart_to_raw();

    // The raw map must land in glued vectors, otherwise the chart
    // conjugation would silently discard information.
    if (s_tgt.chart_to_raw() * chart != raw_map * s_src.chart_to_raw()) {
        throw InternalError("transfer map does not preserve gluing at " +
                            md_str(c, src) + " q=" + std::to_string(q));
    }
    return TransferMap(src, tgt, q, dir, chart);
}

TransferMap composite(const ChainCurve& c, const Field& f, Multidegree start,
                      const std::vector<PathStep>& path) {
    if (path.empty()) {
        return TransferMap(start, start, 0, Direction::down,
                           Matrix::identity(f, static_cast<std::size_t>(c.d) + 1));
    }
    Multidegree at = start;
    Matrix acc = Matrix::identity(f, static_cast<std::size_t>(c.d) + 1);
    for (const PathStep& step : path) {
        const TransferMap leg = phi(c, f, at, step.q, step.dir);
        acc = leg.matrix * acc;
        at = leg.target;
    }
    return TransferMap(start, at, 0, Direction::down, acc);
}

const TransferMap& TransferCache::phi(Multidegree src, int q, Direction dir) {
    const auto key = std::make_tuple(src.i, src.l, q, dir == Direction::down ? 0 : 1);
    auto it = memo_.find(key);
    if (it == memo_.end()) {
        it = memo_.emplace(key, chainlls::phi(c_, f_, src, q, dir)).first;
    }
    return it->second;
}

}  // namespace chainlls
