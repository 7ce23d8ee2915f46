#include "chainlls/instance.hpp"

#include <algorithm>

#include "chainlls/rng.hpp"
#include "chainlls/transfer.hpp"

namespace chainlls {

namespace {

void check_sequence(const std::string& name, const std::vector<int>& s, int d,
                    int r) {
    if (static_cast<int>(s.size()) != r + 1) {
        throw Error("sequence " + name + " must have length " + std::to_string(r + 1));
    }
    for (std::size_t j = 0; j < s.size(); ++j) {
        if (s[j] < 0 || s[j] > d) {
            throw Error("sequence " + name + " entry " + std::to_string(j) +
                        " out of range [0," + std::to_string(d) + "]");
        }
        if (j > 0 && s[j] <= s[j - 1]) {
            throw Error("sequence " + name + " must be strictly increasing at index " +
                        std::to_string(j));
        }
    }
}

}  // namespace

SequenceSpec::SequenceSpec(int degree, int rank, std::vector<int> seq_b,
                           std::vector<int> seq_bp)
    : d(degree), r(rank), b(std::move(seq_b)), bp(std::move(seq_bp)) {
    if (d < 1) throw Error("degree must be at least 1");
    if (r < 0) throw Error("rank must be nonnegative");
    check_sequence("b", b, d, r);
    check_sequence("b'", bp, d, r);
    for (int j = 0; j <= r; ++j) {
        for (int k = 0; j + k <= r; ++k) {
            if (b[j] + bp[k] > d) {
                throw Error("sequences not complementary: b[" + std::to_string(j) +
                            "] + b'[" + std::to_string(k) + "] = " +
                            std::to_string(b[j] + bp[k]) + " > " + std::to_string(d));
            }
        }
    }
}

std::vector<int> SequenceSpec::a() const {
    std::vector<int> out(b.size());
    for (std::size_t j = 0; j < b.size(); ++j) out[j] = d - b[b.size() - 1 - j];
    return out;
}

std::vector<int> SequenceSpec::c() const {
    std::vector<int> out(bp.size());
    for (std::size_t k = 0; k < bp.size(); ++k) out[k] = d - bp[bp.size() - 1 - k];
    return out;
}

namespace {

Subspace monomial_span(const Field& f, int d, const std::vector<int>& exps) {
    std::vector<RowVec> rows;
    for (int e : exps) {
        RowVec v = zero_vec(f, static_cast<std::size_t>(d) + 1);
        v[static_cast<std::size_t>(e)] = Scalar::one(f);
        rows.push_back(v);
    }
    return Subspace::span(Matrix::from_rows(f, rows, static_cast<std::size_t>(d) + 1));
}

}  // namespace

RefinedSeries monomial_instance(const SequenceSpec& spec, const Field& f,
                                const std::vector<int>& exponents) {
    if (exponents.size() != spec.b.size()) {
        throw Error("exponent list must have length " +
                    std::to_string(spec.b.size()));
    }
    for (std::size_t j = 0; j < exponents.size(); ++j) {
        if (exponents[j] != spec.b[j]) {
            throw Error("exponent mismatch at index " + std::to_string(j) +
                        ": got " + std::to_string(exponents[j]) + ", spec wants " +
                        std::to_string(spec.b[j]));
        }
    }
    // Orders at B of span{u^(m_j)} are d - m_j in decreasing j order; they
    // must match the requested b'.
    std::vector<int> induced_bp(exponents.size());
    for (std::size_t j = 0; j < exponents.size(); ++j) {
        induced_bp[j] = spec.d - exponents[exponents.size() - 1 - j];
    }
    if (induced_bp != spec.bp) {
        throw Error("monomial exponents induce different orders at the second "
                    "node than the spec requests");
    }

    const ChainCurve curve(spec.d);
    return make_refined_series(curve, f, spec.r,
                               monomial_span(f, spec.d, spec.a()),
                               monomial_span(f, spec.d, spec.b),
                               monomial_span(f, spec.d, spec.c()));
}

namespace {

// Basis polynomial with prescribed lowest exponent `low`, highest exponent
// `high` (coefficient forced nonzero when high > low), and random small
// coefficients strictly in between.
RowVec banded_poly(const Field& f, int d, int low, int high, Rng& rng) {
    RowVec v = zero_vec(f, static_cast<std::size_t>(d) + 1);
    v[static_cast<std::size_t>(low)] = Scalar::one(f);
    if (high > low) {
        for (int e = low + 1; e < high; ++e) {
            v[static_cast<std::size_t>(e)] = rng.small_scalar(f);
        }
        v[static_cast<std::size_t>(high)] = rng.nonzero_small_scalar(f);
    }
    return v;
}

}  // namespace

RefinedSeries random_refined(const SequenceSpec& spec, const Field& f,
                             std::uint64_t seed) {
    const int d = spec.d;
    const int r = spec.r;
    const std::vector<int> a = spec.a();
    const std::vector<int> c = spec.c();

    // Middle component: lowest term u^(b_j), top term forced at degree
    // d - bp_(r-j) so the orders at B come out exactly b'.
    std::vector<RowVec> v2_rows;
    for (int j = 0; j <= r; ++j) {
        Rng rng(Rng::derive(seed, 2, static_cast<std::uint64_t>(j), 0));
        const int top = d - spec.bp[static_cast<std::size_t>(r - j)];
        v2_rows.push_back(banded_poly(f, d, spec.b[static_cast<std::size_t>(j)], top, rng));
    }

    // Outer components only meet one node, so anything above the lowest
    // term is free.
    std::vector<RowVec> v1_rows, v3_rows;
    for (int j = 0; j <= r; ++j) {
        Rng rng(Rng::derive(seed, 1, static_cast<std::uint64_t>(j), 0));
        v1_rows.push_back(banded_poly(f, d, a[static_cast<std::size_t>(j)], d, rng));
    }
    for (int k = 0; k <= r; ++k) {
        Rng rng(Rng::derive(seed, 3, static_cast<std::uint64_t>(k), 0));
        v3_rows.push_back(banded_poly(f, d, c[static_cast<std::size_t>(k)], d, rng));
    }

    const std::size_t amb = static_cast<std::size_t>(d) + 1;
    const ChainCurve curve(d);
    return make_refined_series(curve, f, r,
                               Subspace::span(Matrix::from_rows(f, v1_rows, amb)),
                               Subspace::span(Matrix::from_rows(f, v2_rows, amb)),
                               Subspace::span(Matrix::from_rows(f, v3_rows, amb)));
}

namespace {

std::string seq_str(const std::vector<int>& s) {
    std::string out = "(";
    for (std::size_t j = 0; j < s.size(); ++j) {
        if (j > 0) out += ",";
        out += std::to_string(s[j]);
    }
    return out + ")";
}

}  // namespace

CheckReport validate(const RefinedSeries& h) {
    CheckReport report;
    report.name = "instance_validation";
    const int r = h.r;
    const int d = h.curve.d;

    for (const ComponentSeries* v : {&h.vx1, &h.vx2, &h.vx3}) {
        report.add(-1, -1, "dim_X" + std::to_string(v->q),
                   static_cast<int>(v->space.dim()) == r + 1,
                   {{"dim", std::to_string(v->space.dim())},
                    {"expected", std::to_string(r + 1)}});
    }

    const bool dims_ok = report.all_pass();
    if (dims_ok) {
        // Strict refinedness: complementary orders sum to d at both nodes.
        for (int j = 0; j <= r; ++j) {
            const int sum_a = h.a[static_cast<std::size_t>(j)] +
                              h.b[static_cast<std::size_t>(r - j)];
            report.add(-1, -1, "refined_at_A_index_" + std::to_string(j), sum_a == d,
                       {{"a", std::to_string(h.a[static_cast<std::size_t>(j)])},
                        {"b", std::to_string(h.b[static_cast<std::size_t>(r - j)])},
                        {"sum", std::to_string(sum_a)},
                        {"d", std::to_string(d)}});
        }
        for (int k = 0; k <= r; ++k) {
            const int sum_b = h.bp[static_cast<std::size_t>(k)] +
                              h.c[static_cast<std::size_t>(r - k)];
            report.add(-1, -1, "refined_at_B_index_" + std::to_string(k), sum_b == d,
                       {{"b'", std::to_string(h.bp[static_cast<std::size_t>(k)])},
                        {"c", std::to_string(h.c[static_cast<std::size_t>(r - k)])},
                        {"sum", std::to_string(sum_b)},
                        {"d", std::to_string(d)}});
        }
        report.add(-1, -1, "sequences", true,
                   {{"a", seq_str(h.a)},
                    {"b", seq_str(h.b)},
                    {"b'", seq_str(h.bp)},
                    {"c", seq_str(h.c)}});
    }

    if (report.all_pass()) {
        // Composite transfer containments between the extreme spaces along
        // the boundary of the grid, all six ordered pairs.
        const std::size_t steps = static_cast<std::size_t>(d);
        const std::vector<PathStep> row_down(steps, PathStep{1, Direction::down});
        const std::vector<PathStep> row_up(steps, PathStep{1, Direction::up});
        const std::vector<PathStep> col_down(steps, PathStep{3, Direction::down});
        const std::vector<PathStep> col_up(steps, PathStep{3, Direction::up});
        auto join = [](std::vector<PathStep> x, const std::vector<PathStep>& y) {
            x.insert(x.end(), y.begin(), y.end());
            return x;
        };

        struct Leg {
            int from, to;
            std::vector<PathStep> path;
        };
        const std::vector<Leg> legs = {
            {1, 2, row_down},          {2, 1, row_up},
            {2, 3, col_up},            {3, 2, col_down},
            {1, 3, join(row_down, col_up)}, {3, 1, join(col_down, row_up)},
        };
        for (const Leg& leg : legs) {
            const TransferMap t =
                composite(h.curve, h.field, extreme_md(h.curve, leg.from), leg.path);
            if (t.target != extreme_md(h.curve, leg.to)) {
                throw InternalError("boundary path ends at the wrong corner");
            }
            const Subspace img = map_image(t.matrix, embed_extreme(h, leg.from));
            const bool ok = embed_extreme(h, leg.to).contains(img);
            report.add(-1, -1,
                       "extreme_linking_X" + std::to_string(leg.from) + "_to_X" +
                           std::to_string(leg.to),
                       ok, {{"image_dim", std::to_string(img.dim())}});
        }
    }

    return report;
}

}  // namespace chainlls
