// Shared instance corpus for the acceptance suite: monomial series
// across degrees 1..10 and ranks 0..4, seeded random series, prime-field
// variants, and engineered families with unique and with non-unique
// extensions.
#pragma once

#include <string>
#include <vector>

#include "chainlls/instance.hpp"

namespace corpus {

using namespace chainlls;

inline Subspace poly_space(const Field& f, int d,
                           const std::vector<std::vector<long long>>& rows) {
    std::vector<RowVec> vecs;
    for (const auto& row : rows) {
        RowVec v = zero_vec(f, static_cast<std::size_t>(d) + 1);
        for (std::size_t k = 0; k < row.size(); ++k) v[k] = Scalar(f, row[k]);
        vecs.push_back(v);
    }
    return Subspace::span(
        Matrix::from_rows(f, vecs, static_cast<std::size_t>(d) + 1));
}

// Degree 2, rank 1, middle series span{u, 1 + u^2}.
inline RefinedSeries nonunique_d2(const Field& f) {
    const ChainCurve c(2);
    return make_refined_series(c, f, 1, poly_space(f, 2, {{0, 1}, {0, 0, 1}}),
                               poly_space(f, 2, {{0, 1}, {1, 0, 1}}),
                               poly_space(f, 2, {{0, 1}, {0, 0, 1}}));
}

// Degree 4, rank 1, middle series span{u^2, 1 + u^4}.
inline RefinedSeries nonunique_d4(const Field& f) {
    const ChainCurve c(4);
    return make_refined_series(
        c, f, 1, poly_space(f, 4, {{0, 0, 1}, {0, 0, 0, 0, 1}}),
        poly_space(f, 4, {{0, 0, 1}, {1, 0, 0, 0, 1}}),
        poly_space(f, 4, {{0, 0, 1}, {0, 0, 0, 0, 1}}));
}

// Degree 6, rank 2, middle series span{u^3, u^2 + u^4, 1 + u^6}.
inline RefinedSeries nonunique_d6(const Field& f) {
    const ChainCurve c(6);
    return make_refined_series(
        c, f, 2,
        poly_space(f, 6,
                   {{0, 0, 0, 1}, {0, 0, 0, 0, 1}, {0, 0, 0, 0, 0, 0, 1}}),
        poly_space(f, 6,
                   {{0, 0, 0, 1}, {0, 0, 1, 0, 1}, {1, 0, 0, 0, 0, 0, 1}}),
        poly_space(f, 6,
                   {{0, 0, 0, 1}, {0, 0, 0, 0, 1}, {0, 0, 0, 0, 0, 0, 1}}));
}

struct CorpusEntry {
    std::string name;
    RefinedSeries series;
    // Fixture family constructed to have multiple exact extensions; the
    // acceptance suite requires a two-grid witness on these.
    bool engineered_nonunique = false;
};

inline std::string int_list_tag(const std::vector<int>& xs) {
    std::string out;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        if (k > 0) out += ',';
        out += std::to_string(xs[k]);
    }
    return out;
}

inline std::vector<CorpusEntry> build_corpus() {
    const Field Q = Field::rationals();
    std::vector<CorpusEntry> out;

    const auto monomial = [&](int d, const std::vector<int>& m,
                              const Field& f) {
        std::vector<int> bp;
        for (auto it = m.rbegin(); it != m.rend(); ++it)
            bp.push_back(d - *it);
        const SequenceSpec spec(d, static_cast<int>(m.size()) - 1, m, bp);
        out.push_back({"monomial d=" + std::to_string(d) + " m=" +
                           int_list_tag(m) + " " + f.str(),
                       monomial_instance(spec, f, m), false});
    };
    const auto random = [&](int d, const std::vector<int>& b,
                            const std::vector<int>& bp, std::uint64_t seed,
                            const Field& f) {
        const SequenceSpec spec(d, static_cast<int>(b.size()) - 1, b, bp);
        out.push_back({"random d=" + std::to_string(d) + " b=" +
                           int_list_tag(b) + " bp=" + int_list_tag(bp) +
                           " seed=" + std::to_string(seed) + " " + f.str(),
                       random_refined(spec, f, seed), false});
    };

    // Monomial series over the rationals, degrees 1..10, ranks 0..4.
    monomial(1, {0}, Q);
    monomial(1, {1}, Q);
    monomial(1, {0, 1}, Q);
    monomial(2, {1}, Q);
    monomial(2, {0, 2}, Q);
    monomial(2, {0, 1}, Q);
    monomial(2, {1, 2}, Q);
    monomial(3, {0, 3}, Q);
    monomial(3, {1, 2}, Q);
    monomial(3, {0, 1, 3}, Q);
    monomial(4, {0, 4}, Q);
    monomial(4, {1, 3}, Q);
    monomial(4, {0, 2, 4}, Q);
    monomial(4, {0, 1, 3, 4}, Q);
    monomial(4, {0, 1, 2, 3, 4}, Q);
    monomial(5, {0, 2, 5}, Q);
    monomial(5, {1, 3, 5}, Q);
    monomial(5, {0, 1, 2, 4}, Q);
    monomial(6, {0, 3, 6}, Q);
    monomial(6, {0, 2, 4, 6}, Q);
    monomial(6, {0, 1, 3, 5, 6}, Q);
    monomial(7, {1, 4, 7}, Q);
    monomial(7, {0, 2, 5, 7}, Q);
    monomial(8, {1, 3, 5, 8}, Q);
    monomial(8, {0, 2, 4, 6, 8}, Q);
    monomial(9, {0, 4, 9}, Q);
    monomial(9, {0, 2, 4, 7, 9}, Q);
    monomial(10, {2, 8}, Q);
    monomial(10, {0, 3, 5, 7, 10}, Q);

    // Seeded random series over the rationals.
    random(2, {0}, {1}, 1, Q);
    random(3, {0, 2}, {0, 2}, 2, Q);
    random(3, {0, 2}, {0, 2}, 3, Q);
    random(4, {0, 2}, {1, 3}, 4, Q);
    random(4, {0, 2}, {1, 3}, 5, Q);
    random(4, {0, 1, 3}, {0, 2, 4}, 6, Q);
    random(5, {1, 3}, {0, 2}, 7, Q);
    random(5, {0, 1, 3}, {0, 1, 2}, 8, Q);
    random(6, {1, 3}, {0, 2}, 9, Q);
    random(6, {0, 2, 4}, {1, 2, 4}, 10, Q);
    random(6, {0, 1, 2, 4}, {0, 1, 2, 4}, 11, Q);
    random(7, {0, 3, 5}, {0, 2, 4}, 12, Q);
    random(7, {0, 2, 4, 6}, {0, 1, 3, 5}, 13, Q);
    random(8, {1, 4, 6}, {1, 3, 5}, 14, Q);
    random(8, {0, 1, 2, 3, 4}, {0, 1, 2, 3, 4}, 15, Q);
    random(9, {0, 2, 5, 7}, {0, 2, 4, 6}, 16, Q);
    random(10, {0, 2, 4, 6, 8}, {0, 2, 4, 6, 8}, 17, Q);

    // Prime-field variants.
    monomial(4, {0, 4}, Field::prime(5));
    monomial(3, {1, 2}, Field::prime(3));
    random(4, {0, 1, 3}, {0, 2, 4}, 18, Field::prime(13));
    random(5, {0, 2}, {1, 3}, 19, Field::prime(7));

    // Engineered families with more than one exact extension.
    out.push_back({"deep-double-vanishing d=2", nonunique_d2(Q), true});
    out.push_back({"deep-double-vanishing d=4", nonunique_d4(Q), true});
    out.push_back(
        {"deep-double-vanishing d=4 F_5", nonunique_d4(Field::prime(5)),
         true});
    out.push_back({"deep-double-vanishing d=6", nonunique_d6(Q), true});

    return out;
}

}  // namespace corpus
