// Exact extension construction: forced column and corners, case labels and
// free-direction counts, strategy-driven builds, verification, extraction
// replay, and exhaustive enumeration over small prime fields.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "chainlls/extension.hpp"
#include "chainlls/instance.hpp"

using namespace chainlls;

namespace {

const Field Q = Field::rationals();

Subspace poly_space(const Field& f, int d,
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

// Degree 2, rank 1, middle series span{u, 1 + u^2}, monomial outer series.
RefinedSeries fixture_d2(const Field& f) {
    const ChainCurve c(2);
    return make_refined_series(c, f, 1, poly_space(f, 2, {{0, 1}, {0, 0, 1}}),
                               poly_space(f, 2, {{0, 1}, {1, 0, 1}}),
                               poly_space(f, 2, {{0, 1}, {0, 0, 1}}));
}

// Degree 4, rank 1, middle series span{u^2, 1 + u^4}, monomial outer series.
RefinedSeries fixture_d4(const Field& f) {
    const ChainCurve c(4);
    return make_refined_series(
        c, f, 1, poly_space(f, 4, {{0, 0, 1}, {0, 0, 0, 0, 1}}),
        poly_space(f, 4, {{0, 0, 1}, {1, 0, 0, 0, 1}}),
        poly_space(f, 4, {{0, 0, 1}, {0, 0, 0, 0, 1}}));
}

// Degree 4, rank 1, middle series span{1, u^4}: the fully monomial sibling
// of fixture_d4, with a unique exact extension.
RefinedSeries fixture_d4_adapt(const Field& f) {
    return monomial_instance(SequenceSpec(4, 1, {0, 4}, {0, 4}), f, {0, 4});
}

std::map<Multidegree, StepTrace> trace_map(const ExtensionGrid& g) {
    std::map<Multidegree, StepTrace> out;
    for (const StepTrace& t : g.traces()) out.emplace(t.md, t);
    return out;
}

void check_verifies(const RefinedSeries& h, const KernelGrid& kg,
                    const ExtensionGrid& g) {
    const CheckReport rep = verify_exact(h, kg, g.cells());
    for (const CheckItem& item : rep.items) {
        INFO("item ", item.check, " at (", item.i, ",", item.l, ")");
        CHECK(item.pass);
    }
    CHECK(verify_extends(h, g.cells()));
}

}  // namespace

TEST_CASE("column zero is the forced kernel column") {
    const RefinedSeries h = fixture_d2(Q);
    const KernelGrid kg(h);
    const std::vector<Subspace> col = init_column_zero(kg);
    REQUIRE(col.size() == 3);
    for (int l = 0; l <= 2; ++l) {
        CHECK(col[static_cast<std::size_t>(l)].dim() == 2);
        CHECK(col[static_cast<std::size_t>(l)] == kg.at({0, l}));
    }
    CHECK(col.front() == embed_extreme(h, 2));
    CHECK(col.back() == embed_extreme(h, 3));
}

TEST_CASE("deterministic build of the degree-2 fixture") {
    const RefinedSeries h = fixture_d2(Q);
    const KernelGrid kg(h);
    const ExtensionGrid g = build_extension(h, kg, ChoiceStrategy::deterministic());
    CHECK(g.cells().size() == 6);

    // Forced cells coincide with their kernel cells.
    for (const Multidegree md :
         {Multidegree{0, 0}, Multidegree{0, 1}, Multidegree{0, 2},
          Multidegree{1, 0}, Multidegree{2, 0}})
        CHECK(g.at(md) == kg.at(md));

    // The only roomy cell: a 2-dimensional choice inside the 3-dimensional
    // kernel cell.
    CHECK(g.at({1, 1}).dim() == 2);
    CHECK(kg.at({1, 1}).contains(g.at({1, 1})));
    CHECK(g.at({1, 1}) != kg.at({1, 1}));

    const auto traces = trace_map(g);
    REQUIRE(traces.size() == 6);
    CHECK(traces.at({0, 0}).step == "column0");
    CHECK(traces.at({0, 1}).step == "column0");
    CHECK(traces.at({0, 2}).step == "column0");
    CHECK(traces.at({1, 1}).step == "step1");
    CHECK(traces.at({1, 0}).step == "step3");
    CHECK(traces.at({2, 0}).step == "closure");
    CHECK(traces.at({1, 1}).beta == 1);
    CHECK(traces.at({1, 1}).us.size() == 1);
    CHECK(traces.at({1, 1}).vs.size() == 1);
    CHECK(traces.at({1, 0}).beta == 0);
    CHECK(traces.at({1, 0}).us.empty());

    check_verifies(h, kg, g);
    CHECK_THROWS_AS(g.at({2, 1}), Error);
}

TEST_CASE("builds are reproducible and seeded builds verify") {
    const RefinedSeries h = fixture_d2(Q);
    const KernelGrid kg(h);
    const ExtensionGrid det = build_extension(h, kg, ChoiceStrategy::deterministic());
    CHECK(det == build_extension(h, kg, ChoiceStrategy::deterministic()));
    CHECK(build_extension(h, kg, ChoiceStrategy::seeded(7)) ==
          build_extension(h, kg, ChoiceStrategy::seeded(7)));
    CHECK(build_extension(h, ChoiceStrategy::deterministic()) == det);

    // The choices only move the free directions: the forced parts of the
    // roomy cell agree across strategies.
    const SectionSpace ss = ambient(h.curve, Q, {1, 1});
    const Subspace det_x2 =
        subspace_intersect(det.at({1, 1}), vanishing_subspace(ss, {2}));
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const ExtensionGrid g = build_extension(h, kg, ChoiceStrategy::seeded(seed));
        check_verifies(h, kg, g);
        CHECK(subspace_intersect(g.at({1, 1}), vanishing_subspace(ss, {2})) ==
              det_x2);
        for (const Multidegree md :
             {Multidegree{0, 0}, Multidegree{0, 1}, Multidegree{0, 2},
              Multidegree{1, 0}, Multidegree{2, 0}})
            CHECK(g.at(md) == det.at(md));
    }
}

TEST_CASE("builds verify across instances") {
    std::vector<RefinedSeries> instances;
    instances.push_back(fixture_d2(Q));
    instances.push_back(fixture_d2(Field::prime(5)));
    instances.push_back(fixture_d4(Q));
    instances.push_back(fixture_d4_adapt(Q));
    instances.push_back(monomial_instance(SequenceSpec(1, 0, {0}, {1}), Q, {0}));
    instances.push_back(
        monomial_instance(SequenceSpec(3, 1, {0, 2}, {1, 3}), Q, {0, 2}));
    instances.push_back(monomial_instance(SequenceSpec(5, 2, {0, 2, 4}, {1, 3, 5}),
                                          Q, {0, 2, 4}));
    instances.push_back(
        random_refined(SequenceSpec(4, 2, {0, 1, 3}, {0, 2, 4}), Q, 11));
    instances.push_back(random_refined(SequenceSpec(4, 2, {0, 1, 3}, {0, 2, 4}),
                                       Field::prime(13), 11));
    instances.push_back(
        random_refined(SequenceSpec(6, 1, {1, 3}, {0, 2}), Q, 5));

    for (const RefinedSeries& h : instances) {
        INFO("degree ", h.curve.d, " rank ", h.r, " field ", h.field.str());
        const KernelGrid kg(h);
        const ExtensionGrid det = build_extension(h, kg, ChoiceStrategy::deterministic());
        check_verifies(h, kg, det);
        const ExtensionGrid seeded = build_extension(h, kg, ChoiceStrategy::seeded(5));
        check_verifies(h, kg, seeded);
        CHECK(replay_extension(det.cells(), h) == det);
        CHECK(replay_extension(seeded.cells(), h) == seeded);
    }
}

TEST_CASE("replay reproduces the cells and the step structure") {
    const RefinedSeries h = fixture_d4(Q);
    const ExtensionGrid g = build_extension(h, ChoiceStrategy::seeded(9));
    const ExtensionGrid replayed = replay_extension(g.cells(), h);
    CHECK(replayed == g);
    const auto orig = trace_map(g);
    const auto redo = trace_map(replayed);
    REQUIRE(orig.size() == redo.size());
    for (const auto& [md, t] : orig) {
        CHECK(redo.at(md).step == t.step);
        CHECK(redo.at(md).beta == t.beta);
    }
}

TEST_CASE("replay rejects corrupted grids") {
    const RefinedSeries h = fixture_d2(Q);
    const KernelGrid kg(h);
    const ExtensionGrid g = build_extension(h, kg, ChoiceStrategy::deterministic());

    // A cell of the wrong dimension.
    GridCells too_big = g.cells();
    too_big.insert_or_assign(Multidegree{1, 1}, kg.at({1, 1}));
    CHECK_THROWS_AS(replay_extension(too_big, h), Error);

    // A missing cell.
    GridCells missing = g.cells();
    missing.erase(Multidegree{1, 0});
    CHECK_THROWS_AS(replay_extension(missing, h), Error);

    // Two cells swapped: dimensions fine, every edge wrong.
    REQUIRE(g.at({1, 0}) != g.at({0, 1}));
    GridCells swapped = g.cells();
    swapped.insert_or_assign(Multidegree{1, 0}, g.at({0, 1}));
    swapped.insert_or_assign(Multidegree{0, 1}, g.at({1, 0}));
    CHECK_THROWS_AS(replay_extension(swapped, h), Error);
}

TEST_CASE("exhaustive enumeration over small prime fields") {
    const Field f5 = Field::prime(5);
    const Field f3 = Field::prime(3);

    // One branching cell with a one-dimensional choice: p distinct grids.
    const RefinedSeries d2_f5 = fixture_d2(f5);
    const auto grids_d2_f5 = enumerate_extensions(d2_f5, 0);
    CHECK(grids_d2_f5.size() == 5);
    CHECK(enumerate_extensions(fixture_d2(f3), 0).size() == 3);

    // Every enumerated grid is a verified exact extension and the builders
    // stay inside the enumerated set.
    const KernelGrid kg_d2(d2_f5);
    for (const GridCells& cells : grids_d2_f5) {
        CHECK(verify_exact(d2_f5, kg_d2, cells).all_pass());
        CHECK(verify_extends(d2_f5, cells));
    }
    const auto in_set = [&](const GridCells& cells) {
        return std::find(grids_d2_f5.begin(), grids_d2_f5.end(), cells) !=
               grids_d2_f5.end();
    };
    CHECK(in_set(build_extension(d2_f5, ChoiceStrategy::deterministic()).cells()));
    for (std::uint64_t seed = 1; seed <= 6; ++seed)
        CHECK(in_set(build_extension(d2_f5, ChoiceStrategy::seeded(seed)).cells()));

    // The fully monomial degree-4 instance admits exactly one exact
    // extension; its sibling with the staircase middle series admits nine.
    CHECK(enumerate_extensions(fixture_d4_adapt(f5), 0).size() == 1);
    const auto grids_d4 = enumerate_extensions(fixture_d4(f5), 0);
    CHECK(grids_d4.size() == 9);
    const RefinedSeries d4_f5 = fixture_d4(f5);
    const KernelGrid kg_d4(d4_f5);
    for (const GridCells& cells : grids_d4) {
        CHECK(verify_exact(d4_f5, kg_d4, cells).all_pass());
        CHECK(verify_extends(d4_f5, cells));
    }

    // The cap short-circuits the walk.
    CHECK(enumerate_extensions(d2_f5, 2).size() == 2);

    // Guard rails: the walk is only offered where it is exhaustive and fast.
    CHECK_THROWS_AS(enumerate_extensions(fixture_d2(Q), 0), Error);
    CHECK_THROWS_AS(enumerate_extensions(fixture_d2(Field::prime(7)), 0), Error);
    CHECK_THROWS_AS(
        enumerate_extensions(
            monomial_instance(SequenceSpec(5, 0, {2}, {3}), Field::prime(5), {2}),
            0),
        Error);
}
