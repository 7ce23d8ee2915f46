#include "chainlls/checks.hpp"

#include <algorithm>

namespace chainlls {

namespace {

bool contains_order(const std::vector<int>& orders, int x) {
    return std::find(orders.begin(), orders.end(), x) != orders.end();
}

std::map<std::string, std::string> dims_detail(
    std::initializer_list<std::pair<const char*, std::size_t>> vals) {
    std::map<std::string, std::string> out;
    for (const auto& [k, v] : vals) out[k] = std::to_string(v);
    return out;
}

}  // namespace

CheckReport check_prop_linking(const KernelGrid& kg) {
    const RefinedSeries& h = kg.series();
    CheckReport report;
    report.name = "prop_linking";
    for (Multidegree md : grid_points(h.curve)) {
        for (int q = 1; q <= 3; ++q) {
            const auto tgt = q_shift(h.curve, md, q);
            if (!tgt) continue;
            const TransferMap down = phi(h.curve, h.field, md, q, Direction::down);
            const Subspace down_img = map_image(down.matrix, kg.at(md));
            report.add(md.i, md.l, "linking_down_q" + std::to_string(q),
                       kg.at(*tgt).contains(down_img),
                       dims_detail({{"image_dim", down_img.dim()},
                                    {"target_dim", kg.at(*tgt).dim()}}));
            const TransferMap up = phi(h.curve, h.field, *tgt, q, Direction::up);
            const Subspace up_img = map_image(up.matrix, kg.at(*tgt));
            report.add(tgt->i, tgt->l, "linking_up_q" + std::to_string(q),
                       kg.at(md).contains(up_img),
                       dims_detail({{"image_dim", up_img.dim()},
                                    {"target_dim", kg.at(md).dim()}}));
        }
    }
    return report;
}

CheckReport check_prop_forward_exact(const KernelGrid& kg) {
    const RefinedSeries& h = kg.series();
    CheckReport report;
    report.name = "prop_forward_exact";
    for (Multidegree md : grid_points(h.curve)) {
        struct Case {
            int q;
            Direction dir;
            std::vector<int> vanish_on;
            const char* label;
        };
        const std::vector<Case> cases = {
            {2, Direction::up, {1, 3}, "forward_up_q2"},
            {1, Direction::down, {1}, "forward_down_q1"},
            {3, Direction::down, {3}, "forward_down_q3"},
        };
        for (const Case& cs : cases) {
            const auto tgt = cs.dir == Direction::down ? q_shift(h.curve, md, cs.q)
                                                       : q_unshift(h.curve, md, cs.q);
            if (!tgt) continue;
            const TransferMap t = phi(h.curve, h.field, md, cs.q, cs.dir);
            const Subspace img = map_image(t.matrix, kg.at(md));
            const Subspace expected = kg.vanishing_part(*tgt, cs.vanish_on);
            report.add(md.i, md.l, cs.label, img == expected,
                       dims_detail({{"image_dim", img.dim()},
                                    {"expected_dim", expected.dim()}}));
        }
    }
    return report;
}

CheckReport check_prop_reverse(const KernelGrid& kg) {
    const RefinedSeries& h = kg.series();
    CheckReport report;
    report.name = "prop_reverse";
    for (Multidegree md : grid_points(h.curve)) {
        if (md.i >= 1) {
            // Up move of component 1 from (i-1, l) into (i, l).
            const Multidegree src{md.i - 1, md.l};
            const TransferMap t = phi(h.curve, h.field, src, 1, Direction::up);
            const Subspace img = map_image(t.matrix, kg.at(src));
            const bool equal = img == kg.vanishing_part(md, {2, 3});
            const std::vector<int> orders_twisted = vanishing_sequence(
                twist_series(h.curve, h.vx2, 0, md.l), NodeSide::at_zero);
            const bool predicted_failure =
                contains_order(h.b, md.i - 1) && !contains_order(orders_twisted, md.i - 1);
            report.add(md.i, md.l, "reverse_up_q1", equal != predicted_failure,
                       {{"image_equals_part", equal ? "yes" : "no"},
                        {"predicted_failure", predicted_failure ? "yes" : "no"}});
        }
        if (md.l >= 1) {
            // Up move of component 3 from (i, l-1) into (i, l).
            const Multidegree src{md.i, md.l - 1};
            const TransferMap t = phi(h.curve, h.field, src, 3, Direction::up);
            const Subspace img = map_image(t.matrix, kg.at(src));
            const bool equal = img == kg.vanishing_part(md, {1, 2});
            const std::vector<int> orders_twisted = vanishing_sequence(
                twist_series(h.curve, h.vx2, md.i, 0), NodeSide::at_infinity);
            const bool predicted_failure =
                contains_order(h.bp, md.l - 1) && !contains_order(orders_twisted, md.l - 1);
            report.add(md.i, md.l, "reverse_up_q3", equal != predicted_failure,
                       {{"image_equals_part", equal ? "yes" : "no"},
                        {"predicted_failure", predicted_failure ? "yes" : "no"}});
        }
    }
    return report;
}

CheckReport check_distributivity(const KernelGrid& kg) {
    const RefinedSeries& h = kg.series();
    CheckReport report;
    report.name = "distributivity";
    for (Multidegree md : grid_points(h.curve)) {
        const Subspace s1 = kg.vanishing_part(md, {1});
        const Subspace s2 = kg.vanishing_part(md, {2});
        const Subspace s3 = kg.vanishing_part(md, {3});
        const auto distributes = [](const Subspace& x, const Subspace& y,
                                    const Subspace& z) {
            return subspace_intersect(x, subspace_sum(y, z)) ==
                   subspace_sum(subspace_intersect(x, y), subspace_intersect(x, z));
        };
        const bool d1 = distributes(s1, s2, s3);
        const bool d2 = distributes(s2, s1, s3);
        const bool d3 = distributes(s3, s1, s2);
        report.add(md.i, md.l, "distributivity", d1 && d2 && d3,
                   dims_detail({{"dim_x1_part", s1.dim()},
                                {"dim_x2_part", s2.dim()},
                                {"dim_x3_part", s3.dim()}}));
    }
    return report;
}

CheckReport check_dim_inequalities(const KernelGrid& kg) {
    const RefinedSeries& h = kg.series();
    CheckReport report;
    report.name = "dim_inequalities";
    for (Multidegree md : grid_points(h.curve)) {
        const int dim_k = kg.dim(md);
        const Subspace s1 = kg.vanishing_part(md, {1});
        const Subspace s2 = kg.vanishing_part(md, {2});
        const Subspace s3 = kg.vanishing_part(md, {3});
        const struct {
            const Subspace* x;
            const Subspace* y;
            const char* label;
        } pairs[] = {{&s1, &s2, "pair_sum_x1_x2"},
                     {&s2, &s3, "pair_sum_x2_x3"},
                     {&s1, &s3, "pair_sum_x1_x3"}};
        for (const auto& p : pairs) {
            const int dim_sum = static_cast<int>(subspace_sum(*p.x, *p.y).dim());
            report.add(md.i, md.l, p.label, dim_sum >= dim_k - 1,
                       {{"dim_sum", std::to_string(dim_sum)},
                        {"dim_K", std::to_string(dim_k)}});
        }
        const int total =
            static_cast<int>(s1.dim()) + static_cast<int>(s2.dim()) +
            static_cast<int>(s3.dim());
        report.add(md.i, md.l, "three_term_bound", total >= 2 * (dim_k - 1),
                   {{"dim_total", std::to_string(total)},
                    {"dim_K", std::to_string(dim_k)}});
    }
    return report;
}

CheckReport check_properness(const KernelGrid& kg) {
    const RefinedSeries& h = kg.series();
    CheckReport report;
    report.name = "properness";
    for (Multidegree md : grid_points(h.curve)) {
        const int dim_k = kg.dim(md);
        const Subspace s1 = kg.vanishing_part(md, {1});
        const Subspace s2 = kg.vanishing_part(md, {2});
        const Subspace s3 = kg.vanishing_part(md, {3});
        const int total =
            static_cast<int>(s1.dim()) + static_cast<int>(s2.dim()) +
            static_cast<int>(s3.dim());
        const bool equality = total == 2 * (dim_k - 1);

        const std::vector<int> at_a = vanishing_sequence(
            twist_series(h.curve, h.vx2, 0, md.l), NodeSide::at_zero);
        const std::vector<int> at_b = vanishing_sequence(
            twist_series(h.curve, h.vx2, md.i, 0), NodeSide::at_infinity);
        const bool predicted =
            contains_order(at_a, md.i) && contains_order(at_b, md.l);

        bool pass = equality == predicted;
        if (equality) {
            const bool proper = static_cast<int>(s1.dim()) < dim_k &&
                                static_cast<int>(s2.dim()) < dim_k &&
                                static_cast<int>(s3.dim()) < dim_k;
            pass = pass && proper;
        }
        report.add(md.i, md.l, "properness", pass,
                   {{"equality", equality ? "yes" : "no"},
                    {"predicted", predicted ? "yes" : "no"},
                    {"dim_total", std::to_string(total)},
                    {"dim_K", std::to_string(dim_k)}});
    }
    return report;
}

CheckReport check_monotonicity(const KernelGrid& kg) {
    const RefinedSeries& h = kg.series();
    CheckReport report;
    report.name = "monotonicity";
    for (Multidegree md : grid_points(h.curve)) {
        if (md.i >= 1) {
            const int prev = kg.dim(Multidegree{md.i - 1, md.l});
            report.add(md.i, md.l, "monotone_in_i", kg.dim(md) >= prev,
                       {{"dim", std::to_string(kg.dim(md))},
                        {"dim_prev", std::to_string(prev)}});
        }
        if (md.l >= 1) {
            const int prev = kg.dim(Multidegree{md.i, md.l - 1});
            report.add(md.i, md.l, "monotone_in_l", kg.dim(md) >= prev,
                       {{"dim", std::to_string(kg.dim(md))},
                        {"dim_prev", std::to_string(prev)}});
        }
    }
    return report;
}

CheckReport check_dim_prediction(const KernelGrid& kg) {
    const RefinedSeries& h = kg.series();
    CheckReport report;
    report.name = "dim_prediction";
    for (Multidegree md : grid_points(h.curve)) {
        const std::size_t direct = kg.dim(md);
        const int predicted = kernel_dim_predicted(h, md);
        report.add(md.i, md.l, "predicted_equals_direct",
                   static_cast<int>(direct) == predicted,
                   {{"direct", std::to_string(direct)},
                    {"predicted", std::to_string(predicted)}});
    }
    return report;
}

std::vector<CheckReport> run_all_checks(const KernelGrid& kg) {
    return {check_prop_linking(kg),      check_prop_forward_exact(kg),
            check_prop_reverse(kg),      check_distributivity(kg),
            check_dim_inequalities(kg),  check_properness(kg),
            check_monotonicity(kg),      check_dim_prediction(kg)};
}

}  // namespace chainlls
