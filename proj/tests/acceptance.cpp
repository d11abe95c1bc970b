// Acceptance gate: one pass/fail line per criterion, exit 0 only if all hold.
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "wordrep/closed_sums.hpp"
#include "wordrep/egf.hpp"
#include "wordrep/oracle.hpp"
#include "wordrep/report.hpp"
#include "wordrep/series.hpp"
#include "wordrep/verify.hpp"

using namespace wordrep;

namespace {

struct Criterion {
    std::string title;
    std::vector<std::string> problems;

    void expect(bool ok, const std::string& what) {
        if (!ok) problems.push_back(what);
    }

    template <typename A, typename B>
    void expect_eq(const A& got, const B& want, const std::string& what) {
        if (!(got == Natural(want))) {
            std::ostringstream msg;
            msg << what << ": got " << got << ", want " << want;
            problems.push_back(msg.str());
        }
    }
};

struct GoldenRow {
    GridShape shape;
    Natural p, h, v, r, s;
};

const std::vector<GoldenRow> golden_rows = {
    {{2, 3}, 5653, 107, 197, 107, 23},
    {{2, 4}, 306419, 851, 851, 851, 55},
    {{2, 5}, 22277080, 7770, 12976, 7770, 234},
    {{3, 2}, 5653, 197, 107, 107, 23},
    {{3, 4}, Natural("2062199125"), 463973, 79525, 79525, 1525},
    {{3, 5}, Natural("2678973711602"), 35802956, 8315630, 3302472, 26168},
};

void criterion_golden_rows(Criterion& c) {
    for (const GoldenRow& row : golden_rows) {
        std::string at = row.shape.str();
        c.expect_eq(count_p(row.shape), row.p, "P" + at);
        c.expect_eq(count_h(row.shape), row.h, "H" + at);
        c.expect_eq(count_v(row.shape), row.v, "V" + at);
        c.expect_eq(count_r(row.shape), row.r, "R" + at);
        c.expect_eq(count_s(row.shape), row.s, "S" + at);
    }
}

void criterion_worked_example(Criterion& c) {
    GridShape shape{3, 1};
    c.expect_eq(count_p(shape), 30, "P(3,1)");
    c.expect_eq(count_h(shape), 8, "H(3,1)");
    c.expect_eq(count_v(shape), 30, "V(3,1)");
    c.expect_eq(count_r(shape), 8, "R(3,1)");
    c.expect_eq(count_w(shape), 19, "W(3,1)");
}

std::vector<GridShape> shapes_up_to(int cells) {
    std::vector<GridShape> shapes;
    for (int area = 1; area <= cells; ++area)
        for (int rows = 1; rows <= area; ++rows)
            if (area % rows == 0) shapes.push_back({rows, area / rows});
    return shapes;
}

void criterion_oracle_equivalence(Criterion& c) {
    using enum SymmetryKind;
    OracleLimit limit{10};
    for (GridShape shape : shapes_up_to(10)) {
        std::string at = shape.str();
        c.expect_eq(count_p(shape), count_all(shape, limit), "brute-force P" + at);
        c.expect_eq(count_h(shape), count_fixed(shape, {horizontal_reflect}, limit),
                    "brute-force H" + at);
        c.expect_eq(count_v(shape), count_fixed(shape, {vertical_reflect}, limit),
                    "brute-force V" + at);
        c.expect_eq(count_r(shape), count_fixed(shape, {rotate180}, limit),
                    "brute-force R" + at);
        c.expect_eq(count_s(shape),
                    count_fixed(shape, {horizontal_reflect, vertical_reflect}, limit),
                    "brute-force S" + at);
        Natural four = count_p(shape) + count_h(shape) + count_v(shape) + count_r(shape);
        c.expect(four % 4 == 0, "four-count total not divisible by 4 at " + at);
        c.expect_eq(count_orbits(shape, limit) * 4, four, "4 x orbit count" + at);
    }
}

void criterion_cross_path(Criterion& c) {
    for (GridShape shape : shapes_up_to(16)) {
        std::string at = shape.str();
        c.expect_eq(sum_p(shape), count_p(shape), "total sum" + at);
        if (shape.rows % 2 == 0)
            c.expect_eq(sum_h_even(shape), count_h(shape), "even mirror sum" + at);
        else
            c.expect_eq(sum_h_odd(shape), count_h(shape), "odd mirror sum" + at);
        if (shape.rows % 2 == 1 && shape.cols % 2 == 1 &&
            shape.cols * (shape.rows / 2) + shape.cols / 2 <= 10)
            c.expect_eq(sum_r_odd_odd(shape), count_r(shape), "half-turn sum" + at);
        if (shape.rows % 2 == 0 && shape.cols % 2 == 0)
            c.expect_eq(sum_s_even_even(shape), count_s(shape), "quadrant sum" + at);
    }
}

void criterion_scale_audit(Criterion& c) {
    using enum SymmetryKind;
    OracleLimit limit{10};

    c.expect(count_r_odd_odd_unscaled({3, 1}) != count_r({3, 1}),
             "half-turn audit is vacuous: the scale changes nothing at (3,1)");
    c.expect(count_s_odd_odd_unscaled({3, 1}) != count_s({3, 1}),
             "quadrant audit is vacuous: the scale changes nothing at (3,1)");

    c.expect_eq(count_r({1, 1}), 2, "R(1,1)");
    c.expect_eq(count_r({3, 1}), 8, "R(3,1)");
    c.expect_eq(count_r({1, 1}), count_fixed({1, 1}, {rotate180}, limit),
                "brute-force R(1,1)");
    c.expect_eq(count_r({3, 1}), count_fixed({3, 1}, {rotate180}, limit),
                "brute-force R(3,1)");
    c.expect_eq(count_r({3, 3}), count_fixed({3, 3}, {rotate180}, limit),
                "brute-force R(3,3)");
    c.expect_eq(count_r({3, 5}), 3302472, "half-turn table anchor R(3,5)");
    c.expect_eq(sum_r_odd_odd({3, 5}), 3302472, "half-turn summation anchor R(3,5)");

    c.expect_eq(count_s({1, 1}), 2, "S(1,1)");
    c.expect_eq(count_s({3, 1}), 8, "S(3,1)");
    c.expect_eq(count_s({1, 1}),
                count_fixed({1, 1}, {horizontal_reflect, vertical_reflect}, limit),
                "brute-force S(1,1)");
    c.expect_eq(count_s({3, 1}),
                count_fixed({3, 1}, {horizontal_reflect, vertical_reflect}, limit),
                "brute-force S(3,1)");
    c.expect_eq(count_s({3, 3}),
                count_fixed({3, 3}, {horizontal_reflect, vertical_reflect}, limit),
                "brute-force S(3,3)");
    c.expect_eq(count_s({3, 5}), 26168, "quadrant table anchor S(3,5)");
}

void criterion_properties(Criterion& c) {
    for (GridShape shape : shapes_up_to(30)) {
        if (shape.square()) continue;
        Natural four = count_p(shape) + count_h(shape) + count_v(shape) + count_r(shape);
        c.expect(four % 4 == 0, "four-count total not divisible by 4 at " + shape.str());
    }
    for (GridShape shape : shapes_up_to(20)) {
        GridShape t = shape.transposed();
        std::string at = shape.str();
        c.expect(count_p(shape) == count_p(t), "P transpose" + at);
        c.expect(count_h(shape) == count_v(t), "H/V transpose" + at);
        c.expect(count_r(shape) == count_r(t), "R transpose" + at);
        c.expect(count_s(shape) == count_s(t), "S transpose" + at);
        Natural p = count_p(shape);
        Natural s = count_s(shape);
        for (Natural mid : {count_h(shape), count_v(shape), count_r(shape)}) {
            c.expect(s <= mid, "S exceeds a fixed count at " + at);
            c.expect(mid <= p, "a fixed count exceeds P at " + at);
        }
    }
    for (int n = 1; n <= 12; ++n) {
        c.expect(count_h({1, n}) == count_p({1, n}), "one-row mirror is not free");
        c.expect(count_v({n, 1}) == count_p({n, 1}), "one-column mirror is not free");
    }

    std::mt19937 rng(552941);
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 3);
    Caps caps{1, 2, 3};
    auto random_series = [&] {
        TruncatedSeries s(caps);
        for (int i = 0; i <= caps.x; ++i)
            for (int j = 0; j <= caps.y; ++j)
                for (int k = 0; k <= caps.z; ++k) {
                    if (i == 0 && j == 0 && k == 0) continue;
                    s = s + TruncatedSeries::monomial(Rational(num(rng), den(rng)),
                                                      {i, j, k}, caps);
                }
        return s;
    };
    for (int trial = 0; trial < 5; ++trial) {
        auto f = random_series();
        auto g = random_series();
        c.expect((f + g).exp() == f.exp() * g.exp(), "exp homomorphism failed");
        for (Var v : {Var::x, Var::y, Var::z})
            c.expect(f.exp().derivative(v) == f.derivative(v) * f.exp(),
                     "exp derivative identity failed");
    }
}

void criterion_fault_injection(Criterion& c) {
    testing::perturb_stirling(6, 3, 1);
    VerifyReport broken = run_verification({.oracle_cells = 4});
    testing::perturb_stirling(6, 3, -1);

    c.expect(!broken.all_pass(), "verification passed despite a corrupted table");
    bool summation_named = false;
    for (const CheckResult& check : broken.checks)
        if (!check.pass && check.name.find("summation") != std::string::npos)
            summation_named = true;
    c.expect(summation_named, "no failing check names the summation route");

    VerifyReport healed = run_verification({.oracle_cells = 4});
    c.expect(healed.all_pass(), "verification still failing after restoring the table");
}

}  // namespace

int main() {
    std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria = {
        {"golden counts for six reference shapes", criterion_golden_rows},
        {"worked 3x1 example", criterion_worked_example},
        {"generating functions match brute force up to 10 cells", criterion_oracle_equivalence},
        {"closed summations match generating functions in scope", criterion_cross_path},
        {"odd-odd scale constants are audited and non-vacuous", criterion_scale_audit},
        {"structural properties and series laws hold", criterion_properties},
        {"fault injection trips the verifier, restoring heals it", criterion_fault_injection},
    };

    bool all_pass = true;
    for (size_t i = 0; i < criteria.size(); ++i) {
        Criterion c;
        c.title = criteria[i].first;
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            c.problems.push_back(std::string("exception: ") + e.what());
        }
        bool pass = c.problems.empty();
        all_pass = all_pass && pass;
        std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << i + 1 << ": " << c.title;
        if (!pass) std::cout << " -- " << c.problems.front();
        std::cout << "\n";
    }
    return all_pass ? 0 : 1;
}
