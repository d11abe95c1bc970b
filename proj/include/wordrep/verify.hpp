#pragma once

#include <exception>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "wordrep/closed_sums.hpp"
#include "wordrep/combinatorics.hpp"
#include "wordrep/egf.hpp"
#include "wordrep/errors.hpp"
#include "wordrep/grid.hpp"
#include "wordrep/numbers.hpp"
#include "wordrep/oracle.hpp"
#include "wordrep/series.hpp"

// Full cross-verification matrix: every quantity the library computes is
// recomputed along every independent path that covers the shape, and the
// two shipped scale constants are re-derived from brute force.  A clean run
// is strong evidence that the analytic formulas, the summations and the
// enumeration all describe the same objects.

namespace wordrep {

struct VerifyOptions {
    int oracle_cells = 10;  // enumeration budget per shape, in cells
};

struct CheckResult {
    std::string name;
    std::string scope;   // what was swept
    bool pass = false;
    std::string detail;  // first counterexample or error, empty when passing
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_pass() const {
        for (const CheckResult& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

namespace detail {

template <class Body>
void run_check(VerifyReport& report, const std::string& name, const std::string& scope,
               Body&& body) {
    CheckResult result;
    result.name = name;
    result.scope = scope;
    try {
        std::string detail = body();  // empty string = pass
        result.pass = detail.empty();
        result.detail = detail;
    } catch (const std::exception& e) {
        result.pass = false;
        result.detail = e.what();
    }
    report.checks.push_back(result);
}

// Shapes with rows*cols <= cells, in a deterministic order.
inline std::vector<GridShape> shapes_up_to(int cells) {
    std::vector<GridShape> out;
    for (int area = 1; area <= cells; ++area)
        for (int rows = 1; rows <= area; ++rows)
            if (area % rows == 0) out.push_back({rows, area / rows});
    return out;
}

inline std::string mismatch(const std::string& what, GridShape s, const Natural& a,
                            const Natural& b) {
    return what + " at " + s.str() + ": " + a.str() + " vs " + b.str();
}

}  // namespace detail

inline VerifyReport run_verification(VerifyOptions opt = {}) {
    using detail::mismatch;
    using detail::run_check;
    using detail::shapes_up_to;
    using enum SymmetryKind;
    VerifyReport report;
    const int K = opt.oracle_cells;

    run_check(report, "p-values: summation route equals series route", "j <= c <= N <= 12",
              []() -> std::string {
                  for (int N = 0; N <= 12; ++N)
                      for (int c = 0; c <= N; ++c)
                          for (int j = 0; j <= c; ++j)
                              if (p_count(j, N, c) != p_count_sum(j, N, c))
                                  return "p(" + std::to_string(j) + "," + std::to_string(N) +
                                         "," + std::to_string(c) + "): " +
                                         p_count(j, N, c).str() + " vs " +
                                         p_count_sum(j, N, c).str();
                  return {};
              });

    run_check(report, "total counts: closed summation equals generating function",
              "all shapes <= 20 cells", []() -> std::string {
                  for (GridShape s : shapes_up_to(20))
                      if (sum_p(s) != count_p(s))
                          return mismatch("P", s, sum_p(s), count_p(s));
                  return {};
              });

    run_check(report, "mirror counts: closed summation equals generating function",
              "even rows <= 20 cells, odd rows <= 16 cells", []() -> std::string {
                  for (GridShape s : shapes_up_to(20)) {
                      if (s.rows % 2 == 1 && s.cells() > 16) continue;
                      Natural lhs = s.rows % 2 == 0 ? sum_h_even(s) : sum_h_odd(s);
                      if (lhs != count_h(s)) return mismatch("H", s, lhs, count_h(s));
                  }
                  return {};
              });

    run_check(report, "half-turn counts: closed summation equals generating function",
              "odd x odd shapes with half-size N <= 10", []() -> std::string {
                  for (int rows = 1; rows <= 21; rows += 2)
                      for (int cols = 1; cols <= 21; cols += 2) {
                          GridShape s{rows, cols};
                          if (cols * (rows / 2) + cols / 2 > 10) continue;
                          if (sum_r_odd_odd(s) != count_r(s))
                              return mismatch("R", s, sum_r_odd_odd(s), count_r(s));
                      }
                  return {};
              });

    run_check(report, "quadrant counts: closed summation equals generating function",
              "even x even shapes with quadrant <= 10", []() -> std::string {
                  for (int rows = 2; rows <= 20; rows += 2)
                      for (int cols = 2; cols <= 20; cols += 2) {
                          GridShape s{rows, cols};
                          if ((rows / 2) * (cols / 2) > 10) continue;
                          if (sum_s_even_even(s) != count_s(s))
                              return mismatch("S", s, sum_s_even_even(s), count_s(s));
                      }
                  return {};
              });

    run_check(report, "brute force: analytic counts equal exhaustive enumeration",
              "all shapes <= " + std::to_string(K) + " cells", [&]() -> std::string {
                  OracleLimit limit{K};
                  for (GridShape s : shapes_up_to(K)) {
                      if (count_p(s) != count_all(s, limit))
                          return mismatch("P", s, count_p(s), count_all(s, limit));
                      Natural h = count_fixed(s, {horizontal_reflect}, limit);
                      if (count_h(s) != h) return mismatch("H", s, count_h(s), h);
                      Natural v = count_fixed(s, {vertical_reflect}, limit);
                      if (count_v(s) != v) return mismatch("V", s, count_v(s), v);
                      Natural r = count_fixed(s, {rotate180}, limit);
                      if (count_r(s) != r) return mismatch("R", s, count_r(s), r);
                      Natural x = count_fixed(s, {horizontal_reflect, vertical_reflect}, limit);
                      if (count_s(s) != x) return mismatch("S", s, count_s(s), x);
                  }
                  return {};
              });

    run_check(report, "brute force: factored fixed counts equal per-array screening",
              "all shapes <= " + std::to_string(std::min(K, 8)) + " cells",
              [&]() -> std::string {
                  OracleLimit limit{std::min(K, 8)};
                  std::vector<std::vector<SymmetryKind>> generator_sets = {
                      {horizontal_reflect},
                      {vertical_reflect},
                      {rotate180},
                      {horizontal_reflect, vertical_reflect}};
                  for (GridShape s : shapes_up_to(limit.max_cells))
                      for (const auto& ops : generator_sets) {
                          Natural a = count_fixed(s, ops, limit);
                          Natural b = count_fixed_naive(s, ops, limit);
                          if (a != b) return mismatch("fixed", s, a, b);
                      }
                  return {};
              });

    run_check(report, "brute force: orbit count equals the four-count average",
              "all shapes <= " + std::to_string(K) + " cells", [&]() -> std::string {
                  OracleLimit limit{K};
                  for (GridShape s : shapes_up_to(K)) {
                      Natural sum = count_all(s, limit) +
                                    count_fixed(s, {horizontal_reflect}, limit) +
                                    count_fixed(s, {vertical_reflect}, limit) +
                                    count_fixed(s, {rotate180}, limit);
                      if (sum % 4 != 0)
                          return "four-count total not divisible by 4 at " + s.str();
                      if (count_orbits(s, limit) != sum / 4)
                          return mismatch("orbits", s, count_orbits(s, limit), sum / 4);
                  }
                  return {};
              });

    run_check(report, "divisibility: 4 divides P+H+V+R on non-square shapes",
              "rows != cols, <= 30 cells", []() -> std::string {
                  for (GridShape s : shapes_up_to(30)) {
                      if (s.square()) continue;
                      Natural sum = count_p(s) + count_h(s) + count_v(s) + count_r(s);
                      if (sum % 4 != 0) return "total " + sum.str() + " at " + s.str();
                  }
                  return {};
              });

    run_check(report, "transpose identities: P, S symmetric; H, V and R, R swap",
              "all shapes <= 20 cells", []() -> std::string {
                  for (GridShape s : shapes_up_to(20)) {
                      GridShape t = s.transposed();
                      if (count_p(s) != count_p(t))
                          return mismatch("P vs transpose", s, count_p(s), count_p(t));
                      if (count_h(s) != count_v(t))
                          return mismatch("H vs transposed V", s, count_h(s), count_v(t));
                      if (count_r(s) != count_r(t))
                          return mismatch("R vs transpose", s, count_r(s), count_r(t));
                      if (count_s(s) != count_s(t))
                          return mismatch("S vs transpose", s, count_s(s), count_s(t));
                  }
                  return {};
              });

    run_check(report, "ordering: S <= H, V, R <= P", "all shapes <= 20 cells",
              []() -> std::string {
                  for (GridShape s : shapes_up_to(20)) {
                      Natural p = count_p(s), x = count_s(s);
                      for (Natural m : {count_h(s), count_v(s), count_r(s)})
                          if (x > m || m > p)
                              return "ordering violated at " + s.str();
                  }
                  return {};
              });

    run_check(report, "degenerate lines: one-row mirrors and one-column mirrors are free",
              "1 x n and m x 1, up to 12 cells", []() -> std::string {
                  for (int n = 1; n <= 12; ++n) {
                      if (count_h({1, n}) != count_p({1, n}))
                          return mismatch("H(1,n) vs P", {1, n}, count_h({1, n}),
                                          count_p({1, n}));
                      if (count_v({n, 1}) != count_p({n, 1}))
                          return mismatch("V(n,1) vs P", {n, 1}, count_v({n, 1}),
                                          count_p({n, 1}));
                      if (count_s({n, 1}) != count_h({n, 1}))
                          return mismatch("S(n,1) vs H", {n, 1}, count_s({n, 1}),
                                          count_h({n, 1}));
                  }
                  return {};
              });

    run_check(report, "series laws: exp is a homomorphism with exact inverse and derivative",
              "randomized polynomials, degrees <= 6", []() -> std::string {
                  std::mt19937 rng(461250);
                  std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
                  auto random_series = [&](Caps caps) {
                      TruncatedSeries f(caps);
                      Degree d;
                      for (d.x = 0; d.x <= caps.x; ++d.x)
                          for (d.y = 0; d.y <= caps.y; ++d.y)
                              for (d.z = 0; d.z <= caps.z; ++d.z) {
                                  if (d == Degree{}) continue;  // zero constant term
                                  f = f + TruncatedSeries::monomial(
                                              Rational(num(rng), den(rng)), d, caps);
                              }
                      return f;
                  };
                  for (Caps caps : {Caps{0, 0, 6}, Caps{1, 2, 3}, Caps{2, 2, 2}}) {
                      for (int trial = 0; trial < 5; ++trial) {
                          TruncatedSeries f = random_series(caps), g = random_series(caps);
                          if (!((f + g).exp() == f.exp() * g.exp()))
                              return "exp(f+g) != exp(f)exp(g)";
                          if (!(f.exp() * f.scaled(-1).exp() ==
                                TruncatedSeries::constant(1, caps)))
                              return "exp(f)exp(-f) != 1";
                          for (Var v : {Var::x, Var::y, Var::z})
                              if (!(f.exp().derivative(v) == f.derivative(v) * f.exp()))
                                  return "exp' != f' exp(f)";
                      }
                  }
                  return {};
              });

    run_check(report, "scale audit: half-turn constant on odd x odd shapes",
              "enumeration at (1,1),(3,1),(3,3); anchors (3,5)", [&]() -> std::string {
                  if (half_turn_odd_odd_scale * count_r_odd_odd_unscaled({3, 1}) ==
                      count_r_odd_odd_unscaled({3, 1}))
                      return "audit vacuous: scaling changes nothing at (3,1)";
                  for (GridShape s : {GridShape{1, 1}, GridShape{3, 1}, GridShape{3, 3}}) {
                      if (s.cells() > K) continue;
                      Natural truth = count_fixed(s, {rotate180}, OracleLimit{K});
                      if (count_r(s) != truth) return mismatch("R", s, count_r(s), truth);
                  }
                  if (count_r({3, 5}) != 3302472)
                      return "R(3,5) anchor: got " + count_r({3, 5}).str();
                  if (sum_r_odd_odd({3, 5}) != 3302472)
                      return "R(3,5) summation anchor: got " + sum_r_odd_odd({3, 5}).str();
                  return {};
              });

    run_check(report, "scale audit: quadrant constant on odd x odd shapes",
              "enumeration at (1,1),(3,1),(3,3); anchor (3,5)", [&]() -> std::string {
                  if (quadrant_odd_odd_scale * count_s_odd_odd_unscaled({1, 1}) ==
                          count_s_odd_odd_unscaled({1, 1}) ||
                      quadrant_odd_odd_scale * count_s_odd_odd_unscaled({3, 1}) ==
                          count_s_odd_odd_unscaled({3, 1}))
                      return "audit vacuous: scaling changes nothing at (1,1)/(3,1)";
                  for (GridShape s : {GridShape{1, 1}, GridShape{3, 1}, GridShape{3, 3}}) {
                      if (s.cells() > K) continue;
                      Natural truth =
                          count_fixed(s, {horizontal_reflect, vertical_reflect}, OracleLimit{K});
                      if (count_s(s) != truth) return mismatch("S", s, count_s(s), truth);
                  }
                  if (count_s({3, 5}) != 26168)
                      return "S(3,5) anchor: got " + count_s({3, 5}).str();
                  return {};
              });

    return report;
}

}  // namespace wordrep
