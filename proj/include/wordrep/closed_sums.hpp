#pragma once

#include <stdexcept>
#include <vector>

#include "wordrep/combinatorics.hpp"
#include "wordrep/errors.hpp"
#include "wordrep/grid.hpp"
#include "wordrep/numbers.hpp"

// Counts via explicit multi-index summations, evaluated term by term in
// exact rationals (some terms carry negative powers of two).  This path
// shares nothing with the generating-function engine except the integer
// primitives: the p values are evaluated through their summation form, and
// every total is checked to be a non-negative integer before returning.

namespace wordrep {

namespace detail {

// factorials 0! .. n!
inline std::vector<Natural> factorial_table(int n) {
    std::vector<Natural> f(n + 1);
    f[0] = 1;
    for (int k = 1; k <= n; ++k) f[k] = f[k - 1] * k;
    return f;
}

// p[n][j][c] = number of partitions of n cells into c blocks, j of them
// circled; evaluated via the summation route.
inline std::vector<std::vector<std::vector<Natural>>> p_table(int max_n) {
    std::vector<std::vector<std::vector<Natural>>> p(max_n + 1);
    for (int n = 0; n <= max_n; ++n) {
        p[n].assign(n + 1, std::vector<Natural>(n + 1));
        for (int j = 0; j <= n; ++j)
            for (int c = j; c <= n; ++c) p[n][j][c] = p_count_sum(j, n, c);
    }
    return p;
}

}  // namespace detail

// Total count of arrays: choose the circled blocks among all cells, then
// the block structure around them.
inline Natural sum_p(GridShape s) {
    const int n = s.cells();
    Natural total = 0;
    for (int c = 1; c <= n; ++c)
        for (int j = 0; j <= c; ++j) total += binomial(n, j) * p_count_sum(j, n, c);
    return total;
}

// Arrays fixed by the row mirror, even number of rows.  The sum runs over
// the half-array of M = (rows/2) * cols cells: j letters there, q of them
// circled, t pairings between circled and uncircled letters, w pairings
// among the remaining uncircled letters.
inline Natural sum_h_even(GridShape s) {
    if (s.rows % 2 != 0)
        throw std::invalid_argument("sum_h_even needs an even number of rows; got " + s.str());
    const int M = (s.rows / 2) * s.cols;
    auto fact = detail::factorial_table(M);
    auto p = detail::p_table(M);
    Rational total = 0;
    for (int j = 1; j <= M; ++j)
        for (int q = 0; q <= j; ++q) {
            if (p[M][q][j].is_zero()) continue;
            for (int t = 0; t <= std::min(j - q, q); ++t)
                for (int w = 0; 2 * w <= j - q - t; ++w)
                    total += Rational(fact[M] * p[M][q][j] * fact[j - q]) *
                             pow2(j - q - t - 3 * w) /
                             Rational(fact[M - q] * fact[t] * fact[q - t] * fact[w] *
                                      fact[j - q - t - 2 * w]);
        }
    return to_natural(total, "sum_h_even" + s.str());
}

// Arrays fixed by the row mirror, odd number of rows.  On top of the even
// case, letters may also reach the fixed middle row: q of the j - i
// uncircled top letters appear there on k chosen cells (E of them circled in
// the middle row), and the remaining n - k middle cells hold v fresh letters
// (l of them circled).  The top-half letter count j starts at 0 so that
// shapes with a bare middle row (one-row shapes) keep their middle-only
// terms.
inline Natural sum_h_odd(GridShape s) {
    if (s.rows % 2 != 1)
        throw std::invalid_argument("sum_h_odd needs an odd number of rows; got " + s.str());
    const int M = ((s.rows - 1) / 2) * s.cols;
    const int n = s.cols;
    auto fact = detail::factorial_table(std::max(M, n));
    auto p = detail::p_table(std::max(M, n));
    Rational total = 0;
    for (int j = 0; j <= M; ++j)
        for (int i = 0; i <= j; ++i) {
            if (p[M][i][j].is_zero()) continue;
            for (int q = 0; q <= std::min(j - i, n); ++q)
                for (int k = q; k <= n; ++k)
                    for (int E = 0; E <= q; ++E) {
                        if (p[k][E][q].is_zero()) continue;
                        for (int v = std::min(n - k, 1); v <= n - k; ++v)
                            for (int l = 0; l <= v; ++l) {
                                if (p[n - k][l][v].is_zero()) continue;
                                for (int t = 0; t <= std::min(j - i - q, i); ++t)
                                    for (int w = 0; 2 * w <= j - i - q - t; ++w)
                                        total +=
                                            Rational(fact[M] * fact[n] * p[M][i][j] *
                                                     p[k][E][q] * p[n - k][l][v] *
                                                     fact[j - i]) *
                                            pow2(j - i - q - t - 3 * w) /
                                            Rational(fact[M - i] * fact[E] * fact[k - E] *
                                                     fact[n - k - l] * fact[i - t] * fact[t] *
                                                     fact[w] * fact[j - i - q - t - 2 * w] *
                                                     fact[l]);
                            }
                    }
        }
    return to_natural(total, "sum_h_odd" + s.str());
}

// Arrays fixed by the half turn, both sides odd.  The array splits into two
// L-shaped halves of N = cols * (rows/2) + cols/2 cells around the central
// cell; q of the j - i uncircled letters also cover the center cell's
// mirror-free position, and the center itself is circled or not (the
// leading power of two).  The 1x1 shape has N = 0 and only the center:
// two arrays.
inline Natural sum_r_odd_odd(GridShape s) {
    if (s.rows % 2 != 1 || s.cols % 2 != 1)
        throw std::invalid_argument("sum_r_odd_odd needs both sides odd; got " + s.str());
    const int N = s.cols * (s.rows / 2) + s.cols / 2;
    if (N == 0) return 2;
    auto fact = detail::factorial_table(N);
    auto p = detail::p_table(N);
    Rational total = 0;
    for (int j = 1; j <= N; ++j)
        for (int i = 0; i <= j; ++i) {
            if (p[N][i][j].is_zero()) continue;
            for (int q = 0; q <= j - i; ++q)
                for (int t = 0; t <= std::min(i, j - i - q); ++t)
                    for (int v = 0; 2 * v <= j - i - q - t; ++v)
                        total += Rational(fact[N] * p[N][i][j] * fact[j - i] * (1 + q)) *
                                 pow2(1 - v) /
                                 Rational(fact[N - i] * fact[t] * fact[q] * fact[i - t] *
                                          fact[v] * fact[j - i - q - t - 2 * v]);
        }
    return to_natural(total, "sum_r_odd_odd" + s.str());
}

// Fully symmetric arrays, both sides even.  Everything is determined by one
// quadrant of Q = (rows/2) * (cols/2) cells: j letters there, q circled,
// l pairings between circled and uncircled letters, v pairings among the
// uncircled ones; the factors 3 and 5 count how each pairing or free letter
// can straddle the two reflection axes.
inline Natural sum_s_even_even(GridShape s) {
    if (s.rows % 2 != 0 || s.cols % 2 != 0)
        throw std::invalid_argument("sum_s_even_even needs both sides even; got " + s.str());
    const int Q = (s.rows / 2) * (s.cols / 2);
    auto fact = detail::factorial_table(Q);
    auto p = detail::p_table(Q);
    Rational total = 0;
    for (int j = 1; j <= Q; ++j)
        for (int q = 0; q <= j; ++q) {
            if (p[Q][q][j].is_zero()) continue;
            for (int l = 0; l <= std::min(q, j - q); ++l)
                for (int v = 0; 2 * v <= j - q - l; ++v)
                    total += Rational(fact[Q] * p[Q][q][j] * ipow(3, l + v) * fact[j - q] *
                                      ipow(5, j - q - l - 2 * v)) /
                             Rational(fact[Q - q] * fact[l] * fact[q - l] * fact[v] *
                                      fact[j - q - l - 2 * v]);
        }
    return to_natural(total, "sum_s_even_even" + s.str());
}

}  // namespace wordrep
