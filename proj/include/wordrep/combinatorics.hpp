#pragma once

#include <cassert>
#include <mutex>
#include <vector>

#include "wordrep/numbers.hpp"
#include "wordrep/series.hpp"

namespace wordrep {

inline Natural factorial(int n) {
    assert(n >= 0);
    Natural f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

// Zero outside 0 <= k <= n, so callers can pass raw index arithmetic.
inline Natural binomial(int n, int k) {
    assert(n >= 0);
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Natural b = 1;
    for (int i = 1; i <= k; ++i) {
        b *= n - k + i;
        b /= i;  // exact: b is a binomial coefficient after every step
    }
    return b;
}

inline Natural ipow(const Natural& base, int e) {
    assert(e >= 0);
    Natural p = 1;
    for (int i = 0; i < e; ++i) p *= base;
    return p;
}

namespace detail {

// Row-growing cache of Stirling partition numbers, protected for use from
// concurrent tests.  Kept in a function-local so the header stays standalone.
struct StirlingCache {
    std::mutex mutex;
    std::vector<std::vector<Natural>> rows;  // rows[n][t] for t <= n
};

inline StirlingCache& stirling_cache() {
    static StirlingCache cache{{}, {{Natural(1)}}};
    return cache;
}

inline void grow_stirling_rows(StirlingCache& cache, int n) {
    for (int m = int(cache.rows.size()); m <= n; ++m) {
        std::vector<Natural> row(m + 1);
        for (int t = 1; t <= m; ++t) {
            Natural keep = t <= m - 1 ? cache.rows[m - 1][t] : Natural(0);
            row[t] = Natural(t) * keep + cache.rows[m - 1][t - 1];
        }
        cache.rows.push_back(std::move(row));
    }
}

}  // namespace detail

// Number of partitions of an n-set into exactly t non-empty blocks.
inline Natural stirling2(int n, int t) {
    assert(n >= 0);
    if (t < 0 || t > n) return 0;
    if (n == 0) return 1;
    auto& cache = detail::stirling_cache();
    std::lock_guard<std::mutex> lock(cache.mutex);
    detail::grow_stirling_rows(cache, n);
    return cache.rows[n][t];
}

namespace testing {

// Adds `delta` to one cached Stirling value, simulating a silent arithmetic
// fault.  Used to prove the cross-checks catch corrupted tables; call again
// with the opposite delta to restore.
inline void perturb_stirling(int n, int t, const Integer& delta) {
    assert(n >= 0 && t >= 0 && t <= n);
    auto& cache = detail::stirling_cache();
    std::lock_guard<std::mutex> lock(cache.mutex);
    detail::grow_stirling_rows(cache, n);
    cache.rows[n][t] += delta;
}

// Drops every cached row so a test can exercise cache growth from scratch.
inline void reset_stirling() {
    auto& cache = detail::stirling_cache();
    std::lock_guard<std::mutex> lock(cache.mutex);
    cache.rows = {{Natural(1)}};
}

}  // namespace testing

// Number of partitions of an N-set into exactly c blocks with exactly j
// blocks circled, a circled block meaning one of its elements is marked.
// Defined through the generating function: (N-j)! times the z^{N-j}
// coefficient of e^{jz} (e^z - 1)^{c-j} / (c-j)!.
inline Natural p_count(int j, int N, int c) {
    assert(j >= 0 && N >= 0 && c >= 0);
    if (j > c || c > N) return 0;
    if (N == j) return 1;  // forces c == j: every block is a circled singleton
    const int order = N - j;
    Caps caps{0, 0, order};
    TruncatedSeries z = TruncatedSeries::monomial(1, {0, 0, 1}, caps);
    TruncatedSeries lead = z.scaled(j).exp();              // e^{jz}
    TruncatedSeries block = z.exp() - TruncatedSeries::constant(1, caps);  // e^z - 1
    TruncatedSeries s = lead;
    for (int i = 0; i < c - j; ++i) s = s * block;
    Rational value = Rational(factorial(order)) * s.coeff({0, 0, order}) /
                     Rational(factorial(c - j));
    return to_natural(value, "p_count(" + std::to_string(j) + "," + std::to_string(N) + "," +
                                 std::to_string(c) + ")");
}

// The same quantity as a plain sum: choose which p of the N - j uncircled
// elements join circled blocks (j^p ways), and partition the rest into the
// c - j uncircled blocks.
inline Natural p_count_sum(int j, int N, int c) {
    assert(j >= 0 && N >= 0 && c >= 0);
    if (j > c || c > N) return 0;
    Natural total = 0;
    for (int p = 0; p <= N - c; ++p)
        total += binomial(N - j, p) * stirling2(N - j - p, c - j) * ipow(j, p);
    return total;
}

}  // namespace wordrep
