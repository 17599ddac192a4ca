#pragma once

#include <cassert>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "msii/core.hpp"
#include "msii/kadane.hpp"

namespace msii {

// Per-position candidate data used when a negative value is inserted inside
// an interval. For insertion position p (with k the interval of p and
// x* = last_positive[k]), only cells with p < x* are defined:
//   peak[p]        -- latest index in [p, x*] attaining max ms over [p, end(k)]
//   drop_peak[p]   -- index maximizing ms[i] - min(ms[p..i-1]) over (p, end(k)]
//   peak_floor[p]  -- min ms over [p, peak[p]); absent when peak[p] == p
//   drop_floor[p]  -- min ms over [p, drop_peak[p])
template <ScalarType T>
struct GuardArrays {
    std::vector<std::optional<std::size_t>> peak;
    std::vector<std::optional<std::size_t>> drop_peak;
    std::vector<std::optional<T>> peak_floor;
    std::vector<std::optional<T>> drop_floor;
};

// Immutable preprocessing product for noncircular insertion queries.
// All arrays are derivable from `a` in O(n) total time; `query_noncirc`
// reads a fixed number of cells per call.
template <ScalarType T>
struct NoncircIndex {
    std::vector<T> a;
    IntervalPartition partition;

    // interval index of each position; pos n maps to the last interval
    std::vector<std::size_t> k;  // n+1
    // greatest sum of a nonempty subsequence ending at i
    std::vector<T> ms;  // n
    // max{0, ms[j] : j < i}; non-decreasing, best_before[0] = 0
    std::vector<T> best_before;  // n+1
    // max ms over [p, end(interval of p)]
    std::vector<T> best_to_interval_end;  // n
    // per interval: greatest prefix sum, total sum, last strictly positive
    // position (interval start when there is none)
    std::vector<T> interval_prefix_best;     // lambda
    std::vector<T> interval_sum;             // lambda
    std::vector<std::size_t> last_positive;  // lambda
    // per interval, absent for the final interval: max ms past the interval,
    // and the greatest sum of a run starting right after the interval
    std::vector<std::optional<T>> best_after_interval;  // lambda
    std::vector<std::optional<T>> reach_after_interval; // lambda

    GuardArrays<T> guard;

    std::size_t n() const { return a.size(); }
    std::size_t num_intervals() const { return partition.size(); }
};

// Computes the guard arrays one interval at a time, right to left. Within
// an interval [beg, end] with x* = last positive position, cells exist for
// p in [beg, x*). The running candidates are the tallest remaining peak
// (peak) and the best peak measured from the valley floor before it
// (drop_peak); a fixed comparison per step keeps the better of the two.
template <ScalarType T>
GuardArrays<T> compute_guard_arrays(std::span<const T> ms, const IntervalPartition& partition,
                                    std::span<const std::size_t> last_positive) {
    const std::size_t n = ms.size();
    GuardArrays<T> g;
    g.peak.assign(n, std::nullopt);
    g.drop_peak.assign(n, std::nullopt);
    g.peak_floor.assign(n, std::nullopt);
    g.drop_floor.assign(n, std::nullopt);

    for (std::size_t k = 0; k < partition.size(); ++k) {
        const std::size_t beg = partition[k].beg;
        const std::size_t xs = last_positive[k];
        if (xs <= beg) continue;  // no positive element: no cells in this interval

        std::size_t peak = xs;
        std::size_t drop_peak = xs;
        T peak_floor = ms[xs - 1];
        T drop_floor = ms[xs - 1];

        auto store = [&](std::size_t p) {
            g.peak[p] = peak;
            g.drop_peak[p] = drop_peak;
            g.drop_floor[p] = drop_floor;
            if (peak > p) g.peak_floor[p] = peak_floor;
        };
        store(xs - 1);

        for (std::size_t p = xs - 1; p-- > beg;) {
            if (ms[p] > ms[peak]) {
                peak = p;
                peak_floor = ms[p];  // placeholder; the cell is exposed as absent
            } else {
                peak_floor = std::min(ms[p], peak_floor);
                drop_floor = std::min(ms[p], drop_floor);
                if (ms[peak] - peak_floor >= ms[drop_peak] - drop_floor) {
                    drop_peak = peak;
                    drop_floor = peak_floor;
                }
            }
            store(p);
        }
    }
    return g;
}

// O(n) preprocessing pass for noncircular insertion queries. An empty
// sequence yields a degenerate index with no arrays.
template <ScalarType T>
NoncircIndex<T> preprocess_noncirc(std::vector<T> a) {
    check_overflow_bound(std::span<const T>{a});
    NoncircIndex<T> idx;
    idx.a = std::move(a);
    const std::size_t n = idx.a.size();
    if (n == 0) return idx;

    idx.ms = ms_at(std::span<const T>{idx.a});
    idx.partition = interval_partition_noncirc(std::span<const T>{idx.ms});
    const std::size_t lambda = idx.partition.size();

    idx.k.resize(n + 1);
    for (std::size_t i = 0; i < lambda; ++i) {
        for (std::size_t p = idx.partition[i].beg; p <= idx.partition[i].end; ++p) idx.k[p] = i;
    }
    idx.k[n] = lambda - 1;

    idx.best_before.resize(n + 1);
    idx.best_before[0] = 0;
    for (std::size_t i = 0; i < n; ++i) {
        idx.best_before[i + 1] = std::max(idx.best_before[i], idx.ms[i]);
    }

    idx.best_to_interval_end.resize(n);
    for (const Interval& iv : idx.partition.intervals) {
        T running = idx.ms[iv.end];
        idx.best_to_interval_end[iv.end] = running;
        for (std::size_t p = iv.end; p-- > iv.beg;) {
            running = std::max(running, idx.ms[p]);
            idx.best_to_interval_end[p] = running;
        }
    }

    idx.interval_prefix_best.resize(lambda);
    idx.interval_sum.resize(lambda);
    idx.last_positive.resize(lambda);
    for (std::size_t i = 0; i < lambda; ++i) {
        const Interval& iv = idx.partition[i];
        T sum = 0;
        T best_prefix = idx.a[iv.beg];
        std::size_t last_pos = iv.beg;
        for (std::size_t p = iv.beg; p <= iv.end; ++p) {
            sum += idx.a[p];
            best_prefix = std::max(best_prefix, sum);
            if (idx.a[p] > 0) last_pos = p;
        }
        idx.interval_sum[i] = sum;
        idx.interval_prefix_best[i] = best_prefix;
        idx.last_positive[i] = last_pos;
    }

    idx.best_after_interval.assign(lambda, std::nullopt);
    idx.reach_after_interval.assign(lambda, std::nullopt);
    if (lambda > 1) {
        // max ms beyond each interval, accumulated right to left
        T running = idx.ms[idx.partition[lambda - 1].beg];
        for (std::size_t p = idx.partition[lambda - 1].beg; p <= idx.partition[lambda - 1].end; ++p) {
            running = std::max(running, idx.ms[p]);
        }
        idx.best_after_interval[lambda - 2] = running;
        for (std::size_t i = lambda - 2; i-- > 0;) {
            const Interval& iv = idx.partition[i + 1];
            for (std::size_t p = iv.beg; p <= iv.end; ++p) running = std::max(running, idx.ms[p]);
            idx.best_after_interval[i] = running;
        }
        // greatest sum reachable by extending right from just past each
        // interval, by the backwards recurrence over interval aggregates
        idx.reach_after_interval[lambda - 2] = idx.interval_prefix_best[lambda - 1];
        for (std::size_t i = lambda - 2; i-- > 0;) {
            idx.reach_after_interval[i] =
                std::max(idx.interval_prefix_best[i + 1],
                         idx.interval_sum[i + 1] + *idx.reach_after_interval[i + 1]);
        }
    }

    idx.guard = compute_guard_arrays(std::span<const T>{idx.ms}, idx.partition,
                                     std::span<const std::size_t>{idx.last_positive});
    return idx;
}

// Greatest sum of a contiguous, possibly empty subsequence of the sequence
// obtained by inserting `x` at position `p` of the indexed sequence.
// O(1) worst case; the inserted sequence is never materialized.
template <ScalarType T>
T query_noncirc(const NoncircIndex<T>& idx, T x, std::size_t p) {
    const std::size_t n = idx.n();
    if (p > n) throw std::out_of_range("position out of range");
    if (n == 0) return std::max(T{0}, x);

    // elements strictly left of the insertion are unaffected
    T best = idx.best_before[p];
    // the maximal sum ending at the inserted element itself
    best = std::max(best, x + (p == 0 ? T{0} : std::max(T{0}, idx.ms[p - 1])));

    if (p == n) return std::max(best, T{0});
    const std::size_t k = idx.k[p];
    const Interval& iv = idx.partition[k];

    if (x >= 0) {
        // everything from p to the end of p's interval gains exactly x
        best = std::max(best, x + idx.best_to_interval_end[p]);
        if (k + 1 < idx.num_intervals()) {
            // past the interval: either the old maximum survives or a run
            // through x, the rest of the interval and beyond overtakes it
            best = std::max(best, *idx.best_after_interval[k]);
            best = std::max(best, x + idx.interval_sum[k] + *idx.reach_after_interval[k]);
        }
    } else {
        // maximal sums in [p, end(k)] decrease by at most dec_p, clamped by
        // the smallest ms crossed on the way; only two candidates matter
        const T dec_p = (p == iv.beg) ? T{0} : std::min(-x, idx.ms[p - 1]);
        if (p >= idx.last_positive[k]) {
            best = std::max(best, idx.ms[p] - dec_p);
        } else {
            const std::size_t peak = *idx.guard.peak[p];
            const std::size_t drop_peak = *idx.guard.drop_peak[p];
            const T dec_peak = (peak == p) ? dec_p : std::min(dec_p, *idx.guard.peak_floor[p]);
            const T dec_drop = std::min(dec_p, *idx.guard.drop_floor[p]);
            best = std::max(best, idx.ms[peak] - dec_peak);
            best = std::max(best, idx.ms[drop_peak] - dec_drop);
        }
        if (k + 1 < idx.num_intervals()) {
            best = std::max(best, *idx.best_after_interval[k]);
        }
    }
    return std::max(best, T{0});
}

}  // namespace msii
