#pragma once

#include <cassert>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "msii/core.hpp"
#include "msii/kadane.hpp"
#include "msii/max_queue.hpp"
#include "msii/noncircular.hpp"

namespace msii {

// Structural classification that drives the circular query assembly.
//   type1 -- all elements >= 0 or all <= 0 (includes n = 0)
//   type2 -- both signs present and some maximal circular sum is negative
//   type3 -- both signs present and every maximal circular sum is >= 0
enum class SeqType { type1, type2, type3 };

// Immutable preprocessing product for circular insertion queries. The
// caller's sequence is canonicalized by a left rotation of `shift`
// positions so that no interval wraps around the boundary; queries remap
// positions internally, so callers always address the original sequence.
template <ScalarType T>
struct CircIndex {
    SeqType type = SeqType::type1;
    T total = 0;           // sum of all elements
    std::size_t len = 0;   // size of the caller's sequence
    std::size_t shift = 0; // left rotation applied to canonicalize

    // Everything below is over the canonicalized sequence and is empty for
    // type 1 indexes (a type 1 answer needs only `total`).
    std::vector<T> a;
    std::vector<T> mcs;                // greatest circular sum ending at i
    std::vector<std::size_t> origin;   // circularly leftmost start attaining mcs[i]
    IntervalPartition partition;       // maximal runs of equal origin
    std::vector<std::size_t> k;        // n: interval index of each position
    std::vector<T> interval_sum;
    std::vector<T> interval_prefix_best;

    // max mcs over [beg(k), p) / [p, end(k)] / within each interval
    std::vector<std::optional<T>> best_before_in_interval;  // n, absent at p = beg(k)
    std::vector<T> best_to_interval_end;                    // n
    std::vector<T> interval_best;                           // lambda
    // min{ 0, sum a[i..j] : beg(k) < i <= j < p }
    std::vector<std::optional<T>> min_inner_window;  // n, absent at p = beg(k)
    // per interval, only when there is more than one interval: best mcs
    // among the other intervals, and the greatest prefix sum of the rest of
    // the circle starting right after the interval
    std::vector<std::optional<T>> other_interval_best;   // lambda
    std::vector<std::optional<T>> reach_after_interval;  // lambda

    // type 3 only: max mcs outside [beg(k), p-1], and the greatest
    // noncircular sum of a[p..end(k)] extended by the rest of the circle
    std::vector<T> best_outside_prefix;  // n
    std::vector<T> best_tail;            // n

    // type 2 only: the noncircular index over the canonical sequence, whose
    // running maximal sums coincide with mcs here
    std::optional<NoncircIndex<T>> nc;

    std::size_t num_intervals() const { return partition.size(); }
};

template <ScalarType T>
SeqType classify_type(std::span<const T> a, std::span<const T> mcs) {
    bool has_pos = false;
    bool has_neg = false;
    for (const T v : a) {
        has_pos |= v > 0;
        has_neg |= v < 0;
    }
    if (!has_pos || !has_neg) return SeqType::type1;
    for (const T v : mcs) {
        if (v < 0) return SeqType::type2;
    }
    return SeqType::type3;
}

// Greatest circular sums ending at each position and their circularly
// leftmost origins, in O(n) total via a max-queue. The queue always holds
// one candidate run per possible origin: pushing a[i] with offset a[i]
// extends every stored run by a[i] and opens the run that starts at i;
// popping retires the origin that has fallen out of the circular window.
// The oldest-maximum rule of the queue yields the leftmost origin directly.
template <ScalarType T>
std::pair<std::vector<T>, std::vector<std::size_t>> compute_mcs_omcs(std::span<const T> a) {
    const std::size_t n = a.size();
    if (n == 0) throw std::invalid_argument("empty");
    std::vector<T> mcs(n);
    std::vector<std::size_t> origin(n);

    MaxQueue<T, std::size_t> queue;
    for (std::size_t i = 0; i < n; ++i) queue.push(a[i], a[i], i);
    mcs[n - 1] = queue.max_key();
    origin[n - 1] = queue.max_sat();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        queue.pop();
        queue.push(a[i], a[i], i);
        mcs[i] = queue.max_key();
        origin[i] = queue.max_sat();
    }
    return {std::move(mcs), std::move(origin)};
}

// Left rotation that makes the origin runs contiguous: the first position
// whose origin differs from its circular predecessor, or the common origin
// itself when every position shares one.
inline std::size_t canonical_shift(std::span<const std::size_t> origin) {
    const std::size_t n = origin.size();
    bool all_equal = true;
    for (std::size_t i = 1; i < n && all_equal; ++i) all_equal = origin[i] == origin[0];
    if (all_equal) return origin[0];
    for (std::size_t i = 0; i < n; ++i) {
        if (origin[sub_mod(i, 1, n)] != origin[i]) return i;
    }
    return 0;  // unreachable
}

// Maximal runs of equal origin values. Requires a canonical array: either
// the run containing position 0 does not wrap, or all origins are 0.
inline std::pair<IntervalPartition, std::vector<std::size_t>> interval_partition_circ(
    std::span<const std::size_t> origin) {
    const std::size_t n = origin.size();
    if (n == 0) throw std::invalid_argument("empty");
    IntervalPartition part;
    std::vector<std::size_t> k(n);
    std::size_t beg = 0;
    for (std::size_t i = 1; i < n; ++i) {
        if (origin[i] != origin[beg]) {
            part.intervals.push_back({beg, i - 1});
            beg = i;
        }
    }
    part.intervals.push_back({beg, n - 1});
    if (part.size() == 1) {
        if (origin[0] != 0) throw std::logic_error("origin array not canonical");
    } else if (origin[n - 1] == origin[0]) {
        throw std::logic_error("origin array not canonical");
    }
    for (std::size_t i = 0; i < part.size(); ++i) {
        for (std::size_t p = part[i].beg; p <= part[i].end; ++p) k[p] = i;
    }
    return {std::move(part), std::move(k)};
}

namespace detail {

// Preprocessing with an explicit canonicalization shift; `preprocess_circ`
// passes the shift computed by `canonical_shift`. Any other rotation that
// keeps the origin runs contiguous is equally valid and must produce an
// index answering every query identically.
template <ScalarType T>
CircIndex<T> preprocess_circ_shifted(std::vector<T> input, std::optional<std::size_t> forced_shift) {
    check_overflow_bound(std::span<const T>{input});
    CircIndex<T> idx;
    idx.len = input.size();
    bool has_pos = false;
    bool has_neg = false;
    for (const T v : input) {
        idx.total += v;
        has_pos |= v > 0;
        has_neg |= v < 0;
    }
    if (!has_pos || !has_neg) {
        idx.type = SeqType::type1;
        return idx;
    }
    const std::size_t n = idx.len;

    auto [mcs, origin] = compute_mcs_omcs(std::span<const T>{input});
    idx.type = classify_type(std::span<const T>{input}, std::span<const T>{mcs});
    idx.shift = forced_shift ? *forced_shift : canonical_shift(origin);
    idx.a = rotate_left(std::move(input), idx.shift);
    idx.mcs = rotate_left(std::move(mcs), idx.shift);
    idx.origin = rotate_left(std::move(origin), idx.shift);
    for (std::size_t& o : idx.origin) o = sub_mod(o, idx.shift, n);
#ifndef NDEBUG
    // shift-and-remap must agree with recomputing from scratch; checked for
    // integral scalars only, since float sums depend on accumulation order
    if constexpr (std::signed_integral<T>) {
        auto [mcs2, origin2] = compute_mcs_omcs(std::span<const T>{idx.a});
        assert(mcs2 == idx.mcs && origin2 == idx.origin);
    }
#endif

    std::tie(idx.partition, idx.k) = interval_partition_circ(std::span<const std::size_t>{idx.origin});
    const std::size_t lambda = idx.num_intervals();

    idx.interval_sum.resize(lambda);
    idx.interval_prefix_best.resize(lambda);
    idx.interval_best.resize(lambda);
    for (std::size_t i = 0; i < lambda; ++i) {
        const Interval& iv = idx.partition[i];
        T sum = 0;
        T best_prefix = idx.a[iv.beg];
        T best_mcs = idx.mcs[iv.beg];
        for (std::size_t p = iv.beg; p <= iv.end; ++p) {
            sum += idx.a[p];
            best_prefix = std::max(best_prefix, sum);
            best_mcs = std::max(best_mcs, idx.mcs[p]);
        }
        idx.interval_sum[i] = sum;
        idx.interval_prefix_best[i] = best_prefix;
        idx.interval_best[i] = best_mcs;
    }

    idx.best_before_in_interval.assign(n, std::nullopt);
    idx.best_to_interval_end.resize(n);
    idx.min_inner_window.assign(n, std::nullopt);
    for (const Interval& iv : idx.partition.intervals) {
        T running = idx.mcs[iv.end];
        idx.best_to_interval_end[iv.end] = running;
        for (std::size_t p = iv.end; p-- > iv.beg;) {
            running = std::max(running, idx.mcs[p]);
            idx.best_to_interval_end[p] = running;
        }
        T forward = idx.mcs[iv.beg];
        for (std::size_t p = iv.beg + 1; p <= iv.end; ++p) {
            idx.best_before_in_interval[p] = forward;
            forward = std::max(forward, idx.mcs[p]);
        }
        // smallest window sum strictly inside (beg, p), via a maximal-sum
        // scan of the negated elements
        T neg_ending = 0;
        T neg_best = 0;
        for (std::size_t p = iv.beg + 1; p <= iv.end; ++p) {
            idx.min_inner_window[p] = -neg_best;
            if (p == iv.end) break;
            neg_ending = -idx.a[p] + std::max(neg_ending, T{0});
            neg_best = std::max(neg_best, neg_ending);
        }
    }

    idx.other_interval_best.assign(lambda, std::nullopt);
    idx.reach_after_interval.assign(lambda, std::nullopt);
    if (lambda > 1) {
        std::vector<T> prefix_best(lambda);
        std::vector<T> suffix_best(lambda);
        prefix_best[0] = idx.interval_best[0];
        for (std::size_t i = 1; i < lambda; ++i) {
            prefix_best[i] = std::max(prefix_best[i - 1], idx.interval_best[i]);
        }
        suffix_best[lambda - 1] = idx.interval_best[lambda - 1];
        for (std::size_t i = lambda - 1; i-- > 0;) {
            suffix_best[i] = std::max(suffix_best[i + 1], idx.interval_best[i]);
        }
        for (std::size_t i = 0; i < lambda; ++i) {
            if (i == 0) {
                idx.other_interval_best[i] = suffix_best[1];
            } else if (i == lambda - 1) {
                idx.other_interval_best[i] = prefix_best[lambda - 2];
            } else {
                idx.other_interval_best[i] = std::max(prefix_best[i - 1], suffix_best[i + 1]);
            }
        }

        // Greatest prefix sum of the circle minus each interval, by the
        // same queue protocol as the circular sums, one push per interval.
        MaxQueue<T, std::size_t> queue;
        for (std::size_t i = lambda; i-- > 1;) {
            queue.push(idx.interval_prefix_best[i], idx.interval_sum[i], i);
        }
        idx.reach_after_interval[0] = queue.max_key();
        for (std::size_t t = lambda; t-- > 1;) {
            const std::size_t next = add_mod(t, 1, lambda);
            queue.pop();
            queue.push(idx.interval_prefix_best[next], idx.interval_sum[next], next);
            idx.reach_after_interval[t] = queue.max_key();
        }
    }

    if (idx.type == SeqType::type2) {
        idx.nc = preprocess_noncirc(idx.a);
        // the running maximal sums and the origin runs coincide for type 2
        if constexpr (std::signed_integral<T>) {
            assert(idx.nc->ms == idx.mcs);
            assert(idx.nc->partition == idx.partition);
        }
    } else {
        idx.best_tail.resize(n);
        idx.best_outside_prefix.resize(n);
        for (std::size_t i = 0; i < lambda; ++i) {
            const Interval& iv = idx.partition[i];
            // best noncircular sum of a[p..end] extended by the best prefix
            // of the rest of the circle, folded in as one pseudo-element
            T starting_here;
            T best;
            if (lambda > 1) {
                starting_here = *idx.reach_after_interval[i];
                best = std::max(T{0}, starting_here);
            } else {
                starting_here = 0;
                best = 0;
            }
            for (std::size_t p = iv.end + 1; p-- > iv.beg;) {
                if (lambda > 1 || p < iv.end) {
                    starting_here = idx.a[p] + std::max(starting_here, T{0});
                } else {
                    starting_here = idx.a[p];
                }
                best = std::max(best, starting_here);
                idx.best_tail[p] = best;
            }
            // max mcs outside [beg, p-1], right to left
            T outside = (lambda > 1) ? std::max(idx.mcs[iv.end], *idx.other_interval_best[i])
                                     : idx.mcs[iv.end];
            idx.best_outside_prefix[iv.end] = outside;
            for (std::size_t p = iv.end; p-- > iv.beg;) {
                outside = std::max(idx.mcs[p], outside);
                idx.best_outside_prefix[p] = outside;
            }
        }
    }
    return idx;
}

}  // namespace detail

// O(n) preprocessing pass for circular insertion queries.
template <ScalarType T>
CircIndex<T> preprocess_circ(std::vector<T> input) {
    return detail::preprocess_circ_shifted(std::move(input), std::nullopt);
}

// Greatest sum of a strictly or circularly contiguous, possibly empty
// subsequence of the sequence obtained by inserting `x` at position `p` of
// the original (unshifted) sequence. O(1) worst case.
template <ScalarType T>
T query_circ(const CircIndex<T>& idx, T x, std::size_t p) {
    const std::size_t n = idx.len;
    if (p > n) throw std::out_of_range("position out of range");
    if (idx.type == SeqType::type1) {
        return std::max(T{0}, idx.total) + std::max(T{0}, x);
    }
    // inserting at position n is the same circular sequence as inserting at 0
    if (p == n) p = 0;
    p = sub_mod(p, idx.shift, n);
    const std::size_t k = idx.k[p];
    const Interval& iv = idx.partition[k];
    const std::size_t lambda = idx.num_intervals();

    if (x >= 0) {
        // ending at the inserted element
        T best = x + std::max(T{0}, idx.mcs[sub_mod(p, 1, n)]);
        // [p, end(k)] all gain exactly x
        best = std::max(best, x + idx.best_to_interval_end[p]);
        if (lambda > 1) {
            if (idx.type == SeqType::type2) {
                // other intervals keep their old best or are overtaken by a
                // run from beg(k) through x and onward
                best = std::max(best, *idx.other_interval_best[k]);
                best = std::max(best, x + idx.interval_sum[k] + *idx.reach_after_interval[k]);
            } else {
                // type 3: every other interval gains exactly x
                best = std::max(best, x + *idx.other_interval_best[k]);
            }
        }
        if (p > iv.beg) {
            // [beg(k), p-1]: old best, or the wrap through x and the whole
            // rest of the circle minus the cheapest inner window
            best = std::max(best, *idx.best_before_in_interval[p]);
            best = std::max(best, x + idx.total - *idx.min_inner_window[p]);
        }
        return best;
    }

    if (idx.type == SeqType::type2) {
        // with a negative insertion the circular maximum equals the
        // noncircular one here
        return query_noncirc(*idx.nc, x, p);
    }

    // type 3, x < 0
    if (p != iv.beg) {
        T best = *idx.best_before_in_interval[p];
        best = std::max(best, x + idx.best_outside_prefix[p]);
        best = std::max(best, idx.best_tail[p]);
        return std::max(best, T{0});
    }
    const std::size_t prev = sub_mod(k, 1, lambda);
    T best = idx.interval_best[prev];
    if (lambda > 1) {
        best = std::max(best, x + *idx.other_interval_best[prev]);
        best = std::max(best, *idx.reach_after_interval[prev]);
    }
    return std::max(best, T{0});
}

// Greatest circular sum of the indexed sequence itself.
template <ScalarType T>
T max_circ_sum_of(const CircIndex<T>& idx) {
    if (idx.type == SeqType::type1) return std::max(T{0}, idx.total);
    T best = 0;
    for (const T v : idx.mcs) best = std::max(best, v);
    return best;
}

}  // namespace msii
