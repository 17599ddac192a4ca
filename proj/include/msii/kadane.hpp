#pragma once

#include <cassert>
#include <span>
#include <stdexcept>
#include <vector>

#include "msii/core.hpp"

namespace msii {

// Greatest sum of a contiguous, possibly empty subsequence of `a`.
// Always >= 0 since the empty subsequence counts.
template <ScalarType T>
T max_sum(std::span<const T> a) {
    T best = 0;
    T ending_here = 0;
    for (const T v : a) {
        ending_here = v + (ending_here > 0 ? ending_here : T{0});
        if (ending_here > best) best = ending_here;
    }
    return best;
}

// ms[i] = greatest sum of a nonempty contiguous subsequence ending at i.
// Satisfies ms[0] = a[0] and ms[i+1] = a[i+1] + max{0, ms[i]}.
template <ScalarType T>
std::vector<T> ms_at(std::span<const T> a) {
    if (a.empty()) throw std::invalid_argument("empty");
    std::vector<T> ms(a.size());
    ms[0] = a[0];
    for (std::size_t i = 1; i < a.size(); ++i) {
        ms[i] = a[i] + (ms[i - 1] > 0 ? ms[i - 1] : T{0});
    }
    return ms;
}

// Partition induced by the discontinuities of the running maximal sums:
// an interval ends right after every index with ms[i] < 0, except that the
// final interval always ends at n-1. Every suffix of every interval but
// the last has negative sum.
template <ScalarType T>
IntervalPartition interval_partition_noncirc(std::span<const T> ms) {
    if (ms.empty()) throw std::invalid_argument("empty");
    IntervalPartition part;
    std::size_t beg = 0;
    for (std::size_t i = 0; i + 1 < ms.size(); ++i) {
        if (ms[i] < 0) {
            part.intervals.push_back({beg, i});
            beg = i + 1;
        }
    }
    part.intervals.push_back({beg, ms.size() - 1});
    return part;
}

}  // namespace msii
