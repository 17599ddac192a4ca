#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

namespace msii {

// Element type of all sequences: an exactly comparable, exactly addable
// signed number. The canonical instantiation is std::int64_t; double is
// admissible but loses the exactness guarantees of integer arithmetic.
template <typename T>
concept ScalarType = std::signed_integral<T> || std::floating_point<T>;

// Inclusive index range [beg, end] of a sequence.
struct Interval {
    std::size_t beg = 0;
    std::size_t end = 0;

    std::size_t size() const { return end - beg + 1; }
    bool operator==(const Interval&) const = default;
};

// Division of [0, n-1] into contiguous, nonempty, disjoint intervals that
// cover the whole range in order.
struct IntervalPartition {
    std::vector<Interval> intervals;

    std::size_t size() const { return intervals.size(); }
    const Interval& operator[](std::size_t i) const { return intervals[i]; }
    bool operator==(const IntervalPartition&) const = default;
};

// Index arithmetic modulo n (n > 0).
inline std::size_t add_mod(std::size_t i, std::size_t d, std::size_t n) {
    return (i + d) % n;
}

inline std::size_t sub_mod(std::size_t i, std::size_t d, std::size_t n) {
    d %= n;
    return (i + n - d) % n;
}

// Left-rotate a vector by `shift` positions.
template <typename T>
std::vector<T> rotate_left(std::vector<T> v, std::size_t shift) {
    if (!v.empty()) {
        shift %= v.size();
        std::rotate(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(shift), v.end());
    }
    return v;
}

// All intermediate sums produced by the preprocessing and query algorithms
// are bounded by a small multiple of (n+1) * max|a[i]|. Inputs must keep
// that product comfortably inside the integer range; callers reject inputs
// that do not.
template <std::signed_integral T>
bool within_overflow_bound(std::size_t n, T max_abs) {
    if (max_abs == 0) return true;
    const T limit = std::numeric_limits<T>::max() / 4;
    return static_cast<T>(n) < limit / max_abs;
}

template <ScalarType T>
void check_overflow_bound(std::span<const T> a) {
    if constexpr (std::signed_integral<T>) {
        T max_abs = 0;
        for (const T v : a) {
            if (v == std::numeric_limits<T>::min()) {
                throw std::overflow_error("sequence magnitude exceeds overflow bound");
            }
            const T m = v < 0 ? -v : v;
            if (m > max_abs) max_abs = m;
        }
        if (!within_overflow_bound(a.size() + 1, max_abs)) {
            throw std::overflow_error("sequence magnitude exceeds overflow bound");
        }
    }
}

}  // namespace msii
