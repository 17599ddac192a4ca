#pragma once

#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "msii/core.hpp"

// Brute-force reference implementations, kept deliberately independent of
// the preprocessing/query code paths they are used to check. Quadratic
// time, straight from the definitions.
namespace msii::oracle {

template <ScalarType T>
T brute_max_sum(std::span<const T> a) {
    T best = 0;  // the empty subsequence
    for (std::size_t i = 0; i < a.size(); ++i) {
        T sum = 0;
        for (std::size_t j = i; j < a.size(); ++j) {
            sum += a[j];
            if (sum > best) best = sum;
        }
    }
    return best;
}

template <ScalarType T>
T brute_max_circ_sum(std::span<const T> a) {
    const std::size_t n = a.size();
    T best = 0;
    for (std::size_t i = 0; i < n; ++i) {
        T sum = 0;
        for (std::size_t len = 1; len <= n; ++len) {
            sum += a[(i + len - 1) % n];
            if (sum > best) best = sum;
        }
    }
    return best;
}

// Greatest circular sums ending at each index together with their origins,
// straight from the definition: walk the candidate start backwards from
// each index and keep the farthest start attaining the maximum.
template <ScalarType T>
std::pair<std::vector<T>, std::vector<std::size_t>> brute_omcs(std::span<const T> a) {
    const std::size_t n = a.size();
    if (n == 0) throw std::invalid_argument("empty");
    std::vector<T> mcs(n);
    std::vector<std::size_t> origin(n);
    for (std::size_t i = 0; i < n; ++i) {
        T sum = 0;
        T best = a[i];
        std::size_t best_dist = 0;
        for (std::size_t dist = 0; dist < n; ++dist) {
            sum += a[(i + n - dist) % n];
            if (sum >= best) {
                best = sum;
                best_dist = dist;
            }
        }
        mcs[i] = best;
        origin[i] = (i + n - best_dist) % n;
    }
    return {std::move(mcs), std::move(origin)};
}

template <ScalarType T>
std::vector<T> materialize_insertion(std::span<const T> a, T x, std::size_t p) {
    if (p > a.size()) throw std::out_of_range("position out of range");
    std::vector<T> out;
    out.reserve(a.size() + 1);
    out.insert(out.end(), a.begin(), a.begin() + static_cast<std::ptrdiff_t>(p));
    out.push_back(x);
    out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(p), a.end());
    return out;
}

template <ScalarType T>
T brute_query_noncirc(std::span<const T> a, T x, std::size_t p) {
    const std::vector<T> inserted = materialize_insertion(a, x, p);
    return brute_max_sum(std::span<const T>{inserted});
}

template <ScalarType T>
T brute_query_circ(std::span<const T> a, T x, std::size_t p) {
    const std::vector<T> inserted = materialize_insertion(a, x, p);
    return brute_max_circ_sum(std::span<const T>{inserted});
}

}  // namespace msii::oracle
