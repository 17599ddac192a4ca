#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <utility>

#include "msii/core.hpp"

namespace msii {

// Queue with FIFO removal whose insertion first adds an offset d to every
// stored key. Supported operations:
//   push(v, d, sat)  -- add d to all current keys, then append key v; O(1) amortized
//   pop()            -- remove the oldest element; O(1) worst case
//   max_key()        -- greatest current key; O(1) worst case
//   max_sat()        -- satellite of the oldest element with the greatest key
//
// Only a descending "staircase" of candidate maxima is stored explicitly;
// elements dominated by a newer key are elided and counted in
// implicit_nexts of the entry that evicted them. Offsets are never applied
// eagerly: each stored entry keeps its original key plus diff_from_next,
// the sum of the offsets applied between its own insertion and the
// insertion of the next stored entry toward the back.
//
// The back of the deque is the oldest stored entry and carries the current
// maximum; keys are non-increasing from back to front. Entries with equal
// keys are all stored, so the maximum reported is always the oldest one.
template <ScalarType K, typename Sat>
class MaxQueue {
public:
    bool empty() const { return entries_.empty(); }

    // Number of elements logically stored (explicit + elided).
    std::size_t size() const { return size_; }

    K max_key() const {
        if (entries_.empty()) throw std::logic_error("peek on empty max-queue");
        return max_value_;
    }

    const Sat& max_sat() const {
        if (entries_.empty()) throw std::logic_error("peek on empty max-queue");
        return entries_.back().sat;
    }

    void push(K value, K offset, Sat sat) {
        std::size_t elided = 0;
        K acc = offset;
        while (!entries_.empty() && entries_.front().orig_value + acc < value) {
            acc += entries_.front().diff_from_next;
            elided += 1 + entries_.front().implicit_nexts;
            entries_.pop_front();
            ++deque_mutations_;
        }
        max_value_ = entries_.empty() ? value : max_value_ + offset;
        entries_.push_front(Entry{value, acc, elided, std::move(sat)});
        ++deque_mutations_;
        ++size_;
    }

    void pop() {
        if (entries_.empty()) throw std::logic_error("pop on empty max-queue");
        Entry& oldest = entries_.back();
        if (oldest.implicit_nexts > 0) {
            // The oldest element was elided by `oldest`; its key can never
            // be the maximum again, so nothing else changes.
            --oldest.implicit_nexts;
        } else {
            const K acc = max_value_ - oldest.orig_value;
            entries_.pop_back();
            ++deque_mutations_;
            if (!entries_.empty()) {
                max_value_ = entries_.back().orig_value + acc - entries_.back().diff_from_next;
            }
        }
        --size_;
    }

    // Total insertions plus deletions performed on the internal deque; at
    // most 3x the number of push/pop calls.
    std::uint64_t deque_mutations() const { return deque_mutations_; }

private:
    struct Entry {
        K orig_value;
        K diff_from_next;
        std::size_t implicit_nexts;
        Sat sat;
    };

    std::deque<Entry> entries_;  // front = newest stored, back = oldest (the maximum)
    K max_value_{};
    std::size_t size_ = 0;
    std::uint64_t deque_mutations_ = 0;
};

}  // namespace msii
