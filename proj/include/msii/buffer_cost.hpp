#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "msii/circular.hpp"
#include "msii/core.hpp"

namespace msii {

// A set of transmission rounds for m nodes: rows are nodes, columns are
// rounds, entry (i, j) is the buffer delta of node i in round j. The rounds
// repeat forever, so the peak buffer need of a node is the greatest
// circular sum of its row.
template <ScalarType T>
using RoundMatrix = std::vector<std::vector<T>>;

template <ScalarType T>
void check_rectangular(const RoundMatrix<T>& m) {
    for (const auto& row : m) {
        if (row.size() != m.front().size()) throw std::invalid_argument("ragged matrix");
    }
}

// Sum over rows of the row's greatest circular sum.
template <ScalarType T>
T matrix_cost(const RoundMatrix<T>& m) {
    if (m.empty()) return 0;
    check_rectangular(m);
    T cost = 0;
    for (const auto& row : m) {
        cost += max_circ_sum_of(preprocess_circ(row));
    }
    return cost;
}

// cost[i][j] = greatest circular sum of row i of `base` with col[i]
// inserted at position j. One circular preprocessing pass per row plus an
// O(1) query per cell: O(m * n) overall. Rows are independent, so callers
// may evaluate them concurrently and merge by row index.
template <ScalarType T>
std::vector<std::vector<T>> insertion_cost_matrix(const RoundMatrix<T>& base,
                                                  const std::vector<T>& col) {
    if (col.size() != base.size()) throw std::invalid_argument("dimension mismatch");
    if (!base.empty()) check_rectangular(base);
    const std::size_t n = base.empty() ? 0 : base.front().size();
    std::vector<std::vector<T>> cost(base.size(), std::vector<T>(n + 1));
    for (std::size_t i = 0; i < base.size(); ++i) {
        const CircIndex<T> idx = preprocess_circ(base[i]);
        for (std::size_t j = 0; j <= n; ++j) {
            cost[i][j] = query_circ(idx, col[i], j);
        }
    }
    return cost;
}

template <ScalarType T>
struct ColumnMove {
    std::size_t position = 0;  // insertion position into the reduced matrix
    T cost = 0;
};

// Cheapest way to move column `col` of `m` somewhere else: remove it,
// evaluate every reinsertion position via insertion_cost_matrix, and take
// the position of minimal total cost (smallest index on ties).
template <ScalarType T>
ColumnMove<T> best_column_move(const RoundMatrix<T>& m, std::size_t col) {
    if (m.empty()) throw std::invalid_argument("empty matrix");
    check_rectangular(m);
    const std::size_t n = m.front().size();
    if (col >= n) throw std::out_of_range("column index out of range");

    RoundMatrix<T> reduced(m.size());
    std::vector<T> moved(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        moved[i] = m[i][col];
        reduced[i].reserve(n - 1);
        for (std::size_t j = 0; j < n; ++j) {
            if (j != col) reduced[i].push_back(m[i][j]);
        }
    }

    const auto cost = insertion_cost_matrix(reduced, moved);
    ColumnMove<T> best;
    for (std::size_t j = 0; j < n; ++j) {
        T total = 0;
        for (std::size_t i = 0; i < m.size(); ++i) total += cost[i][j];
        if (j == 0 || total < best.cost) {
            best.position = j;
            best.cost = total;
        }
    }
    return best;
}

}  // namespace msii
