#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>

// Command implementations behind the msii tool. Each returns the process
// exit code: 0 on success, 2 on parse/range errors, 1 when a self-test or
// cross-check fails.
namespace msii::cli {

struct SolveOptions {
    bool circular = false;     // answer circular instead of noncircular queries
    bool check = false;        // cross-validate every answer against the oracle
    bool parse_float = false;  // parse scalars as doubles instead of integers
};

// Input: token n, then n scalars, then token m, then m pairs "x p".
// Output: one answer per line, in query order.
int run_solve(std::istream& in, std::ostream& out, std::ostream& err, const SolveOptions& opt);

struct BenchOptions {
    std::size_t n = 1000;
    std::size_t m = 1000;
    std::uint64_t seed = 1;
    bool circular = false;
    bool naive = false;  // also time the Kadane-per-query strategy and compare
};

int run_bench(const BenchOptions& opt, std::ostream& out);

// Exhaustive and randomized oracle-equivalence suites plus the worked
// sample checks; prints a report and the first counterexample on failure.
int run_selftest(std::size_t max_len, std::ostream& out);

struct ColmoveOptions {
    bool parse_float = false;
};

// Input: tokens m, n, then m*n scalars row-major, then a column index k.
// Output: "<position> <cost>" for the cheapest move of column k.
int run_colmove(std::istream& in, std::ostream& out, std::ostream& err,
                const ColmoveOptions& opt);

}  // namespace msii::cli
