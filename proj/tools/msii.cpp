// msii -- maximal (circular) subsequence sums under single-element
// insertions: batch solver, benchmark harness and self-test runner.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "msii/cli.hpp"

namespace {

// Runs `fn` with either stdin or the file named by `path`.
template <typename Fn>
int with_input(const std::string& path, Fn&& fn) {
    if (path.empty()) return fn(std::cin);
    std::ifstream file(path);
    if (!file) {
        std::cerr << "error: cannot open " << path << "\n";
        return 2;
    }
    return fn(file);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"constant-time maximal (circular) subsequence sum insertion queries"};
    app.require_subcommand(1);

    msii::cli::SolveOptions solve_opt;
    std::string solve_input;
    auto* solve = app.add_subcommand("solve", "answer a batch of insertion queries");
    solve->add_option("--input", solve_input, "read from this file instead of stdin");
    solve->add_flag("--circular", solve_opt.circular, "maximal circular sums instead of noncircular");
    solve->add_flag("--check", solve_opt.check, "cross-validate each answer against the brute-force oracle");
    solve->add_flag("--float", solve_opt.parse_float, "parse scalars as decimals instead of integers");

    msii::cli::BenchOptions bench_opt;
    auto* bench = app.add_subcommand("bench", "time the fast path on a seeded random instance");
    bench->add_option("--n", bench_opt.n, "sequence length")->default_val(1000);
    bench->add_option("--m", bench_opt.m, "number of queries")->default_val(1000);
    bench->add_option("--seed", bench_opt.seed, "instance seed")->default_val(1);
    bench->add_flag("--circular", bench_opt.circular, "benchmark the circular mode");
    bench->add_flag("--naive", bench_opt.naive, "also run the Kadane-per-query strategy and compare");

    std::size_t max_len = 5;
    auto* selftest = app.add_subcommand("selftest", "run the oracle-equivalence suites");
    selftest->add_option("--max-len", max_len, "exhaustive enumeration up to this length")
        ->default_val(5);

    msii::cli::ColmoveOptions colmove_opt;
    std::string colmove_input;
    auto* colmove = app.add_subcommand("colmove", "best single column move of a round matrix");
    colmove->add_option("--input", colmove_input, "read from this file instead of stdin");
    colmove->add_flag("--float", colmove_opt.parse_float, "parse scalars as decimals");

    CLI11_PARSE(app, argc, argv);

    if (solve->parsed()) {
        return with_input(solve_input, [&](std::istream& in) {
            return msii::cli::run_solve(in, std::cout, std::cerr, solve_opt);
        });
    }
    if (bench->parsed()) {
        if (const char* env_seed = std::getenv("MSII_SEED")) {
            bench_opt.seed = std::strtoull(env_seed, nullptr, 10);
        }
        return msii::cli::run_bench(bench_opt, std::cout);
    }
    if (selftest->parsed()) {
        return msii::cli::run_selftest(max_len, std::cout);
    }
    if (colmove->parsed()) {
        return with_input(colmove_input, [&](std::istream& in) {
            return msii::cli::run_colmove(in, std::cout, std::cerr, colmove_opt);
        });
    }
    return 0;
}
