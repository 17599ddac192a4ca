#include <chrono>
#include <cstdint>
#include <iomanip>
#include <ostream>
#include <span>
#include <vector>

#include "msii/circular.hpp"
#include "msii/cli.hpp"
#include "msii/kadane.hpp"
#include "msii/noncircular.hpp"
#include "msii/prng.hpp"
#include "text_io.hpp"

namespace msii::cli {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// O(n) circular maximum for the per-query baseline: the best noncircular
// window, or the total minus the cheapest window for the wrapping case.
std::int64_t naive_circ_max(std::span<const std::int64_t> a) {
    if (a.empty()) return 0;
    std::int64_t total = a[0];
    std::int64_t cur_max = a[0], best_max = a[0];
    std::int64_t cur_min = a[0], best_min = a[0];
    for (std::size_t i = 1; i < a.size(); ++i) {
        cur_max = a[i] + std::max<std::int64_t>(cur_max, 0);
        best_max = std::max(best_max, cur_max);
        cur_min = a[i] + std::min<std::int64_t>(cur_min, 0);
        best_min = std::min(best_min, cur_min);
        total += a[i];
    }
    return std::max({std::int64_t{0}, best_max, total - best_min});
}

void mix_into(std::uint64_t& checksum, std::int64_t answer) {
    checksum = (checksum ^ static_cast<std::uint64_t>(answer)) * 1099511628211ULL;
}

}  // namespace

int run_bench(const BenchOptions& opt, std::ostream& out) {
    SplitMix64 rng(opt.seed);
    std::vector<std::int64_t> a(opt.n);
    for (auto& v : a) v = rng.range(-50, 50);
    std::vector<std::int64_t> xs(opt.m);
    std::vector<std::size_t> ps(opt.m);
    for (std::size_t i = 0; i < opt.m; ++i) {
        xs[i] = rng.range(-50, 50);
        ps[i] = static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(opt.n)));
    }

    out << "n=" << opt.n << " m=" << opt.m << " seed=" << opt.seed
        << " mode=" << (opt.circular ? "circular" : "noncircular") << "\n";
    out << std::fixed << std::setprecision(3);

    std::uint64_t fast_checksum = 14695981039346656037ULL;
    double preprocess_ms = 0;
    double query_ms = 0;
    if (opt.circular) {
        auto t0 = Clock::now();
        const CircIndex<std::int64_t> idx = preprocess_circ(a);
        preprocess_ms = ms_since(t0);
        auto t1 = Clock::now();
        for (std::size_t i = 0; i < opt.m; ++i) {
            mix_into(fast_checksum, query_circ(idx, xs[i], ps[i]));
        }
        query_ms = ms_since(t1);
    } else {
        auto t0 = Clock::now();
        const NoncircIndex<std::int64_t> idx = preprocess_noncirc(a);
        preprocess_ms = ms_since(t0);
        auto t1 = Clock::now();
        for (std::size_t i = 0; i < opt.m; ++i) {
            mix_into(fast_checksum, query_noncirc(idx, xs[i], ps[i]));
        }
        query_ms = ms_since(t1);
    }
    out << "preprocess_ms=" << preprocess_ms << "\n";
    out << "query_ms=" << query_ms << "\n";
    out << "total_ms=" << (preprocess_ms + query_ms) << "\n";
    out << "checksum=" << std::hex << fast_checksum << std::dec << "\n";

    if (!opt.naive) return 0;

    std::uint64_t naive_checksum = 14695981039346656037ULL;
    std::vector<std::int64_t> scratch;
    scratch.reserve(opt.n + 1);
    auto t2 = Clock::now();
    for (std::size_t i = 0; i < opt.m; ++i) {
        scratch.assign(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(ps[i]));
        scratch.push_back(xs[i]);
        scratch.insert(scratch.end(), a.begin() + static_cast<std::ptrdiff_t>(ps[i]), a.end());
        const std::int64_t answer =
            opt.circular ? naive_circ_max(std::span<const std::int64_t>{scratch})
                         : max_sum(std::span<const std::int64_t>{scratch});
        mix_into(naive_checksum, answer);
    }
    const double naive_ms = ms_since(t2);
    out << "naive_ms=" << naive_ms << "\n";
    const double fast_ms = preprocess_ms + query_ms;
    out << "speedup=" << (fast_ms > 0 ? naive_ms / fast_ms : 0.0) << "\n";
    out << "checksum_match=" << (naive_checksum == fast_checksum ? "yes" : "no") << "\n";
    return naive_checksum == fast_checksum ? 0 : 1;
}

}  // namespace msii::cli
