#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "msii/circular.hpp"
#include "msii/cli.hpp"
#include "msii/noncircular.hpp"
#include "msii/oracle.hpp"
#include "msii/prng.hpp"
#include "text_io.hpp"

namespace msii::cli {
namespace {

using I64 = std::int64_t;
using Seq = std::vector<I64>;

struct Report {
    std::ostream& out;
    std::size_t cases = 0;
    bool failed = false;

    // Records the first counterexample and keeps counting.
    void check(bool ok, const Seq& a, I64 x, std::size_t p, const char* mode, I64 got, I64 want) {
        ++cases;
        if (ok || failed) return;
        failed = true;
        out << "FAIL: " << mode << " query mismatch\n  sequence = [";
        for (std::size_t i = 0; i < a.size(); ++i) out << (i ? ", " : "") << a[i];
        out << "]\n  x = " << x << ", p = " << p << "\n  got " << got << ", expected " << want
            << "\n";
    }
};

void run_queries(Report& report, const Seq& a, std::span<const I64> xs) {
    const NoncircIndex<I64> nc = preprocess_noncirc(a);
    const CircIndex<I64> c = preprocess_circ(a);
    const std::span<const I64> view{a};
    for (std::size_t p = 0; p <= a.size(); ++p) {
        for (const I64 x : xs) {
            const I64 got_nc = query_noncirc(nc, x, p);
            const I64 want_nc = oracle::brute_query_noncirc(view, x, p);
            report.check(got_nc == want_nc, a, x, p, "noncircular", got_nc, want_nc);
            const I64 got_c = query_circ(c, x, p);
            const I64 want_c = oracle::brute_query_circ(view, x, p);
            report.check(got_c == want_c, a, x, p, "circular", got_c, want_c);
        }
    }
}

bool sample_checks(std::ostream& out) {
    const Seq sample_mixed = {2, -7, 4, -25, 22, -19, -8, 4, 1, -6, -3, 5, 11, -18, 8, 10};
    const Seq sample_nonneg = {-2, 1, -3, 5, -3, 4, 3, -6, 3, 2, 1, -5, 2, 3};
    const std::vector<I64> sample_nonneg_mcs = {7, 8, 5, 8, 5, 8, 11, 5, 7, 9, 10, 5, 6, 9};
    const std::vector<std::size_t> sample_nonneg_origin = {3, 3, 3, 5, 5, 8, 8, 8, 12, 12, 12, 12, 3, 3};

    bool ok = true;
    auto expect = [&](bool cond, const char* what) {
        if (!cond) {
            out << "FAIL: sample check: " << what << "\n";
            ok = false;
        }
    };

    expect(max_sum(std::span<const I64>{sample_mixed}) == 22, "noncircular maximum of the worked sample");
    const NoncircIndex<I64> nc = preprocess_noncirc(sample_mixed);
    expect(query_noncirc(nc, I64{12}, 8) == 24, "noncircular insertion into the worked sample");
    const CircIndex<I64> c = preprocess_circ(sample_mixed);
    expect(max_circ_sum_of(c) == 22, "circular maximum of the worked sample");
    expect(query_circ(c, I64{12}, 8) == 26, "circular insertion into the worked sample");
    expect(c.type == SeqType::type2, "type of the mixed-sign sample with negative circular sums");

    const auto [mcs, origin] = compute_mcs_omcs(std::span<const I64>{sample_nonneg});
    expect(mcs == sample_nonneg_mcs, "circular sums of the all-nonnegative sample");
    expect(origin == sample_nonneg_origin, "origins of the all-nonnegative sample");
    expect(classify_type(std::span<const I64>{sample_nonneg}, std::span<const I64>{mcs}) == SeqType::type3,
           "type of the all-nonnegative sample");
    return ok;
}

}  // namespace

int run_selftest(std::size_t max_len, std::ostream& out) {
    Report report{out};
    if (!sample_checks(out)) report.failed = true;

    // exhaustive: every sequence up to max_len over {-2, -1, 1, 2},
    // every position, a fixed spread of inserted values
    const I64 alphabet[] = {-2, -1, 1, 2};
    const I64 xs[] = {-3, -2, -1, 0, 1, 3};
    for (std::size_t len = 0; len <= max_len && !report.failed; ++len) {
        std::size_t combos = 1;
        for (std::size_t i = 0; i < len; ++i) combos *= 4;
        for (std::size_t code = 0; code < combos && !report.failed; ++code) {
            Seq a(len);
            std::size_t rest = code;
            for (std::size_t i = 0; i < len; ++i) {
                a[i] = alphabet[rest % 4];
                rest /= 4;
            }
            run_queries(report, a, xs);
        }
    }

    // randomized: lengths 6..8 over {-2..2}
    SplitMix64 rng(0x5e1f7e57);
    const I64 random_xs[] = {-3, -1, 0, 2};
    for (std::size_t round = 0; round < 2000 && !report.failed; ++round) {
        Seq a(static_cast<std::size_t>(rng.range(6, 8)));
        for (auto& v : a) v = rng.range(-2, 2);
        run_queries(report, a, random_xs);
    }

    if (report.failed) {
        out << "selftest: FAIL after " << report.cases << " cases\n";
        return 1;
    }
    out << "selftest: PASS (" << report.cases << " cases)\n";
    return 0;
}

}  // namespace msii::cli
