#include <doctest.h>

#include <span>
#include <vector>

#include "samples.hpp"
#include "msii/oracle.hpp"

using I64 = std::int64_t;
using Seq = std::vector<I64>;

namespace {
std::span<const I64> view(const Seq& a) { return {a}; }
}  // namespace

TEST_CASE("brute_max_sum") {
    CHECK(msii::oracle::brute_max_sum(view(samples::kNoncirc)) == 22);
    CHECK(msii::oracle::brute_max_sum(view(Seq{})) == 0);
    CHECK(msii::oracle::brute_max_sum(view(Seq{-1, 2, -4, 3})) == 3);
}

TEST_CASE("brute_max_circ_sum") {
    CHECK(msii::oracle::brute_max_circ_sum(view(samples::kCirc)) == 22);
    CHECK(msii::oracle::brute_max_circ_sum(view(Seq{3, -1, 2})) == 5);  // wraps
    CHECK(msii::oracle::brute_max_circ_sum(view(Seq{-3, 0, -7})) == 0);
}

TEST_CASE("brute_omcs") {
    const auto [mcs, origin] = msii::oracle::brute_omcs(view(samples::kType3));
    CHECK(mcs == samples::kType3Mcs);
    CHECK(origin == samples::kType3Origin);

    const auto [m1, o1] = msii::oracle::brute_omcs(view(Seq{9}));
    CHECK(m1 == Seq{9});
    CHECK(o1 == std::vector<std::size_t>{0});

    const auto [m2, o2] = msii::oracle::brute_omcs(view(Seq{1, -1}));
    CHECK(o2 == std::vector<std::size_t>{0, 0});

    CHECK_THROWS_AS(msii::oracle::brute_omcs(view(Seq{})), std::invalid_argument);
}

TEST_CASE("brute insertion queries") {
    CHECK(msii::oracle::brute_query_noncirc(view(samples::kNoncirc), I64{12}, 8) == 24);
    CHECK(msii::oracle::brute_query_noncirc(view(samples::kNoncirc), I64{0}, 3) == 22);
    CHECK(msii::oracle::brute_query_circ(view(samples::kCirc), I64{0}, 3) == 22);
    CHECK_THROWS_AS(msii::oracle::brute_query_circ(view(samples::kCirc), I64{1}, 17),
                    std::out_of_range);
}
