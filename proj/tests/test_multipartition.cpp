#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "cyclo/errors.hpp"
#include "cyclo/multipartition.hpp"

#include "test_util.hpp"

using cyclo::Box;
using cyclo::MultiPartition;
using cyclo::Partition;

namespace {

Partition part(std::vector<long long> p) { return Partition(std::move(p)); }

MultiPartition mp2(std::vector<long long> a, std::vector<long long> b) {
    return MultiPartition({part(std::move(a)), part(std::move(b))});
}

}  // namespace

TEST_CASE("partitions must be weakly decreasing and positive") {
    CHECK(part({4, 2, 2, 1}).size() == 9);
    CHECK(error_code_of([] { Partition({1, 2}); }) == cyclo::errc::bad_partition);
    CHECK(error_code_of([] { Partition({2, 0}); }) == cyclo::errc::bad_partition);
    CHECK(error_code_of([] { Partition({-1}); }) == cyclo::errc::bad_partition);
}

TEST_CASE("row and column lengths are 1-based") {
    Partition p = part({4, 2});
    CHECK(p.row_length(1) == 4);
    CHECK(p.row_length(2) == 2);
    CHECK(p.row_length(3) == 0);
    CHECK(p.col_length(1) == 2);
    CHECK(p.col_length(2) == 2);
    CHECK(p.col_length(3) == 1);
    CHECK(p.col_length(5) == 0);
}

TEST_CASE("boxes carry component and content") {
    MultiPartition nu = mp2({2, 1}, {});
    auto bs = nu.boxes();
    CHECK(bs.size() == 3);
    CHECK(nu.contains(Box{0, 2, 1}));
    CHECK(!nu.contains(Box{0, 2, 2}));
    CHECK(Box{0, 2, 1}.content() == 1);
    CHECK(Box{1, 1, 3}.content() == -2);
}

TEST_CASE("addable and removable boxes of ((2,1),())") {
    MultiPartition nu = mp2({2, 1}, {});
    auto addv = nu.addable_boxes();
    auto remv = nu.removable_boxes();
    std::set<Box> add(addv.begin(), addv.end());
    std::set<Box> rem(remv.begin(), remv.end());
    CHECK(add == std::set<Box>{Box{0, 3, 1}, Box{0, 2, 2}, Box{0, 1, 3}, Box{1, 1, 1}});
    CHECK(rem == std::set<Box>{Box{0, 2, 1}, Box{0, 1, 2}});
}

TEST_CASE("add_box and remove_box validate their argument") {
    MultiPartition nu = mp2({2, 1}, {});
    CHECK(nu.add_box(Box{0, 2, 2}) == mp2({2, 2}, {}));
    CHECK(nu.add_box(Box{1, 1, 1}) == mp2({2, 1}, {1}));
    CHECK(nu.remove_box(Box{0, 2, 1}) == mp2({1, 1}, {}));
    CHECK(error_code_of([&] { nu.add_box(Box{0, 3, 2}); }) == cyclo::errc::not_addable);
    CHECK(error_code_of([&] { nu.remove_box(Box{0, 1, 1}); }) == cyclo::errc::not_addable);
    CHECK(error_code_of([&] { nu.add_box(Box{2, 1, 1}); }) == cyclo::errc::not_addable);
}

TEST_CASE("str and parse round-trip") {
    MultiPartition nu = mp2({4, 2}, {1});
    CHECK(nu.str() == "((4,2),(1))");
    CHECK(MultiPartition::parse("((4,2),(1))") == nu);
    CHECK(MultiPartition::parse("((),())") == MultiPartition(2));
    CHECK(MultiPartition(3).str() == "((),(),())");
    for (const char* bad : {"", "(4,2)", "((4,2)", "((2,3),())", "((a),())"}) {
        CHECK(error_code_of([&] { MultiPartition::parse(bad); }) != "");
    }
}

TEST_CASE("enumeration counts match the generating function") {
    // p(n) for n = 0..9.
    const long long p1[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30};
    for (long long n = 0; n <= 9; ++n)
        CHECK(static_cast<long long>(cyclo::enumerate_partitions(n).size()) == p1[n]);

    // Level-2 counts are the convolution sum_k p(k) p(n-k).
    for (long long n = 0; n <= 9; ++n) {
        long long conv = 0;
        for (long long k = 0; k <= n; ++k) conv += p1[k] * p1[n - k];
        auto mps = cyclo::enumerate_multipartitions(2, n);
        CHECK(static_cast<long long>(mps.size()) == conv);
        CHECK(std::is_sorted(mps.begin(), mps.end()));
        for (const auto& mp : mps) CHECK(mp.size() == n);
    }
    CHECK(cyclo::enumerate_multipartitions(3, 5).size() == 108);
}
