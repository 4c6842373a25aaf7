#include "doctest.h"

#include <functional>
#include <set>

#include "svt/shapes.hpp"
#include "svt/sweep.hpp"
#include "svt/tableaux.hpp"

using namespace svt;

namespace {

// Independent SST counter: fill cells row-major with single letters and
// check the two order conditions directly. Never touches the enumerator.
long long brute_sst_count(const Partition& lambda, int n) {
    SkewShape shape(lambda);
    auto cells = shape.cells_row_major();
    std::vector<int> fill(cells.size(), 0);
    long long count = 0;
    auto value_at = [&](int row, int col) -> int {
        for (std::size_t k = 0; k < cells.size(); ++k)
            if (cells[k].row == row && cells[k].col == col) return fill[k];
        return 0;
    };
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == cells.size()) {
            ++count;
            return;
        }
        for (int v = 1; v <= n; ++v) {
            int left = value_at(cells[k].row, cells[k].col - 1);
            int above = value_at(cells[k].row - 1, cells[k].col);
            if (left != 0 && v < left) continue;
            if (above != 0 && v <= above) continue;
            fill[k] = v;
            rec(k + 1);
            fill[k] = 0;
        }
    };
    rec(0);
    return count;
}

}  // namespace

TEST_CASE("partition construction and canonical form") {
    Partition p({2, 1});
    CHECK(p.size() == 3);
    CHECK(p.length() == 2);
    CHECK(Partition({3, 3, 0, 0}) == Partition({3, 3}));
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
    CHECK(Partition{}.empty());
    CHECK(Partition({0, 0}) == Partition{});
}

TEST_CASE("partition containment and conjugate") {
    Partition lambda({5, 3, 2, 1});
    CHECK(lambda.contains(Partition({3, 2})));
    CHECK_FALSE(Partition({2, 2}).contains(Partition({3})));
    CHECK(Partition({4, 2, 1}).conjugate() == Partition({3, 2, 1, 1}));
    CHECK(Partition{}.conjugate() == Partition{});
}

TEST_CASE("skew shape cells") {
    SkewShape theta(Partition({5, 3, 2, 1}), Partition({3, 2}));
    CHECK(theta.cell_count() == 6);
    std::set<std::pair<int, int>> got;
    for (Cell c : theta.cells_row_major()) got.insert({c.row, c.col});
    std::set<std::pair<int, int>> want{{3, 1}, {4, 1}, {3, 2}, {2, 3}, {1, 4}, {1, 5}};
    CHECK(got == want);

    CHECK(SkewShape(Partition({2, 1})).cell_count() == 3);
    CHECK_THROWS_AS(SkewShape(Partition({2, 2}), Partition({3})), std::invalid_argument);
}

TEST_CASE("row-major and column-major orders") {
    SkewShape plain(Partition({2, 1}));
    CHECK(plain.cells_row_major() == std::vector<Cell>{{1, 1}, {1, 2}, {2, 1}});
    CHECK(plain.cells_column_major() == std::vector<Cell>{{1, 1}, {2, 1}, {1, 2}});

    SkewShape theta(Partition({5, 3, 2, 1}), Partition({3, 2}));
    CHECK(theta.cells_row_major() ==
          std::vector<Cell>{{1, 4}, {1, 5}, {2, 3}, {3, 1}, {3, 2}, {4, 1}});

    SkewShape appb(Partition({5, 3, 3, 2}), Partition({3, 1, 1}));
    CHECK(appb.cells_column_major() ==
          std::vector<Cell>{{4, 1}, {2, 2}, {3, 2}, {4, 2}, {2, 3}, {3, 3}, {1, 4}, {1, 5}});

    CHECK(SkewShape{}.cells_row_major().empty());

    SkewShape single(Partition({1}));
    CHECK(single.cells_column_major() == std::vector<Cell>{{1, 1}});
}

TEST_CASE("column heights") {
    SkewShape appb(Partition({5, 3, 3, 2}), Partition({3, 1, 1}));
    CHECK(appb.column_height(2) == 3);
    CHECK(appb.max_column_height() == 3);
    SkewShape plain(Partition({2, 1}));
    CHECK(plain.column_height(1) == 2);
    CHECK(plain.column_height(3) == 0);
}

TEST_CASE("hook lengths") {
    Partition lambda({2, 1});
    CHECK(hook_length(lambda, {1, 1}) == 3);
    CHECK(hook_length(lambda, {2, 1}) == 1);
    CHECK(hook_length(lambda, {1, 2}) == 1);
    CHECK(hook_length(Partition({1}), {1, 1}) == 1);
    CHECK_THROWS_AS(hook_length(lambda, {2, 2}), std::invalid_argument);
}

TEST_CASE("hook length is symmetric under conjugation") {
    for (const Partition& lambda : partitions_up_to(6)) {
        Partition conj = lambda.conjugate();
        for (int i = 1; i <= lambda.length(); ++i)
            for (int j = 1; j <= lambda.part(i); ++j)
                CHECK(hook_length(lambda, {i, j}) == hook_length(conj, {j, i}));
    }
}

TEST_CASE("hook-content product counts semi-standard tableaux") {
    CHECK(sst_count_hook(Partition({2, 1}), 3) == 8);
    CHECK(brute_sst_count(Partition({2, 1}), 3) == 8);
    CHECK(sst_count_hook(Partition({1}), 7) == 7);
    CHECK(sst_count_hook(Partition({2, 1}), 1) == 0);
    CHECK(sst_count_hook(Partition({2, 1}), 2) == 2);
    CHECK(sst_count_hook(Partition{}, 3) == 1);

    for (const Partition& lambda : partitions_up_to(5))
        for (int n = 1; n <= 3; ++n)
            CHECK(sst_count_hook(lambda, n) == brute_sst_count(lambda, n));
}

TEST_CASE("shape text round trips") {
    CHECK(parse_partition("2,1") == Partition({2, 1}));
    CHECK(parse_partition("") == Partition{});
    CHECK(parse_partition("()") == Partition{});
    CHECK_THROWS_AS(parse_partition("1,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("2, 1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("2,,1"), std::invalid_argument);

    SkewShape theta = parse_shape("5,3,3,2/3,1,1");
    CHECK(theta.outer() == Partition({5, 3, 3, 2}));
    CHECK(theta.inner() == Partition({3, 1, 1}));
    CHECK(format_shape(theta) == "5,3,3,2/3,1,1");
    CHECK(format_shape(SkewShape(Partition({2, 1}))) == "2,1");
    CHECK(format_shape(SkewShape{}) == "()");
    CHECK_THROWS_AS(parse_shape("2,1/1/1"), std::invalid_argument);
}

TEST_CASE("cell count matches row-major length on a shape grid") {
    for (const Instance& inst : instance_grid(4, 1)) {
        auto rm = inst.shape.cells_row_major();
        auto cm = inst.shape.cells_column_major();
        CHECK(static_cast<int>(rm.size()) == inst.shape.cell_count());
        std::set<std::pair<int, int>> a, b;
        for (Cell c : rm) a.insert({c.row, c.col});
        for (Cell c : cm) b.insert({c.row, c.col});
        CHECK(a == b);
    }
}
