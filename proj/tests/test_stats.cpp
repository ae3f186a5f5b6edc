#include <cmath>
#include <limits>
#include <vector>

#include "catch_amalgamated.hpp"
#include "oracles.hpp"
#include "pcmq/random.hpp"
#include "pcmq/stats.hpp"

using namespace pcmq;
using Catch::Approx;

TEST_CASE("pearson coefficient", "[stats]") {
    const std::vector<double> x{1, 2, 3, 4, 5};
    CHECK(pearson(x, std::vector<double>{2, 4, 6, 8, 10}) == Approx(1.0));
    CHECK(pearson(x, std::vector<double>{5, 4, 3, 2, 1}) == Approx(-1.0));
    CHECK(pearson(x, std::vector<double>{2, 1, 4, 3, 5}) == Approx(0.8));
    CHECK_THROWS(pearson(x, std::vector<double>{1, 1, 1, 1, 1}));
    CHECK_THROWS(pearson(x, std::vector<double>{1, 2}));
}

TEST_CASE("average ranks resolve ties", "[stats]") {
    const std::vector<double> x{10, 20, 20, 5, 20};
    const auto r = average_ranks(x);
    CHECK(r == std::vector<double>{2, 4, 4, 1, 4});
}

TEST_CASE("spearman against a brute-force rank oracle", "[stats]") {
    Rng rng(43);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 5 + uniform_index(rng, 40);
        std::vector<double> x(n), y(n);
        for (std::size_t i = 0; i < n; ++i) {
            // Coarse values so ties are frequent.
            x[i] = static_cast<double>(uniform_index(rng, 6));
            y[i] = x[i] + static_cast<double>(uniform_index(rng, 4));
        }
        bool constant = true;
        for (std::size_t i = 1; i < n; ++i) constant = constant && x[i] == x[0];
        if (constant) continue;
        CHECK(spearman(x, y) == Approx(oracle::spearman(x, y)).margin(1e-12));
    }
    const std::vector<double> a{1, 2, 3, 4}, b{1, 8, 27, 64};
    CHECK(spearman(a, b) == Approx(1.0));
}

TEST_CASE("type 7 quantile", "[stats]") {
    std::vector<double> x;
    for (int i = 1; i <= 100; ++i) x.push_back(i);
    CHECK(quantile(x, 0.5) == Approx(50.5));
    CHECK(quantile(x, 0.1) == Approx(10.9));
    CHECK(quantile(x, 0.9) == Approx(90.1));
    CHECK(quantile(std::vector<double>{3.0}, 0.9) == 3.0);
    CHECK_THROWS_AS(quantile(std::vector<double>{}, 0.5), ArgumentError);
    CHECK_THROWS_AS(quantile(x, 0.0), ArgumentError);
    CHECK_THROWS_AS(quantile(x, 1.0), ArgumentError);

    Rng rng(47);
    for (int t = 0; t < 100; ++t) {
        std::vector<double> s(1 + uniform_index(rng, 200));
        for (auto& v : s) v = uniform(rng, -3.0, 3.0);
        for (double p : {0.1, 0.25, 0.5, 0.9}) CHECK(quantile(s, p) == Approx(oracle::quantile7(s, p)).margin(1e-12));
    }
}

TEST_CASE("class partition", "[stats]") {
    std::vector<double> grid;
    for (int i = 0; i <= 100; ++i) grid.push_back(i / 100.0);
    const auto p = make_partition(grid, 4);
    REQUIRE(p.boundaries.size() == 5);
    CHECK(p.boundaries[0] == 0.0);
    CHECK(p.boundaries[1] == Approx(0.25));
    CHECK(p.boundaries[2] == Approx(0.5));
    CHECK(p.boundaries[3] == Approx(0.75));
    CHECK(std::isinf(p.boundaries[4]));
    CHECK(p.locate(0.0) == 1);
    CHECK(p.locate(0.2499) == 1);
    CHECK(p.locate(p.boundaries[1]) == 2);  // half-open
    CHECK(p.locate(0.6) == 3);
    CHECK(p.locate(1e9) == 4);
    CHECK(p.locate(-1e-15) == 1);
    CHECK(p.lower(2) == p.boundaries[1]);
    CHECK(p.upper(4) == p.boundaries[4]);

    const auto three = make_partition(grid, 3);
    REQUIRE(three.boundaries.size() == 4);
    CHECK(three.boundaries[1] == Approx(1.0 / 3));
    CHECK(three.boundaries[2] == Approx(2.0 / 3));

    const auto fifteen = make_partition(grid, 15);
    for (std::size_t c = 2; c + 1 < 15; ++c)
        CHECK(fifteen.boundaries[c] - fifteen.boundaries[c - 1] ==
              Approx((fifteen.boundaries[14] - fifteen.boundaries[1]) / 13));

    CHECK_THROWS_AS(make_partition(std::vector<double>(50, 0.3), 15), PartitionError);
    std::vector<double> many_zeros(100, 0.0);
    many_zeros.back() = 1.0;
    many_zeros[98] = 0.5;
    CHECK_THROWS_AS(make_partition(many_zeros, 4), PartitionError);
    CHECK_THROWS_AS(make_partition(grid, 2), ArgumentError);
    CHECK_THROWS_AS(make_partition(std::vector<double>{0.1, 0.2}, 4), ArgumentError);
}

TEST_CASE("class summaries", "[stats]") {
    Rng rng(53);
    std::vector<double> idx(5000), err(5000);
    for (std::size_t i = 0; i < idx.size(); ++i) {
        idx[i] = uniform(rng, 0.0, 1.0);
        err[i] = idx[i] * uniform(rng, 0.5, 1.5);
    }
    const auto classes = summarize_classes(idx, err, 15);
    REQUIRE(classes.size() == 15);
    std::size_t total = 0;
    for (const auto& c : classes) {
        total += c.count;
        REQUIRE(c.count > 0);
        CHECK(*c.q10 <= *c.median);
        CHECK(*c.median <= *c.q90);
        CHECK(*c.mean_index_value >= c.lower);
        CHECK(*c.mean_index_value < c.upper);
    }
    CHECK(total == idx.size());
    for (auto s : {ClassStatistic::Mean, ClassStatistic::Q10, ClassStatistic::Median, ClassStatistic::Q90})
        CHECK(class_correlation(classes, s).spearman > 0.95);

    // A gap in the sample leaves a middle class empty.
    std::vector<double> gap;
    for (int i = 0; i < 50; ++i) gap.push_back(0.01 + i * 0.001);
    for (int i = 0; i < 50; ++i) gap.push_back(0.9 + i * 0.001);
    const auto holes = summarize_classes(gap, gap, 5);
    bool empty_seen = false;
    for (const auto& c : holes)
        if (c.count == 0) {
            empty_seen = true;
            CHECK_FALSE(c.median.has_value());
            CHECK_FALSE(c.mean_error.has_value());
        }
    CHECK(empty_seen);
    CHECK_THROWS_AS(summarize_classes(idx, std::vector<double>{1.0}, 15), ArgumentError);
}
