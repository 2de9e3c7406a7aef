#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "markovlab/chebyshev.hpp"
#include "markovlab/error.hpp"
#include "markovlab/partition.hpp"
#include "markovlab/rng.hpp"

using namespace markovlab;

namespace {

// Number of standard tableaux by brute force over all fillings.
long syt_count(const Partition& p)
{
    const int n = p.size();
    std::vector<std::pair<int, int>> cells;
    for (std::size_t i = 0; i < p.length(); ++i)
        for (int j = 0; j < p.rows()[i]; ++j)
            cells.emplace_back(static_cast<int>(i), j);
    std::vector<int> fill(static_cast<std::size_t>(n));
    std::iota(fill.begin(), fill.end(), 1);
    long count = 0;
    do {
        std::map<std::pair<int, int>, int> at;
        for (std::size_t c = 0; c < cells.size(); ++c)
            at[cells[c]] = fill[c];
        bool ok = true;
        for (const auto& [cell, v] : at) {
            auto right = at.find({cell.first, cell.second + 1});
            auto down = at.find({cell.first + 1, cell.second});
            if ((right != at.end() && right->second < v) || (down != at.end() && down->second < v)) {
                ok = false;
                break;
            }
        }
        count += ok;
    } while (std::next_permutation(fill.begin(), fill.end()));
    return count;
}

// Values of a diagram by definition: sum over outer |x - a| minus sum over inner |x - b|.
double profile(const std::vector<int>& outer, const std::vector<int>& inner, double x)
{
    double v = 0.0;
    for (int a : outer)
        v += std::abs(x - a);
    for (int b : inner)
        v -= std::abs(x - b);
    return v;
}

}  // namespace

TEST_CASE("Partition basics")
{
    const Partition p({7, 4, 4, 3, 1});
    CHECK(p.size() == 19);
    CHECK(p.length() == 5);
    CHECK(p.to_string() == "7,4,4,3,1");
    CHECK(Partition::parse("7, 4,4,3,1") == p);
    CHECK(Partition::parse("").empty());
    CHECK_THROWS_AS(Partition({2, 3}), InvalidArgument);
    CHECK_THROWS_AS(Partition({2, 0}), InvalidArgument);
    CHECK_THROWS_AS(Partition::parse("3,x"), InvalidArgument);
    Partition q({2, 2});
    CHECK_THROWS_AS(q.add_box(1), InvalidArgument);
    q.add_box(2);
    CHECK(q == Partition({2, 2, 1}));
}

TEST_CASE("corners examples")
{
    CornerData c = corners(Partition());
    CHECK(c.outer == std::vector<int>{0});
    CHECK(c.inner.empty());
    c = corners(Partition({1}));
    CHECK(c.outer == std::vector<int>{-1, 1});
    CHECK(c.inner == std::vector<int>{0});
    c = corners(Partition({7, 4, 4, 3, 1}));
    CHECK(c.outer == std::vector<int>{-5, -3, 0, 3, 7});
    CHECK(c.inner == std::vector<int>{-4, -1, 1, 6});
}

TEST_CASE("corners interlace and outer rows are addable")
{
    for (int n = 0; n <= 10; ++n)
        for (const Partition& p : partitions_of(n)) {
            const CornerData c = corners(p);
            REQUIRE(c.outer.size() == c.inner.size() + 1);
            for (std::size_t i = 0; i < c.inner.size(); ++i) {
                CHECK(c.outer[i] < c.inner[i]);
                CHECK(c.inner[i] < c.outer[i + 1]);
            }
            const auto rows = outer_corner_rows(p);
            REQUIRE(rows.size() == c.outer.size());
            for (std::size_t j = 0; j < rows.size(); ++j) {
                Partition q = p;
                q.add_box(rows[j]);
                const int col = q.rows()[rows[j]] - 1;
                CHECK(col - static_cast<int>(rows[j]) == c.outer[j]);
            }
        }
}

TEST_CASE("transition_measure examples")
{
    const AtomicMeasure e = transition_measure(Partition());
    CHECK(e.size() == 1);
    CHECK(e.atom(0) == 0.0);
    const AtomicMeasure one = transition_measure(Partition({1}));
    CHECK(one.weight(0) == doctest::Approx(0.5));
    CHECK(one.weight(1) == doctest::Approx(0.5));
    const AtomicMeasure two = transition_measure(Partition({2}));
    CHECK(two.atom(0) == -1.0);
    CHECK(two.atom(1) == 2.0);
    CHECK(two.weight(0) == doctest::Approx(2.0 / 3.0));
    CHECK(two.weight(1) == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("dim_hook examples")
{
    CHECK(dim_hook(Partition({1})) == 1);
    CHECK(dim_hook(Partition({2, 1})) == 2);
    CHECK(dim_hook(Partition()) == 1);
    BigInt s = 0;
    for (const Partition& p : partitions_of(5))
        s += dim_hook(p) * dim_hook(p);
    CHECK(s == 120);
    CHECK(factorial(5) == 120);
}

TEST_CASE("dim_hook agrees with brute-force tableau counts")
{
    for (int n = 1; n <= 7; ++n)
        for (const Partition& p : partitions_of(n))
            CHECK(dim_hook(p) == syt_count(p));
}

TEST_CASE("partitions_of counts")
{
    const int pn[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
    for (int n = 0; n <= 12; ++n)
        CHECK(partitions_of(n).size() == static_cast<std::size_t>(pn[n]));
    const auto p4 = partitions_of(4);
    CHECK(p4.front() == Partition({4}));
    CHECK(p4.back() == Partition({1, 1, 1, 1}));
}

TEST_CASE("sum of squared dimensions and the branching rule")
{
    for (int n = 1; n <= 12; ++n) {
        BigInt s = 0;
        for (const Partition& p : partitions_of(n)) {
            const BigInt d = dim_hook(p);
            s += d * d;
            // dim lambda = sum over partitions obtained by removing a corner
            BigInt branch = 0;
            for (std::size_t i = 0; i < p.length(); ++i) {
                const int next = i + 1 < p.length() ? p.rows()[i + 1] : 0;
                if (p.rows()[i] > next) {
                    std::vector<int> r = p.rows();
                    if (--r[i] == 0)
                        r.pop_back();
                    branch += dim_hook(Partition(r));
                }
            }
            CHECK(branch == d);
        }
        CHECK(s == factorial(n));
    }
}

TEST_CASE("transition weights equal ratios of dimensions")
{
    for (int n = 0; n <= 12; ++n)
        for (const Partition& p : partitions_of(n)) {
            const auto rows = outer_corner_rows(p);
            const auto exact = transition_weights_exact(p);
            const AtomicMeasure mu = transition_measure(p);
            REQUIRE(exact.size() == rows.size());
            REQUIRE(mu.size() == rows.size());
            const BigInt d = dim_hook(p);
            Rational total = 0;
            for (std::size_t j = 0; j < rows.size(); ++j) {
                Partition q = p;
                q.add_box(rows[j]);
                const BigInt den = d * (n + 1);
                const Rational ref(dim_hook(q), den);
                CHECK(exact[j] == ref);
                CHECK(std::abs(mu.weight(j) - static_cast<double>(ref)) <= 1e-12);
                total += exact[j];
            }
            CHECK(total == 1);
            CHECK(std::abs(mu.moment(1)) <= 1e-12);
        }
}

TEST_CASE("plancherel_grow distribution for n = 2 and n = 3")
{
    CHECK(plancherel_grow(0, 1).empty());
    const int M = 100000;
    std::map<std::string, int> c2, c3;
    for (int s = 0; s < M; ++s) {
        ++c2[plancherel_grow(2, derive_seed(1, streams::plancherel, s)).to_string()];
        ++c3[plancherel_grow(3, derive_seed(2, streams::plancherel, s)).to_string()];
    }
    auto within = [&](int count, double p) {
        const double sd = std::sqrt(M * p * (1 - p));
        return std::abs(count - M * p) <= 3 * sd;
    };
    CHECK(c2.size() == 2);
    CHECK(within(c2["2"], 0.5));
    CHECK(within(c2["1,1"], 0.5));
    CHECK(c3.size() == 3);
    CHECK(within(c3["3"], 1.0 / 6));
    CHECK(within(c3["1,1,1"], 1.0 / 6));
    CHECK(within(c3["2,1"], 4.0 / 6));
}

TEST_CASE("plancherel chain is a growth path")
{
    const auto chain = plancherel_chain(30, 5);
    REQUIRE(chain.size() == 31);
    CHECK(chain.front().empty());
    for (std::size_t i = 1; i < chain.size(); ++i) {
        CHECK(chain[i].size() == static_cast<int>(i));
        const auto& a = chain[i - 1].rows();
        const auto& b = chain[i].rows();
        int diff = 0;
        for (std::size_t r = 0; r < b.size(); ++r)
            diff += b[r] - (r < a.size() ? a[r] : 0);
        CHECK(diff == 1);
    }
    CHECK(chain.back() == plancherel_grow(30, 5));
}

TEST_CASE("partition_diagram examples")
{
    const Diagram e = partition_diagram(Partition());
    for (double x : {-2.0, 0.0, 1.5})
        CHECK(e(x) == doctest::Approx(std::abs(x)));
    CHECK(partition_diagram(Partition({1}))(0.0) == doctest::Approx(2.0));
    const Diagram f = partition_diagram(Partition({7, 4, 4, 3, 1}));
    for (double x : uniform_grid(-8.0, 9.0, 0.05))
        CHECK(f(x) == doctest::Approx(profile({7, 3, 0, -3, -5}, {6, 1, -1, -4}, x)).epsilon(1e-12));
}

TEST_CASE("partition_diagram traces the rotated Young diagram")
{
    // area between the profile and |x| is twice the number of boxes
    for (const Partition& p : partitions_of(8)) {
        const Diagram d = partition_diagram(p);
        double area = 0.0;
        const double h = 1e-3;
        for (double x = -12.0 + h / 2; x < 12.0; x += h)
            area += (d(x) - std::abs(x)) * h;
        CHECK(area == doctest::Approx(2.0 * p.size()).epsilon(1e-6));
    }
}

TEST_CASE("Plancherel diagrams approach the LSVK shape")
{
    const int n = 10000;
    const Partition p = plancherel_grow(n, 2718);
    const Diagram d = rescale_diagram(partition_diagram(p), std::sqrt(static_cast<double>(n)));
    const auto grid = uniform_grid(-3.0, 3.0, 0.01);
    CHECK(diagram_sup_distance(d, lsvk_shape, grid) <= 0.15);
}
