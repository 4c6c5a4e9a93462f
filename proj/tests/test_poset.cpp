#include "bnspecht/errors.hpp"
#include "bnspecht/poset.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace bnspecht;

namespace {

bool contains(const std::vector<Bipartition>& v, const Bipartition& b)
{
    return std::find(v.begin(), v.end(), b) != v.end();
}

} // namespace

TEST_CASE("partition coverings (Brylawski)")
{
    auto below = partition_coverings_below({3, 2, 2});
    CHECK(std::find(below.begin(), below.end(), Partition{3, 2, 1, 1}) != below.end());
    below = partition_coverings_below({4, 1, 1});
    CHECK(std::find(below.begin(), below.end(), Partition{3, 2, 1}) != below.end());
    CHECK(partition_coverings_below({1, 1, 1, 1}).empty());
    CHECK(partition_coverings_below({}).empty());
}

TEST_CASE("partition covering closure equals dominance for n <= 10")
{
    for (int n = 1; n <= 10; ++n) {
        auto parts = enumerate_partitions(n);
        auto geq = oracle::relation_matrix(parts, [](const Partition& a, const Partition& b) { return dominates(a, b); });
        auto expected_cov = oracle::covers_from_order(geq);
        std::vector<std::vector<bool>> cov(parts.size(), std::vector<bool>(parts.size()));
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (const auto& q : partition_coverings_below(parts[i])) {
                auto j = static_cast<std::size_t>(std::find(parts.begin(), parts.end(), q) - parts.begin());
                REQUIRE(j < parts.size());
                cov[i][j] = true;
            }
        CHECK(cov == expected_cov);
        CHECK(oracle::closure(cov) == geq);
    }
}

TEST_CASE("bipartition coverings match the pairwise oracle for n <= 6")
{
    for (int n = 0; n <= 6; ++n) {
        auto bp = enumerate_bipartitions(n);
        auto geq = oracle::relation_matrix(bp, [](const Bipartition& a, const Bipartition& b) { return bidominates(a, b); });
        auto expected_cov = oracle::covers_from_order(geq);
        auto diagram = hasse_diagram(n);
        std::vector<std::vector<bool>> cov(bp.size(), std::vector<bool>(bp.size()));
        for (const auto& [u, v] : diagram.edges)
            cov[u][v] = true;
        for (std::size_t i = 0; i < bp.size(); ++i)
            for (std::size_t j = 0; j < bp.size(); ++j)
                if (cov[i][j] != expected_cov[i][j])
                    FAIL_CHECK(bp[i].to_string() << " covers " << bp[j].to_string() << ": generator says " << cov[i][j]
                                                 << ", oracle says " << expected_cov[i][j]);
        CHECK(oracle::closure(cov) == geq);
    }
}

TEST_CASE("covering examples")
{
    // type (3) with i = 2
    const Bipartition upper{{3, 2, 2, 1}, {2, 1, 1, 1}};
    const Bipartition lower{{3, 1, 1, 1}, {2, 2, 2, 1}};
    auto covs = classify_coverings_below(upper);
    auto it = std::find_if(covs.begin(), covs.end(), [&](const Covering& c) { return c.lower == lower; });
    REQUIRE(it != covs.end());
    CHECK(it->type == 3);
    CHECK(it->first_row == 2);

    // the non-covering: three strict intermediates
    const Bipartition top{{3, 3, 2, 1}, {2, 2, 2, 1}};
    const Bipartition bottom{{3, 2, 2, 2}, {2, 2, 2, 1}};
    CHECK(bidominates(top, bottom));
    CHECK_FALSE(contains(bipartition_coverings_below(top), bottom));
    const std::vector<Bipartition> between{
        {{3, 3, 2, 2}, {2, 2, 1, 1}}, {{3, 3, 3, 2}, {2, 1, 1, 1}}, {{3, 2, 2, 2}, {2, 2, 2, 1}}};
    for (std::size_t k = 0; k + 1 < between.size(); ++k) {
        CHECK(bidominates(top, between[k]));
        CHECK(bidominates(between[k], bottom));
        CHECK(top != between[k]);
    }

    const Bipartition minimum{{}, {1, 1, 1, 1}};
    CHECK(bipartition_coverings_below(minimum).empty());
}

TEST_CASE("each covering type occurs and the example diagrams are coverings")
{
    // type (1), i = 2, k = 4
    const Bipartition t1_up{{3, 3, 2, 1}, {2, 2, 2, 2}}, t1_low{{3, 2, 2, 2}, {2, 2, 2, 2}};
    // type (2), i = 1, k = 4
    const Bipartition t2_up{{3, 3, 3, 3, 3}, {3, 2, 2, 1}}, t2_low{{3, 3, 3, 3, 3}, {2, 2, 2, 2}};
    // type (4), i = 1
    const Bipartition t4_up{{3, 1, 1, 1, 1}, {2, 2, 2, 2, 1}}, t4_low{{3, 2, 2, 2, 2}, {1, 1, 1, 1, 1}};
    for (auto [up, low, type] : {std::tuple{t1_up, t1_low, 1}, std::tuple{t2_up, t2_low, 2}, std::tuple{t4_up, t4_low, 4}}) {
        auto covs = classify_coverings_below(up);
        auto it = std::find_if(covs.begin(), covs.end(), [&](const Covering& c) { return c.lower == low; });
        REQUIRE_MESSAGE(it != covs.end(), up.to_string() << " -> " << low.to_string());
        CHECK(it->type == type);
    }
}

TEST_CASE("hasse diagram structure")
{
    auto d2 = hasse_diagram(2);
    auto idx = [&](const Bipartition& b) { return *d2.index_of(b); };
    auto has_edge = [](const HasseDiagram& d, std::size_t u, std::size_t v) {
        return std::find(d.edges.begin(), d.edges.end(), std::pair{u, v}) != d.edges.end();
    };
    CHECK(has_edge(d2, idx({{2}, {}}), idx({{1}, {1}})));
    CHECK(has_edge(d2, idx({{1}, {1}}), idx({{1, 1}, {}})));
    CHECK(d2.vertices.front() == Bipartition{{2}, {}});
    CHECK(d2.vertices.back() == Bipartition{{}, {1, 1}});

    auto lengths3 = maximal_chain_lengths(hasse_diagram(3));
    CHECK(lengths3.count(6) == 1);
    CHECK(lengths3.count(7) == 1);

    // n = 4: no meet for a and b
    const Bipartition a{{2}, {1, 1}}, b{{2, 2}, {}}, c{{2, 1, 1}, {}}, d{{}, {2, 2}};
    CHECK(contains(bipartition_coverings_below(a), c));
    CHECK(contains(bipartition_coverings_below(b), c));
    CHECK(bidominates(a, d));
    CHECK(bidominates(b, d));
    CHECK_FALSE(bidominates(c, d));
    CHECK_FALSE(bidominates(d, c));

    const std::string dot = to_dot(d2);
    CHECK(dot.find("label=\"((2),())\"") != std::string::npos);
    CHECK(dot.find("v0 -> v2;") != std::string::npos);
}

TEST_CASE("covering chains")
{
    const Bipartition a{{3, 2}, {2, 1}}, b{{2, 1, 1}, {3, 1}};
    auto chain = covering_chain(a, b);
    REQUIRE_FALSE(chain.empty());
    CHECK(chain.back().lower == b);
    Bipartition prev = a;
    for (const auto& step : chain) {
        CHECK(bidominates(prev, step.lower));
        prev = step.lower;
    }
    CHECK(covering_chain(a, a).empty());
    CHECK_THROWS_AS(covering_chain(b, a), RejectedInput);
}
