#include <doctest.h>

#include <algorithm>

#include "cdim/constructions.hpp"
#include "cdim/tables.hpp"
#include "cdim/theorems.hpp"
#include "support/generators.hpp"

using namespace cdim;
using cdim::testing::triangle_plus_barycenter;

TEST_CASE("exceptional sets") {
    CHECK(exceptional_set_A(10, 2) == std::vector<size_t>{1, 2, 3, 7, 8, 9});
    CHECK(exceptional_set_A(4, 2) == std::vector<size_t>{1, 2, 3});
    CHECK(exceptional_set_A(9, 0) == std::vector<size_t>{1, 8});

    CHECK(exceptional_set_C(5, 0) == std::vector<size_t>{1, 2, 3, 4});
    CHECK(exceptional_set_C(10, 2) == std::vector<size_t>{1, 2, 3, 4, 6, 7, 8, 9});
    for (size_t n = 4; n <= 12; ++n) {
        for (size_t i = 0; i <= 3; ++i) {
            std::vector<size_t> c = exceptional_set_C(n, i);
            std::vector<size_t> a = exceptional_set_A(n, i);
            for (size_t v : a) CHECK(std::binary_search(c.begin(), c.end(), v));
            for (size_t extra : {i + 2, n >= i + 2 ? n - i - 2 : 0})
                if (extra >= 1 && extra + 1 <= n)
                    CHECK(std::binary_search(c.begin(), c.end(), extra));
        }
    }
}

TEST_CASE("skeleton dimension formula: published spot values") {
    CHECK(d_skeleton(10, 4, 2) == 8);
    CHECK(d_skeleton(14, 4, 2) == 12);
    CHECK(d_skeleton(3, 2, 2) == 2);
}

TEST_CASE("convex dimension of complete hypergraphs: published spot values") {
    CHECK(cd_complete(6, 2) == 4);
    CHECK(cd_complete(9, 4) == 7);
    CHECK(cd_complete(2, 1) == 1);
    CHECK(cd_complete(3, 2) == 2);
    CHECK(cd_complete(5, 4) == 2);
}

TEST_CASE("strong variant") {
    CHECK(d_strong(5, 2, 0) == 4);  // no strong embedding of K_5^(2) in R^3
    for (size_t n = 10; n <= 14; ++n)
        for (size_t k = 2; k + 1 <= n; ++k)
            for (size_t i = 0; i <= 2; ++i)
                if (n >= 2 * k + 2 * i + 2) CHECK(d_strong(n, k, i) == d_skeleton(n, k, i));
    CHECK(d_strong(8, 3, 1) == 7);

    // the +1 deviation happens exactly at k in {i+2, n-i-2} inside the band
    for (size_t n = 4; n <= 12; ++n) {
        for (size_t k = 1; k + 1 <= n; ++k) {
            for (size_t i = 0; i + 1 <= n && i <= 3; ++i) {
                size_t ds = d_skeleton(n, k, i), dst = d_strong(n, k, i);
                bool band = 2 * k <= n + 2 * i + 1 && n <= 2 * k + 2 * i + 1;
                bool bump = band && (k == i + 2 || k + i + 2 == n);
                if (bump && ds == n - 2) CHECK(dst == ds + 1);
                if (!band || (k != i + 2 && k + i + 2 != n)) CHECK(dst == ds);
            }
        }
    }
}

TEST_CASE("cd equals the i=0 skeleton value everywhere") {
    for (size_t n = 2; n <= 18; ++n)
        for (size_t k = 1; k + 1 <= n; ++k) CHECK(cd_complete(n, k) == d_skeleton(n, k, 0));
}

TEST_CASE("characterize: the three positive clauses") {
    CharacterizationVerdict neigh = characterize(cyclic_config(8, 4), 2, 0);
    CHECK(neigh.clause == Clause::Neighborly);

    CharacterizationVerdict almost = characterize(triangle_plus_barycenter(), 2, 0);
    CHECK(almost.clause == Clause::NotAlmostNeighborly);

    CharacterizationVerdict iso = characterize(simplex_config(4), 2, 0);
    CHECK(std::find(iso.all_clauses.begin(), iso.all_clauses.end(), Clause::Isomorphism) !=
          iso.all_clauses.end());

    CharacterizationVerdict none = characterize(cdim::testing::unit_square(), 2, 0);
    CHECK(none.clause == Clause::NotPreserving);
}

TEST_CASE("characterize reduces k above n/2") {
    PointConfiguration tb = triangle_plus_barycenter();
    CharacterizationVerdict v = characterize(tb, 3, 0);  // k=3 -> effective 1
    CHECK(v.effective_k == 1);
}

TEST_CASE("tables regenerate the published values") {
    CHECK(diff_tables(table_cd_csv(2, 18, 1, 9), expected_cd_csv()).match);
    CHECK(diff_tables(table_d_csv(2, 3, 18, 1, 9), expected_d2_csv()).match);
    CHECK(diff_tables(table_nkd_csv(1, 7, 1, 14), expected_nkd_csv()).match);
}

TEST_CASE("table diff flags an injected mismatch") {
    std::string bad = table_cd_csv(2, 18, 1, 9);
    size_t pos = bad.find(",4");
    bad.replace(pos, 2, ",5");
    TableDiff d = diff_tables(bad, expected_cd_csv());
    CHECK_FALSE(d.match);
    CHECK_FALSE(d.mismatches.empty());
}
