#include <doctest.h>

#include "cdim/constructions.hpp"
#include "cdim/embedding.hpp"
#include "cdim/gale.hpp"
#include "cdim/theorems.hpp"

using namespace cdim;

TEST_CASE("cyclic configurations") {
    PointConfiguration s = cyclic_config(4, 3);
    CHECK(s.point(2) == QVec{rat(3), rat(9), rat(27)});
    CHECK(is_j_neighborly_primal(cyclic_config(6, 4), 2).verdict);

    // cyclic(2i+4, 2i+2) witnesses the k=1 skeleton bound
    for (size_t i : {0UL, 1UL}) {
        PointConfiguration c = cyclic_config(2 * i + 4, 2 * i + 2);
        CHECK(is_i_preserving(c, 1, i, PreserveMethod::Direct).preserving);
    }

    // cyclic(n, n-1): all points affinely independent
    PointConfiguration simplex_like = cyclic_config(5, 4);
    CHECK(simplex_like.affine_rank() == 4);
}

TEST_CASE("simplex with barycenter") {
    PointConfiguration s4 = simplex_with_barycenter(4);
    CHECK(s4.dim() == 2);
    CHECK(s4.size() == 4);
    CHECK_FALSE(is_j_almost_neighborly_primal(s4, 1).verdict);
    CHECK(is_i_preserving(s4, 2, 0, PreserveMethod::Direct).preserving);

    // n=6, k=3, i=1 sits in the almost-neighborly regime
    CHECK(is_i_preserving(simplex_with_barycenter(6), 3, 1).preserving);
    // n=5, k=2, i=1: k < i+2, not preserving
    CHECK_FALSE(is_i_preserving(simplex_with_barycenter(5), 2, 1).preserving);
}

TEST_CASE("direct sums and pyramids") {
    PointConfiguration cross = direct_sum(simplex_config(1), simplex_config(1));
    CHECK(cross.dim() == 2);
    CHECK(cross.size() == 4);
    // a quadrilateral with crossing diagonals: in convex position
    for (size_t p = 0; p < 4; ++p) CHECK(is_vertex(cross.points(), p).vertex);

    CHECK(pyramid(cross, 0).points() == cross.points());
    PointConfiguration pyr = pyramid(cross, 1);
    CHECK(pyr.dim() == 3);
    CHECK(pyr.size() == 5);
    CHECK(pyr.spans());

    // pyr_r(Delta_a + Delta_b): min(a,b)-neighborly, (min+r)-almost, not more
    PointConfiguration p = pyramid(direct_sum(simplex_config(1), simplex_config(2)), 1);
    GaleTransform g = gale_transform(p);
    CHECK(is_j_neighborly_dual(g, 1).verdict);
    CHECK_FALSE(is_j_neighborly_dual(g, 2).verdict);
    CHECK(is_j_almost_neighborly_dual(g, 2).verdict);
    CHECK_FALSE(is_j_almost_neighborly_dual(g, 3).verdict);
}

TEST_CASE("balanced direct sum matches the preservation threshold") {
    PointConfiguration s = direct_sum(simplex_config(2), simplex_config(2));  // n=6
    CHECK(characterize(s, 2, 0).clause != Clause::NotPreserving);   // 2+0+1 <= 3
    CHECK(characterize(s, 2, 1).clause == Clause::NotPreserving);   // 2+1+1 > 3
    CHECK(characterize(s, 1, 1).clause != Clause::NotPreserving);   // 1+1+1 <= 3
}

TEST_CASE("multipartite lift: published small instance") {
    auto [s, h] = multipartite_lift(3, 2, 2);
    CHECK(s.dim() == 3);
    REQUIRE(s.size() == 6);
    CHECK(s.point(0) == QVec{rat(-1), rat(-1), rat(1)});
    CHECK(s.point(1) == QVec{rat(-2), rat(-2), rat(4)});
    CHECK(s.point(2) == QVec{rat(1), rat(0), rat(1)});
    CHECK(s.point(3) == QVec{rat(2), rat(0), rat(4)});
    CHECK(s.point(4) == QVec{rat(0), rat(1), rat(1)});
    CHECK(s.point(5) == QVec{rat(0), rat(2), rat(4)});
    CHECK(h.edges.size() == 12);
    CHECK(is_convex_embedding(s, h).embedding);

    // (k+1, k, 1): facet barycenters of a simplex are in convex position
    auto [s2, h2] = multipartite_lift(4, 3, 1);
    CHECK(h2.edges.size() == 4);
    CHECK(is_convex_embedding(s2, h2).embedding);

    CHECK_THROWS_AS(multipartite_lift(2, 2, 1), std::invalid_argument);
}

TEST_CASE("multipartite lift edge count is C(d,k) n^k") {
    auto [s, h] = multipartite_lift(3, 2, 3);
    CHECK(h.edges.size() == 27);  // 3 * 3^2
    auto [s2, h2] = multipartite_lift(4, 3, 2);
    CHECK(h2.edges.size() == 32);  // C(4,3) * 2^3
}

TEST_CASE("de Caen bound") {
    CHECK(de_caen_bound(10, 3, 5) == rat(105));
    CHECK(de_caen_bound(9, 2, 2) == rat(0));  // l = k forbids every edge
    // k=2, l=6: coefficient tends to (1 - 1/5)/2 = 2/5 of n^2/... check a large n
    Rational b = de_caen_bound(1000, 2, 6);
    Rational nk = rat(1000 * 999 / 2);
    CHECK(b / nk == Rational(1) - Rational(995) / Rational(999) / Rational(5));
}

TEST_CASE("n_kd: published spot values and the d=1 specials") {
    CHECK_FALSE(n_kd(5, 7).infinite);
    CHECK(n_kd(5, 7).value == 9);
    CHECK(n_kd(2, 3).value == 5);
    CHECK(n_kd(7, 14).infinite);
    CHECK(n_kd(1, 1).value == 2);
    CHECK(n_kd(2, 1).value == 2);
    CHECK(n_kd(3, 1).value == 3);
    CHECK(n_kd(1, 2).infinite);
}

TEST_CASE("gamma bounds") {
    auto [lo, hi] = gamma_bounds(2, 3);
    CHECK(lo == rat(1, 3));
    CHECK(hi == rat(2, 5));

    // lower bound improves on the k-partite construction: C(d,k)/d^k >= (1/k)^k
    auto [lo34, hi34] = gamma_bounds(3, 4);
    CHECK(lo34 == rat(1, 16));
    CHECK(lo34 >= rat(1, 27));

    // d = k+1: C(k+1,k)/(k+1)^k = 1/(k+1)^{k-1}
    for (size_t k = 2; k <= 4; ++k) {
        auto [lo2, hi2] = gamma_bounds(k, k + 1);
        Rational expect = 1;
        for (size_t i = 1; i + 1 <= k; ++i) expect /= static_cast<long>(k + 1);
        CHECK(lo2 == expect);
    }
}

TEST_CASE("halfspace upper bound") {
    CHECK(halfspace_upper_bound(7, 0) == 2);
    CHECK(halfspace_upper_bound(5, 2) == 22);
    CHECK(halfspace_upper_bound(3, 2) == 8);
}
