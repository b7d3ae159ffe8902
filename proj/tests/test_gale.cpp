#include <doctest.h>

#include "cdim/constructions.hpp"
#include "cdim/gale.hpp"
#include "support/generators.hpp"

using namespace cdim;
using cdim::testing::triangle_plus_barycenter;
using cdim::testing::unit_square;

namespace {

GaleTransform explicit_gale(std::vector<QVec> vectors) {
    GaleTransform g;
    g.n = vectors.size();
    g.dim = vectors.empty() ? 0 : vectors[0].size();
    g.vectors = std::move(vectors);
    return g;
}

bool proportional(const std::vector<QVec>& a, const QVec& ref) {
    // one-dimensional transforms: compare as a single vector up to scale
    QVec flat;
    for (const auto& v : a) {
        REQUIRE(v.size() == 1);
        flat.push_back(v[0]);
    }
    size_t p = 0;
    while (p < flat.size() && flat[p] == 0) ++p;
    if (p == flat.size() || ref[p] == 0) return false;
    Rational scale = flat[p] / ref[p];
    for (size_t i = 0; i < flat.size(); ++i)
        if (flat[i] != scale * ref[i]) return false;
    return true;
}

}  // namespace

TEST_CASE("gale transforms of the running examples") {
    GaleTransform sq = gale_transform(unit_square());
    CHECK(sq.dim == 1);
    CHECK(proportional(sq.vectors, {rat(1), rat(-1), rat(-1), rat(1)}));

    GaleTransform tb = gale_transform(triangle_plus_barycenter());
    CHECK(tb.dim == 1);
    CHECK(proportional(tb.vectors, {rat(1), rat(1), rat(1), rat(-3)}));

    GaleTransform simplex = gale_transform(simplex_config(3));
    CHECK(simplex.dim == 0);  // isomorphism regime
    CHECK(simplex.vectors.size() == 4);
}

TEST_CASE("non-spanning configurations are rejected with the rank found") {
    PointConfiguration flat(2, {{rat(0), rat(0)}, {rat(1), rat(1)}, {rat(2), rat(2)}});
    CHECK_THROWS_AS(gale_transform(flat), NonSpanningError);
    try {
        gale_transform(flat);
    } catch (const NonSpanningError& e) {
        CHECK(e.rank_found == 1);
    }
}

TEST_CASE("primal neighborliness on the square") {
    PointConfiguration sq = unit_square();
    CHECK(is_j_neighborly_primal(sq, 1).verdict);  // convex position
    NeighborlinessCertificate c = is_j_neighborly_primal(sq, 2);
    CHECK_FALSE(c.verdict);
    CHECK(c.violating_subset == std::vector<size_t>{0, 3});  // a diagonal pair
}

TEST_CASE("cyclic polytopes reach floor(d/2)-neighborliness") {
    CHECK(is_j_neighborly_primal(cyclic_config(6, 4), 2).verdict);
    CHECK_FALSE(is_j_neighborly_primal(cyclic_config(6, 4), 3).verdict);
}

TEST_CASE("dual neighborliness on explicit one-dimensional transforms") {
    GaleTransform m1 = explicit_gale({{rat(1)}, {rat(-1)}, {rat(-1)}, {rat(1)}});
    CHECK(is_j_neighborly_dual(m1, 1).verdict);        // each open ray holds two
    CHECK_FALSE(is_j_neighborly_dual(m1, 2).verdict);  // 2 < 3
    CHECK(is_j_almost_neighborly_dual(m1, 1).verdict);

    GaleTransform m2 = explicit_gale({{rat(1)}, {rat(1)}, {rat(1)}, {rat(-3)}});
    CHECK(is_j_neighborly_dual(m2, 0).verdict);
    CHECK_FALSE(is_j_neighborly_dual(m2, 1).verdict);  // negative ray holds one
    CHECK_FALSE(is_j_almost_neighborly_dual(m2, 1).verdict);

    GaleTransform pair = explicit_gale({{rat(1)}, {rat(-1)}});
    CHECK(is_j_almost_neighborly_dual(pair, 0).verdict);
}

TEST_CASE("almost-neighborliness: interior point and diagonal pair") {
    PointConfiguration tb = triangle_plus_barycenter();
    CHECK(is_j_almost_neighborly_primal(tb, 0).verdict);
    NeighborlinessCertificate c = is_j_almost_neighborly_primal(tb, 1);
    CHECK_FALSE(c.verdict);
    CHECK(c.violating_subset == std::vector<size_t>{3});  // the interior point

    // square: a diagonal pair lies in no common proper face
    NeighborlinessCertificate sq = is_j_almost_neighborly_primal(unit_square(), 2);
    CHECK_FALSE(sq.verdict);
    CHECK(sq.violating_subset == std::vector<size_t>{0, 3});
}

TEST_CASE("dual separators are substitution-checkable") {
    GaleTransform m2 = explicit_gale({{rat(1)}, {rat(1)}, {rat(1)}, {rat(-3)}});
    NeighborlinessCertificate c = is_j_neighborly_dual(m2, 1);
    REQUIRE_FALSE(c.verdict);
    CHECK(check_dual_separator(m2, c));
}

TEST_CASE("central symmetry: 0 always in relint of a facet-normal pair") {
    for (const PointConfiguration& s : {unit_square(), triangle_plus_barycenter(),
                                        cyclic_config(6, 3)}) {
        GaleTransform g = gale_transform(s);
        for (const auto& m : g.vectors)
            CHECK(zero_in_relative_interior({m, Rational(-1) * m}, g.dim));
    }
}

TEST_CASE("primal and dual verdicts agree on the examples") {
    for (const PointConfiguration& s : {unit_square(), triangle_plus_barycenter()}) {
        GaleTransform g = gale_transform(s);
        for (size_t j = 0; j <= 3; ++j) {
            CHECK(is_j_neighborly_primal(s, j).verdict == is_j_neighborly_dual(g, j).verdict);
            CHECK(is_j_almost_neighborly_primal(s, j).verdict ==
                  is_j_almost_neighborly_dual(g, j).verdict);
        }
    }
}
