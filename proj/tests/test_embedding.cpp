#include <doctest.h>

#include "cdim/constructions.hpp"
#include "cdim/embedding.hpp"
#include "support/generators.hpp"

using namespace cdim;
using cdim::testing::triangle_plus_barycenter;
using cdim::testing::unit_square;

TEST_CASE("k-barycenters of the unit square: parallelogram midpoint coincidence") {
    std::vector<Barycenter> b = k_barycenters(unit_square(), 2);
    REQUIRE(b.size() == 6);
    CHECK(b[0].subset == std::vector<size_t>{0, 1});
    CHECK(b[0].point == QVec{rat(1, 2), rat(0)});
    // {1,4} and {2,3} both land on the center
    CHECK(b[2].subset == std::vector<size_t>{0, 3});
    CHECK(b[3].subset == std::vector<size_t>{1, 2});
    CHECK(b[2].point == b[3].point);
    CHECK(b[2].point == QVec{rat(1, 2), rat(1, 2)});
}

TEST_CASE("k-barycenters: k=1 returns the configuration; distinct midpoints") {
    PointConfiguration tb = triangle_plus_barycenter();
    std::vector<Barycenter> own = k_barycenters(tb, 1);
    for (size_t i = 0; i < tb.size(); ++i) CHECK(own[i].point == tb.point(i));

    std::vector<Barycenter> mids = k_barycenters(tb, 2);
    REQUIRE(mids.size() == 6);
    for (size_t a = 0; a < 6; ++a)
        for (size_t b2 = a + 1; b2 < 6; ++b2) CHECK(mids[a].point != mids[b2].point);
    // x+y at the {1,4} midpoint is 1, strictly below the other five
    CHECK(mids[2].point == QVec{rat(1, 2), rat(1, 2)});
}

TEST_CASE("is_vertex with certificates") {
    std::vector<QVec> square = unit_square().points();
    VertexCheck corner = is_vertex(square, 0);
    CHECK(corner.vertex);
    CHECK(check_vertex_certificate(square, 0, corner));

    // the center among the six square midpoints is the midpoint of two others
    std::vector<QVec> mids;
    for (const auto& b : k_barycenters(unit_square(), 2)) mids.push_back(b.point);
    VertexCheck center = is_vertex(mids, 2);
    CHECK_FALSE(center.vertex);
    CHECK(check_vertex_certificate(mids, 2, center));

    // apex of the triangle-plus-barycenter midpoint set: minimizes x+y
    std::vector<QVec> tb_mids;
    for (const auto& b : k_barycenters(triangle_plus_barycenter(), 2)) tb_mids.push_back(b.point);
    VertexCheck apex = is_vertex(tb_mids, 2);
    CHECK(apex.vertex);
    CHECK(check_vertex_certificate(tb_mids, 2, apex));
}

TEST_CASE("convex embeddings of K_4^(2)") {
    Hypergraph k42 = Hypergraph::complete(4, 2);
    EmbeddingReport good = is_convex_embedding(triangle_plus_barycenter(), k42);
    CHECK(good.embedding);  // witnesses cd(K_4^(2)) <= 2
    CHECK(good.certificates.size() == 6);

    EmbeddingReport bad = is_convex_embedding(unit_square(), k42);
    CHECK_FALSE(bad.embedding);
    REQUIRE(bad.collision.has_value());
    CHECK(bad.collision->first == std::vector<size_t>{0, 3});
    CHECK(bad.collision->second == std::vector<size_t>{1, 2});
}

TEST_CASE("moment curve: 2k+2 points embed the complete k-uniform hypergraph") {
    PointConfiguration s = cyclic_config(6, 4);
    EmbeddingReport rep = is_convex_embedding(s, Hypergraph::complete(6, 2));
    CHECK(rep.embedding);
}

TEST_CASE("duplicate points are a first-class error") {
    CHECK_THROWS_AS(PointConfiguration(2, {{rat(1), rat(1)}, {rat(1), rat(1)}}),
                    DuplicatePointsError);
}

TEST_CASE("k-set polytope vertices") {
    std::vector<Barycenter> sq = kset_polytope_vertices(unit_square(), 2);
    REQUIRE(sq.size() == 4);  // the four edge midpoints; the doubled center drops out
    for (const auto& b : sq) CHECK(b.point != QVec{rat(1, 2), rat(1, 2)});

    CHECK(kset_polytope_vertices(triangle_plus_barycenter(), 2).size() == 6);

    PointConfiguration collinear(1, {{rat(0)}, {rat(1)}, {rat(5)}});
    std::vector<Barycenter> ends = kset_polytope_vertices(collinear, 1);
    REQUIRE(ends.size() == 2);
    CHECK(ends[0].subset == std::vector<size_t>{0});
    CHECK(ends[1].subset == std::vector<size_t>{2});
}

TEST_CASE("direct preservation on the square: center vertex collapses") {
    PointConfiguration sq = unit_square();
    HypersimplexFace diag;
    diag.vertex_face = true;
    diag.ones = {0, 3};
    diag.zeros = {1, 2};
    PreservationReport rep = strictly_preserved_direct(sq, 2, diag);
    CHECK_FALSE(rep.preserved);
    CHECK(rep.violation == "coincidence");

    HypersimplexFace side;
    side.vertex_face = true;
    side.ones = {0, 1};
    side.zeros = {2, 3};
    PreservationReport ok = strictly_preserved_direct(sq, 2, side);
    CHECK(ok.preserved);
    CHECK(ok.strictly_preserved);
}

TEST_CASE("gale preservation agrees on the square and carries certificates") {
    PointConfiguration sq = unit_square();
    Hypersimplex h(4, 2);
    for (const auto& f : i_faces(h, 0)) {
        PreservationReport d = strictly_preserved_direct(sq, 2, f);
        PreservationReport g = strictly_preserved_gale(sq, 2, f);
        CHECK(d.preserved == g.preserved);
        CHECK(d.strictly_preserved == g.strictly_preserved);
    }
}

TEST_CASE("every vertex face of the triangle-plus-barycenter projection is strict") {
    PointConfiguration tb = triangle_plus_barycenter();
    Hypersimplex h(4, 2);
    for (const auto& f : i_faces(h, 0)) {
        PreservationReport rep = strictly_preserved_direct(tb, 2, f);
        CHECK(rep.preserved);
        CHECK(rep.strictly_preserved);
    }
}

TEST_CASE("moment-curve edge preservation tracks neighborliness") {
    // 8 points in R^6 are 3-neighborly: every edge of the (8,2)-hypersimplex
    // is strictly preserved.
    PointConfiguration s8 = cyclic_config(8, 6);
    Hypersimplex h8(8, 2);
    for (const auto& f : i_faces(h8, 1)) {
        PreservationReport rep = strictly_preserved_gale(s8, 2, f);
        CHECK(rep.strictly_preserved);
    }

    // 6 points in R^4 are only 2-neighborly and d(6,2,1) = 5, so some edge of
    // the (6,2)-hypersimplex must fail; both methods must agree on which.
    PointConfiguration s6 = cyclic_config(6, 4);
    Hypersimplex h6(6, 2);
    size_t failing = 0;
    for (const auto& f : i_faces(h6, 1)) {
        PreservationReport g = strictly_preserved_gale(s6, 2, f);
        PreservationReport d = strictly_preserved_direct(s6, 2, f);
        CHECK(g.strictly_preserved == d.strictly_preserved);
        if (!g.strictly_preserved) ++failing;
    }
    CHECK(failing > 0);
}

TEST_CASE("i-preserving skeleta") {
    PointConfiguration tb = triangle_plus_barycenter();
    CHECK(is_i_preserving(tb, 2, 0, PreserveMethod::Direct).preserving);
    SkeletonReport edges = is_i_preserving(tb, 2, 1, PreserveMethod::Direct);
    CHECK_FALSE(edges.preserving);
    CHECK(edges.failing_face.has_value());

    // 8 moment-curve points in R^6 are 3-neighborly, hence 1-preserving for k=2
    CHECK(is_i_preserving(cyclic_config(8, 6), 2, 1).preserving);
}

TEST_CASE("complement homothety: exact center and ratio") {
    auto [center, ratio] = complement_homothety(unit_square(), 2);
    CHECK(center == QVec{rat(1, 2), rat(1, 2)});
    CHECK(ratio == rat(-1));
    auto [c2, r2] = complement_homothety(triangle_plus_barycenter(), 1);
    CHECK(r2 == rat(-1, 3));
}
