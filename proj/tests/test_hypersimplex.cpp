#include <doctest.h>

#include <set>

#include "cdim/hypersimplex.hpp"

using namespace cdim;

namespace {

QVec bits(const std::string& s) {
    QVec v;
    for (char c : s) v.push_back(rat(c - '0'));
    return v;
}

}  // namespace

TEST_CASE("vertices of (4,2): the six 0/1 vectors of sum 2, support order") {
    std::vector<QVec> v = vertices(Hypersimplex(4, 2));
    std::vector<QVec> expect = {bits("1100"), bits("1010"), bits("1001"),
                                bits("0110"), bits("0101"), bits("0011")};
    CHECK(v == expect);
}

TEST_CASE("vertices of (n,1) are the standard basis; (5,2) has 10") {
    std::vector<QVec> v = vertices(Hypersimplex(5, 1));
    REQUIRE(v.size() == 5);
    for (size_t i = 0; i < 5; ++i) {
        for (size_t j = 0; j < 5; ++j) CHECK(v[i][j] == (i == j ? 1 : 0));
    }
    CHECK(vertices(Hypersimplex(5, 2)).size() == 10);
}

TEST_CASE("facet normals: explicit (4,2) value and the pairing identities") {
    FacetNormals fn = facet_normals(Hypersimplex(4, 2));
    CHECK_FALSE(fn.simplex_regime);
    CHECK(fn.pairs.size() == 4);
    CHECK(fn.pairs[0].upper == QVec{rat(3, 4), rat(-1, 4), rat(-1, 4), rat(-1, 4)});
    QVec sum(4, rat(0));
    for (const auto& p : fn.pairs) {
        CHECK(is_zero_vec(p.lower + p.upper));
        sum = sum + p.upper;
    }
    CHECK(is_zero_vec(sum));

    CHECK(facet_normals(Hypersimplex(5, 1)).simplex_regime);
}

TEST_CASE("i_faces counts: octahedron edges, (5,2) edges, improper face") {
    CHECK(i_faces(Hypersimplex(4, 2), 1).size() == 12);
    CHECK(i_faces(Hypersimplex(5, 2), 1).size() == 30);

    // adjacency cross-check: edges of (5,2) pair the 2-subsets sharing an element
    std::set<std::pair<std::vector<size_t>, std::vector<size_t>>> adjacent;
    auto subs = subsets_of_size(5, 2);
    for (size_t a = 0; a < subs.size(); ++a)
        for (size_t b = a + 1; b < subs.size(); ++b) {
            std::vector<size_t> inter;
            std::set_intersection(subs[a].begin(), subs[a].end(), subs[b].begin(), subs[b].end(),
                                  std::back_inserter(inter));
            if (inter.size() == 1) adjacent.insert({subs[a], subs[b]});
        }
    CHECK(adjacent.size() == 30);

    std::vector<HypersimplexFace> top = i_faces(Hypersimplex(6, 3), 5);
    REQUIRE(top.size() == 1);
    CHECK(top[0].ones.empty());
    CHECK(top[0].zeros.empty());
}

TEST_CASE("face_vertices: filters, counts, vertex regime") {
    Hypersimplex h(4, 2);
    HypersimplexFace f;
    f.ones = {0};
    f.zeros = {2};
    std::vector<QVec> fv = face_vertices(h, f);
    CHECK(fv == std::vector<QVec>{bits("1100"), bits("1001")});

    HypersimplexFace whole;
    CHECK(face_vertices(h, whole).size() == 6);

    HypersimplexFace vertex;
    vertex.vertex_face = true;
    vertex.ones = {1, 3};
    vertex.zeros = {0, 2};
    std::vector<QVec> vv = face_vertices(h, vertex);
    REQUIRE(vv.size() == 1);
    CHECK(vv[0] == bits("0101"));
}

TEST_CASE("invalid faces are rejected") {
    Hypersimplex h(4, 2);
    HypersimplexFace bad;
    bad.ones = {0, 1};  // |I| = k, but not flagged as a vertex face
    CHECK_THROWS_AS(validate_face(h, bad), std::invalid_argument);

    HypersimplexFace overlap;
    overlap.ones = {0};
    overlap.zeros = {0};
    CHECK_THROWS_AS(validate_face(h, overlap), std::invalid_argument);

    HypersimplexFace vertex_bad;
    vertex_bad.vertex_face = true;
    vertex_bad.ones = {0};
    vertex_bad.zeros = {1, 2, 3};
    CHECK_THROWS_AS(validate_face(h, vertex_bad), std::invalid_argument);
}

TEST_CASE("face dimension formula") {
    Hypersimplex h(6, 3);
    for (size_t i = 1; i + 1 <= 6; ++i)
        for (const auto& f : i_faces(h, i)) CHECK(face_dim(h, f) == i);
}
