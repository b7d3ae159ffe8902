#ifndef CDIM_HYPERSIMPLEX_HPP
#define CDIM_HYPERSIMPLEX_HPP

#include <cstddef>
#include <vector>

#include "cdim/rational.hpp"

namespace cdim {

// The (n,k)-hypersimplex: convex hull of all 0/1 vectors in R^n with
// coordinate sum k. A simplex for k in {1, n-1}; otherwise (n-1)-dimensional
// with 2n facets x_j >= 0 and x_j <= 1.
struct Hypersimplex {
    size_t n;
    size_t k;
    Hypersimplex(size_t n_, size_t k_);
};

// A face pinned to 1 on I and to 0 on J (Delta^{I,J}). Proper non-vertex
// faces satisfy |I| <= k-1, |J| <= n-k-1 and have dimension n-1-|I|-|J|.
// Vertex faces use the complementary convention |I| = k, |J| = n-k,
// I and J partitioning [n]; the flag records which regime the face is in.
struct HypersimplexFace {
    std::vector<size_t> ones;    // I, 0-based indices, strictly increasing
    std::vector<size_t> zeros;   // J, 0-based indices, strictly increasing
    bool vertex_face = false;

    bool operator==(const HypersimplexFace&) const = default;
};

// Outer normals of the facet pair {x_j >= 0, x_j <= 1} in the concrete
// quotient presentation 1-perp inside R^n: upper = e_j - (1/n) 1 for
// x_j <= 1, lower = -upper. They satisfy lower_j + upper_j = 0 and
// sum_j lower_j = 0 exactly.
struct FacetNormalPair {
    size_t index;
    QVec lower;  // m_j, for x_j >= 0
    QVec upper;  // n_j, for x_j <= 1
};

struct FacetNormals {
    bool simplex_regime = false;  // k in {1, n-1}: only n facets exist
    std::vector<FacetNormalPair> pairs;
};

// All C(n,k) vertices as 0/1 vectors, lexicographically ordered.
std::vector<QVec> vertices(const Hypersimplex& h);

FacetNormals facet_normals(const Hypersimplex& h);

// Complete, duplicate-free enumeration of the i-dimensional faces in
// canonical order (by |I|, then I lex, then J lex). i = 0 yields vertex
// faces; i = n-1 yields the single face (I,J) = (empty, empty).
std::vector<HypersimplexFace> i_faces(const Hypersimplex& h, size_t i);

// Vertices of h lying on the face: coordinate 1 on I, 0 on J.
// Throws on an (I,J) pair violating the face invariants.
std::vector<QVec> face_vertices(const Hypersimplex& h, const HypersimplexFace& f);

// Dimension of a valid face: n - 1 - |I| - |J| for proper faces, 0 for
// vertex faces.
size_t face_dim(const Hypersimplex& h, const HypersimplexFace& f);

void validate_face(const Hypersimplex& h, const HypersimplexFace& f);

unsigned long binomial(size_t n, size_t k);

// All k-subsets of {0,...,n-1} in lexicographic order.
std::vector<std::vector<size_t>> subsets_of_size(size_t n, size_t k);

}  // namespace cdim

#endif
