#ifndef CDIM_EMBEDDING_HPP
#define CDIM_EMBEDDING_HPP

#include <optional>
#include <string>

#include "cdim/gale.hpp"
#include "cdim/hypersimplex.hpp"
#include "cdim/linear.hpp"
#include "cdim/points.hpp"

namespace cdim {

struct Barycenter {
    std::vector<size_t> subset;  // generating k-subset, sorted
    QVec point;
};

// One entry per k-subset of [n] in lexicographic subset order; the point is
// the arithmetic mean of the chosen points.
std::vector<Barycenter> k_barycenters(const PointConfiguration& s, size_t k);

// Strict-separation vertex test with an exact certificate either way:
// a vertex gets an affine functional with f(p) >= f(q) + 1 for all q != p,
// a non-vertex gets an explicit convex combination from the other points.
struct VertexCheck {
    bool vertex = false;
    QVec functional;  // size d+1: (w, offset); evaluation is <w,x> + offset
    std::vector<size_t> combination_support;  // indices q != p with positive weight
    QVec combination;                          // weights aligned with support
};

VertexCheck is_vertex(const std::vector<QVec>& points, size_t p);

// Substitution-only re-validation of a VertexCheck.
bool check_vertex_certificate(const std::vector<QVec>& points, size_t p, const VertexCheck& c);

struct EmbeddingReport {
    bool embedding = false;
    // Coincident barycenters, if any: the two edges that collide.
    std::optional<std::pair<std::vector<size_t>, std::vector<size_t>>> collision;
    // Index of the first edge whose barycenter is not a vertex (into edges).
    std::optional<size_t> non_vertex_edge;
    std::vector<VertexCheck> certificates;  // one per edge, in edge order
};

// True iff the barycenters of h.edges are pairwise distinct and each is a
// vertex of their common convex hull.
EmbeddingReport is_convex_embedding(const PointConfiguration& s, const Hypergraph& h);

// The subset of k-barycenters that are vertices of the k-set polytope
// P_k(S). A barycenter generated by two different k-subsets is never a
// vertex, so each returned entry carries its unique generating subset.
std::vector<Barycenter> kset_polytope_vertices(const PointConfiguration& s, size_t k);

enum class PreserveMethod { Direct, Gale, Both };

struct PreservationReport {
    HypersimplexFace face;
    bool preserved = false;
    bool strictly_preserved = false;

    // Positive certificate, direct route: functional (w, c) with value
    // exactly c on the face barycenters and <= c-1 on every other one.
    QVec functional;  // size d+1: (w, c); empty when not applicable
    // Positive certificate, Gale route: strictly positive dependency among
    // the prescribed tau-images, plus a spanning subset for the interior
    // check.
    QVec gale_lambda;
    std::vector<size_t> gale_span_basis;

    // Violation evidence.
    std::string violation;  // "", "coincidence", "dependency", "separator", "dimension_drop"
    std::optional<std::pair<std::vector<size_t>, std::vector<size_t>>> coincidence;
    QVec dependency;   // direct route: multipliers proving no functional exists
    QVec separator;    // Gale route: u with <u, v> <= 0 over the tau-images
    size_t expected_dim = 0, actual_dim = 0;  // for dimension_drop
};

// Definition-based check: one LP certifies that the face image is a face of
// the projected polytope with exact vertex preimage; strictness additionally
// requires the image to span a flat of the face's own dimension.
PreservationReport strictly_preserved_direct(const PointConfiguration& s, size_t k,
                                             const HypersimplexFace& f);

// Cached variant for scans over many faces: `all` must be k_barycenters(s, k).
PreservationReport strictly_preserved_direct(const PointConfiguration& s, size_t k,
                                             const HypersimplexFace& f,
                                             const std::vector<Barycenter>& all);

// Projection-Lemma check on the Gale transform: the face is strictly
// preserved iff 0 is interior to the convex hull of the prescribed
// tau-images (and preserved iff 0 lies in their relative interior).
// Simplex regimes k in {1, n-1} are routed to the direct check.
PreservationReport strictly_preserved_gale(const PointConfiguration& s, size_t k,
                                           const HypersimplexFace& f);

PreservationReport check_preserved(const PointConfiguration& s, size_t k,
                                   const HypersimplexFace& f, PreserveMethod method);

// Face-scan helper that computes the barycenter list and the Gale transform
// once. check() is const and safe to call from several threads.
class PreservationChecker {
  public:
    PreservationChecker(PointConfiguration s, size_t k, PreserveMethod method);
    PreservationReport check(const HypersimplexFace& f) const;
    const std::vector<Barycenter>& barycenters() const { return barycenters_; }

  private:
    PointConfiguration s_;
    size_t k_;
    PreserveMethod method_;
    bool simplex_regime_;
    std::vector<Barycenter> barycenters_;
    std::optional<GaleTransform> gale_;
};

struct SkeletonReport {
    bool preserving = false;
    size_t faces_checked = 0;
    std::optional<HypersimplexFace> failing_face;
    std::optional<PreservationReport> failing_report;
};

// Conjunction of strict preservation over every face of dimension <= i,
// in canonical face order; stops at the first failing face.
SkeletonReport is_i_preserving(const PointConfiguration& s, size_t k, size_t i,
                               PreserveMethod method = PreserveMethod::Gale, size_t jobs = 1);

// The (n-k)-barycenter set is the image of the k-barycenter set under the
// homothety through the full barycenter with ratio -k/(n-k); computed and
// asserted exactly. Returns (center, ratio).
std::pair<QVec, Rational> complement_homothety(const PointConfiguration& s, size_t k);

}  // namespace cdim

#endif
