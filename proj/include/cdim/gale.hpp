#ifndef CDIM_GALE_HPP
#define CDIM_GALE_HPP

#include <optional>

#include "cdim/linear.hpp"
#include "cdim/points.hpp"

namespace cdim {

struct NonSpanningError : std::invalid_argument {
    size_t rank_found;
    NonSpanningError(size_t rank, size_t dim)
        : std::invalid_argument("configuration does not affinely span: rank " +
                                std::to_string(rank) + " < " + std::to_string(dim)),
          rank_found(rank) {}
};

// Gale transform of n points affinely spanning R^d: the columns of the
// canonical kernel basis of the (d+1) x n lifted matrix [points; ones].
// For n = d+1 the transform is the zero configuration in 0-space (the
// isomorphism regime of the characterization).
struct GaleTransform {
    size_t n = 0;
    size_t dim = 0;  // n - d - 1
    std::vector<QVec> vectors;
};

GaleTransform gale_transform(const PointConfiguration& s);

// Certificate for a neighborliness verdict. A false primal verdict carries
// the violating subset together with the dependency returned by the LP; a
// false dual verdict carries the violating subset C and the separating
// functional u. True verdicts are exhaustive passes.
struct NeighborlinessCertificate {
    enum class Kind { Neighborly, AlmostNeighborly };
    Kind kind = Kind::Neighborly;
    size_t level = 0;
    bool verdict = false;
    bool exhaustive_pass = false;
    std::vector<size_t> violating_subset;
    QVec separator;        // dual route: u
    QVec dependency;       // primal route: coefficients from the failed LP
};

// Every subset of at most j points is the vertex set of a face: for each A,
// an affine functional exists that is constant on A and at least 1 below on
// the rest.
NeighborlinessCertificate is_j_neighborly_primal(const PointConfiguration& s, size_t j);

// Gale-dual criterion: every open linear halfspace holds at least j+1
// vectors of M. Violations are searched over subsets C of size exactly j.
NeighborlinessCertificate is_j_neighborly_dual(const GaleTransform& g, size_t j);

// Every subset of at most j points lies in a common proper face.
NeighborlinessCertificate is_j_almost_neighborly_primal(const PointConfiguration& s, size_t j);

// Gale-dual criterion: every closed linear halfspace holds at least j+1
// vectors of M.
NeighborlinessCertificate is_j_almost_neighborly_dual(const GaleTransform& g, size_t j);

// Substitution-only check of a false dual verdict: u must leave at most
// `level` vectors strictly (resp. weakly) on its positive side.
bool check_dual_separator(const GaleTransform& g, const NeighborlinessCertificate& c);

}  // namespace cdim

#endif
