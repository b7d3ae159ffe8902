#ifndef CDIM_THEOREMS_HPP
#define CDIM_THEOREMS_HPP

#include <optional>

#include "cdim/embedding.hpp"
#include "cdim/gale.hpp"
#include "cdim/points.hpp"

namespace cdim {

// A_{n,i} = {1,...,i+1} union {n-i-1,...,n-1}, clipped to [1, n-1].
std::vector<size_t> exceptional_set_A(size_t n, size_t i);

// C_{n,i} = {1,...,i+2} union {n-i-2,...,n-1}, clipped to [1, n-1].
std::vector<size_t> exceptional_set_C(size_t n, size_t i);

// Smallest dimension admitting a projection of the (n,k)-hypersimplex that
// strictly preserves its i-skeleton. Four-case formula.
size_t d_skeleton(size_t n, size_t k, size_t i);

// Convex dimension of the complete k-uniform hypergraph on n vertices,
// including the k = 1 and k = n-1 special cases.
size_t cd_complete(size_t n, size_t k);

// Variant requiring the point images themselves in convex position.
size_t d_strong(size_t n, size_t k, size_t i);

enum class Clause { Neighborly, NotAlmostNeighborly, Isomorphism, NotPreserving };

const char* clause_name(Clause c);

// Decision procedure for the full characterization: which clause makes the
// projection with point configuration s preserve the i-skeleton of the
// (n,k)-hypersimplex. Clause precedence is Neighborly > NotAlmostNeighborly
// > Isomorphism; every clause that holds is recorded. k > n/2 is first
// reduced to n-k.
struct CharacterizationVerdict {
    Clause clause = Clause::NotPreserving;
    std::vector<Clause> all_clauses;
    size_t effective_k = 0;  // after the k <-> n-k reduction
    // Certificates: the neighborliness check backing clause (i) (or its
    // failure), and the almost-neighborliness check backing clause (ii)
    // when it was evaluated.
    NeighborlinessCertificate neighborly;
    std::optional<NeighborlinessCertificate> almost;
};

CharacterizationVerdict characterize(const PointConfiguration& s, size_t k, size_t i);

}  // namespace cdim

#endif
