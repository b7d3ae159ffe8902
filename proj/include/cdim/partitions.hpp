#ifndef CDIM_PARTITIONS_HPP
#define CDIM_PARTITIONS_HPP

#include <map>

#include "cdim/points.hpp"

namespace cdim {

// (A,B)-partition: A = points exactly on the witness hyperplane, B = points
// strictly on its positive side; all remaining points are strictly negative.
struct IJPartition {
    std::vector<size_t> on_plane;  // A, sorted indices
    std::vector<size_t> positive;  // B, sorted indices
    QVec normal;                   // w != 0
    Rational offset;               // c: <w,a> = c, <w,b> > c, <w,rest> < c
    long dimension = -1;           // affine dimension of A (-1 for empty A)
};

struct PartitionTable {
    std::map<std::pair<size_t, size_t>, size_t> counts;  // (i,j) -> D_{i,j}
    size_t at(size_t i, size_t j) const {
        auto it = counts.find({i, j});
        return it == counts.end() ? 0 : it->second;
    }
};

// Complete enumeration of the distinct (A,B) pairs, canonically sorted by
// (|A|, |B|, A lex, B lex). Candidates are anchored on the flats spanned by
// affinely independent subsets of s; within each flat the cells of the
// restricted dual arrangement are explored exactly, and every emitted pair
// carries an LP-validated witness (the LP is the source of truth).
// Guarded to n <= 12.
std::vector<IJPartition> enumerate_partitions(const PointConfiguration& s, size_t guard_n = 12);

PartitionTable partition_table(const std::vector<IJPartition>& parts);

// Validation oracle for the enumerator: plain scan of all 3^n disjoint
// (A,B) assignments with one LP feasibility check each, no candidate
// generation shared with the production path. Same canonical order.
std::vector<IJPartition> enumerate_partitions_bruteforce(const PointConfiguration& s,
                                                         size_t guard_n = 7);

// Substitution-only witness check for one partition.
bool check_partition_witness(const PointConfiguration& s, const IJPartition& p);

// The B-sets of the (0,k)-partitions.
std::vector<std::vector<size_t>> k_sets(const PointConfiguration& s, size_t k,
                                        size_t guard_n = 12);

// No d+1 points affinely dependent.
bool in_general_position(const PointConfiguration& s);

// The vertices of P_k(S) and the k-sets of S coincide as subset families.
bool verify_vertex_bijection(const PointConfiguration& s, size_t k, size_t guard_n = 12);

// e-faces of P_k(S), e >= 1, correspond to e-dimensional (i,j)-partitions
// with j+1 <= k <= i+j-1 through I = B-indices, J = complement of (A u B),
// the face being preserved with an e-dimensional image; checked both ways.
bool verify_face_correspondence(const PointConfiguration& s, size_t k, size_t e,
                                size_t guard_n = 12);

// Face-count identity for S in general position:
// f_{i-1}(P_k) = 1 (i=0), D_{0,k} (i=1), sum_{j=k-i+1}^{k-1} D_{i,j} (else),
// with the face counts of P_k computed by direct LP, not via partitions.
bool verify_euler_relation(const PointConfiguration& s, size_t k, size_t guard_n = 10);

// Subsets of S cut out by open halfspaces (the count equals the closed
// halfspace count by complementation); exhaustive over all 2^n subsets.
size_t count_halfspace_cut_subsets(const PointConfiguration& s);

}  // namespace cdim

#endif
