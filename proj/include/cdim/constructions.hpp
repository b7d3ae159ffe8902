#ifndef CDIM_CONSTRUCTIONS_HPP
#define CDIM_CONSTRUCTIONS_HPP

#include <utility>

#include "cdim/points.hpp"

namespace cdim {

// n integer samples t = 1..n of the moment curve (t, t^2, ..., t^d);
// floor(d/2)-neighborly.
PointConfiguration cyclic_config(size_t n, size_t d);

// Vertex set of an (n-2)-simplex in R^{n-2} followed by its barycenter.
PointConfiguration simplex_with_barycenter(size_t n);

// Vertex set of the standard a-simplex: origin and e_1..e_a in R^a.
PointConfiguration simplex_config(size_t a);

// Both summands translated so their barycenters sit at the origin (the
// shared relative-interior point), then placed in complementary coordinate
// blocks.
PointConfiguration direct_sum(const PointConfiguration& p, const PointConfiguration& q);

// p embedded in the first dim(p) coordinates, r apex points added along
// fresh coordinate axes.
PointConfiguration pyramid(const PointConfiguration& p, size_t r);

// The d-partite lift with parts V_0..V_{d-1} of n points each: a in {1..n}
// maps to a*E_t + a^2*e_d with E_0 = -(e_1 + ... + e_{d-1}), E_t = e_t.
// The hypergraph takes one vertex from each part of every k-subset of parts,
// C(d,k) * n^k edges in total.
std::pair<PointConfiguration, Hypergraph> multipartite_lift(size_t d, size_t k, size_t n);

// Upper bound on edges of a k-uniform hypergraph on n vertices with no
// complete sub-hypergraph on l vertices (exact rational value).
Rational de_caen_bound(size_t n, size_t k, size_t l);

// Largest n for which the complete k-uniform hypergraph embeds convexly in
// dimension d; infinite once d >= 2k.
struct NkdValue {
    bool infinite = false;
    unsigned long value = 0;
};
NkdValue n_kd(size_t k, size_t d);

// Sandwich for the density constant: (C(d,k)/d^k, c_{k,d}) with
// c_{k,d} = (1/k!)(1 - 1/C(n_{k,d}, k-1)). Requires k+1 <= d <= 2k-1.
std::pair<Rational, Rational> gamma_bounds(size_t k, size_t d);

// 2 * (C(n-1,d) + C(n-1,d-1) + ... + C(n-1,0)).
unsigned long halfspace_upper_bound(size_t n, size_t d);

}  // namespace cdim

#endif
