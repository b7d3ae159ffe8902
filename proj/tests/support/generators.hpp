#ifndef CDIM_TESTS_GENERATORS_HPP
#define CDIM_TESTS_GENERATORS_HPP

#include "cdim/points.hpp"
#include "cdim/rng.hpp"

namespace cdim::testing {

// The four-point configurations used throughout the examples.

inline PointConfiguration unit_square() {
    return PointConfiguration(2, {{rat(0), rat(0)}, {rat(1), rat(0)}, {rat(0), rat(1)},
                                  {rat(1), rat(1)}});
}

inline PointConfiguration triangle_plus_barycenter() {
    return PointConfiguration(2, {{rat(0), rat(0)}, {rat(3), rat(0)}, {rat(0), rat(3)},
                                  {rat(1), rat(1)}});
}

}  // namespace cdim::testing

#endif
