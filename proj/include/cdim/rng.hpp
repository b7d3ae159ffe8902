#ifndef CDIM_RNG_HPP
#define CDIM_RNG_HPP

#include <cstdint>
#include <string>

#include "cdim/points.hpp"
#include "cdim/rational.hpp"

namespace cdim {

// Hand-rolled splitmix64 so that seeded streams are identical across
// platforms and standard-library versions.
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    // Derive an independent deterministic stream, e.g. per trial index.
    Rng fork(uint64_t salt) const {
        Rng r(state_ ^ (0x9e3779b97f4a7c15ULL * (salt + 1)));
        r.next();
        return r;
    }

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    uint64_t below(uint64_t n) { return n == 0 ? 0 : next() % n; }

    long int_in(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    // Bounded rational with numerator in [-max_num, max_num] and denominator
    // in [1, max_den].
    Rational rational(long max_num, long max_den) {
        return rat(int_in(-max_num, max_num), int_in(1, max_den));
    }

  private:
    uint64_t state_;
};

// Random injective configuration of n points in R^d with bounded entries.
PointConfiguration random_configuration(Rng& rng, size_t n, size_t d, long max_num = 9,
                                        long max_den = 3);

// As above, but resampled until the points affinely span R^d.
PointConfiguration random_spanning_configuration(Rng& rng, size_t n, size_t d, long max_num = 9,
                                                 long max_den = 3);

// Resampled until no d+1 points are affinely dependent.
PointConfiguration random_general_position_configuration(Rng& rng, size_t n, size_t d,
                                                         long max_num = 9, long max_den = 3);

}  // namespace cdim

#endif
