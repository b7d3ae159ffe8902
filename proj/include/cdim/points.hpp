#ifndef CDIM_POINTS_HPP
#define CDIM_POINTS_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "cdim/matrix.hpp"
#include "cdim/rational.hpp"

namespace cdim {

// Injectivity is part of the definition of a point configuration here:
// duplicate points are rejected, never silently merged.
struct DuplicatePointsError : std::invalid_argument {
    size_t first, second;
    DuplicatePointsError(size_t a, size_t b)
        : std::invalid_argument("duplicate points at indices " + std::to_string(a) + " and " +
                                std::to_string(b)),
          first(a),
          second(b) {}
};

// Ordered list of n labeled points in affine d-space.
class PointConfiguration {
  public:
    PointConfiguration(size_t dim, std::vector<QVec> points);

    size_t dim() const { return dim_; }
    size_t size() const { return points_.size(); }
    const QVec& point(size_t i) const { return points_.at(i); }
    const std::vector<QVec>& points() const { return points_; }

    // Dimension of the affine hull; equals dim() when the configuration spans.
    size_t affine_rank() const;
    bool spans() const { return affine_rank() == dim_; }

  private:
    size_t dim_;
    std::vector<QVec> points_;
};

// k-uniform hypergraph on [n]: a set of k-subsets, each sorted, no duplicates.
struct Hypergraph {
    size_t n;
    size_t k;
    std::vector<std::vector<size_t>> edges;

    static Hypergraph complete(size_t n, size_t k);
    void validate() const;
};

// Admissible projective transformation x -> (A x + b) / (<c, x> + delta).
// Returns nullopt when the map is singular or the hyperplane at infinity
// meets the configuration (some denominator <= 0).
std::optional<PointConfiguration> projective_image(const PointConfiguration& s, const Matrix& a,
                                                   const QVec& b, const QVec& c,
                                                   const Rational& delta);

}  // namespace cdim

#endif
