#include "cdim/points.hpp"

#include <algorithm>
#include <map>

namespace cdim {

PointConfiguration::PointConfiguration(size_t dim, std::vector<QVec> points)
    : dim_(dim), points_(std::move(points)) {
    if (points_.empty()) throw std::invalid_argument("configuration needs at least one point");
    for (const auto& p : points_)
        if (p.size() != dim_) throw std::invalid_argument("point dimension mismatch");
    std::map<QVec, size_t> seen;
    for (size_t i = 0; i < points_.size(); ++i) {
        auto [it, fresh] = seen.emplace(points_[i], i);
        if (!fresh) throw DuplicatePointsError(it->second, i);
    }
}

size_t PointConfiguration::affine_rank() const { return affine_dim(points_); }

Hypergraph Hypergraph::complete(size_t n, size_t k) {
    Hypergraph h;
    h.n = n;
    h.k = k;
    std::vector<size_t> cur(k);
    for (size_t i = 0; i < k; ++i) cur[i] = i;
    if (k > n) throw std::invalid_argument("complete hypergraph needs k <= n");
    for (;;) {
        h.edges.push_back(cur);
        size_t i = k;
        while (i > 0 && cur[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return h;
}

void Hypergraph::validate() const {
    std::vector<std::vector<size_t>> copy = edges;
    for (auto& e : copy) {
        if (e.size() != k) throw std::invalid_argument("edge of wrong uniformity");
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] >= n) throw std::invalid_argument("edge vertex out of range");
            if (i > 0 && e[i] <= e[i - 1]) throw std::invalid_argument("edge not a sorted set");
        }
    }
    std::sort(copy.begin(), copy.end());
    if (std::adjacent_find(copy.begin(), copy.end()) != copy.end())
        throw std::invalid_argument("duplicate edges");
}

std::optional<PointConfiguration> projective_image(const PointConfiguration& s, const Matrix& a,
                                                   const QVec& b, const QVec& c,
                                                   const Rational& delta) {
    size_t d = s.dim();
    if (a.rows() != d || a.cols() != d || b.size() != d || c.size() != d) return std::nullopt;
    // The full (d+1)x(d+1) matrix [[A b],[c delta]] must be invertible.
    Matrix full(d + 1, d + 1);
    for (size_t i = 0; i < d; ++i) {
        for (size_t j = 0; j < d; ++j) full.at(i, j) = a.at(i, j);
        full.at(i, d) = b[i];
    }
    for (size_t j = 0; j < d; ++j) full.at(d, j) = c[j];
    full.at(d, d) = delta;
    if (det(full) == 0) return std::nullopt;

    std::vector<QVec> out;
    for (const auto& p : s.points()) {
        Rational den = dot(c, p) + delta;
        if (den <= 0) return std::nullopt;  // hyperplane at infinity meets conv(s)
        QVec q(d);
        for (size_t i = 0; i < d; ++i) {
            Rational num = b[i];
            for (size_t j = 0; j < d; ++j) num += a.at(i, j) * p[j];
            q[i] = num / den;
        }
        out.push_back(std::move(q));
    }
    return PointConfiguration(d, std::move(out));
}

}  // namespace cdim
