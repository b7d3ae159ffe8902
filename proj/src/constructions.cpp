#include "cdim/constructions.hpp"

#include <stdexcept>

#include "cdim/hypersimplex.hpp"

namespace cdim {

PointConfiguration cyclic_config(size_t n, size_t d) {
    if (n < 1 || d < 1) throw std::invalid_argument("cyclic_config needs n, d >= 1");
    std::vector<QVec> pts;
    for (size_t t = 1; t <= n; ++t) {
        QVec p(d);
        Rational pw = 1;
        for (size_t j = 0; j < d; ++j) {
            pw *= static_cast<long>(t);
            p[j] = pw;
        }
        pts.push_back(std::move(p));
    }
    return PointConfiguration(d, std::move(pts));
}

PointConfiguration simplex_config(size_t a) {
    std::vector<QVec> pts;
    pts.emplace_back(a, Rational(0));
    for (size_t j = 0; j < a; ++j) {
        QVec p(a, Rational(0));
        p[j] = 1;
        pts.push_back(std::move(p));
    }
    return PointConfiguration(a, std::move(pts));
}

PointConfiguration simplex_with_barycenter(size_t n) {
    if (n < 3) throw std::invalid_argument("simplex_with_barycenter needs n >= 3");
    size_t d = n - 2;
    std::vector<QVec> pts;
    for (size_t j = 0; j < d; ++j) {
        QVec p(d, Rational(0));
        p[j] = 1;
        pts.push_back(std::move(p));
    }
    pts.emplace_back(d, Rational(0));
    QVec bary(d, Rational(1, static_cast<long>(n - 1)));
    pts.push_back(std::move(bary));
    return PointConfiguration(d, std::move(pts));
}

namespace {

QVec barycenter_of(const PointConfiguration& s) {
    QVec b(s.dim(), Rational(0));
    for (const auto& p : s.points()) b = b + p;
    return Rational(1, static_cast<long>(s.size())) * b;
}

}  // namespace

PointConfiguration direct_sum(const PointConfiguration& p, const PointConfiguration& q) {
    if (!p.spans() || !q.spans())
        throw std::invalid_argument("direct_sum requires spanning summands");
    size_t dp = p.dim(), dq = q.dim();
    QVec bp = barycenter_of(p), bq = barycenter_of(q);
    std::vector<QVec> pts;
    for (const auto& x : p.points()) {
        QVec v(dp + dq, Rational(0));
        for (size_t j = 0; j < dp; ++j) v[j] = x[j] - bp[j];
        pts.push_back(std::move(v));
    }
    for (const auto& x : q.points()) {
        QVec v(dp + dq, Rational(0));
        for (size_t j = 0; j < dq; ++j) v[dp + j] = x[j] - bq[j];
        pts.push_back(std::move(v));
    }
    return PointConfiguration(dp + dq, std::move(pts));
}

PointConfiguration pyramid(const PointConfiguration& p, size_t r) {
    size_t dp = p.dim();
    std::vector<QVec> pts;
    for (const auto& x : p.points()) {
        QVec v(dp + r, Rational(0));
        for (size_t j = 0; j < dp; ++j) v[j] = x[j];
        pts.push_back(std::move(v));
    }
    for (size_t t = 0; t < r; ++t) {
        QVec v(dp + r, Rational(0));
        v[dp + t] = 1;
        pts.push_back(std::move(v));
    }
    return PointConfiguration(dp + r, std::move(pts));
}

std::pair<PointConfiguration, Hypergraph> multipartite_lift(size_t d, size_t k, size_t n) {
    if (d <= k) throw std::invalid_argument("multipartite_lift requires d >= k+1");
    if (n < 1 || k < 1) throw std::invalid_argument("multipartite_lift requires n, k >= 1");
    std::vector<QVec> pts;
    for (size_t part = 0; part < d; ++part) {
        for (size_t a = 1; a <= n; ++a) {
            QVec v(d, Rational(0));
            long av = static_cast<long>(a);
            if (part == 0) {
                for (size_t j = 0; j + 1 < d; ++j) v[j] = -av;
            } else {
                v[part - 1] = av;
            }
            v[d - 1] = Rational(av) * av;
            pts.push_back(std::move(v));
        }
    }
    Hypergraph h;
    h.n = d * n;
    h.k = k;
    for (const auto& parts : subsets_of_size(d, k)) {
        std::vector<size_t> pick(k, 0);  // odometer over A^k
        for (;;) {
            std::vector<size_t> edge;
            for (size_t t = 0; t < k; ++t) edge.push_back(parts[t] * n + pick[t]);
            std::sort(edge.begin(), edge.end());
            h.edges.push_back(std::move(edge));
            size_t t = k;
            while (t > 0 && pick[t - 1] + 1 == n) pick[--t] = 0;
            if (t == 0) break;
            ++pick[t - 1];
        }
    }
    return {PointConfiguration(d, std::move(pts)), std::move(h)};
}

namespace {

Rational binom_q(size_t n, size_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Rational r = 1;
    for (size_t i = 0; i < k; ++i) {
        r *= static_cast<long>(n - i);
        r /= static_cast<long>(i + 1);
    }
    return r;
}

}  // namespace

Rational de_caen_bound(size_t n, size_t k, size_t l) {
    if (k < 1 || l < k || n < l) throw std::invalid_argument("de_caen_bound requires k <= l <= n");
    Rational frac = Rational(static_cast<long>(n - l + 1)) / Rational(static_cast<long>(n - k + 1));
    Rational coef = Rational(1) - frac / binom_q(l - 1, k - 1);
    return coef * binom_q(n, k);
}

NkdValue n_kd(size_t k, size_t d) {
    if (k < 1 || d < 1) throw std::invalid_argument("n_kd requires k, d >= 1");
    NkdValue out;
    if (d >= 2 * k) {
        out.infinite = true;
        return out;
    }
    if (d == 1) {
        out.value = (k == 1) ? 2 : static_cast<unsigned long>(k);
        return out;
    }
    if (d + 4 <= 2 * k) out.value = d / 2 + k;  // 1 <= d <= 2k-4
    else out.value = d + 2;                     // d in {2k-3, 2k-2, 2k-1}
    return out;
}

std::pair<Rational, Rational> gamma_bounds(size_t k, size_t d) {
    if (d < k + 1 || d + 1 > 2 * k)
        throw std::invalid_argument("gamma_bounds requires k+1 <= d <= 2k-1");
    Rational lower = binom_q(d, k);
    for (size_t i = 0; i < k; ++i) lower /= static_cast<long>(d);
    NkdValue nv = n_kd(k, d);
    if (nv.infinite) throw std::logic_error("n_kd finite in the gamma range");
    Rational fact = 1;
    for (size_t i = 2; i <= k; ++i) fact *= static_cast<long>(i);
    Rational upper = (Rational(1) - Rational(1) / binom_q(nv.value, k - 1)) / fact;
    return {lower, upper};
}

unsigned long halfspace_upper_bound(size_t n, size_t d) {
    if (n < 1) throw std::invalid_argument("halfspace_upper_bound requires n >= 1");
    unsigned long sum = 0;
    for (size_t t = 0; t <= d && t <= n - 1; ++t) sum += binomial(n - 1, t);
    return 2 * sum;
}

}  // namespace cdim
