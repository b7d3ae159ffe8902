#include "cdim/embedding.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "cdim/gale.hpp"
#include "cdim/parallel.hpp"

namespace cdim {

std::vector<Barycenter> k_barycenters(const PointConfiguration& s, size_t k) {
    if (k < 1 || k > s.size()) throw std::invalid_argument("k out of range");
    std::vector<Barycenter> out;
    Rational inv_k(1, static_cast<long>(k));
    for (const auto& subset : subsets_of_size(s.size(), k)) {
        QVec sum(s.dim(), Rational(0));
        for (size_t i : subset)
            for (size_t j = 0; j < s.dim(); ++j) sum[j] += s.point(i)[j];
        Barycenter b;
        b.subset = subset;
        b.point = inv_k * sum;
        out.push_back(std::move(b));
    }
    return out;
}

namespace {

// Decides whether an affine functional exists that is exactly c on eq_pts and
// <= c-1 on below_pts. Solved through the Farkas-dual system, which has only
// d+2 rows regardless of how many points are involved; the dual's Farkas
// certificate is mapped back to the functional.
struct FunctionalResult {
    bool exists = false;
    QVec functional;  // (w, c)
    QVec alpha;       // dependency coefficients on eq_pts when none exists
    QVec beta;        // dependency coefficients on below_pts (>= 0, sum 1)
};

FunctionalResult separate_exactly(const std::vector<QVec>& eq_pts,
                                  const std::vector<QVec>& below_pts, size_t d) {
    FunctionalResult out;
    size_t me = eq_pts.size(), mg = below_pts.size();
    if (mg == 0) {
        // Nothing to separate from: the zero functional works.
        out.exists = true;
        out.functional = QVec(d + 1, Rational(0));
        return out;
    }
    LinearSystem dual(me + mg);
    for (size_t q = 0; q < mg; ++q) dual.set_nonneg(me + q);
    for (size_t j = 0; j <= d; ++j) {
        QVec row(me + mg);
        for (size_t e = 0; e < me; ++e) row[e] = (j < d) ? eq_pts[e][j] : Rational(-1);
        for (size_t q = 0; q < mg; ++q) row[me + q] = (j < d) ? -below_pts[q][j] : Rational(1);
        dual.add_eq(std::move(row), 0);
    }
    QVec norm(me + mg, Rational(0));
    for (size_t q = 0; q < mg; ++q) norm[me + q] = 1;
    dual.add_eq(std::move(norm), 1);
    Feasibility sol = solve_feasibility(dual);
    if (sol.feasible) {
        out.exists = false;
        out.alpha.assign(sol.witness.begin(), sol.witness.begin() + me);
        out.beta.assign(sol.witness.begin() + me, sol.witness.end());
    } else {
        out.exists = true;
        // farkas_eq = (p over the d+1 column equations, r over normalization)
        Rational r = sol.farkas_eq[d + 1];
        out.functional.resize(d + 1);
        for (size_t j = 0; j <= d; ++j) out.functional[j] = -sol.farkas_eq[j] / r;
    }
    return out;
}

}  // namespace

VertexCheck is_vertex(const std::vector<QVec>& points, size_t p) {
    if (p >= points.size()) throw std::invalid_argument("point index out of range");
    size_t d = points[0].size();
    std::vector<size_t> others;
    for (size_t q = 0; q < points.size(); ++q)
        if (q != p) others.push_back(q);

    LinearSystem sys(others.size());
    sys.set_all_nonneg();
    for (size_t j = 0; j <= d; ++j) {
        QVec row(others.size());
        for (size_t t = 0; t < others.size(); ++t)
            row[t] = (j < d) ? points[others[t]][j] : Rational(1);
        sys.add_eq(std::move(row), j < d ? points[p][j] : Rational(1));
    }
    Feasibility sol = solve_feasibility(sys);
    VertexCheck out;
    if (sol.feasible) {
        out.vertex = false;
        for (size_t t = 0; t < others.size(); ++t) {
            if (sol.witness[t] == 0) continue;
            out.combination_support.push_back(others[t]);
            out.combination.push_back(sol.witness[t]);
        }
    } else {
        out.vertex = true;
        // g(x) = <u_{0..d-1}, x> + u_d satisfies g <= 0 off p, g(p) > 0.
        QVec u = sol.farkas_eq;
        Rational gp = u[d];
        for (size_t j = 0; j < d; ++j) gp += u[j] * points[p][j];
        out.functional.resize(d + 1);
        for (size_t j = 0; j <= d; ++j) out.functional[j] = u[j] / gp;
    }
    return out;
}

bool check_vertex_certificate(const std::vector<QVec>& points, size_t p, const VertexCheck& c) {
    size_t d = points[0].size();
    if (c.vertex) {
        if (c.functional.size() != d + 1) return false;
        auto eval = [&](const QVec& x) {
            Rational v = c.functional[d];
            for (size_t j = 0; j < d; ++j) v += c.functional[j] * x[j];
            return v;
        };
        Rational fp = eval(points[p]);
        for (size_t q = 0; q < points.size(); ++q)
            if (q != p && fp < eval(points[q]) + 1) return false;
        return true;
    }
    if (c.combination_support.size() != c.combination.size() || c.combination.empty()) return false;
    Rational total = 0;
    QVec mix(d, Rational(0));
    for (size_t t = 0; t < c.combination.size(); ++t) {
        size_t q = c.combination_support[t];
        if (q == p || q >= points.size()) return false;
        if (c.combination[t] <= 0) return false;
        total += c.combination[t];
        for (size_t j = 0; j < d; ++j) mix[j] += c.combination[t] * points[q][j];
    }
    return total == 1 && mix == points[p];
}

EmbeddingReport is_convex_embedding(const PointConfiguration& s, const Hypergraph& h) {
    h.validate();
    if (h.n != s.size()) throw std::invalid_argument("hypergraph order != configuration size");
    EmbeddingReport out;
    Rational inv_k(1, static_cast<long>(h.k));
    std::vector<QVec> pts;
    std::map<QVec, size_t> first_seen;
    for (size_t e = 0; e < h.edges.size(); ++e) {
        QVec sum(s.dim(), Rational(0));
        for (size_t i : h.edges[e])
            for (size_t j = 0; j < s.dim(); ++j) sum[j] += s.point(i)[j];
        QVec b = inv_k * sum;
        auto [it, fresh] = first_seen.emplace(b, e);
        if (!fresh) {
            out.embedding = false;
            out.collision = {h.edges[it->second], h.edges[e]};
            return out;
        }
        pts.push_back(std::move(b));
    }
    out.embedding = true;
    for (size_t e = 0; e < pts.size(); ++e) {
        VertexCheck c = is_vertex(pts, e);
        if (!c.vertex) {
            out.embedding = false;
            if (!out.non_vertex_edge) out.non_vertex_edge = e;
        }
        out.certificates.push_back(std::move(c));
    }
    return out;
}

std::vector<Barycenter> kset_polytope_vertices(const PointConfiguration& s, size_t k) {
    std::vector<Barycenter> all = k_barycenters(s, k);
    std::map<QVec, size_t> multiplicity;
    for (const auto& b : all) ++multiplicity[b.point];
    std::vector<QVec> distinct;
    std::map<QVec, size_t> index_of;
    for (const auto& b : all)
        if (index_of.emplace(b.point, distinct.size()).second) distinct.push_back(b.point);

    std::vector<Barycenter> out;
    for (const auto& b : all) {
        // A k-subset sharing its barycenter with another one never defines a
        // vertex of P_k(S).
        if (multiplicity[b.point] > 1) continue;
        if (is_vertex(distinct, index_of[b.point]).vertex) out.push_back(b);
    }
    return out;
}

PreservationReport strictly_preserved_direct(const PointConfiguration& s, size_t k,
                                             const HypersimplexFace& f) {
    return strictly_preserved_direct(s, k, f, k_barycenters(s, k));
}

PreservationReport strictly_preserved_direct(const PointConfiguration& s, size_t k,
                                             const HypersimplexFace& f,
                                             const std::vector<Barycenter>& all) {
    Hypersimplex h(s.size(), k);
    validate_face(h, f);
    PreservationReport out;
    out.face = f;

    // A k-subset spans a vertex of the face iff it contains I and avoids J.
    std::vector<bool> in_ones(h.n, false), in_zeros(h.n, false);
    for (size_t i : f.ones) in_ones[i] = true;
    for (size_t j : f.zeros) in_zeros[j] = true;
    auto on_face_subset = [&](const std::vector<size_t>& e) {
        size_t hits = 0;
        for (size_t x : e) {
            if (in_zeros[x]) return false;
            if (in_ones[x]) ++hits;
        }
        return hits == f.ones.size();
    };

    std::vector<QVec> eq_pts, below_pts;
    std::vector<std::vector<size_t>> on_face;
    std::vector<size_t> below_idx;
    for (size_t i = 0; i < all.size(); ++i) {
        if (on_face_subset(all[i].subset)) {
            eq_pts.push_back(all[i].point);
            on_face.push_back(all[i].subset);
        } else {
            below_pts.push_back(all[i].point);
            below_idx.push_back(i);
        }
    }

    FunctionalResult sep = separate_exactly(eq_pts, below_pts, s.dim());
    if (!sep.exists) {
        out.preserved = false;
        out.strictly_preserved = false;
        // Prefer the friendliest evidence: an outside subset whose barycenter
        // coincides with a face barycenter maps a vertex into the face image.
        for (size_t t = 0; t < below_pts.size(); ++t) {
            for (size_t e = 0; e < eq_pts.size(); ++e) {
                if (below_pts[t] == eq_pts[e]) {
                    out.violation = "coincidence";
                    out.coincidence = {on_face[e], all[below_idx[t]].subset};
                    return out;
                }
            }
        }
        out.violation = "dependency";
        out.dependency = sep.alpha;
        out.dependency.insert(out.dependency.end(), sep.beta.begin(), sep.beta.end());
        return out;
    }
    out.preserved = true;
    out.functional = sep.functional;
    out.expected_dim = face_dim(h, f);
    out.actual_dim = affine_dim(eq_pts);
    out.strictly_preserved = (out.actual_dim == out.expected_dim);
    if (!out.strictly_preserved) out.violation = "dimension_drop";
    return out;
}

namespace {

PreservationReport gale_with_transform(const PointConfiguration& s, size_t k,
                                       const HypersimplexFace& f, const GaleTransform& g);

}  // namespace

PreservationReport strictly_preserved_gale(const PointConfiguration& s, size_t k,
                                           const HypersimplexFace& f) {
    size_t n = s.size();
    if (k == 1 || k + 1 == n) return strictly_preserved_direct(s, k, f);
    return gale_with_transform(s, k, f, gale_transform(s));
}

namespace {

PreservationReport gale_with_transform(const PointConfiguration& s, size_t k,
                                       const HypersimplexFace& f, const GaleTransform& g) {
    size_t n = s.size();
    Hypersimplex h(n, k);
    validate_face(h, f);

    // tau(n_i) = -M_i on the pinned-to-1 side, tau(m_j) = M_j on the
    // pinned-to-0 side; these are the normals of the facets containing the
    // face.
    std::vector<QVec> tau;
    for (size_t i : f.ones) tau.push_back(Rational(-1) * g.vectors[i]);
    for (size_t j : f.zeros) tau.push_back(g.vectors[j]);

    PreservationReport out;
    out.face = f;
    InteriorCheck inner = zero_in_interior_cert(tau, g.dim);
    if (inner.inside) {
        out.preserved = true;
        out.strictly_preserved = true;
        out.gale_lambda = inner.lambda;
        out.gale_span_basis = inner.span_basis;
        return out;
    }
    InteriorCheck rel = zero_in_relative_interior_cert(tau, g.dim);
    out.preserved = rel.inside;
    out.strictly_preserved = false;
    if (rel.inside) {
        out.gale_lambda = rel.lambda;
        out.violation = "separator";
        out.separator = inner.separator;
    } else {
        out.violation = "separator";
        out.separator = rel.separator;
    }
    return out;
}

}  // namespace

PreservationChecker::PreservationChecker(PointConfiguration s, size_t k, PreserveMethod method)
    : s_(std::move(s)), k_(k), method_(method) {
    size_t n = s_.size();
    simplex_regime_ = (k_ == 1 || k_ + 1 == n);
    if (method_ != PreserveMethod::Gale || simplex_regime_)
        barycenters_ = k_barycenters(s_, k_);
    if (method_ != PreserveMethod::Direct && !simplex_regime_) gale_ = gale_transform(s_);
}

PreservationReport PreservationChecker::check(const HypersimplexFace& f) const {
    if (method_ == PreserveMethod::Direct || simplex_regime_)
        return strictly_preserved_direct(s_, k_, f, barycenters_);
    if (method_ == PreserveMethod::Gale) return gale_with_transform(s_, k_, f, *gale_);
    PreservationReport d = strictly_preserved_direct(s_, k_, f, barycenters_);
    PreservationReport g = gale_with_transform(s_, k_, f, *gale_);
    if (d.preserved != g.preserved || d.strictly_preserved != g.strictly_preserved)
        throw std::logic_error("direct and Gale preservation checks disagree");
    return d;
}

PreservationReport check_preserved(const PointConfiguration& s, size_t k,
                                   const HypersimplexFace& f, PreserveMethod method) {
    return PreservationChecker(s, k, method).check(f);
}

SkeletonReport is_i_preserving(const PointConfiguration& s, size_t k, size_t i,
                               PreserveMethod method, size_t jobs) {
    Hypersimplex h(s.size(), k);
    if (i > h.n - 1) throw std::invalid_argument("skeleton dimension out of range");
    PreservationChecker checker(s, k, method);
    SkeletonReport out;
    for (size_t level = 0; level <= i; ++level) {
        std::vector<HypersimplexFace> faces = i_faces(h, level);
        std::vector<PreservationReport> reports = parallel_map<PreservationReport>(
            jobs, faces.size(), [&](size_t t) { return checker.check(faces[t]); });
        out.faces_checked += faces.size();
        for (size_t t = 0; t < faces.size(); ++t) {
            if (!reports[t].strictly_preserved) {
                out.preserving = false;
                out.failing_face = faces[t];
                out.failing_report = reports[t];
                return out;
            }
        }
    }
    out.preserving = true;
    return out;
}

std::pair<QVec, Rational> complement_homothety(const PointConfiguration& s, size_t k) {
    size_t n = s.size();
    if (k < 1 || k >= n) throw std::invalid_argument("k out of range for complement homothety");
    QVec center(s.dim(), Rational(0));
    for (const auto& p : s.points()) center = center + p;
    center = Rational(1, static_cast<long>(n)) * center;
    Rational ratio = -Rational(static_cast<long>(k)) / Rational(static_cast<long>(n - k));

    std::vector<Barycenter> kb = k_barycenters(s, k);
    std::vector<Barycenter> cb = k_barycenters(s, n - k);
    std::map<std::vector<size_t>, QVec> comp_point;
    for (const auto& b : cb) comp_point[b.subset] = b.point;
    for (const auto& b : kb) {
        std::vector<size_t> comp;
        std::vector<bool> in(n, false);
        for (size_t x : b.subset) in[x] = true;
        for (size_t x = 0; x < n; ++x)
            if (!in[x]) comp.push_back(x);
        QVec image = center + ratio * (b.point - center);
        if (image != comp_point.at(comp))
            throw std::logic_error("complement homothety identity failed");
    }
    return {center, ratio};
}

}  // namespace cdim
