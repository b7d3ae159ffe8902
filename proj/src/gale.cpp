#include "cdim/gale.hpp"

#include <algorithm>

#include "cdim/embedding.hpp"
#include "cdim/hypersimplex.hpp"

namespace cdim {

GaleTransform gale_transform(const PointConfiguration& s) {
    size_t d = s.dim(), n = s.size();
    Matrix lifted(d + 1, n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < d; ++j) lifted.at(j, i) = s.point(i)[j];
        lifted.at(d, i) = 1;
    }
    if (rank(lifted) != d + 1) throw NonSpanningError(rank(lifted) - 1, d);

    std::vector<QVec> basis = kernel_basis(lifted);
    GaleTransform g;
    g.n = n;
    g.dim = basis.size();  // n - d - 1
    g.vectors.assign(n, QVec(g.dim));
    for (size_t i = 0; i < n; ++i)
        for (size_t t = 0; t < g.dim; ++t) g.vectors[i][t] = basis[t][i];
    return g;
}

namespace {

// Affine functional constant on the subset and <= c-1 on the rest.
Feasibility face_functional_system(const PointConfiguration& s, const std::vector<size_t>& subset) {
    size_t d = s.dim();
    std::vector<bool> in(s.size(), false);
    for (size_t i : subset) in[i] = true;
    LinearSystem sys(d + 1);  // (w, c)
    for (size_t i = 0; i < s.size(); ++i) {
        QVec row(d + 1);
        for (size_t j = 0; j < d; ++j) row[j] = in[i] ? s.point(i)[j] : -s.point(i)[j];
        row[d] = in[i] ? Rational(-1) : Rational(1);
        if (in[i]) sys.add_eq(std::move(row), 0);       // <w, p> - c = 0
        else sys.add_ge(std::move(row), 1);             // c - <w, p> >= 1
    }
    return solve_feasibility(sys);
}

}  // namespace

NeighborlinessCertificate is_j_neighborly_primal(const PointConfiguration& s, size_t j) {
    NeighborlinessCertificate out;
    out.kind = NeighborlinessCertificate::Kind::Neighborly;
    out.level = j;
    size_t cap = std::min(j, s.size());
    for (size_t sz = 1; sz <= cap; ++sz) {
        for (const auto& subset : subsets_of_size(s.size(), sz)) {
            Feasibility f = face_functional_system(s, subset);
            if (!f.feasible) {
                out.verdict = false;
                out.violating_subset = subset;
                out.dependency = f.farkas_eq;
                out.dependency.insert(out.dependency.end(), f.farkas_ge.begin(), f.farkas_ge.end());
                return out;
            }
        }
    }
    out.verdict = true;
    out.exhaustive_pass = true;
    return out;
}

NeighborlinessCertificate is_j_almost_neighborly_primal(const PointConfiguration& s, size_t j) {
    NeighborlinessCertificate out;
    out.kind = NeighborlinessCertificate::Kind::AlmostNeighborly;
    out.level = j;
    size_t d = s.dim(), n = s.size();
    size_t cap = std::min(j, n);
    for (size_t sz = 1; sz <= cap; ++sz) {
        for (const auto& subset : subsets_of_size(n, sz)) {
            std::vector<bool> in(n, false);
            for (size_t i : subset) in[i] = true;
            // A common proper face: f == c on the subset, f <= c everywhere,
            // strictly below somewhere; the strict point is iterated.
            bool found = false;
            for (size_t strict = 0; strict < n && !found; ++strict) {
                if (in[strict]) continue;
                LinearSystem sys(d + 1);
                for (size_t i = 0; i < n; ++i) {
                    QVec row(d + 1);
                    for (size_t t = 0; t < d; ++t) row[t] = s.point(i)[t];
                    row[d] = -1;
                    if (in[i]) {
                        sys.add_eq(std::move(row), 0);
                    } else {
                        for (auto& x : row) x = -x;
                        sys.add_ge(std::move(row), i == strict ? Rational(1) : Rational(0));
                    }
                }
                if (solve_feasibility(sys).feasible) found = true;
            }
            if (!found) {
                out.verdict = false;
                out.violating_subset = subset;
                return out;
            }
        }
    }
    out.verdict = true;
    out.exhaustive_pass = true;
    return out;
}

namespace {

// Common driver for the dual criteria. For a subset C of size exactly j the
// open-halfspace flavor additionally accepts rank-deficient complements (a
// nonzero u orthogonal to all of M \ C has no strictly positive products
// outside C); the closed flavor demands strict negativity on M \ C.
NeighborlinessCertificate dual_scan(const GaleTransform& g, size_t j, bool open_flavor) {
    NeighborlinessCertificate out;
    out.kind = open_flavor ? NeighborlinessCertificate::Kind::Neighborly
                           : NeighborlinessCertificate::Kind::AlmostNeighborly;
    out.level = j;
    if (g.dim == 0) {  // simplex regime: no nonzero u exists at all
        out.verdict = true;
        out.exhaustive_pass = true;
        return out;
    }
    size_t sz = std::min(j, g.n);
    for (const auto& subset : subsets_of_size(g.n, sz)) {
        std::vector<bool> in(g.n, false);
        for (size_t i : subset) in[i] = true;
        std::vector<size_t> rest;
        for (size_t i = 0; i < g.n; ++i)
            if (!in[i]) rest.push_back(i);

        if (open_flavor) {
            std::vector<QVec> rest_vecs;
            for (size_t i : rest) rest_vecs.push_back(g.vectors[i]);
            Matrix m = rest_vecs.empty() ? Matrix(0, g.dim) : Matrix::from_rows(rest_vecs);
            if (rank(m) < g.dim) {
                out.verdict = false;
                out.violating_subset = subset;
                out.separator = kernel_basis(m).at(0);
                return out;
            }
            for (size_t pivot : rest) {
                LinearSystem sys(g.dim);
                for (size_t i : rest) {
                    QVec row = Rational(-1) * g.vectors[i];
                    sys.add_ge(std::move(row), i == pivot ? Rational(1) : Rational(0));
                }
                Feasibility f = solve_feasibility(sys);
                if (f.feasible) {
                    out.verdict = false;
                    out.violating_subset = subset;
                    out.separator = f.witness;
                    return out;
                }
            }
        } else {
            if (rest.empty()) {
                // C covers all of M and the Gale space is positive-dimensional:
                // any nonzero u leaves at most |C| vectors on its closed side.
                out.verdict = false;
                out.violating_subset = subset;
                out.separator = QVec(g.dim, Rational(0));
                out.separator[0] = 1;
                return out;
            }
            LinearSystem sys(g.dim);
            for (size_t i : rest) sys.add_ge(Rational(-1) * g.vectors[i], 1);
            Feasibility f = solve_feasibility(sys);
            if (f.feasible) {
                out.verdict = false;
                out.violating_subset = subset;
                out.separator = f.witness;
                return out;
            }
        }
    }
    out.verdict = true;
    out.exhaustive_pass = true;
    return out;
}

}  // namespace

NeighborlinessCertificate is_j_neighborly_dual(const GaleTransform& g, size_t j) {
    return dual_scan(g, j, true);
}

NeighborlinessCertificate is_j_almost_neighborly_dual(const GaleTransform& g, size_t j) {
    return dual_scan(g, j, false);
}

bool check_dual_separator(const GaleTransform& g, const NeighborlinessCertificate& c) {
    if (c.verdict) return false;
    if (c.separator.size() != g.dim || is_zero_vec(c.separator)) return false;
    size_t on_side = 0;
    bool open_flavor = c.kind == NeighborlinessCertificate::Kind::Neighborly;
    for (const auto& v : g.vectors) {
        Rational p = dot(c.separator, v);
        if (open_flavor ? p > 0 : p >= 0) ++on_side;
    }
    return on_side <= c.level;
}

}  // namespace cdim
