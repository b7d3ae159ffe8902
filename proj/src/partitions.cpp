#include "cdim/partitions.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "cdim/embedding.hpp"
#include "cdim/hypersimplex.hpp"
#include "cdim/linear.hpp"

namespace cdim {

namespace {

// Lifted row for the dual space of oriented affine hyperplanes: the
// functional (w, c) evaluates at a point p as <w, p> - c.
QVec lifted(const QVec& p) {
    QVec v = p;
    v.push_back(-1);
    return v;
}

struct FlatContext {
    std::vector<size_t> closure;       // sorted indices with s_i in aff(T)
    std::vector<QVec> basis;           // kernel basis of the flat's equations
    std::vector<size_t> rest;          // indices outside the closure
    std::vector<QVec> restricted;      // g_j in basis coordinates, aligned with rest
};

// DFS over strict sign assignments of the restricted vectors; each feasible
// leaf is one cell of the restricted arrangement, i.e. one partition whose
// zero set is exactly the closure.
void enumerate_cells(const PointConfiguration& s, const FlatContext& ctx,
                     std::vector<IJPartition>& out) {
    size_t m = ctx.rest.size();
    size_t r = ctx.basis.size();
    std::vector<int> sign(m, 0);

    std::vector<size_t> stack;
    auto feasible = [&](size_t depth, bool want_witness, QVec* witness) {
        LinearSystem sys(r);
        for (size_t t = 0; t < depth; ++t)
            sys.add_ge(Rational(sign[t]) * ctx.restricted[t], 1);
        Feasibility f = solve_feasibility(sys);
        if (f.feasible && want_witness) *witness = f.witness;
        return f.feasible;
    };

    // Depth-first with pruning; leaves re-solve for the witness so that the
    // emitted hyperplane satisfies the full strict system.
    std::function<void(size_t)> dfs = [&](size_t depth) {
        if (depth == m) {
            QVec y(r, Rational(0));
            if (m > 0 && !feasible(m, true, &y)) return;
            QVec wc(s.dim() + 1, Rational(0));
            for (size_t t = 0; t < r; ++t) wc = wc + y[t] * ctx.basis[t];
            if (m == 0) {
                // Closure covers every point; any nonzero flat functional is
                // the witness (it has w != 0 since no (0, c != 0) lies in the
                // flat of a nonempty closure).
                wc = ctx.basis.at(0);
            }
            IJPartition p;
            p.on_plane = ctx.closure;
            for (size_t t = 0; t < m; ++t)
                if (sign[t] > 0) p.positive.push_back(ctx.rest[t]);
            QVec w(wc.begin(), wc.end() - 1);
            if (is_zero_vec(w)) {
                // Constant-sign leaf of the empty flat: replace the constant
                // functional by a genuine hyperplane on the correct side.
                w = QVec(s.dim(), Rational(0));
                w[0] = 1;
                bool positive_side = !p.positive.empty();
                Rational extreme = dot(w, s.point(0));
                for (size_t i = 1; i < s.size(); ++i) {
                    Rational v = dot(w, s.point(i));
                    if (positive_side ? v < extreme : v > extreme) extreme = v;
                }
                p.normal = w;
                p.offset = positive_side ? Rational(extreme - 1) : Rational(extreme + 1);
            } else {
                p.normal = w;
                p.offset = wc.back();
            }
            if (!p.on_plane.empty()) {
                std::vector<QVec> pts;
                for (size_t i : p.on_plane) pts.push_back(s.point(i));
                p.dimension = static_cast<long>(affine_dim(pts));
            }
            out.push_back(std::move(p));
            return;
        }
        for (int sg : {+1, -1}) {
            sign[depth] = sg;
            if (feasible(depth + 1, false, nullptr)) dfs(depth + 1);
        }
        sign[depth] = 0;
    };
    dfs(0);
}

}  // namespace

bool check_partition_witness(const PointConfiguration& s, const IJPartition& p) {
    if (p.normal.size() != s.dim() || is_zero_vec(p.normal)) return false;
    std::vector<int> cls(s.size(), -1);
    for (size_t i : p.on_plane) cls[i] = 0;
    for (size_t i : p.positive) {
        if (cls[i] != -1) return false;
        cls[i] = 1;
    }
    for (size_t i = 0; i < s.size(); ++i) {
        Rational v = dot(p.normal, s.point(i)) - p.offset;
        if (cls[i] == 0 && v != 0) return false;
        if (cls[i] == 1 && v <= 0) return false;
        if (cls[i] == -1 && v >= 0) return false;
    }
    return true;
}

std::vector<IJPartition> enumerate_partitions(const PointConfiguration& s, size_t guard_n) {
    size_t n = s.size(), d = s.dim();
    if (n > guard_n) throw std::invalid_argument("enumerate_partitions: n exceeds guard");

    // Flat closures reachable from affinely independent anchor subsets.
    std::set<std::vector<size_t>> closures;
    closures.insert(std::vector<size_t>{});  // empty flat: hyperplanes missing every point
    for (size_t sz = 1; sz <= d; ++sz) {
        for (const auto& t : subsets_of_size(n, sz)) {
            std::vector<QVec> pts;
            for (size_t i : t) pts.push_back(s.point(i));
            if (affine_dim(pts) + 1 != sz) continue;  // not affinely independent
            // closure: every point inside aff(T)
            std::vector<QVec> rows;
            for (size_t i : t) rows.push_back(lifted(s.point(i)));
            Matrix flat = Matrix::from_rows(rows);
            std::vector<QVec> functionals = kernel_basis(flat);
            std::vector<size_t> closure;
            for (size_t i = 0; i < n; ++i) {
                bool inside = true;
                for (const auto& f : functionals)
                    if (dot(f, lifted(s.point(i))) != 0) { inside = false; break; }
                if (inside) closure.push_back(i);
            }
            closures.insert(std::move(closure));
        }
    }

    std::vector<IJPartition> out;
    for (const auto& closure : closures) {
        FlatContext ctx;
        ctx.closure = closure;
        if (closure.empty()) {
            ctx.basis.assign(d + 1, QVec(d + 1, Rational(0)));
            for (size_t t = 0; t <= d; ++t) ctx.basis[t][t] = 1;
        } else {
            std::vector<QVec> rows;
            for (size_t i : closure) rows.push_back(lifted(s.point(i)));
            ctx.basis = kernel_basis(Matrix::from_rows(rows));
        }
        if (ctx.basis.empty()) continue;  // closure spans: no hyperplane through it
        std::vector<bool> in(n, false);
        for (size_t i : closure) in[i] = true;
        for (size_t i = 0; i < n; ++i)
            if (!in[i]) ctx.rest.push_back(i);
        for (size_t i : ctx.rest) {
            QVec g(ctx.basis.size());
            for (size_t t = 0; t < ctx.basis.size(); ++t)
                g[t] = dot(ctx.basis[t], lifted(s.point(i)));
            ctx.restricted.push_back(std::move(g));
        }
        enumerate_cells(s, ctx, out);
    }

    for (const auto& p : out)
        if (!check_partition_witness(s, p))
            throw std::logic_error("partition enumerator produced an invalid witness");

    std::sort(out.begin(), out.end(), [](const IJPartition& a, const IJPartition& b) {
        if (a.on_plane.size() != b.on_plane.size()) return a.on_plane.size() < b.on_plane.size();
        if (a.positive.size() != b.positive.size()) return a.positive.size() < b.positive.size();
        if (a.on_plane != b.on_plane) return a.on_plane < b.on_plane;
        return a.positive < b.positive;
    });
    return out;
}

PartitionTable partition_table(const std::vector<IJPartition>& parts) {
    PartitionTable t;
    for (const auto& p : parts) ++t.counts[{p.on_plane.size(), p.positive.size()}];
    return t;
}

std::vector<IJPartition> enumerate_partitions_bruteforce(const PointConfiguration& s,
                                                         size_t guard_n) {
    size_t n = s.size(), d = s.dim();
    if (n > guard_n) throw std::invalid_argument("bruteforce oracle: n exceeds guard");
    std::vector<IJPartition> out;
    std::vector<int> cls(n, 0);  // 0 = on plane, 1 = positive, 2 = negative
    std::function<void(size_t)> scan = [&](size_t depth) {
        if (depth == n) {
            std::vector<size_t> a, b;
            for (size_t i = 0; i < n; ++i) {
                if (cls[i] == 0) a.push_back(i);
                if (cls[i] == 1) b.push_back(i);
            }
            if (a.size() == n) {
                // All points on the hyperplane: realizable iff S fits in one.
                std::vector<QVec> rows;
                for (size_t i = 0; i < n; ++i) rows.push_back(lifted(s.point(i)));
                std::vector<QVec> kern = kernel_basis(Matrix::from_rows(rows));
                if (kern.empty()) return;
                IJPartition p;
                p.on_plane = a;
                p.normal = QVec(kern[0].begin(), kern[0].end() - 1);
                p.offset = kern[0].back();
                p.dimension = static_cast<long>(affine_dim(s.points()));
                out.push_back(std::move(p));
                return;
            }
            LinearSystem sys(d + 1);
            for (size_t i = 0; i < n; ++i) {
                QVec row = lifted(s.point(i));
                if (cls[i] == 0) sys.add_eq(std::move(row), 0);
                else if (cls[i] == 1) sys.add_ge(std::move(row), 1);
                else {
                    for (auto& x : row) x = -x;
                    sys.add_ge(std::move(row), 1);
                }
            }
            Feasibility f = solve_feasibility(sys);
            if (!f.feasible) return;
            IJPartition p;
            p.on_plane = a;
            p.positive = b;
            p.normal = QVec(f.witness.begin(), f.witness.end() - 1);
            p.offset = f.witness.back();
            if (is_zero_vec(p.normal)) {
                // Constant witness on an all-strict assignment: swap in a
                // genuine hyperplane on the same side.
                p.normal = QVec(d, Rational(0));
                p.normal[0] = 1;
                bool pos = !b.empty();
                Rational extreme = dot(p.normal, s.point(0));
                for (size_t i = 1; i < n; ++i) {
                    Rational v = dot(p.normal, s.point(i));
                    if (pos ? v < extreme : v > extreme) extreme = v;
                }
                p.offset = pos ? Rational(extreme - 1) : Rational(extreme + 1);
            }
            if (!a.empty()) {
                std::vector<QVec> pts;
                for (size_t i : a) pts.push_back(s.point(i));
                p.dimension = static_cast<long>(affine_dim(pts));
            }
            out.push_back(std::move(p));
            return;
        }
        for (int c : {0, 1, 2}) {
            cls[depth] = c;
            scan(depth + 1);
        }
    };
    scan(0);
    for (const auto& p : out)
        if (!check_partition_witness(s, p))
            throw std::logic_error("bruteforce oracle produced an invalid witness");
    std::sort(out.begin(), out.end(), [](const IJPartition& x, const IJPartition& y) {
        if (x.on_plane.size() != y.on_plane.size()) return x.on_plane.size() < y.on_plane.size();
        if (x.positive.size() != y.positive.size()) return x.positive.size() < y.positive.size();
        if (x.on_plane != y.on_plane) return x.on_plane < y.on_plane;
        return x.positive < y.positive;
    });
    return out;
}

std::vector<std::vector<size_t>> k_sets(const PointConfiguration& s, size_t k, size_t guard_n) {
    std::vector<std::vector<size_t>> out;
    for (const auto& p : enumerate_partitions(s, guard_n))
        if (p.on_plane.empty() && p.positive.size() == k) out.push_back(p.positive);
    std::sort(out.begin(), out.end());
    return out;
}

bool in_general_position(const PointConfiguration& s) {
    size_t d = s.dim();
    if (s.size() < d + 1) return affine_dim(s.points()) + 1 == s.size();
    for (const auto& t : subsets_of_size(s.size(), d + 1)) {
        std::vector<QVec> pts;
        for (size_t i : t) pts.push_back(s.point(i));
        if (affine_dim(pts) != d) return false;
    }
    return true;
}

bool verify_vertex_bijection(const PointConfiguration& s, size_t k, size_t guard_n) {
    std::vector<std::vector<size_t>> sets = k_sets(s, k, guard_n);
    std::vector<std::vector<size_t>> verts;
    for (const auto& b : kset_polytope_vertices(s, k)) verts.push_back(b.subset);
    std::sort(verts.begin(), verts.end());
    return sets == verts;
}

namespace {

// All faces of the hypersimplex that are preserved under the projection onto
// s with an image flat of dimension e, found by the direct LP route.
std::vector<HypersimplexFace> preserved_faces_with_image_dim(const PointConfiguration& s,
                                                             size_t k, size_t e) {
    Hypersimplex h(s.size(), k);
    std::vector<Barycenter> all = k_barycenters(s, k);
    std::vector<HypersimplexFace> found;
    for (size_t dim = 1; dim <= h.n - 1; ++dim) {
        for (const auto& f : i_faces(h, dim)) {
            if (f.ones.empty() && f.zeros.empty()) continue;  // improper face
            PreservationReport rep = strictly_preserved_direct(s, k, f, all);
            if (!rep.preserved) continue;
            if (rep.actual_dim == e) found.push_back(f);
        }
    }
    return found;
}

}  // namespace

bool verify_face_correspondence(const PointConfiguration& s, size_t k, size_t e,
                                size_t guard_n) {
    if (e < 1) throw std::invalid_argument("face correspondence is stated for e >= 1");
    size_t n = s.size();
    std::vector<IJPartition> parts = enumerate_partitions(s, guard_n);

    std::set<std::pair<std::vector<size_t>, std::vector<size_t>>> from_partitions;
    for (const auto& p : parts) {
        size_t i = p.on_plane.size(), j = p.positive.size();
        if (!(j + 1 <= k && k + 1 <= i + j)) continue;
        if (p.dimension != static_cast<long>(e)) continue;
        // I = indices of B, J = indices outside A u B
        std::vector<size_t> I = p.positive;
        std::vector<bool> used(n, false);
        for (size_t x : p.on_plane) used[x] = true;
        for (size_t x : p.positive) used[x] = true;
        std::vector<size_t> J;
        for (size_t x = 0; x < n; ++x)
            if (!used[x]) J.push_back(x);

        HypersimplexFace f;
        f.ones = I;
        f.zeros = J;
        PreservationReport rep = strictly_preserved_direct(s, k, f);
        if (!rep.preserved || rep.actual_dim != e) return false;
        from_partitions.insert({I, J});
    }

    std::set<std::pair<std::vector<size_t>, std::vector<size_t>>> from_faces;
    for (const auto& f : preserved_faces_with_image_dim(s, k, e))
        from_faces.insert({f.ones, f.zeros});

    return from_partitions == from_faces;
}

bool verify_euler_relation(const PointConfiguration& s, size_t k, size_t guard_n) {
    if (s.size() > guard_n) throw std::invalid_argument("verify_euler_relation: n exceeds guard");
    if (!in_general_position(s))
        throw std::invalid_argument("verify_euler_relation requires general position");
    size_t d = s.dim();
    PartitionTable table = partition_table(enumerate_partitions(s, guard_n));

    // i = 0: the empty face, count 1 by convention. i = 1: vertices vs D_{0,k}.
    if (kset_polytope_vertices(s, k).size() != table.at(0, k)) return false;

    for (size_t i = 2; i <= d; ++i) {
        size_t faces = preserved_faces_with_image_dim(s, k, i - 1).size();
        size_t expect = 0;
        for (size_t j = k >= i - 1 ? k - (i - 1) : 0; j + 1 <= k; ++j) expect += table.at(i, j);
        if (faces != expect) return false;
    }
    return true;
}

size_t count_halfspace_cut_subsets(const PointConfiguration& s) {
    size_t n = s.size(), d = s.dim();
    size_t count = 0;
    for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
        LinearSystem sys(d + 1);  // (w, c): in-subset <w,p> - c >= 1, out <= 0
        for (size_t i = 0; i < n; ++i) {
            QVec row = s.point(i);
            row.push_back(-1);
            bool inside = mask & (size_t{1} << i);
            if (!inside)
                for (auto& x : row) x = -x;
            sys.add_ge(std::move(row), inside ? Rational(1) : Rational(0));
        }
        if (solve_feasibility(sys).feasible) ++count;
    }
    return count;
}

}  // namespace cdim
