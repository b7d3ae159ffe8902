#include "cdim/linear.hpp"

#include <stdexcept>

namespace cdim {

void LinearSystem::add_eq(QVec lhs, Rational rhs) {
    if (lhs.size() != vars) throw std::invalid_argument("add_eq: wrong arity");
    eq_lhs.push_back(std::move(lhs));
    eq_rhs.push_back(std::move(rhs));
}

void LinearSystem::add_ge(QVec lhs, Rational rhs) {
    if (lhs.size() != vars) throw std::invalid_argument("add_ge: wrong arity");
    ge_lhs.push_back(std::move(lhs));
    ge_rhs.push_back(std::move(rhs));
}

bool check_witness(const LinearSystem& sys, const QVec& x) {
    if (x.size() != sys.vars) return false;
    for (size_t j = 0; j < sys.vars; ++j)
        if (sys.nonneg[j] && x[j] < 0) return false;
    for (size_t r = 0; r < sys.eq_lhs.size(); ++r)
        if (dot(sys.eq_lhs[r], x) != sys.eq_rhs[r]) return false;
    for (size_t r = 0; r < sys.ge_lhs.size(); ++r)
        if (dot(sys.ge_lhs[r], x) < sys.ge_rhs[r]) return false;
    return true;
}

bool check_farkas(const LinearSystem& sys, const QVec& u, const QVec& v) {
    if (u.size() != sys.eq_lhs.size() || v.size() != sys.ge_lhs.size()) return false;
    for (const auto& vi : v)
        if (vi < 0) return false;
    for (size_t j = 0; j < sys.vars; ++j) {
        Rational s = 0;
        for (size_t r = 0; r < sys.eq_lhs.size(); ++r) s += u[r] * sys.eq_lhs[r][j];
        for (size_t r = 0; r < sys.ge_lhs.size(); ++r) s += v[r] * sys.ge_lhs[r][j];
        if (sys.nonneg[j] ? s > 0 : s != 0) return false;
    }
    Rational rhs = 0;
    for (size_t r = 0; r < sys.eq_rhs.size(); ++r) rhs += u[r] * sys.eq_rhs[r];
    for (size_t r = 0; r < sys.ge_rhs.size(); ++r) rhs += v[r] * sys.ge_rhs[r];
    return rhs > 0;
}

namespace {

// Phase-1 tableau for the standard form A z = b, z >= 0, b >= 0 built from
// the input system: z = (variable columns, slacks, artificials), where a
// free variable contributes a +/- column pair and a nonneg variable a single
// column. Artificials start basic.
class Phase1Tableau {
  public:
    Phase1Tableau(const LinearSystem& sys)
        : n_(sys.vars),
          me_(sys.eq_lhs.size()),
          mg_(sys.ge_lhs.size()),
          m_(me_ + mg_),
          basis_(m_),
          sign_(m_, 1) {
        col_of_.reserve(n_);
        size_t col = 0;
        for (size_t j = 0; j < n_; ++j) {
            col_of_.push_back(col);
            col += sys.nonneg[j] ? 1 : 2;
        }
        nvar_cols_ = col;
        cols_ = nvar_cols_ + mg_ + m_;
        t_.assign(m_, QVec(cols_ + 1, Rational(0)));
        z_.assign(cols_ + 1, Rational(0));

        for (size_t r = 0; r < m_; ++r) {
            const QVec& lhs = r < me_ ? sys.eq_lhs[r] : sys.ge_lhs[r - me_];
            const Rational& rhs = r < me_ ? sys.eq_rhs[r] : sys.ge_rhs[r - me_];
            if (rhs < 0) sign_[r] = -1;
            Rational s(sign_[r]);
            for (size_t j = 0; j < n_; ++j) {
                t_[r][col_of_[j]] = s * lhs[j];
                if (!sys.nonneg[j]) t_[r][col_of_[j] + 1] = -s * lhs[j];
            }
            if (r >= me_) t_[r][nvar_cols_ + (r - me_)] = -s;
            t_[r][art_col(r)] = 1;
            t_[r][cols_] = s * rhs;
            basis_[r] = art_col(r);
        }
        // Price the artificial basis out of the phase-1 cost row.
        for (size_t j = 0; j <= cols_; ++j) {
            Rational acc = 0;
            for (size_t r = 0; r < m_; ++r) acc += t_[r][j];
            Rational c = (j >= nvar_cols_ + mg_ && j < cols_) ? Rational(1) : Rational(0);
            z_[j] = c - acc;
        }
        negatives_.assign(n_, false);
        for (size_t j = 0; j < n_; ++j) negatives_[j] = !sys.nonneg[j];
    }

    // Returns true when the phase-1 optimum is zero (original system feasible).
    bool optimize() {
        for (;;) {
            size_t enter = cols_;
            for (size_t j = 0; j < cols_; ++j)
                if (z_[j] < 0) { enter = j; break; }  // Bland: lowest index
            if (enter == cols_) break;
            size_t leave = m_;
            for (size_t r = 0; r < m_; ++r) {
                if (t_[r][enter] <= 0) continue;
                if (leave == m_) { leave = r; continue; }
                Rational cur = t_[r][cols_] / t_[r][enter];
                Rational best = t_[leave][cols_] / t_[leave][enter];
                if (cur < best || (cur == best && basis_[r] < basis_[leave])) leave = r;
            }
            if (leave == m_)
                throw std::logic_error("phase-1 objective unbounded");  // impossible: bounded below by 0
            pivot(leave, enter);
        }
        return -z_[cols_] == 0;  // objective value = -z_rhs
    }

    QVec witness() const {
        QVec full(cols_, Rational(0));
        for (size_t r = 0; r < m_; ++r) full[basis_[r]] = t_[r][cols_];
        QVec x(n_);
        for (size_t j = 0; j < n_; ++j) {
            x[j] = full[col_of_[j]];
            if (negatives_[j]) x[j] -= full[col_of_[j] + 1];
        }
        return x;
    }

    // Row multipliers y_r = 1 - z[artificial_r]; certificate entries carry the
    // sign flips applied during rhs normalization.
    void farkas(QVec& u, QVec& v) const {
        u.assign(me_, Rational(0));
        v.assign(mg_, Rational(0));
        for (size_t r = 0; r < m_; ++r) {
            Rational y = Rational(1) - z_[art_col(r)];
            Rational val = Rational(sign_[r]) * y;
            if (r < me_) u[r] = val; else v[r - me_] = val;
        }
    }

  private:
    size_t art_col(size_t r) const { return nvar_cols_ + mg_ + r; }

    void pivot(size_t leave, size_t enter) {
        QVec& prow = t_[leave];
        Rational inv = 1 / prow[enter];
        for (auto& x : prow) x *= inv;
        for (size_t r = 0; r < m_; ++r) {
            if (r == leave || t_[r][enter] == 0) continue;
            Rational f = t_[r][enter];
            for (size_t j = 0; j <= cols_; ++j) t_[r][j] -= f * prow[j];
        }
        if (z_[enter] != 0) {
            Rational f = z_[enter];
            for (size_t j = 0; j <= cols_; ++j) z_[j] -= f * prow[j];
        }
        basis_[leave] = enter;
    }

    size_t n_, me_, mg_, m_, nvar_cols_ = 0, cols_ = 0;
    std::vector<QVec> t_;
    QVec z_;
    std::vector<size_t> basis_;
    std::vector<int> sign_;
    std::vector<size_t> col_of_;
    std::vector<bool> negatives_;
};

}  // namespace

Feasibility solve_feasibility(const LinearSystem& sys) {
    Feasibility out;
    Phase1Tableau tab(sys);
    if (tab.optimize()) {
        out.feasible = true;
        out.witness = tab.witness();
        if (!check_witness(sys, out.witness))
            throw std::logic_error("simplex produced an invalid witness");
    } else {
        out.feasible = false;
        tab.farkas(out.farkas_eq, out.farkas_ge);
        if (!check_farkas(sys, out.farkas_eq, out.farkas_ge))
            throw std::logic_error("simplex produced an invalid Farkas certificate");
    }
    return out;
}

namespace {

// Feasibility of {sum lambda_j v_j = 0, lambda_j >= 1}, solved for
// mu = lambda - 1 >= 0 so the system has only `dim` rows. The returned
// witness is mapped back to lambda.
Feasibility positive_dependency(const std::vector<QVec>& vectors, size_t dim) {
    LinearSystem sys(vectors.size());
    sys.set_all_nonneg();
    for (size_t t = 0; t < dim; ++t) {
        QVec row(vectors.size());
        Rational rhs = 0;
        for (size_t j = 0; j < vectors.size(); ++j) {
            if (vectors[j].size() != dim) throw std::invalid_argument("vector dimension mismatch");
            row[j] = vectors[j][t];
            rhs -= vectors[j][t];
        }
        sys.add_eq(std::move(row), rhs);
    }
    Feasibility f = solve_feasibility(sys);
    if (f.feasible)
        for (auto& x : f.witness) x += 1;
    return f;
}

}  // namespace

InteriorCheck zero_in_relative_interior_cert(const std::vector<QVec>& vectors, size_t dim) {
    InteriorCheck out;
    Feasibility f = positive_dependency(vectors, dim);
    if (f.feasible) {
        out.inside = true;
        out.lambda = f.witness;
    } else {
        out.inside = false;
        out.separator = f.farkas_eq;  // <u, v_j> <= 0 for all j, strict somewhere
    }
    return out;
}

InteriorCheck zero_in_interior_cert(const std::vector<QVec>& vectors, size_t dim) {
    Matrix m = vectors.empty() ? Matrix(0, dim) : Matrix::from_rows(vectors);
    if (rank(m) < dim) {
        InteriorCheck out;
        out.inside = false;
        // The vectors do not span: a kernel vector of the row space is a
        // nonzero u orthogonal to every vector, so 0 cannot be interior.
        std::vector<QVec> kern = kernel_basis(m);
        out.separator = kern.at(0);
        return out;
    }
    InteriorCheck out = zero_in_relative_interior_cert(vectors, dim);
    if (out.inside) {
        // Record `dim` linearly independent vectors (pivot columns of the
        // transposed matrix) as the spanning part of the certificate.
        Matrix cols = m.transposed();
        out.span_basis = rref(cols);
    }
    return out;
}

bool zero_in_relative_interior(const std::vector<QVec>& vectors, size_t dim) {
    return zero_in_relative_interior_cert(vectors, dim).inside;
}

bool zero_in_interior(const std::vector<QVec>& vectors, size_t dim) {
    return zero_in_interior_cert(vectors, dim).inside;
}

}  // namespace cdim
