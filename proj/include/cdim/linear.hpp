#ifndef CDIM_LINEAR_HPP
#define CDIM_LINEAR_HPP

#include "cdim/matrix.hpp"
#include "cdim/rational.hpp"

namespace cdim {

// Equalities E x = f together with weak inequalities G x >= h over a shared
// variable vector. Strict inequalities are never solver primitives: callers
// encode strictness as ">= 1" (homogeneous systems scale) or "<= c - 1".
// Variables flagged in `nonneg` carry the sign bound natively instead of
// through an inequality row.
struct LinearSystem {
    size_t vars = 0;
    std::vector<QVec> eq_lhs;
    QVec eq_rhs;
    std::vector<QVec> ge_lhs;
    QVec ge_rhs;
    std::vector<bool> nonneg;

    explicit LinearSystem(size_t nvars = 0) : vars(nvars), nonneg(nvars, false) {}
    void add_eq(QVec lhs, Rational rhs);
    void add_ge(QVec lhs, Rational rhs);
    void set_nonneg(size_t var) { nonneg.at(var) = true; }
    void set_all_nonneg() { nonneg.assign(vars, true); }
};

struct Feasibility {
    bool feasible = false;
    // Feasible: an exact solution of every constraint.
    QVec witness;
    // Infeasible: exact Farkas certificate. farkas_ge >= 0 componentwise,
    // the combined coefficient farkas_eq^T E + farkas_ge^T G vanishes on free
    // variables and is <= 0 on nonneg variables, while
    // farkas_eq^T f + farkas_ge^T h > 0, so the combination reads 0 >= positive.
    QVec farkas_eq;
    QVec farkas_ge;
};

// Exact two-phase simplex with Bland's anti-cycling rule. No floating point.
// The returned witness / certificate is re-verified by substitution before
// being handed back; a violation is a logic error in the solver itself.
Feasibility solve_feasibility(const LinearSystem& sys);

// Substitution checks used by the solver's own postcondition and by the
// certificate re-validation path (no LP involved).
bool check_witness(const LinearSystem& sys, const QVec& x);
bool check_farkas(const LinearSystem& sys, const QVec& u, const QVec& v);

// Positive-dependency predicates on a list of vectors in linear `dim`-space.
//
// zero_in_interior: the vectors positively span the space, decided as
// rank = dim plus feasibility of {sum lambda_j v_j = 0, lambda_j >= 1}.
// zero_in_relative_interior: the feasibility part alone.
struct InteriorCheck {
    bool inside = false;
    // inside: strictly positive dependency, and (interior flavor) column
    // indices of an invertible dim x dim minor witnessing full rank.
    QVec lambda;
    std::vector<size_t> span_basis;
    // not inside: u != 0 with <u, v_j> <= 0 for all j; for the relative
    // interior failure the inequality is strict for at least one j.
    QVec separator;
};

InteriorCheck zero_in_interior_cert(const std::vector<QVec>& vectors, size_t dim);
InteriorCheck zero_in_relative_interior_cert(const std::vector<QVec>& vectors, size_t dim);

bool zero_in_interior(const std::vector<QVec>& vectors, size_t dim);
bool zero_in_relative_interior(const std::vector<QVec>& vectors, size_t dim);

}  // namespace cdim

#endif
