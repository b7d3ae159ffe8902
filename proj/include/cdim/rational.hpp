#ifndef CDIM_RATIONAL_HPP
#define CDIM_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace cdim {

// All geometry in this library is exact. Rational is a GMP rational kept in
// canonical form: lowest terms, denominator > 0. GMP maintains canonicity
// through arithmetic, so the invariant holds everywhere values flow.
using Rational = mpq_class;
using QVec = std::vector<Rational>;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p", "-p", "p/q" with arbitrary-precision integer parts.
inline Rational parse_rational(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("unparsable rational: '" + text + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

// Canonical rendering: "p" when the denominator is 1, else "p/q".
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline int sgn(const Rational& q) { return ::sgn(q); }

inline Rational dot(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
    Rational s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline bool is_zero_vec(const QVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

inline QVec operator-(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec sub: size mismatch");
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline QVec operator+(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec add: size mismatch");
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline QVec operator*(const Rational& c, const QVec& v) {
    QVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

}  // namespace cdim

#endif
