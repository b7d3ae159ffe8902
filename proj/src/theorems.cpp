#include "cdim/theorems.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cdim {

namespace {

std::vector<size_t> clipped_union(size_t n, size_t lo_hi, size_t hi_lo) {
    // {1,...,lo_hi} union {hi_lo,...,n-1}, clipped to [1, n-1]
    std::set<size_t> vals;
    for (size_t v = 1; v <= std::min(lo_hi, n - 1); ++v) vals.insert(v);
    for (size_t v = std::max<size_t>(1, hi_lo); v + 1 <= n; ++v) vals.insert(v);
    return {vals.begin(), vals.end()};
}

}  // namespace

std::vector<size_t> exceptional_set_A(size_t n, size_t i) {
    if (n < 2) throw std::invalid_argument("A_{n,i} needs n >= 2");
    // hi_lo = n-i-1 may underflow for large i; then the upper block is all of [1, n-1]
    size_t hi_lo = (n >= i + 1) ? n - i - 1 : 0;
    return clipped_union(n, i + 1, hi_lo);
}

std::vector<size_t> exceptional_set_C(size_t n, size_t i) {
    if (n < 2) throw std::invalid_argument("C_{n,i} needs n >= 2");
    size_t hi_lo = (n >= i + 2) ? n - i - 2 : 0;
    return clipped_union(n, i + 2, hi_lo);
}

size_t d_skeleton(size_t n, size_t k, size_t i) {
    if (k < 1 || k + 1 > n) throw std::invalid_argument("d_skeleton requires 1 <= k <= n-1");
    if (i + 1 > n) throw std::invalid_argument("d_skeleton requires 0 <= i <= n-1");
    if (n >= 2 * k + 2 * i + 2) return 2 * k + 2 * i;
    if (n + 2 * i + 2 <= 2 * k) return 2 * n - 2 * k + 2 * i;
    // middle band: 2k-2i-1 <= n <= 2k+2i+1
    std::vector<size_t> a = exceptional_set_A(n, i);
    bool exceptional = std::binary_search(a.begin(), a.end(), k);
    return exceptional ? n - 1 : n - 2;
}

size_t cd_complete(size_t n, size_t k) {
    if (n < 2 || k < 1 || k + 1 > n) throw std::invalid_argument("cd requires n >= 2, 1 <= k <= n-1");
    if (k == 1 || k + 1 == n) {
        if (n == 2) return 1;  // cd(K_2^(1)) = 1
        return 2;
    }
    if (n >= 2 * k + 2) return 2 * k;
    if (n + 2 <= 2 * k) return 2 * n - 2 * k;
    return n - 2;  // n in {2k-1, 2k, 2k+1}
}

size_t d_strong(size_t n, size_t k, size_t i) {
    if (k < 1 || k + 1 > n) throw std::invalid_argument("d_strong requires 1 <= k <= n-1");
    if (i + 1 > n) throw std::invalid_argument("d_strong requires 0 <= i <= n-1");
    if (n >= 2 * k + 2 * i + 2) return 2 * k + 2 * i;
    if (n + 2 * i + 2 <= 2 * k) return 2 * n - 2 * k + 2 * i;
    std::vector<size_t> c = exceptional_set_C(n, i);
    bool exceptional = std::binary_search(c.begin(), c.end(), k);
    return exceptional ? n - 1 : n - 2;
}

const char* clause_name(Clause c) {
    switch (c) {
        case Clause::Neighborly: return "Neighborly";
        case Clause::NotAlmostNeighborly: return "NotAlmostNeighborly";
        case Clause::Isomorphism: return "Isomorphism";
        case Clause::NotPreserving: return "NotPreserving";
    }
    return "?";
}

CharacterizationVerdict characterize(const PointConfiguration& s, size_t k, size_t i) {
    size_t n = s.size(), d = s.dim();
    if (k < 1 || k + 1 > n) throw std::invalid_argument("characterize requires 1 <= k <= n-1");
    if (!s.spans()) throw NonSpanningError(s.affine_rank(), d);

    CharacterizationVerdict out;
    out.effective_k = std::min(k, n - k);  // Corollary: Delta_{n,k} ~ Delta_{n,n-k}
    size_t ek = out.effective_k;

    out.neighborly = is_j_neighborly_primal(s, ek + i);
    if (out.neighborly.verdict) out.all_clauses.push_back(Clause::Neighborly);

    if (d + 2 == n && ek >= i + 2) {
        out.almost = is_j_almost_neighborly_primal(s, ek - i - 1);
        if (!out.almost->verdict) out.all_clauses.push_back(Clause::NotAlmostNeighborly);
    }

    if (n == d + 1) out.all_clauses.push_back(Clause::Isomorphism);

    out.clause = out.all_clauses.empty() ? Clause::NotPreserving : out.all_clauses.front();
    return out;
}

}  // namespace cdim
