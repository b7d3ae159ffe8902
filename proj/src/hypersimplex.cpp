#include "cdim/hypersimplex.hpp"

#include <algorithm>
#include <stdexcept>

namespace cdim {

Hypersimplex::Hypersimplex(size_t n_, size_t k_) : n(n_), k(k_) {
    if (n < 2 || k < 1 || k > n - 1)
        throw std::invalid_argument("hypersimplex requires 1 <= k <= n-1");
}

unsigned long binomial(size_t n, size_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned long r = 1;
    for (size_t i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

std::vector<std::vector<size_t>> subsets_of_size(size_t n, size_t k) {
    std::vector<std::vector<size_t>> out;
    if (k > n) return out;
    std::vector<size_t> cur(k);
    for (size_t i = 0; i < k; ++i) cur[i] = i;
    for (;;) {
        out.push_back(cur);
        if (k == 0) break;
        // advance to the lexicographic successor
        size_t i = k;
        while (i > 0 && cur[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

std::vector<QVec> vertices(const Hypersimplex& h) {
    // Lexicographic on supports: (4,2) yields 1100, 1010, 1001, 0110, ...
    std::vector<QVec> out;
    for (const auto& s : subsets_of_size(h.n, h.k)) {
        QVec v(h.n, Rational(0));
        for (size_t i : s) v[i] = 1;
        out.push_back(std::move(v));
    }
    return out;
}

FacetNormals facet_normals(const Hypersimplex& h) {
    FacetNormals out;
    out.simplex_regime = (h.k == 1 || h.k == h.n - 1);
    Rational inv_n(1, static_cast<long>(h.n));
    for (size_t j = 0; j < h.n; ++j) {
        FacetNormalPair p;
        p.index = j;
        p.upper.assign(h.n, -inv_n);
        p.upper[j] += 1;
        p.lower.assign(h.n, inv_n);
        p.lower[j] -= 1;
        out.pairs.push_back(std::move(p));
    }
    if (out.simplex_regime) {
        // Only one of the two families supports facets: x_j >= 0 for k = 1,
        // x_j <= 1 for k = n-1. Keep the pair structure; callers that care
        // about the facet list use the flag to pick the right family.
    }
    return out;
}

void validate_face(const Hypersimplex& h, const HypersimplexFace& f) {
    auto sorted_distinct_in_range = [&](const std::vector<size_t>& v) {
        for (size_t i = 0; i < v.size(); ++i) {
            if (v[i] >= h.n) return false;
            if (i > 0 && v[i] <= v[i - 1]) return false;
        }
        return true;
    };
    if (!sorted_distinct_in_range(f.ones) || !sorted_distinct_in_range(f.zeros))
        throw std::invalid_argument("face index sets must be sorted subsets of [n]");
    std::vector<size_t> inter;
    std::set_intersection(f.ones.begin(), f.ones.end(), f.zeros.begin(), f.zeros.end(),
                          std::back_inserter(inter));
    if (!inter.empty()) throw std::invalid_argument("face index sets must be disjoint");
    if (f.vertex_face) {
        if (f.ones.size() != h.k || f.zeros.size() != h.n - h.k)
            throw std::invalid_argument("vertex face must pin all n coordinates");
    } else {
        if (f.ones.size() >= h.k)
            throw std::invalid_argument("face requires |I| <= k-1");
        if (f.zeros.size() >= h.n - h.k)
            throw std::invalid_argument("face requires |J| <= n-k-1");
    }
}

size_t face_dim(const Hypersimplex& h, const HypersimplexFace& f) {
    validate_face(h, f);
    if (f.vertex_face) return 0;
    return h.n - 1 - f.ones.size() - f.zeros.size();
}

std::vector<HypersimplexFace> i_faces(const Hypersimplex& h, size_t i) {
    if (i > h.n - 1) throw std::invalid_argument("face dimension out of range");
    std::vector<HypersimplexFace> out;
    if (i == 0) {
        for (const auto& s : subsets_of_size(h.n, h.k)) {
            HypersimplexFace f;
            f.vertex_face = true;
            f.ones = s;
            std::vector<bool> in(h.n, false);
            for (size_t x : s) in[x] = true;
            for (size_t x = 0; x < h.n; ++x)
                if (!in[x]) f.zeros.push_back(x);
            out.push_back(std::move(f));
        }
        return out;
    }
    size_t total = h.n - i - 1;  // |I| + |J|
    for (size_t a = 0; a <= total; ++a) {
        size_t b = total - a;
        if (a + 1 > h.k) break;            // |I| <= k-1
        if (b + h.k + 1 > h.n) continue;   // |J| <= n-k-1
        for (const auto& I : subsets_of_size(h.n, a)) {
            std::vector<bool> used(h.n, false);
            for (size_t x : I) used[x] = true;
            std::vector<size_t> rest;
            for (size_t x = 0; x < h.n; ++x)
                if (!used[x]) rest.push_back(x);
            for (const auto& Jidx : subsets_of_size(rest.size(), b)) {
                HypersimplexFace f;
                f.ones = I;
                for (size_t t : Jidx) f.zeros.push_back(rest[t]);
                out.push_back(std::move(f));
            }
        }
    }
    return out;
}

std::vector<QVec> face_vertices(const Hypersimplex& h, const HypersimplexFace& f) {
    validate_face(h, f);
    std::vector<QVec> out;
    for (const auto& v : vertices(h)) {
        bool ok = true;
        for (size_t i : f.ones)
            if (v[i] != 1) { ok = false; break; }
        if (ok)
            for (size_t j : f.zeros)
                if (v[j] != 0) { ok = false; break; }
        if (ok) out.push_back(v);
    }
    return out;
}

}  // namespace cdim
