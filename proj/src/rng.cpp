#include "cdim/rng.hpp"

#include "cdim/hypersimplex.hpp"

namespace cdim {

PointConfiguration random_configuration(Rng& rng, size_t n, size_t d, long max_num, long max_den) {
    for (;;) {
        std::vector<QVec> pts;
        for (size_t i = 0; i < n; ++i) {
            QVec p(d);
            for (size_t j = 0; j < d; ++j) p[j] = rng.rational(max_num, max_den);
            pts.push_back(std::move(p));
        }
        try {
            return PointConfiguration(d, std::move(pts));
        } catch (const DuplicatePointsError&) {
            // resample
        }
    }
}

PointConfiguration random_spanning_configuration(Rng& rng, size_t n, size_t d, long max_num,
                                                 long max_den) {
    for (;;) {
        PointConfiguration s = random_configuration(rng, n, d, max_num, max_den);
        if (s.spans()) return s;
    }
}

PointConfiguration random_general_position_configuration(Rng& rng, size_t n, size_t d,
                                                         long max_num, long max_den) {
    for (;;) {
        PointConfiguration s = random_configuration(rng, n, d, max_num, max_den);
        if (!s.spans()) continue;
        bool ok = true;
        if (n >= d + 1) {
            for (const auto& t : subsets_of_size(n, d + 1)) {
                std::vector<QVec> pts;
                for (size_t i : t) pts.push_back(s.point(i));
                if (affine_dim(pts) != d) { ok = false; break; }
            }
        }
        if (ok) return s;
    }
}

}  // namespace cdim
