// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Every tolerance here is exact (rational arithmetic); the only numeric
// limits are the stated wall-clock budgets.

#include <chrono>
#include <iostream>
#include <sstream>

#include "cdim/constructions.hpp"
#include "cdim/embedding.hpp"
#include "cdim/gale.hpp"
#include "cdim/hypersimplex.hpp"
#include "cdim/partitions.hpp"
#include "cdim/rng.hpp"
#include "cdim/tables.hpp"
#include "cdim/theorems.hpp"

using namespace cdim;

namespace {

int failures = 0;

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(int criterion, const std::string& name, bool ok, const std::string& detail = "") {
    if (!ok) ++failures;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n" << std::flush;
}

std::string secs(double s) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(2);
    out << s << "s";
    return out.str();
}

void criterion_1_table_cd() {
    auto t0 = std::chrono::steady_clock::now();
    TableDiff d = diff_tables(table_cd_csv(2, 18, 1, 9), expected_cd_csv());
    double el = seconds_since(t0);
    report(1, "Table of cd values reproduced exactly (n 2..18, k 1..9)", d.match && el < 1.0,
           secs(el) + (d.match ? "" : ", " + std::to_string(d.mismatches.size()) + " mismatches"));
}

void criterion_2_table_d() {
    auto t0 = std::chrono::steady_clock::now();
    TableDiff d = diff_tables(table_d_csv(2, 3, 18, 1, 9), expected_d2_csv());
    double el = seconds_since(t0);
    report(2, "Table of d(n,k,2) values reproduced exactly (n 3..18, k 1..9)",
           d.match && el < 1.0, secs(el));
}

void criterion_3_table_nkd() {
    auto t0 = std::chrono::steady_clock::now();
    TableDiff d = diff_tables(table_nkd_csv(1, 7, 1, 14), expected_nkd_csv());
    double el = seconds_since(t0);
    report(3, "Table of n_kd values reproduced exactly, including infinite cells",
           d.match && el < 1.0, secs(el));
}

void criterion_4_attainment() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string first_fail;
    for (size_t n = 4; n <= 9 && ok; ++n) {
        for (size_t k = 2; k + 2 <= n && ok; ++k) {
            size_t dstar = cd_complete(n, k);
            size_t ek = std::min(k, n - k);
            PointConfiguration s = (n >= 2 * ek + 2) ? cyclic_config(n, 2 * ek)
                                                     : simplex_with_barycenter(n);
            if (s.dim() != dstar) {
                ok = false;
                first_fail = "construction dimension mismatch at n=" + std::to_string(n) +
                             " k=" + std::to_string(k);
                break;
            }
            EmbeddingReport rep = is_convex_embedding(s, Hypergraph::complete(n, k));
            size_t vertices_certified = 0;
            for (const auto& c : rep.certificates)
                if (c.vertex) ++vertices_certified;
            if (!rep.embedding || vertices_certified != binomial(n, k)) {
                ok = false;
                first_fail = "embedding failed at n=" + std::to_string(n) +
                             " k=" + std::to_string(k);
            }
        }
    }
    double el = seconds_since(t0);
    report(4, "constructions attain cd(n,k) with every barycenter certified (4<=n<=9)",
           ok && el < 120.0, ok ? secs(el) : first_fail);
}

void criterion_5_characterization() {
    auto t0 = std::chrono::steady_clock::now();
    Rng rng(20240 + 5);
    size_t mismatches = 0, trials = 200;
    for (size_t t = 0; t < trials; ++t) {
        Rng r = rng.fork(t);
        size_t n = 4 + r.below(4);                 // 4..7
        size_t d = 2 + r.below(n - 2);             // 2..n-1
        size_t k = 1 + r.below(n - 1);             // 1..n-1
        size_t i = r.below(2);                     // {0,1}
        PointConfiguration s = random_spanning_configuration(r, n, d);
        bool clause_ok = characterize(s, k, i).clause != Clause::NotPreserving;
        bool skeleton_ok = is_i_preserving(s, k, i, PreserveMethod::Direct).preserving;
        if (clause_ok != skeleton_ok) ++mismatches;
    }
    report(5, "characterization clause <=> i-preserving on 200 seeded configurations",
           mismatches == 0, secs(seconds_since(t0)) + ", mismatches=" + std::to_string(mismatches));
}

void criterion_6_projection_lemma() {
    auto t0 = std::chrono::steady_clock::now();
    Rng rng(20240 + 6);
    size_t mismatches = 0, trials = 100;
    for (size_t t = 0; t < trials; ++t) {
        Rng r = rng.fork(t);
        size_t n = 4 + r.below(4);                       // 4..7
        size_t k = 2 + r.below(n - 3);                   // 2..n-2
        size_t d = 2 + r.below(n - 2);                   // 2..n-1
        PointConfiguration s = random_spanning_configuration(r, n, d);
        Hypersimplex h(n, k);
        PreservationChecker direct_chk(s, k, PreserveMethod::Direct);
        PreservationChecker gale_chk(s, k, PreserveMethod::Gale);
        for (size_t level = 0; level < n; ++level) {
            for (const auto& f : i_faces(h, level)) {
                PreservationReport dr = direct_chk.check(f);
                PreservationReport gr = gale_chk.check(f);
                if (dr.preserved != gr.preserved ||
                    dr.strictly_preserved != gr.strictly_preserved)
                    ++mismatches;
            }
        }
    }
    report(6, "direct and Gale preservation agree on every face, 100 configurations",
           mismatches == 0, secs(seconds_since(t0)) + ", mismatches=" + std::to_string(mismatches));
}

void criterion_7_gale_duality() {
    auto t0 = std::chrono::steady_clock::now();
    Rng rng(20240 + 7);
    size_t mismatches = 0, trials = 100;
    for (size_t t = 0; t < trials; ++t) {
        Rng r = rng.fork(t);
        size_t n = 4 + r.below(4);
        size_t d = 2 + r.below(n - 2);
        PointConfiguration s = random_spanning_configuration(r, n, d);
        GaleTransform g = gale_transform(s);
        for (size_t j = 0; j <= 3; ++j) {
            if (is_j_neighborly_primal(s, j).verdict != is_j_neighborly_dual(g, j).verdict)
                ++mismatches;
            if (is_j_almost_neighborly_primal(s, j).verdict !=
                is_j_almost_neighborly_dual(g, j).verdict)
                ++mismatches;
        }
    }
    report(7, "neighborliness primal <=> Gale dual for j <= 3, 100 configurations",
           mismatches == 0, secs(seconds_since(t0)) + ", mismatches=" + std::to_string(mismatches));
}

void criterion_8_symmetry() {
    auto t0 = std::chrono::steady_clock::now();
    Rng rng(20240 + 8);
    size_t mismatches = 0, trials = 100;
    for (size_t t = 0; t < trials; ++t) {
        Rng r = rng.fork(t);
        size_t n = 4 + r.below(4);
        size_t d = 2 + r.below(2);
        size_t k = 1 + r.below(n - 1);
        PointConfiguration s = random_configuration(r, n, d);
        complement_homothety(s, k);  // throws unless the homothety is exact
        bool a = is_convex_embedding(s, Hypergraph::complete(n, k)).embedding;
        bool b = is_convex_embedding(s, Hypergraph::complete(n, n - k)).embedding;
        if (a != b) ++mismatches;
    }
    report(8, "k vs n-k barycenter symmetry with exact homothety, 100 configurations",
           mismatches == 0, secs(seconds_since(t0)) + ", mismatches=" + std::to_string(mismatches));
}

void criterion_9_multipartite() {
    bool all_ok = true;
    std::string detail;
    for (auto [d, k, n] : std::vector<std::array<size_t, 3>>{
             {3, 2, 3}, {4, 2, 3}, {4, 3, 2}, {5, 3, 2}}) {
        auto t0 = std::chrono::steady_clock::now();
        auto [s, h] = multipartite_lift(d, k, n);
        size_t expected = binomial(d, k);
        for (size_t i = 0; i < k; ++i) expected *= n;
        EmbeddingReport rep = is_convex_embedding(s, h);
        size_t certified = 0;
        for (const auto& c : rep.certificates)
            if (c.vertex) ++certified;
        double el = seconds_since(t0);
        bool ok = rep.embedding && h.edges.size() == expected && certified == expected &&
                  el < 30.0;
        all_ok = all_ok && ok;
        detail += (detail.empty() ? "" : ", ") + std::to_string(d) + "/" + std::to_string(k) +
                  "/" + std::to_string(n) + ":" + secs(el);
    }
    report(9, "multipartite lifts: all C(d,k) n^k barycenters distinct certified vertices",
           all_ok, detail);
}

void criterion_10_partitions() {
    auto t0 = std::chrono::steady_clock::now();
    Rng rng(20240 + 10);
    size_t mismatches = 0, trials = 50;
    for (size_t t = 0; t < trials; ++t) {
        Rng r = rng.fork(t);
        size_t n = 5 + r.below(4);  // 5..8
        PointConfiguration s = random_general_position_configuration(r, n, 2, 7, 2);
        for (size_t k : {2UL, 3UL}) {
            if (!verify_vertex_bijection(s, k)) ++mismatches;
            if (!verify_euler_relation(s, k)) ++mismatches;
        }
        if (n <= 7) {
            std::vector<IJPartition> fast = enumerate_partitions(s);
            std::vector<IJPartition> slow = enumerate_partitions_bruteforce(s);
            bool same = fast.size() == slow.size();
            for (size_t x = 0; same && x < fast.size(); ++x)
                same = fast[x].on_plane == slow[x].on_plane &&
                       fast[x].positive == slow[x].positive;
            if (!same) ++mismatches;
        }
    }
    report(10, "k-set identities and partition oracle on 50 generic planar configurations",
           mismatches == 0, secs(seconds_since(t0)) + ", mismatches=" + std::to_string(mismatches));
}

void criterion_11_bounds() {
    auto [lo, hi] = gamma_bounds(2, 3);
    bool ok = lo == rat(1, 3) && hi == rat(2, 5);
    ok = ok && de_caen_bound(10, 3, 5) == rat(105);
    ok = ok && halfspace_upper_bound(5, 2) == 22;
    Rng rng(20240 + 11);
    for (size_t t = 0; t < 20 && ok; ++t) {
        Rng r = rng.fork(t);
        PointConfiguration s = random_general_position_configuration(r, 5, 2, 9, 2);
        if (count_halfspace_cut_subsets(s) != 22) ok = false;
    }
    report(11, "gamma/de Caen/halfspace bounds exact; cut-subset count attains 22", ok);
}

}  // namespace

int main() {
    auto t0 = std::chrono::steady_clock::now();
    criterion_1_table_cd();
    criterion_2_table_d();
    criterion_3_table_nkd();
    criterion_4_attainment();
    criterion_5_characterization();
    criterion_6_projection_lemma();
    criterion_7_gale_duality();
    criterion_8_symmetry();
    criterion_9_multipartite();
    criterion_10_partitions();
    criterion_11_bounds();
    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES: " + std::to_string(failures))
              << " in " << secs(seconds_since(t0)) << "\n";
    return failures == 0 ? 0 : 1;
}
