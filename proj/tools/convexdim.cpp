// Command-line front end: table reproduction, projection checks, construction
// emission, certificate re-validation, and the property self-test suite.
//
// Exit codes: 0 success, 1 property violation or failed verification,
// 2 input error.

#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cdim/config_io.hpp"
#include "cdim/constructions.hpp"
#include "cdim/embedding.hpp"
#include "cdim/gale.hpp"
#include "cdim/partitions.hpp"
#include "cdim/report.hpp"
#include "cdim/selftest.hpp"
#include "cdim/tables.hpp"
#include "cdim/theorems.hpp"

namespace {

struct Range {
    size_t lo = 0, hi = 0;
};

Range parse_range(const std::string& text) {
    Range r;
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        r.lo = r.hi = std::stoul(text);
    } else {
        r.lo = std::stoul(text.substr(0, dots));
        r.hi = std::stoul(text.substr(dots + 2));
    }
    if (r.hi < r.lo) throw CLI::ValidationError("range", "upper bound below lower bound");
    return r;
}

void write_output(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + path);
    out << payload;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int run_tables(const std::string& which, const Range& nr, const Range& kr, const Range& dr,
               size_t i, bool diff, const std::string& out_path) {
    std::string csv, expected;
    if (which == "cd") {
        csv = cdim::table_cd_csv(nr.lo, nr.hi, kr.lo, kr.hi);
        expected = cdim::expected_cd_csv();
    } else if (which == "d") {
        if (diff && i != 2)
            throw CLI::ValidationError("--diff", "published values are transcribed for --i 2 only");
        csv = cdim::table_d_csv(i, nr.lo, nr.hi, kr.lo, kr.hi);
        expected = cdim::expected_d2_csv();
    } else if (which == "nkd") {
        csv = cdim::table_nkd_csv(kr.lo, kr.hi, dr.lo, dr.hi);
        expected = cdim::expected_nkd_csv();
    } else {
        throw CLI::ValidationError("which", "expected cd, d, or nkd");
    }
    write_output(out_path, csv);
    if (diff) {
        cdim::TableDiff delta = cdim::diff_tables(csv, expected);
        if (!delta.match) {
            for (const auto& m : delta.mismatches) std::cerr << "diff: " << m << "\n";
            return 1;
        }
        std::cerr << "diff: exact match with the published table\n";
    }
    return 0;
}

int run_check(const std::string& file, size_t k, size_t i, const std::string& method_name,
              size_t jobs, size_t max_n, size_t max_subsets, const std::string& out_path) {
    cdim::PreserveMethod method;
    if (method_name == "direct") method = cdim::PreserveMethod::Direct;
    else if (method_name == "gale") method = cdim::PreserveMethod::Gale;
    else if (method_name == "both") method = cdim::PreserveMethod::Both;
    else throw CLI::ValidationError("method", "expected direct, gale, or both");

    cdim::ConfigFile cfg = cdim::parse_config_text(read_file(file));
    if (cfg.points.size() > max_n)
        throw std::invalid_argument("n exceeds the exhaustive-mode guard (raise --max-n)");
    if (k >= 1 && k <= cfg.points.size() &&
        cdim::binomial(cfg.points.size(), k) > max_subsets)
        throw std::invalid_argument("C(n,k) exceeds the guard (raise --max-subsets)");
    auto started = std::chrono::steady_clock::now();
    nlohmann::json rep = cdim::check_report(cfg, k, i, method, jobs);
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - started);
    write_output(out_path, rep.dump(2));
    std::cerr << "check: " << (rep["verdicts"]["i_preserving"].get<bool>() ? "preserving"
                                                                           : "not preserving")
              << ", clause " << rep["verdicts"]["clause"].get<std::string>() << " ("
              << elapsed.count() << " ms)\n";
    return 0;
}

int run_construct(const std::string& kind, size_t n, size_t d, size_t k, size_t a, size_t b,
                  size_t r, bool verify, const std::string& out_path) {
    using namespace cdim;
    std::optional<PointConfiguration> s;
    std::optional<Hypergraph> lift_edges;
    std::vector<std::string> labels;

    if (kind == "cyclic") {
        s = cyclic_config(n, d);
    } else if (kind == "simplex-barycenter") {
        s = simplex_with_barycenter(n);
    } else if (kind == "simplex") {
        s = simplex_config(d);
    } else if (kind == "sum") {
        s = direct_sum(simplex_config(a), simplex_config(b));
    } else if (kind == "pyramid") {
        s = pyramid(direct_sum(simplex_config(a), simplex_config(b)), r);
    } else if (kind == "multipartite") {
        auto [cfg, hg] = multipartite_lift(d, k, n);
        s = cfg;
        lift_edges = hg;
        for (size_t part = 0; part < d; ++part)
            for (size_t val = 1; val <= n; ++val)
                labels.push_back("part" + std::to_string(part) + ":" + std::to_string(val));
    } else {
        throw CLI::ValidationError(
            "kind", "expected cyclic, simplex, simplex-barycenter, sum, pyramid, or multipartite");
    }

    ConfigFile cfg = from_point_configuration(*s);
    cfg.labels = labels;
    if (!verify) {
        write_output(out_path, config_to_json(cfg).dump(2));
        return 0;
    }

    // --verify re-checks the advertised property of each construction.
    bool ok = true;
    nlohmann::json rep;
    if (kind == "multipartite") {
        rep = construct_verify_report(cfg, *s, *lift_edges);
        ok = rep["verdicts"]["convex_embedding"].get<bool>();
    } else {
        rep["command"] = "construct-property";
        rep["inputs"] = {{"kind", kind}, {"config", config_to_json(cfg)}};
        if (kind == "cyclic") {
            NeighborlinessCertificate c = is_j_neighborly_primal(*s, d / 2);
            ok = c.verdict;
            rep["verdicts"]["neighborly_level"] = d / 2;
            rep["verdicts"]["neighborly"] = c.verdict;
            rep["certificates"]["neighborly"] = neighborliness_to_json(c);
        } else if (kind == "simplex-barycenter") {
            NeighborlinessCertificate c = is_j_almost_neighborly_primal(*s, 1);
            ok = !c.verdict;
            rep["verdicts"]["not_1_almost_neighborly"] = !c.verdict;
            rep["certificates"]["almost"] = neighborliness_to_json(c);
        } else if (kind == "simplex") {
            ok = s->spans() && s->size() == s->dim() + 1;
            rep["verdicts"]["affinely_independent"] = ok;
        } else {
            size_t m = std::min(a, b);
            GaleTransform g = gale_transform(*s);
            bool lo = is_j_neighborly_dual(g, m).verdict;
            bool hi = !is_j_neighborly_dual(g, m + 1).verdict;
            ok = lo && hi;
            rep["verdicts"]["min_neighborly"] = lo;
            rep["verdicts"]["not_more_neighborly"] = hi;
        }
    }
    write_output(out_path, rep.dump(2));
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computation of convex dimensions and hypersimplex projections"};
    app.require_subcommand(1);

    // tables
    std::string tbl_which, tbl_n = "2..18", tbl_k = "1..9", tbl_d = "1..14", tbl_out;
    size_t tbl_i = 2;
    bool tbl_diff = false;
    CLI::App* tables = app.add_subcommand("tables", "emit a published table as CSV");
    tables->add_option("which", tbl_which, "cd | d | nkd")->required();
    tables->add_option("--n", tbl_n, "n range, e.g. 2..18");
    tables->add_option("--k", tbl_k, "k range");
    tables->add_option("--d", tbl_d, "d range (nkd table)");
    tables->add_option("--i", tbl_i, "skeleton dimension (d table)");
    tables->add_flag("--diff", tbl_diff, "compare against the published values");
    tables->add_option("-o", tbl_out, "output file (default stdout)");

    // check
    std::string chk_file, chk_method = "both", chk_out;
    size_t chk_k = 2, chk_i = 0, chk_jobs = 1, chk_max_n = 12, chk_max_subsets = 5000;
    CLI::App* check = app.add_subcommand("check", "i-preservation report for a configuration");
    check->add_option("points", chk_file, "point configuration JSON file")->required();
    check->add_option("--k", chk_k, "hypersimplex level")->required();
    check->add_option("--i", chk_i, "skeleton dimension");
    check->add_option("--method", chk_method, "direct | gale | both");
    check->add_option("--jobs", chk_jobs, "worker threads for face checks");
    check->add_option("--max-n", chk_max_n, "exhaustive-mode guard on n");
    check->add_option("--max-subsets", chk_max_subsets, "guard on C(n,k)");
    check->add_option("-o", chk_out, "output file (default stdout)");

    // partitions
    std::string prt_file, prt_out;
    size_t prt_max_n = 12;
    CLI::App* partitions = app.add_subcommand("partitions", "emit the D_{i,j} partition table");
    partitions->add_option("points", prt_file, "point configuration JSON file")->required();
    partitions->add_option("--max-n", prt_max_n, "exhaustive-mode guard on n");
    partitions->add_option("-o", prt_out, "output file (default stdout)");

    // construct
    std::string con_kind, con_out;
    size_t con_n = 4, con_d = 2, con_k = 2, con_a = 1, con_b = 1, con_r = 0;
    bool con_verify = false;
    CLI::App* construct = app.add_subcommand("construct", "emit a named construction");
    construct->add_option("kind", con_kind,
                          "cyclic | simplex | simplex-barycenter | sum | pyramid | multipartite")
        ->required();
    construct->add_option("--n", con_n, "point count / part size");
    construct->add_option("--d", con_d, "ambient dimension / part count");
    construct->add_option("--k", con_k, "uniformity (multipartite)");
    construct->add_option("--a", con_a, "first simplex dimension (sum, pyramid)");
    construct->add_option("--b", con_b, "second simplex dimension (sum, pyramid)");
    construct->add_option("--r", con_r, "apex count (pyramid)");
    construct->add_flag("--verify", con_verify, "re-check the advertised property");
    construct->add_option("-o", con_out, "output file (default stdout)");

    // selftest
    cdim::SelftestOptions st;
    std::string st_out;
    CLI::App* selftest = app.add_subcommand("selftest", "run the cross-module property suites");
    selftest->add_option("--seed", st.seed, "64-bit seed");
    selftest->add_option("--trials", st.trials, "trials per randomized suite");
    selftest->add_option("--jobs", st.jobs, "worker threads");
    selftest->add_option("-o", st_out, "write the JSON summary here");
    selftest->add_flag("--inject-fault", st.inject_fault, "harness sanity: force one failure")
        ->group("");  // hidden

    // verify-certificate
    std::string ver_file;
    CLI::App* verify = app.add_subcommand("verify-certificate",
                                          "re-validate a report by substitution only");
    verify->add_option("report", ver_file, "RunReport JSON file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (tables->parsed())
            return run_tables(tbl_which, parse_range(tbl_n), parse_range(tbl_k),
                              parse_range(tbl_d), tbl_i, tbl_diff, tbl_out);
        if (check->parsed())
            return run_check(chk_file, chk_k, chk_i, chk_method, chk_jobs, chk_max_n,
                             chk_max_subsets, chk_out);
        if (partitions->parsed()) {
            cdim::ConfigFile cfg = cdim::parse_config_text(read_file(prt_file));
            cdim::PointConfiguration s = cdim::to_point_configuration(cfg);
            cdim::PartitionTable table =
                cdim::partition_table(cdim::enumerate_partitions(s, prt_max_n));
            std::ostringstream csv;
            size_t n = s.size();
            csv << "i\\j";
            for (size_t j = 0; j <= n; ++j) csv << ',' << j;
            csv << '\n';
            for (size_t i2 = 0; i2 <= n; ++i2) {
                csv << i2;
                for (size_t j = 0; j <= n; ++j) {
                    csv << ',';
                    if (i2 + j <= n) csv << table.at(i2, j);
                }
                csv << '\n';
            }
            write_output(prt_out, csv.str());
            return 0;
        }
        if (construct->parsed())
            return run_construct(con_kind, con_n, con_d, con_k, con_a, con_b, con_r, con_verify,
                                 con_out);
        if (selftest->parsed()) {
            nlohmann::json rep = cdim::run_selftest(st, std::cout);
            if (!st_out.empty()) write_output(st_out, rep.dump(2));
            return rep["verdicts"]["all_passed"].get<bool>() ? 0 : 1;
        }
        if (verify->parsed()) {
            nlohmann::json rep = nlohmann::json::parse(read_file(ver_file));
            cdim::ReportVerification v = cdim::verify_report(rep);
            if (v.ok) {
                std::cout << "certificates ok (" << v.certificates_checked << " checked)\n";
                return 0;
            }
            for (const auto& p : v.problems) std::cout << "invalid: " << p << "\n";
            return 1;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "property violation: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
