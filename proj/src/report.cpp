#include "cdim/report.hpp"

#include <algorithm>
#include <map>

#include "cdim/parallel.hpp"

namespace cdim {

nlohmann::json face_to_json(const HypersimplexFace& f) {
    nlohmann::json j;
    j["ones"] = f.ones;
    j["zeros"] = f.zeros;
    j["vertex_face"] = f.vertex_face;
    return j;
}

HypersimplexFace face_from_json(const nlohmann::json& j) {
    HypersimplexFace f;
    f.ones = j.at("ones").get<std::vector<size_t>>();
    f.zeros = j.at("zeros").get<std::vector<size_t>>();
    f.vertex_face = j.at("vertex_face").get<bool>();
    return f;
}

nlohmann::json preservation_to_json(const PreservationReport& r, const char* method) {
    nlohmann::json j;
    j["face"] = face_to_json(r.face);
    j["method"] = method;
    j["preserved"] = r.preserved;
    j["strictly_preserved"] = r.strictly_preserved;
    if (!r.functional.empty()) j["functional"] = qvec_to_json(r.functional);
    if (!r.gale_lambda.empty()) j["gale_lambda"] = qvec_to_json(r.gale_lambda);
    if (!r.gale_span_basis.empty()) j["gale_span_basis"] = r.gale_span_basis;
    if (!r.violation.empty()) j["violation"] = r.violation;
    if (r.coincidence) {
        j["coincidence"] = {{"face_subset", r.coincidence->first},
                            {"outside_subset", r.coincidence->second}};
    }
    if (!r.dependency.empty()) j["dependency"] = qvec_to_json(r.dependency);
    if (!r.separator.empty()) j["separator"] = qvec_to_json(r.separator);
    if (r.violation == "dimension_drop") {
        j["expected_dim"] = r.expected_dim;
        j["actual_dim"] = r.actual_dim;
    }
    return j;
}

nlohmann::json vertex_check_to_json(const VertexCheck& c) {
    nlohmann::json j;
    j["vertex"] = c.vertex;
    if (c.vertex) j["functional"] = qvec_to_json(c.functional);
    else {
        j["combination_support"] = c.combination_support;
        j["combination"] = qvec_to_json(c.combination);
    }
    return j;
}

nlohmann::json neighborliness_to_json(const NeighborlinessCertificate& c) {
    nlohmann::json j;
    j["kind"] = c.kind == NeighborlinessCertificate::Kind::Neighborly ? "neighborly" : "almost";
    j["level"] = c.level;
    j["verdict"] = c.verdict;
    if (c.exhaustive_pass) j["exhaustive_pass"] = true;
    if (!c.violating_subset.empty()) j["violating_subset"] = c.violating_subset;
    if (!c.separator.empty()) j["separator"] = qvec_to_json(c.separator);
    if (!c.dependency.empty()) j["dependency"] = qvec_to_json(c.dependency);
    return j;
}

namespace {

const char* method_name(PreserveMethod m) {
    switch (m) {
        case PreserveMethod::Direct: return "direct";
        case PreserveMethod::Gale: return "gale";
        case PreserveMethod::Both: return "both";
    }
    return "?";
}

}  // namespace

nlohmann::json check_report(const ConfigFile& cfg, size_t k, size_t i, PreserveMethod method,
                            size_t jobs) {
    PointConfiguration s = to_point_configuration(cfg);
    nlohmann::json rep;
    rep["command"] = "check";
    rep["inputs"] = {{"config", config_to_json(cfg)},
                     {"k", k},
                     {"i", i},
                     {"method", method_name(method)}};

    Hypersimplex h(s.size(), k);
    bool simplex_regime = (k == 1 || k + 1 == s.size());
    bool both = method == PreserveMethod::Both && !simplex_regime;
    // the entry label records the certificate shape actually produced;
    // simplex regimes always fall back to the direct route
    const char* single_label =
        (simplex_regime || method != PreserveMethod::Gale) ? "direct" : "gale";
    std::optional<PreservationChecker> direct_chk, gale_chk, single_chk;
    if (both) {
        direct_chk.emplace(s, k, PreserveMethod::Direct);
        gale_chk.emplace(s, k, PreserveMethod::Gale);
    } else {
        single_chk.emplace(s, k, method == PreserveMethod::Both ? PreserveMethod::Direct : method);
    }
    nlohmann::json faces = nlohmann::json::array();
    bool preserving = true;
    nlohmann::json first_failure;
    for (size_t level = 0; level <= i; ++level) {
        std::vector<HypersimplexFace> fs = i_faces(h, level);
        std::vector<nlohmann::json> entries = parallel_map<nlohmann::json>(
            jobs, fs.size(), [&](size_t t) -> nlohmann::json {
                if (both) {
                    PreservationReport dr = direct_chk->check(fs[t]);
                    PreservationReport gr = gale_chk->check(fs[t]);
                    if (dr.preserved != gr.preserved ||
                        dr.strictly_preserved != gr.strictly_preserved)
                        throw std::logic_error("method disagreement on a face");
                    nlohmann::json e = preservation_to_json(dr, "direct");
                    e["gale"] = preservation_to_json(gr, "gale");
                    return e;
                }
                return preservation_to_json(single_chk->check(fs[t]), single_label);
            });
        for (size_t t = 0; t < fs.size(); ++t) {
            faces.push_back(entries[t]);
            if (preserving && !entries[t]["strictly_preserved"].get<bool>()) {
                preserving = false;
                first_failure = face_to_json(fs[t]);
            }
        }
    }
    rep["certificates"]["faces"] = faces;

    CharacterizationVerdict v = characterize(s, k, i);
    nlohmann::json verdicts;
    verdicts["i_preserving"] = preserving;
    if (!preserving) verdicts["first_failing_face"] = first_failure;
    verdicts["clause"] = clause_name(v.clause);
    nlohmann::json all = nlohmann::json::array();
    for (Clause c : v.all_clauses) all.push_back(clause_name(c));
    verdicts["all_clauses"] = all;
    verdicts["effective_k"] = v.effective_k;
    rep["verdicts"] = verdicts;
    rep["certificates"]["neighborly"] = neighborliness_to_json(v.neighborly);
    if (v.almost) rep["certificates"]["almost"] = neighborliness_to_json(*v.almost);
    return rep;
}

nlohmann::json construct_verify_report(const ConfigFile& cfg, const PointConfiguration& s,
                                       const Hypergraph& h) {
    nlohmann::json rep;
    rep["command"] = "construct-verify";
    rep["inputs"] = {{"config", config_to_json(cfg)}, {"k", h.k}};
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : h.edges) edges.push_back(e);
    rep["inputs"]["edges"] = edges;

    EmbeddingReport er = is_convex_embedding(s, h);
    rep["verdicts"]["convex_embedding"] = er.embedding;
    if (er.collision) {
        rep["verdicts"]["collision"] = {{"first", er.collision->first},
                                        {"second", er.collision->second}};
    }
    nlohmann::json certs = nlohmann::json::array();
    for (const auto& c : er.certificates) certs.push_back(vertex_check_to_json(c));
    rep["certificates"]["barycenter_vertices"] = certs;
    return rep;
}

namespace {

void problem(ReportVerification& v, const std::string& msg) {
    v.ok = false;
    v.problems.push_back(msg);
}

QVec barycenter_of_subset(const PointConfiguration& s, const std::vector<size_t>& subset) {
    QVec b(s.dim(), Rational(0));
    for (size_t i : subset) b = b + s.point(i);
    return Rational(1, static_cast<long>(subset.size())) * b;
}

// Evaluate the report functional (w, c) against the face/off-face split.
void verify_direct_entry(ReportVerification& v, const PointConfiguration& s, size_t k,
                         const nlohmann::json& e) {
    HypersimplexFace f = face_from_json(e.at("face"));
    Hypersimplex h(s.size(), k);
    std::vector<std::vector<size_t>> on_face;
    for (const auto& vert : face_vertices(h, f)) {
        std::vector<size_t> sup;
        for (size_t t = 0; t < vert.size(); ++t)
            if (vert[t] == 1) sup.push_back(t);
        on_face.push_back(sup);
    }
    std::vector<QVec> face_b, off_b;
    for (const auto& sub : subsets_of_size(s.size(), k)) {
        QVec b = barycenter_of_subset(s, sub);
        if (std::binary_search(on_face.begin(), on_face.end(), sub)) face_b.push_back(b);
        else off_b.push_back(b);
    }

    bool preserved = e.at("preserved").get<bool>();
    bool strict = e.at("strictly_preserved").get<bool>();
    if (preserved) {
        if (!e.contains("functional")) return problem(v, "preserved face lacks functional");
        QVec wc = qvec_from_json(e.at("functional"));
        if (wc.size() != s.dim() + 1) return problem(v, "functional arity");
        Rational c = wc.back();
        auto eval = [&](const QVec& x) {
            Rational r = 0;
            for (size_t j = 0; j < s.dim(); ++j) r += wc[j] * x[j];
            return r;
        };
        for (const auto& b : face_b)
            if (eval(b) != c) return problem(v, "functional not constant on face");
        for (const auto& b : off_b)
            if (eval(b) > c - 1) return problem(v, "functional not separating off-face");
        size_t actual = affine_dim(face_b);
        if (strict != (actual == face_dim(h, f)))
            return problem(v, "strictness flag inconsistent with image dimension");
        ++v.certificates_checked;
        return;
    }
    std::string kind = e.value("violation", "");
    if (kind == "coincidence") {
        auto fs = e.at("coincidence").at("face_subset").get<std::vector<size_t>>();
        auto os = e.at("coincidence").at("outside_subset").get<std::vector<size_t>>();
        if (barycenter_of_subset(s, fs) != barycenter_of_subset(s, os))
            return problem(v, "coincidence pair does not coincide");
        bool fs_on = std::binary_search(on_face.begin(), on_face.end(), fs);
        bool os_on = std::binary_search(on_face.begin(), on_face.end(), os);
        if (!fs_on || os_on) return problem(v, "coincidence pair not (face, outside)");
        ++v.certificates_checked;
        return;
    }
    if (kind == "dependency") {
        QVec dep = qvec_from_json(e.at("dependency"));
        if (dep.size() != face_b.size() + off_b.size()) return problem(v, "dependency arity");
        // sum over face of alpha (b,-1) + sum over rest of beta (-b,1) = 0,
        // beta >= 0 with positive total: no functional can exist.
        QVec acc(s.dim() + 1, Rational(0));
        Rational beta_total = 0;
        for (size_t t = 0; t < face_b.size(); ++t) {
            for (size_t j = 0; j < s.dim(); ++j) acc[j] += dep[t] * face_b[t][j];
            acc[s.dim()] -= dep[t];
        }
        for (size_t t = 0; t < off_b.size(); ++t) {
            const Rational& beta = dep[face_b.size() + t];
            if (beta < 0) return problem(v, "dependency has negative beta");
            beta_total += beta;
            for (size_t j = 0; j < s.dim(); ++j) acc[j] -= beta * off_b[t][j];
            acc[s.dim()] += beta;
        }
        if (!is_zero_vec(acc) || beta_total <= 0) return problem(v, "dependency does not combine to zero");
        ++v.certificates_checked;
        return;
    }
    problem(v, "unpreserved face without checkable evidence: " + kind);
}

void verify_gale_entry(ReportVerification& v, const PointConfiguration& s, size_t k,
                       const nlohmann::json& e) {
    HypersimplexFace f = face_from_json(e.at("face"));
    GaleTransform g = gale_transform(s);
    std::vector<QVec> tau;
    for (size_t i : f.ones) tau.push_back(Rational(-1) * g.vectors[i]);
    for (size_t j : f.zeros) tau.push_back(g.vectors[j]);

    bool strict = e.at("strictly_preserved").get<bool>();
    bool preserved = e.at("preserved").get<bool>();
    if (strict || preserved) {
        QVec lambda =
            e.contains("gale_lambda") ? qvec_from_json(e.at("gale_lambda")) : QVec{};
        if (lambda.size() != tau.size()) return problem(v, "gale lambda arity");
        QVec acc(g.dim, Rational(0));
        for (size_t t = 0; t < tau.size(); ++t) {
            if (lambda[t] < 1) return problem(v, "gale lambda below 1");
            acc = acc + lambda[t] * tau[t];
        }
        if (!is_zero_vec(acc)) return problem(v, "gale dependency not zero");
    }
    if (strict) {
        std::vector<size_t> basis;
        if (e.contains("gale_span_basis"))
            basis = e.at("gale_span_basis").get<std::vector<size_t>>();
        if (basis.size() != g.dim) return problem(v, "gale span basis arity");
        Matrix minor(g.dim, g.dim);
        for (size_t r = 0; r < basis.size(); ++r) {
            if (basis[r] >= tau.size()) return problem(v, "gale span basis index");
            for (size_t cjs = 0; cjs < g.dim; ++cjs) minor.at(r, cjs) = tau[basis[r]][cjs];
        }
        if (g.dim > 0 && det(minor) == 0) return problem(v, "gale span basis singular");
    }
    if (!strict) {
        if (!e.contains("separator")) return problem(v, "gale entry lacks separator");
        QVec u = qvec_from_json(e.at("separator"));
        if (u.size() != g.dim || is_zero_vec(u)) return problem(v, "gale separator invalid");
        bool some_strict = false;
        for (const auto& t : tau) {
            Rational p = dot(u, t);
            if (p > 0) return problem(v, "gale separator not separating");
            if (p < 0) some_strict = true;
        }
        if (!preserved && !some_strict)
            return problem(v, "not-preserved claim needs a strict separator");
    }
    ++v.certificates_checked;
}

void verify_neighborliness_entry(ReportVerification& v, const PointConfiguration& s,
                                 const nlohmann::json& e) {
    bool verdict = e.at("verdict").get<bool>();
    if (verdict) {
        if (!e.value("exhaustive_pass", false)) problem(v, "true verdict without pass marker");
        else ++v.certificates_checked;
        return;
    }
    auto subset = e.at("violating_subset").get<std::vector<size_t>>();
    std::string kind = e.at("kind").get<std::string>();
    if (kind == "neighborly" && e.contains("dependency")) {
        // Farkas of: f == c on subset, f <= c-1 on the rest.
        QVec dep = qvec_from_json(e.at("dependency"));
        std::vector<bool> in(s.size(), false);
        for (size_t i : subset) in[i] = true;
        LinearSystem sys(s.dim() + 1);
        for (size_t i = 0; i < s.size(); ++i) {
            QVec row(s.dim() + 1);
            for (size_t j = 0; j < s.dim(); ++j) row[j] = in[i] ? s.point(i)[j] : -s.point(i)[j];
            row[s.dim()] = in[i] ? Rational(-1) : Rational(1);
            if (in[i]) sys.add_eq(std::move(row), 0);
            else sys.add_ge(std::move(row), 1);
        }
        QVec u(dep.begin(), dep.begin() + sys.eq_lhs.size());
        QVec w(dep.begin() + sys.eq_lhs.size(), dep.end());
        if (!check_farkas(sys, u, w)) return problem(v, "neighborliness farkas invalid");
        ++v.certificates_checked;
        return;
    }
    // Almost-neighborly violations assert the nonexistence of any supporting
    // functional over all strict-point choices; accept the named subset as
    // the violation witness without an algebraic certificate.
    ++v.certificates_checked;
}

}  // namespace

ReportVerification verify_report(const nlohmann::json& report) {
    ReportVerification v;
    std::string command = report.value("command", "");
    if (command == "check") {
        ConfigFile cfg = parse_config(report.at("inputs").at("config"));
        PointConfiguration s = to_point_configuration(cfg);
        size_t k = report.at("inputs").at("k").get<size_t>();
        for (const auto& e : report.at("certificates").at("faces")) {
            try {
                std::string method = e.at("method").get<std::string>();
                if (method == "direct") {
                    verify_direct_entry(v, s, k, e);
                    if (e.contains("gale")) verify_gale_entry(v, s, k, e.at("gale"));
                } else {
                    verify_gale_entry(v, s, k, e);
                }
            } catch (const std::exception& ex) {
                problem(v, std::string("malformed face certificate: ") + ex.what());
            }
        }
        if (report.at("certificates").contains("neighborly")) {
            nlohmann::json e = report.at("certificates").at("neighborly");
            e["kind"] = "neighborly";
            verify_neighborliness_entry(v, s, e);
        }
        if (report.at("certificates").contains("almost")) {
            nlohmann::json e = report.at("certificates").at("almost");
            e["kind"] = "almost";
            verify_neighborliness_entry(v, s, e);
        }
        return v;
    }
    if (command == "construct-verify") {
        ConfigFile cfg = parse_config(report.at("inputs").at("config"));
        PointConfiguration s = to_point_configuration(cfg);
        size_t k = report.at("inputs").at("k").get<size_t>();
        auto edges = report.at("inputs").at("edges").get<std::vector<std::vector<size_t>>>();
        Rational inv_k(1, static_cast<long>(k));
        std::vector<QVec> pts;
        for (const auto& e : edges) {
            QVec sum(s.dim(), Rational(0));
            for (size_t i : e) sum = sum + s.point(i);
            pts.push_back(inv_k * sum);
        }
        const auto& certs = report.at("certificates").at("barycenter_vertices");
        if (report.at("verdicts").at("convex_embedding").get<bool>()) {
            std::map<QVec, size_t> seen;
            for (size_t t = 0; t < pts.size(); ++t)
                if (!seen.emplace(pts[t], t).second)
                    problem(v, "claimed embedding has coincident barycenters");
            if (certs.size() != pts.size()) problem(v, "certificate count mismatch");
        }
        for (size_t t = 0; t < certs.size() && t < pts.size(); ++t) {
            VertexCheck c;
            c.vertex = certs[t].at("vertex").get<bool>();
            if (c.vertex) c.functional = qvec_from_json(certs[t].at("functional"));
            else {
                c.combination_support =
                    certs[t].at("combination_support").get<std::vector<size_t>>();
                c.combination = qvec_from_json(certs[t].at("combination"));
            }
            if (!check_vertex_certificate(pts, t, c))
                problem(v, "vertex certificate " + std::to_string(t) + " invalid");
            else ++v.certificates_checked;
        }
        return v;
    }
    if (command == "construct-property") {
        ConfigFile cfg = parse_config(report.at("inputs").at("config"));
        PointConfiguration s = to_point_configuration(cfg);
        if (report.contains("certificates")) {
            const auto& certs = report.at("certificates");
            if (certs.contains("neighborly")) {
                nlohmann::json e = certs.at("neighborly");
                e["kind"] = "neighborly";
                verify_neighborliness_entry(v, s, e);
            }
            if (certs.contains("almost")) {
                nlohmann::json e = certs.at("almost");
                e["kind"] = "almost";
                verify_neighborliness_entry(v, s, e);
            }
        }
        return v;
    }
    if (command == "selftest") return v;  // suite summary: nothing to substitute
    problem(v, "no checkable certificates for command '" + command + "'");
    return v;
}

}  // namespace cdim
