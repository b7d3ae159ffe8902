#ifndef CDIM_REPORT_HPP
#define CDIM_REPORT_HPP

#include <json.hpp>

#include "cdim/config_io.hpp"
#include "cdim/embedding.hpp"
#include "cdim/gale.hpp"
#include "cdim/theorems.hpp"

namespace cdim {

// Machine-readable run reports. Re-running a command with the same inputs
// and seed reproduces byte-identical report text; wall-clock timing goes to
// stderr only so it never perturbs the payload.

nlohmann::json face_to_json(const HypersimplexFace& f);
HypersimplexFace face_from_json(const nlohmann::json& j);

// `tau` is embedded for Gale-route reports so certificate checking is pure
// substitution.
nlohmann::json preservation_to_json(const PreservationReport& r, const char* method);
nlohmann::json vertex_check_to_json(const VertexCheck& c);
nlohmann::json neighborliness_to_json(const NeighborlinessCertificate& c);

nlohmann::json check_report(const ConfigFile& cfg, size_t k, size_t i, PreserveMethod method,
                            size_t jobs);

nlohmann::json construct_verify_report(const ConfigFile& cfg, const PointConfiguration& s,
                                       const Hypergraph& h);

// Substitution-only re-validation of an emitted report: exact arithmetic,
// rank and determinant computations, no feasibility solving.
struct ReportVerification {
    bool ok = true;
    std::vector<std::string> problems;
    size_t certificates_checked = 0;
};

ReportVerification verify_report(const nlohmann::json& report);

}  // namespace cdim

#endif
