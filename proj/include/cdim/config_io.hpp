#ifndef CDIM_CONFIG_IO_HPP
#define CDIM_CONFIG_IO_HPP

#include <string>

#include <json.hpp>

#include "cdim/points.hpp"

namespace cdim {

// On-disk point configuration: {"dim": d, "points": [[..],..], "labels": [..]?}
// Coordinates are strings "p/q" or integer literals on input; output always
// uses canonical strings, so files round-trip losslessly.
struct ConfigFile {
    size_t dim = 0;
    std::vector<QVec> points;
    std::vector<std::string> labels;  // empty when absent
};

ConfigFile parse_config(const nlohmann::json& j);
ConfigFile parse_config_text(const std::string& text);
nlohmann::json config_to_json(const ConfigFile& c);

PointConfiguration to_point_configuration(const ConfigFile& c);
ConfigFile from_point_configuration(const PointConfiguration& s);

// JSON encoding of rationals and vectors used across reports.
nlohmann::json rational_to_json(const Rational& q);
Rational rational_from_json(const nlohmann::json& j);
nlohmann::json qvec_to_json(const QVec& v);
QVec qvec_from_json(const nlohmann::json& j);

}  // namespace cdim

#endif
