#include "cdim/config_io.hpp"

namespace cdim {

nlohmann::json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw std::invalid_argument("rational must be a string \"p/q\" or an integer literal");
}

nlohmann::json qvec_to_json(const QVec& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& x : v) a.push_back(rational_to_json(x));
    return a;
}

QVec qvec_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an array of rationals");
    QVec v;
    for (const auto& x : j) v.push_back(rational_from_json(x));
    return v;
}

ConfigFile parse_config(const nlohmann::json& j) {
    ConfigFile c;
    if (!j.contains("dim") || !j.contains("points"))
        throw std::invalid_argument("config needs \"dim\" and \"points\"");
    c.dim = j.at("dim").get<size_t>();
    for (const auto& row : j.at("points")) c.points.push_back(qvec_from_json(row));
    if (j.contains("labels")) {
        for (const auto& l : j.at("labels")) c.labels.push_back(l.get<std::string>());
        if (c.labels.size() != c.points.size())
            throw std::invalid_argument("labels must match points");
    }
    return c;
}

ConfigFile parse_config_text(const std::string& text) {
    return parse_config(nlohmann::json::parse(text));
}

nlohmann::json config_to_json(const ConfigFile& c) {
    nlohmann::json j;
    j["dim"] = c.dim;
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& p : c.points) pts.push_back(qvec_to_json(p));
    j["points"] = pts;
    if (!c.labels.empty()) j["labels"] = c.labels;
    return j;
}

PointConfiguration to_point_configuration(const ConfigFile& c) {
    return PointConfiguration(c.dim, c.points);
}

ConfigFile from_point_configuration(const PointConfiguration& s) {
    ConfigFile c;
    c.dim = s.dim();
    c.points = s.points();
    return c;
}

}  // namespace cdim
