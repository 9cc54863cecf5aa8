#include "mlqi/output.hpp"

#include <cstdio>
#include <istream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace mlqi {

std::string format_sci(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.5e", v);
    return buf;
}

namespace {

std::string cell_to_csv(const Cell& c) {
    if (std::holds_alternative<std::monostate>(c)) return "";
    if (const long* i = std::get_if<long>(&c)) return std::to_string(*i);
    if (const double* d = std::get_if<double>(&c)) return format_sci(*d);
    return std::get<std::string>(c);
}

nlohmann::json cell_to_json(const Cell& c) {
    if (std::holds_alternative<std::monostate>(c)) return nullptr;
    if (const long* i = std::get_if<long>(&c)) return *i;
    if (const double* d = std::get_if<double>(&c)) return *d;
    return std::get<std::string>(c);
}

}  // namespace

std::string to_csv(const OutputRecord& rec) {
    std::string out = "# mlqi v1 " + rec.command + "\n";
    for (const auto& [k, v] : rec.params) out += "# " + k + "=" + v + "\n";
    for (size_t i = 0; i < rec.columns.size(); ++i) {
        if (i) out += ",";
        out += rec.columns[i];
    }
    out += "\n";
    for (const auto& row : rec.rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out += ",";
            out += cell_to_csv(row[i]);
        }
        out += "\n";
    }
    for (const auto& w : rec.warnings) out += "# warning: " + w + "\n";
    return out;
}

std::string to_json(const OutputRecord& rec) {
    nlohmann::json j;
    j["command"] = rec.command;
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [k, v] : rec.params) params[k] = v;
    j["params"] = params;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : rec.rows) {
        nlohmann::json obj = nlohmann::json::object();
        for (size_t i = 0; i < row.size() && i < rec.columns.size(); ++i)
            obj[rec.columns[i]] = cell_to_json(row[i]);
        rows.push_back(obj);
    }
    j["rows"] = rows;
    j["warnings"] = rec.warnings;
    return j.dump() + "\n";
}

std::string series_to_csv(const CosineSeries& f) {
    std::string out = "frequency,coefficient\n";
    for (size_t m = 0; m < f.coeffs.size(); ++m)
        out += std::to_string(m) + "," + format_sci(f.coeffs[m]) + "\n";
    return out;
}

std::string series_to_json(const CosineSeries& f) {
    nlohmann::json j;
    j["coeffs"] = f.coeffs;
    return j.dump() + "\n";
}

CosineSeries series_from_csv(std::istream& in) {
    CosineSeries f;
    f.coeffs.assign(1, 0.0);
    std::string line;
    bool any = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const size_t comma = line.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("series CSV rows need two columns");
        const std::string first = line.substr(0, comma);
        if (first == "frequency") continue;  // header
        size_t pos = 0;
        const int m = std::stoi(first, &pos);
        if (m < 0) throw std::invalid_argument("series CSV requires frequency >= 0");
        const double c = std::stod(line.substr(comma + 1));
        f.ensure(m) = c;
        any = true;
    }
    if (!any) throw std::invalid_argument("series CSV holds no rows");
    return f;
}

CosineSeries series_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    if (!j.contains("coeffs") || !j["coeffs"].is_array())
        throw std::invalid_argument("series JSON needs a \"coeffs\" array");
    return CosineSeries(j["coeffs"].get<std::vector<double>>());
}

}  // namespace mlqi
