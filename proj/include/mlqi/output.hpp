#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mlqi/series.hpp"

namespace mlqi {

// One table cell: empty, integer, real, or text.  Reals render in
// scientific notation with 6 significant digits everywhere, so repeated
// runs are byte-identical.
using Cell = std::variant<std::monostate, long, double, std::string>;

struct OutputRecord {
    std::string command;
    std::vector<std::pair<std::string, std::string>> params;  // emission order
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::string> warnings;
};

std::string format_sci(double v);  // %.5e

// Leading "# mlqi v1 <command>" schema line, header row, LF endings.
// Warnings and params render as trailing comment lines.
std::string to_csv(const OutputRecord& rec);

// {"command":..., "params":{...}, "rows":[...], "warnings":[...]} with
// rows as column-keyed objects; nlohmann keeps keys sorted, so a
// parse/re-serialize round trip is byte-identical.
std::string to_json(const OutputRecord& rec);

// CosineSeries text formats: CSV block with a "frequency,coefficient"
// header, and JSON {"coeffs": [...]}.
std::string series_to_csv(const CosineSeries& f);
std::string series_to_json(const CosineSeries& f);
CosineSeries series_from_csv(std::istream& in);
CosineSeries series_from_json(const std::string& text);

}  // namespace mlqi
