#pragma once

#include "gaussq/classifier.hpp"

#include <string>

namespace gaussq {

/// Flat record emission. CSV and JSON-lines rows of the same record carry
/// identical field values; inapplicable numeric fields are empty in CSV and
/// null in JSON.
std::string csv_header();
std::string to_csv_row(const ClassificationRecord& rec);
std::string to_json_line(const ClassificationRecord& rec);

} // namespace gaussq
