#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace casimir::cli {

using Cell = std::variant<double, std::int64_t, std::string>;

/// Tabular result with self-describing header comments.
struct Table {
    std::vector<std::string> comments;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// Floats use 9 significant digits; NaN prints as "nan".
std::string format_double(double v);

void write_csv(std::ostream& os, const Table& t);
void write_json(std::ostream& os, const Table& t);

}  // namespace casimir::cli
