#pragma once

#include <string>
#include <vector>

namespace wks::csv {

// Reads comma-separated rows, skipping blank lines and '#' comments.
// When expected_fields > 0 every row must have exactly that many fields.
std::vector<std::vector<std::string>> read_rows(const std::string& path,
                                                int expected_fields = 0);

double to_double(const std::string& field, const std::string& context);
long to_long(const std::string& field, const std::string& context);

} // namespace wks::csv
