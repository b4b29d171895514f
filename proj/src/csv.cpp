#include "wks/csv.hpp"

#include <fstream>
#include <sstream>

#include "wks/errors.hpp"

namespace wks::csv {

std::vector<std::vector<std::string>> read_rows(const std::string& path,
                                                int expected_fields)
{
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");

    std::vector<std::vector<std::string>> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;

        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) {
            const std::size_t b = field.find_first_not_of(" \t");
            const std::size_t e = field.find_last_not_of(" \t");
            fields.push_back(b == std::string::npos ? "" : field.substr(b, e - b + 1));
        }
        if (expected_fields > 0 &&
            fields.size() != static_cast<std::size_t>(expected_fields)) {
            throw InputError(path + ":" + std::to_string(line_no) + ": expected " +
                             std::to_string(expected_fields) + " fields");
        }
        rows.push_back(std::move(fields));
    }
    return rows;
}

double to_double(const std::string& field, const std::string& context)
{
    try {
        std::size_t used = 0;
        const double v = std::stod(field, &used);
        if (used != field.size()) throw std::invalid_argument(field);
        return v;
    } catch (const std::exception&) {
        throw InputError(context + ": not a number: '" + field + "'");
    }
}

long to_long(const std::string& field, const std::string& context)
{
    try {
        std::size_t used = 0;
        const long v = std::stol(field, &used);
        if (used != field.size()) throw std::invalid_argument(field);
        return v;
    } catch (const std::exception&) {
        throw InputError(context + ": not an integer: '" + field + "'");
    }
}

} // namespace wks::csv
