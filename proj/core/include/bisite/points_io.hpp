#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bisite/geom.hpp"

namespace bisite {

// Raised on malformed points files; carries the 1-based line number.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Points file format: UTF-8 text, one point per line as "x y" separated by
// whitespace; '#' starts a comment (whole line or trailing); blank lines are
// ignored.
std::vector<Point2> read_points(std::istream& in);
std::vector<Point2> read_points_file(const std::string& path);

void write_points(std::ostream& out, const std::vector<Point2>& points);
void write_points_file(const std::string& path, const std::vector<Point2>& points);

}  // namespace bisite
