#include "bisite/points_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace bisite {

std::vector<Point2> read_points(std::istream& in) {
    std::vector<Point2> points;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ss(line);
        double x, y;
        if (!(ss >> x)) {
            std::string rest;
            if (ss.clear(), ss >> rest)
                throw ParseError("line " + std::to_string(lineno) + ": expected a number");
            continue;  // blank or comment-only line
        }
        if (!(ss >> y))
            throw ParseError("line " + std::to_string(lineno) + ": expected two coordinates");
        std::string extra;
        if (ss >> extra)
            throw ParseError("line " + std::to_string(lineno) + ": trailing content '" + extra + "'");
        if (!std::isfinite(x) || !std::isfinite(y))
            throw ParseError("line " + std::to_string(lineno) + ": coordinates must be finite");
        points.push_back({x, y});
    }
    return points;
}

std::vector<Point2> read_points_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open points file: " + path);
    return read_points(f);
}

void write_points(std::ostream& out, const std::vector<Point2>& points) {
    out.precision(17);
    for (const Point2& p : points) out << p.x << " " << p.y << "\n";
}

void write_points_file(const std::string& path, const std::vector<Point2>& points) {
    std::ofstream f(path);
    if (!f) throw ParseError("cannot open output file: " + path);
    write_points(f, points);
}

}  // namespace bisite
