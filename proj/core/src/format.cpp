#include "intnorm/format.hpp"

#include <sstream>

#include "intnorm/errors.hpp"

namespace intnorm {

std::string to_text(const LatticePolytope& p) {
    std::ostringstream out;
    out << "dim " << p.dim() << "\n";
    for (const auto& v : p.vertices()) {
        out << "v";
        for (std::int64_t x : v) out << " " << x;
        out << "\n";
    }
    return out.str();
}

LatticePolytope parse_polygon(const std::string& text) {
    std::vector<Point> pts;
    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
        std::string line = raw.substr(0, raw.find('#'));
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag != "v") throw ParseError("expected 'v <x> <y>', got '" + line + "'");
        long long x, y;
        if (!(ls >> x >> y)) throw ParseError("expected two integers after 'v'");
        std::string extra;
        if (ls >> extra) throw ParseError("trailing content on polygon line");
        pts.push_back(Point{x, y});
    }
    if (pts.empty()) throw ParseError("polygon file has no vertices");
    return LatticePolytope::convex_hull(2, std::move(pts));
}

ClassVector parse_class_vector(const std::string& text) {
    ClassVector out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(item, &used);
        } catch (const std::exception&) {
            throw ParseError("class vector entry '" + item + "' is not an integer");
        }
        while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
        if (used != item.size())
            throw ParseError("class vector entry '" + item + "' is not an integer");
        out.push_back(value);
    }
    if (out.empty()) throw ParseError("empty class vector");
    return out;
}

}  // namespace intnorm
