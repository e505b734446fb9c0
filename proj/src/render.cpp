#include "gridsep/render.hpp"

#include "gridsep/structure.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace gridsep {

namespace {

std::optional<ColorClass> class_of(const GridPermutation& pi, Cell x) {
    if (!pi.dims().even()) {
        return std::nullopt;
    }
    return color_class(pi(x), pi.dims());
}

char glyph(std::optional<ColorClass> c) {
    if (!c) {
        return ' ';
    }
    switch (*c) {
    case ColorClass::DarkBlue:
        return '#';
    case ColorClass::LightBlue:
        return '.';
    case ColorClass::DarkRed:
        return '%';
    case ColorClass::LightRed:
        return '\'';
    }
    return ' ';
}

const char* fill(std::optional<ColorClass> c) {
    if (!c) {
        return "#ffffff";
    }
    switch (*c) {
    case ColorClass::DarkBlue:
        return "#1f4e9c";
    case ColorClass::LightBlue:
        return "#9cc3e6";
    case ColorClass::DarkRed:
        return "#a4262c";
    case ColorClass::LightRed:
        return "#f2a7a7";
    }
    return "#ffffff";
}

const char* ink(std::optional<ColorClass> c) {
    return c && (*c == ColorClass::DarkBlue || *c == ColorClass::DarkRed) ? "#ffffff" : "#000000";
}

} // namespace

std::string render_ascii(const GridPermutation& pi) {
    const GridDims& dims = pi.dims();
    std::size_t width = 0;
    for (const Cell& v : pi.images()) {
        width = std::max(width, to_string(v).size());
    }
    std::ostringstream os;
    for (int i = 1; i <= dims.n1(); ++i) {
        for (int j = 1; j <= dims.n2(); ++j) {
            const char g = glyph(class_of(pi, {i, j}));
            const std::string label = to_string(pi({i, j}));
            if (j > 1) {
                os << ' ';
            }
            os << g << label << std::string(width - label.size(), ' ') << g;
        }
        os << '\n';
    }
    return os.str();
}

std::string render_svg(const GridPermutation& pi) {
    const GridDims& dims = pi.dims();
    constexpr int kCell = 48;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << dims.n2() * kCell << "\" height=\""
       << dims.n1() * kCell << "\" font-family=\"monospace\" font-size=\"12\">\n";
    for (int i = 1; i <= dims.n1(); ++i) {
        for (int j = 1; j <= dims.n2(); ++j) {
            const auto c = class_of(pi, {i, j});
            const int x = (j - 1) * kCell;
            const int y = (i - 1) * kCell;
            os << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << kCell << "\" height=\"" << kCell
               << "\" fill=\"" << fill(c) << "\" stroke=\"#000000\"/>\n";
            os << "  <text x=\"" << x + kCell / 2 << "\" y=\"" << y + kCell / 2 + 4
               << "\" text-anchor=\"middle\" fill=\"" << ink(c) << "\">" << to_string(pi({i, j})) << "</text>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace gridsep
