#pragma once

#include <string>
#include <variant>

#include "polyhole/core.hpp"

namespace polyhole {

// '#' filled, '.' empty or outside, '?' undetermined; first line is the top row
std::variant<Polyomino, Arrangement> parse_grid(const std::string& text);
Polyomino parse_polyomino(const std::string& text);
Arrangement parse_arrangement(const std::string& text);

struct Palette {
    std::string tile = "#2b2b2b";
    std::string hole = "#f4c542";
    std::string background = "#ffffff";
    std::string annotation = "#d03030";
    std::string dual = "#2e9e44";
};

// key=value lines (tile, hole, background, annotation, dual); ';' starts a comment
Palette load_palette(const std::string& text);

struct RenderSpec {
    enum Format { ascii, svg } format = ascii;
    int cell_size = 20;
    bool dual_overlay = false;
    bool hole_overlay = false;
    Palette palette;
};

std::string render_ascii(const Polyomino& p);
std::string render_ascii(const Arrangement& a);
std::string render_svg(const Polyomino& p, const RenderSpec& spec = {});
std::string render_svg(const Arrangement& a, const RenderSpec& spec = {});
std::string render(const Polyomino& p, const RenderSpec& spec);

}  // namespace polyhole
