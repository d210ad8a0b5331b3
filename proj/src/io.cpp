#include "polyhole/io.hpp"

#include <sstream>
#include <vector>

namespace polyhole {

namespace {

std::vector<std::string> grid_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur += ch;
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    if (lines.empty()) throw error(errc::empty_input, "grid has no rows");
    for (size_t r = 0; r < lines.size(); ++r) {
        if (lines[r].size() != lines[0].size())
            throw error(errc::ragged_rows, "row " + std::to_string(r) + " has length " +
                                               std::to_string(lines[r].size()) + ", expected " +
                                               std::to_string(lines[0].size()));
        for (size_t c = 0; c < lines[r].size(); ++c) {
            char ch = lines[r][c];
            if (ch != '#' && ch != '.' && ch != '?')
                throw error(errc::illegal_char, std::string("'") + ch + "' at row " + std::to_string(r) +
                                                    " col " + std::to_string(c));
        }
    }
    if (lines[0].empty()) throw error(errc::empty_input, "grid has empty rows");
    return lines;
}

Arrangement lines_to_arrangement(const std::vector<std::string>& lines) {
    const int H = static_cast<int>(lines.size()), W = static_cast<int>(lines[0].size());
    Arrangement a(W, H, CellState::empty);
    for (int r = 0; r < H; ++r)
        for (int c = 0; c < W; ++c) {
            char ch = lines[r][c];
            a.set_rc(r, c, ch == '#' ? CellState::filled : ch == '?' ? CellState::undetermined : CellState::empty);
        }
    return a;
}

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string svg_open(int W, int H, const RenderSpec& spec) {
    std::ostringstream os;
    const int cs = spec.cell_size;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W * cs << "\" height=\"" << H * cs
       << "\" viewBox=\"0 0 " << W * cs << " " << H * cs << "\">\n";
    os << "<rect class=\"background\" x=\"0\" y=\"0\" width=\"" << W * cs << "\" height=\"" << H * cs
       << "\" fill=\"" << spec.palette.background << "\"/>\n";
    return os.str();
}

void rect(std::ostringstream& os, const char* cls, int r, int c, int cs, const std::string& fill) {
    os << "<rect class=\"" << cls << "\" x=\"" << c * cs << "\" y=\"" << r * cs << "\" width=\"" << cs
       << "\" height=\"" << cs << "\" fill=\"" << fill << "\" stroke=\"#888888\" stroke-width=\"0.5\"/>\n";
}

}  // namespace

std::variant<Polyomino, Arrangement> parse_grid(const std::string& text) {
    auto lines = grid_lines(text);
    for (const auto& l : lines)
        if (l.find('?') != std::string::npos) return lines_to_arrangement(lines);
    return to_polyomino(lines_to_arrangement(lines));
}

Polyomino parse_polyomino(const std::string& text) {
    auto v = parse_grid(text);
    if (std::holds_alternative<Arrangement>(v))
        throw error(errc::illegal_char, "'?' is not allowed in a polyomino grid");
    return std::get<Polyomino>(v);
}

Arrangement parse_arrangement(const std::string& text) { return lines_to_arrangement(grid_lines(text)); }

Palette load_palette(const std::string& text) {
    Palette p;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == ';') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw error(errc::bad_argument, "palette line without '=': " + line);
        std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
        if (key == "tile") p.tile = value;
        else if (key == "hole") p.hole = value;
        else if (key == "background") p.background = value;
        else if (key == "annotation") p.annotation = value;
        else if (key == "dual") p.dual = value;
        else throw error(errc::bad_argument, "unknown palette key: " + key);
    }
    return p;
}

std::string render_ascii(const Polyomino& p) {
    std::string s;
    for (int y = p.height() - 1; y >= 0; --y) {
        for (int x = 0; x < p.width(); ++x) s += p.contains(x, y) ? '#' : '.';
        s += '\n';
    }
    return s;
}

std::string render_ascii(const Arrangement& a) {
    std::string s;
    for (int y = a.height() - 1; y >= 0; --y) {
        for (int x = 0; x < a.width(); ++x) {
            CellState st = a.at(x, y);
            s += st == CellState::filled ? '#' : st == CellState::undetermined ? '?' : '.';
        }
        s += '\n';
    }
    return s;
}

std::string render_svg(const Polyomino& p, const RenderSpec& spec) {
    const int W = p.width(), H = p.height(), cs = spec.cell_size;
    std::ostringstream os;
    os << svg_open(W, H, spec);
    auto hs = holes(p);
    for (const auto& hole : hs)
        for (const Cell& c : hole) rect(os, "hole", H - 1 - c.y, c.x, cs, spec.palette.hole);
    for (const Cell& c : p.cells()) rect(os, "tile", H - 1 - c.y, c.x, cs, spec.palette.tile);

    auto cx = [&](double x) { return (x + 0.5) * cs; };
    auto cy = [&](double y) { return (H - 1 - y + 0.5) * cs; };
    if (spec.dual_overlay) {
        const auto& cells = p.cells();
        Graph g = dual_graph(p);
        for (int i = 0; i < g.vertex_count; ++i)
            for (int j : g.adj[i])
                if (j > i)
                    os << "<line class=\"dual-edge\" x1=\"" << cx(cells[i].x) << "\" y1=\"" << cy(cells[i].y)
                       << "\" x2=\"" << cx(cells[j].x) << "\" y2=\"" << cy(cells[j].y) << "\" stroke=\""
                       << spec.palette.dual << "\" stroke-width=\"2\"/>\n";
        for (const Cell& c : cells)
            os << "<circle class=\"dual-vertex\" cx=\"" << cx(c.x) << "\" cy=\"" << cy(c.y) << "\" r=\""
               << cs * 0.15 << "\" fill=\"" << spec.palette.dual << "\"/>\n";
    }
    if (spec.hole_overlay) {
        std::vector<std::pair<double, double>> centre;
        for (const auto& hole : hs) {
            double sx = 0, sy = 0;
            for (const Cell& c : hole) {
                sx += c.x;
                sy += c.y;
            }
            centre.push_back({sx / hole.size(), sy / hole.size()});
        }
        Graph g = hole_graph(p);
        for (int i = 0; i < g.vertex_count; ++i)
            for (int j : g.adj[i])
                if (j > i)
                    os << "<line class=\"hole-edge\" x1=\"" << cx(centre[i].first) << "\" y1=\""
                       << cy(centre[i].second) << "\" x2=\"" << cx(centre[j].first) << "\" y2=\""
                       << cy(centre[j].second) << "\" stroke=\"" << spec.palette.annotation
                       << "\" stroke-width=\"2\"/>\n";
        for (auto& [x, y] : centre)
            os << "<circle class=\"hole-vertex\" cx=\"" << cx(x) << "\" cy=\"" << cy(y) << "\" r=\""
               << cs * 0.2 << "\" fill=\"" << spec.palette.annotation << "\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string render_svg(const Arrangement& a, const RenderSpec& spec) {
    const int W = a.width(), H = a.height(), cs = spec.cell_size;
    std::ostringstream os;
    os << svg_open(W, H, spec);
    for (int y = 0; y < H; ++y)
        for (int x = 0; x < W; ++x) {
            CellState s = a.at(x, y);
            if (s == CellState::filled) rect(os, "tile", H - 1 - y, x, cs, spec.palette.tile);
            else if (s == CellState::undetermined) rect(os, "undetermined", H - 1 - y, x, cs, spec.palette.annotation);
        }
    os << "</svg>\n";
    return os.str();
}

std::string render(const Polyomino& p, const RenderSpec& spec) {
    return spec.format == RenderSpec::svg ? render_svg(p, spec) : render_ascii(p);
}

}  // namespace polyhole
