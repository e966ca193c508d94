#include "kodag/render.hpp"

#include <algorithm>

#include "kodag/errors.hpp"

namespace kodag {

std::string render_lascala(const Sequence& seq, int levels, int width) {
    GradedPoset p = GradedPoset::cobweb(seq, levels);
    const int total = p.node_count();
    const int cols = (width > 0) ? std::min(width, total) : total;
    std::string out;
    for (int x = 1; x <= cols; ++x) {
        const int level = p.grid_of(x).level;
        const int level_end = p.index().offset(level) + p.size(level);
        std::string line(static_cast<size_t>(2 * (x - 1)), ' ');
        for (int y = x; y <= cols; ++y) {
            if (y > x) line += ' ';
            if (y == x) {
                line += '1';
            } else if (y <= level_end) {
                line += '0'; // same stair, still inside the zero run
            } else {
                line += '-';
            }
        }
        out += line;
        out += '\n';
    }
    return out;
}

std::string render_matrix_ascii(const IncidenceMatrix& m) {
    size_t cell = 1;
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) {
            cell = std::max(cell, m.at(i, j).str().size());
        }
    }
    std::string out;
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) {
            std::string v = m.at(i, j).str();
            if (j) out += ' ';
            out.append(cell - v.size(), ' ');
            out += v;
        }
        out += '\n';
    }
    return out;
}

} // namespace kodag
