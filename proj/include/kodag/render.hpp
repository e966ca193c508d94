#pragma once

#include <string>

#include "kodag/incidence.hpp"
#include "kodag/sequence.hpp"

namespace kodag {

/// The staircase rendering of a cobweb zeta matrix: one row per node, '1'
/// on the diagonal, an explicit run of '0' glyphs for the same-level nodes
/// above it, and '-' for every comparable node further right. Rows are
/// indented so glyph columns line up. width > 0 caps the rendered matrix
/// columns (and rows) at that many.
std::string render_lascala(const Sequence& seq, int levels, int width = 0);

/// Plain aligned integer grid.
std::string render_matrix_ascii(const IncidenceMatrix& m);

} // namespace kodag
