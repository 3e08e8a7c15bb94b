#pragma once

#include <string>

#include "foldloop/braid.hpp"

namespace foldloop {

enum class DiagramFormat { ascii, svg };

/// Deterministic closed-braid picture: m vertical strands, one crossing
/// per row in letter order, closure arcs routed crossing-free on the
/// right. The ASCII glyph set is documented in the README; SVG output is
/// well-formed SVG 1.1 with one <g class="crossing"> per letter.
std::string render_diagram(const BraidWord& word, DiagramFormat format);

}  // namespace foldloop
