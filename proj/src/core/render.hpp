#pragma once

#include <string>
#include <vector>

#include "core/path.hpp"
#include "core/schroder.hpp"
#include "core/tree.hpp"

namespace catcomb {

// ASCII renderings: one text row per height band ('/' up, '\' down, '='
// flat), plus a top row of '*' columns when vertices are marked. A marked
// vertex v puts its star in column v. Rows are right-trimmed and
// newline-terminated; output is byte-stable.
std::string render_path_ascii(const Path& p,
                              const std::vector<int>& marks = {});
std::string render_schroder_ascii(const SchroderPath& s);

// Indented preorder outline, two spaces per depth level, one node per line.
std::string render_tree_ascii(const OrderedTree& t);

// SVG renderings: a polyline with 20-px unit steps (flat steps span two
// units), y-axis flipped so up-steps rise; marked vertices become filled
// circles.
std::string render_path_svg(const Path& p, const std::vector<int>& marks = {});
std::string render_schroder_svg(const SchroderPath& s);
std::string render_tree_svg(const OrderedTree& t);

}  // namespace catcomb
