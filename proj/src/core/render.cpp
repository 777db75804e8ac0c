#include "core/render.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>
#include <utility>

#include "core/errors.hpp"

namespace catcomb {

namespace {

struct Glyph {
  int col;
  int band;  // band b covers heights [b, b+1]
  char ch;
};

void rtrim(std::string& s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
}

std::string draw(const std::vector<Glyph>& glyphs, int width,
                 const std::vector<int>& stars) {
  std::string out;
  if (!stars.empty()) {
    int star_width = width + 1;
    for (int v : stars) star_width = std::max(star_width, v + 1);
    std::string row(static_cast<std::size_t>(star_width), ' ');
    for (int v : stars) {
      if (v < 0) fail(ErrorCode::DomainError, "negative mark vertex");
      row[static_cast<std::size_t>(v)] = '*';
    }
    rtrim(row);
    out += row;
    out += '\n';
  }
  if (glyphs.empty()) return out;
  int top = std::numeric_limits<int>::min();
  int bottom = std::numeric_limits<int>::max();
  for (const Glyph& g : glyphs) {
    top = std::max(top, g.band);
    bottom = std::min(bottom, g.band);
  }
  for (int b = top; b >= bottom; --b) {
    std::string row(static_cast<std::size_t>(width), ' ');
    for (const Glyph& g : glyphs) {
      if (g.band == b) row[static_cast<std::size_t>(g.col)] = g.ch;
    }
    rtrim(row);
    out += row;
    out += '\n';
  }
  return out;
}

std::vector<Glyph> path_glyphs(const Path& p) {
  std::vector<Glyph> glyphs;
  glyphs.reserve(static_cast<std::size_t>(p.steps()));
  for (int i = 0; i < p.steps(); ++i) {
    const int h = p.height(i);
    if (p.is_up(i)) {
      glyphs.push_back({i, h, '/'});
    } else {
      glyphs.push_back({i, h - 1, '\\'});
    }
  }
  return glyphs;
}

struct SchroderGeometry {
  std::vector<Glyph> glyphs;
  int width = 0;
  // Vertex trace in x-units and heights, for the SVG polyline.
  std::vector<std::pair<int, int>> points;
};

SchroderGeometry schroder_geometry(const SchroderPath& s) {
  SchroderGeometry geo;
  int x = 0;
  int lvl = 0;
  geo.points.push_back({0, 0});
  for (char c : s.word()) {
    switch (c) {
      case 'U':
        geo.glyphs.push_back({x, lvl, '/'});
        ++x;
        ++lvl;
        break;
      case 'D':
        geo.glyphs.push_back({x, lvl - 1, '\\'});
        ++x;
        --lvl;
        break;
      case 'F':
        geo.glyphs.push_back({x, lvl - 1, '='});
        geo.glyphs.push_back({x + 1, lvl - 1, '='});
        x += 2;
        break;
      default:
        fail(ErrorCode::InternalError, "unexpected letter in a Schroder word");
    }
    geo.points.push_back({x, lvl});
  }
  geo.width = x;
  return geo;
}

constexpr int kUnit = 20;
constexpr int kMargin = 10;
constexpr int kMarkRadius = 4;

std::string svg_from_points(const std::vector<std::pair<int, int>>& points,
                            const std::vector<int>& mark_vertices) {
  int max_h = 0;
  int min_h = 0;
  int max_x = 1;
  for (const auto& [x, h] : points) {
    max_h = std::max(max_h, h);
    min_h = std::min(min_h, h);
    max_x = std::max(max_x, x);
  }
  const int width = max_x * kUnit + 2 * kMargin;
  const int height = (max_h - min_h) * kUnit + 2 * kMargin;
  auto px = [](int xu) { return kMargin + xu * kUnit; };
  auto py = [max_h](int h) { return kMargin + (max_h - h) * kUnit; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
     << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
     << height << "\">\n";
  os << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\" "
        "points=\"";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i > 0) os << ' ';
    os << px(points[i].first) << ',' << py(points[i].second);
  }
  os << "\"/>\n";
  for (int v : mark_vertices) {
    if (v < 0 || static_cast<std::size_t>(v) >= points.size()) {
      fail(ErrorCode::DomainError, "mark vertex outside the path");
    }
    os << "  <circle cx=\"" << px(points[static_cast<std::size_t>(v)].first)
       << "\" cy=\"" << py(points[static_cast<std::size_t>(v)].second)
       << "\" r=\"" << kMarkRadius << "\" fill=\"black\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace

std::string render_path_ascii(const Path& p, const std::vector<int>& marks) {
  for (int v : marks) {
    if (v < 0 || v > p.steps()) {
      fail(ErrorCode::DomainError, "mark vertex outside the path");
    }
  }
  return draw(path_glyphs(p), p.steps(), marks);
}

std::string render_schroder_ascii(const SchroderPath& s) {
  const SchroderGeometry geo = schroder_geometry(s);
  return draw(geo.glyphs, geo.width, {});
}

std::string render_tree_ascii(const OrderedTree& t) {
  std::string out;
  std::vector<std::pair<const OrderedTree*, int>> stack;
  stack.push_back({&t, 0});
  while (!stack.empty()) {
    const auto [node, depth] = stack.back();
    stack.pop_back();
    out.append(static_cast<std::size_t>(2 * depth), ' ');
    out += "*\n";
    for (auto it = node->children.rbegin(); it != node->children.rend(); ++it) {
      stack.push_back({&*it, depth + 1});
    }
  }
  return out;
}

std::string render_path_svg(const Path& p, const std::vector<int>& marks) {
  std::vector<std::pair<int, int>> points;
  points.reserve(static_cast<std::size_t>(p.steps()) + 1);
  for (int v = 0; v <= p.steps(); ++v) points.push_back({v, p.height(v)});
  return svg_from_points(points, marks);
}

std::string render_schroder_svg(const SchroderPath& s) {
  return svg_from_points(schroder_geometry(s).points, {});
}

std::string render_tree_svg(const OrderedTree& t) {
  // Flatten in preorder, recording parents; leaves get consecutive x slots,
  // internal nodes sit midway between their first and last child.
  struct NodeRec {
    const OrderedTree* node;
    int parent;
    int depth;
    double x = 0.0;
  };
  std::vector<NodeRec> recs;
  std::vector<std::vector<std::size_t>> child_idx;
  std::vector<std::pair<const OrderedTree*, std::pair<int, int>>> stack;
  stack.push_back({&t, {-1, 0}});
  while (!stack.empty()) {
    const auto [node, meta] = stack.back();
    stack.pop_back();
    const int idx = static_cast<int>(recs.size());
    recs.push_back({node, meta.first, meta.second});
    child_idx.emplace_back();
    if (meta.first >= 0) {
      child_idx[static_cast<std::size_t>(meta.first)].push_back(
          static_cast<std::size_t>(idx));
    }
    for (auto it = node->children.rbegin(); it != node->children.rend(); ++it) {
      stack.push_back({&*it, {idx, meta.second + 1}});
    }
  }
  int next_leaf = 0;
  int max_depth = 0;
  for (NodeRec& r : recs) {
    max_depth = std::max(max_depth, r.depth);
    if (r.node->is_leaf()) r.x = next_leaf++;  // preorder = left-to-right
  }
  // Children follow their parent in preorder, so a reverse sweep places
  // every child before its parent is averaged.
  for (std::size_t i = recs.size(); i-- > 0;) {
    if (!child_idx[i].empty()) {
      recs[i].x =
          (recs[child_idx[i].front()].x + recs[child_idx[i].back()].x) / 2.0;
    }
  }
  const int width = std::max(1, next_leaf - 1) * kUnit + 2 * kMargin;
  const int height = max_depth * kUnit + 2 * kMargin;
  auto px = [](double xu) { return kMargin + xu * kUnit; };
  auto py = [](int depth) { return kMargin + depth * kUnit; };
  char buf[160];
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
     << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
     << height << "\">\n";
  for (const NodeRec& r : recs) {
    if (r.parent >= 0) {
      const NodeRec& pr = recs[static_cast<std::size_t>(r.parent)];
      std::snprintf(buf, sizeof buf,
                    "  <line x1=\"%.1f\" y1=\"%d\" x2=\"%.1f\" y2=\"%d\" "
                    "stroke=\"black\" stroke-width=\"2\"/>\n",
                    px(pr.x), py(pr.depth), px(r.x), py(r.depth));
      os << buf;
    }
  }
  for (const NodeRec& r : recs) {
    std::snprintf(buf, sizeof buf,
                  "  <circle cx=\"%.1f\" cy=\"%d\" r=\"%d\" fill=\"black\"/>\n",
                  px(r.x), py(r.depth), kMarkRadius);
    os << buf;
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace catcomb
