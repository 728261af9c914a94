#pragma once

// ASCII rendering of the module lattice of a linear Nakayama algebra in the
// usual triangular layout: M(t,l) sits at (2t-l, l-1), irreducible maps go
// diagonally up-right (inclusion) and down-right (socle quotient).

#include <iomanip>

#include "nakayama/homology.hpp"

namespace nakayama {

enum class LabelMode { pd, none };

struct LayoutVertex {
  Module m;
  int x = 0;
  int y = 0;
  std::string label;
};

struct LayoutEdge {
  Module from;
  Module to;
};

struct QuiverLayout {
  std::vector<LayoutVertex> vertices;
  std::vector<LayoutEdge> edges;
};

inline QuiverLayout layout(const KupischSeries& a, LabelMode mode) {
  QuiverLayout out;
  for (const Module& m : all_indecomposables(a)) {
    LayoutVertex v{m, 2 * m.top - m.len, m.len - 1, {}};
    if (mode == LabelMode::pd) v.label = std::to_string(pd_value(a, m));
    out.vertices.push_back(std::move(v));
    if (m.len >= 2) out.edges.push_back({m, Module{m.top, m.len - 1}});
    if (m.top + 1 <= a.n() && m.len + 1 <= a.c(m.top + 1))
      out.edges.push_back({m, Module{m.top + 1, m.len + 1}});
  }
  return out;
}

// Plain-text grid; one cell per half-unit of x, labels right-aligned.
inline std::string to_text(const QuiverLayout& l) {
  if (l.vertices.empty()) return "";
  int max_x = 0, max_y = 0;
  std::size_t width = 1;
  for (const LayoutVertex& v : l.vertices) {
    max_x = std::max(max_x, v.x);
    max_y = std::max(max_y, v.y);
    width = std::max(width, v.label.size());
  }
  const std::size_t cell = width + 1;
  std::vector<std::string> rows(static_cast<std::size_t>(max_y) + 1,
                                std::string((max_x + 1) * cell, ' '));
  for (const LayoutVertex& v : l.vertices) {
    std::string text = v.label.empty() ? "*" : v.label;
    std::size_t end = (static_cast<std::size_t>(v.x) + 1) * cell;
    std::string& row = rows[static_cast<std::size_t>(max_y - v.y)];
    row.replace(end - text.size(), text.size(), text);
  }
  std::string out;
  for (std::string& row : rows) {
    while (!row.empty() && row.back() == ' ') row.pop_back();
    out += row;
    out += '\n';
  }
  return out;
}

// Line protocol: "vertex M(t,l) [label]" and "edge M(t,l) -> M(t,l)", each
// group sorted; line count = vertices + edges.
inline std::string to_graph_desc(const QuiverLayout& l) {
  std::vector<std::string> vlines, elines;
  for (const LayoutVertex& v : l.vertices) {
    std::string line = "vertex " + to_string(v.m);
    if (!v.label.empty()) line += " [" + v.label + "]";
    vlines.push_back(std::move(line));
  }
  for (const LayoutEdge& e : l.edges)
    elines.push_back("edge " + to_string(e.from) + " -> " + to_string(e.to));
  std::sort(vlines.begin(), vlines.end());
  std::sort(elines.begin(), elines.end());
  std::string out;
  for (const std::string& s : vlines) out += s + "\n";
  for (const std::string& s : elines) out += s + "\n";
  return out;
}

}  // namespace nakayama
