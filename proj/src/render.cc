// Copyright 2026 The Etch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "etch/render.h"

#include <sstream>

#include "etch/graph_state.h"

namespace etch {

namespace {

constexpr int kPitch = 24;   // SVG pixels between cell centres
constexpr int kRadius = 8;
constexpr int kMargin = 16;

struct Style {
  const char* svg_class;
  const char* dot_attrs;
};

Style style_of(CellStyle s) {
  switch (s) {
    case CellStyle::Input:
      return {"input", "shape=diamond, style=solid"};
    case CellStyle::PatternPauli:
      return {"pauli", "shape=circle, style=filled, fillcolor=black"};
    case CellStyle::Wire:
      return {"wire", "shape=circle, style=solid"};
    case CellStyle::NonPauli:
      return {"nonpauli", "shape=circle, style=filled, fillcolor=red"};
    case CellStyle::Readout:
      return {"readout", "shape=square, style=bold"};
    case CellStyle::Excised:
      return {"excised", "shape=circle, style=dotted, color=grey80"};
  }
  return {"", ""};
}

std::string escape_xml(const std::string& text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '&':
        out += "&amp;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += ch;
    }
  }
  return out;
}

std::string cell_title(const LatticeCell& c) {
  std::string t = "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ") " +
                   std::string(role_name(c.role));
  if (c.label) t += " " + c.label->to_string();
  return t;
}

std::string node_name(int row, int col) {
  return "c" + std::to_string(row) + "_" + std::to_string(col);
}

std::string render_dot(const Lattice& lattice, const RenderSpec& spec) {
  std::ostringstream out;
  out << "graph lattice {\n"
      << "  layout=neato;\n"
      << "  node [label=\"\", width=0.25, height=0.25, fixedsize=true];\n";
  for (const LatticeCell& c : lattice.cells()) {
    CellStyle s = cell_style(c);
    if (s == CellStyle::Excised && !spec.show_excised) continue;
    out << "  " << node_name(c.row, c.col) << " [pos=\"" << c.col << "," << -c.row
        << "!\", " << style_of(s).dot_attrs << ", tooltip=\"" << cell_title(c) << "\"];\n";
  }
  const GraphState g = build_graph_state(lattice);
  for (const auto& [u, v] : g.edges()) {
    const Vertex& a = g.vertices()[u];
    const Vertex& b = g.vertices()[v];
    out << "  " << node_name(a.row, a.col) << " -- " << node_name(b.row, b.col) << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string render_svg(const Lattice& lattice, const RenderSpec& spec) {
  auto cx = [](int col) { return kMargin + col * kPitch; };
  auto cy = [](int row) { return kMargin + row * kPitch; };
  const int width = 2 * kMargin + (lattice.cols() - 1) * kPitch;
  const int height = 2 * kMargin + (lattice.rows() - 1) * kPitch;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "<style>\n"
      << "  line { stroke: #444; stroke-width: 1.5; }\n"
      << "  .cell { stroke: #000; stroke-width: 1.5; }\n"
      << "  .input { fill: #fff; }\n"
      << "  .pauli { fill: #000; }\n"
      << "  .wire { fill: #fff; }\n"
      << "  .nonpauli { fill: #d62728; }\n"
      << "  .readout { fill: #fff; stroke-width: 3; }\n"
      << "  .excised { fill: #eee; stroke: #ccc; opacity: 0.5; }\n"
      << "</style>\n";

  const GraphState g = build_graph_state(lattice);
  for (const auto& [u, v] : g.edges()) {
    const Vertex& a = g.vertices()[u];
    const Vertex& b = g.vertices()[v];
    out << "<line x1=\"" << cx(a.col) << "\" y1=\"" << cy(a.row) << "\" x2=\"" << cx(b.col)
        << "\" y2=\"" << cy(b.row) << "\"/>\n";
  }
  for (const LatticeCell& c : lattice.cells()) {
    CellStyle s = cell_style(c);
    if (s == CellStyle::Excised && !spec.show_excised) continue;
    const std::string cls = std::string("cell ") + style_of(s).svg_class;
    const std::string title = "<title>" + escape_xml(cell_title(c)) + "</title>";
    const int x = cx(c.col);
    const int y = cy(c.row);
    out << "<g data-row=\"" << c.row << "\" data-col=\"" << c.col << "\">";
    if (s == CellStyle::Readout) {
      out << "<rect class=\"" << cls << "\" x=\"" << x - kRadius << "\" y=\"" << y - kRadius
          << "\" width=\"" << 2 * kRadius << "\" height=\"" << 2 * kRadius << "\">";
      out << title << "</rect>";
    } else if (s == CellStyle::Input) {
      out << "<polygon class=\"" << cls << "\" points=\"" << x << ',' << y - kRadius << ' '
          << x + kRadius << ',' << y << ' ' << x << ',' << y + kRadius << ' ' << x - kRadius
          << ',' << y << "\">" << title << "</polygon>";
    } else {
      out << "<circle class=\"" << cls << "\" cx=\"" << x << "\" cy=\"" << y << "\" r=\""
          << kRadius << "\">" << title << "</circle>";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace

RenderFormat parse_render_format(std::string_view name) {
  if (name == "dot") return RenderFormat::Dot;
  if (name == "svg") return RenderFormat::Svg;
  throw UnknownFormat(name);
}

CellStyle cell_style(const LatticeCell& c) {
  switch (c.role) {
    case CellRole::Excised:
      return CellStyle::Excised;
    case CellRole::Readout:
      return CellStyle::Readout;
    case CellRole::Input:
      return CellStyle::Input;
    default:
      break;
  }
  if (c.label && !c.label->is_pauli()) return CellStyle::NonPauli;
  return c.role == CellRole::Wire ? CellStyle::Wire : CellStyle::PatternPauli;
}

std::string render_lattice(const Lattice& lattice, const RenderSpec& spec) {
  return spec.format == RenderFormat::Dot ? render_dot(lattice, spec)
                                          : render_svg(lattice, spec);
}

}  // namespace etch
