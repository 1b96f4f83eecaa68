#include "tpk/render.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <vector>

namespace tpk {

namespace {

/// levels[k] holds the strand colors below letter k; levels.back() is the top.
std::optional<std::vector<ColorVector>> level_colors(const TpdDocument& doc, int i) {
  if (!doc.coloring)
    return std::nullopt;
  const Tangle& t = doc.diagram.tangle(i);
  const auto caps = pull_back(t, doc.coloring->endpoint_colors());
  if (!caps)
    return std::nullopt;
  std::vector<ColorVector> levels{expand_caps(*caps)};
  for (int e : t.braid().letters()) {
    ColorVector next = levels.back();
    const auto p = static_cast<std::size_t>(std::abs(e) - 1);
    const auto [l, r] = propagate_crossing({next[p], next[p + 1]}, e > 0 ? 1 : -1);
    next[p] = l;
    next[p + 1] = r;
    levels.push_back(std::move(next));
  }
  return levels;
}

char strand_char(const std::optional<std::vector<ColorVector>>& levels, std::size_t level,
                 std::size_t p) {
  if (!levels)
    return '|';
  return static_cast<char>('0' + to_int((*levels)[level][p]));
}

std::vector<std::string> ascii_panel(const TpdDocument& doc, int i, std::size_t height) {
  const int b = doc.diagram.bridges();
  const auto width = static_cast<std::size_t>(4 * b - 1);
  const auto letters = doc.diagram.tangle(i).braid().letters();
  const auto levels = level_colors(doc, i);
  const std::size_t n = letters.size();

  auto strand_row = [&](std::size_t level) {
    std::string row(width, ' ');
    for (std::size_t p = 0; p < static_cast<std::size_t>(2 * b); ++p)
      row[2 * p] = strand_char(levels, level, p);
    return row;
  };

  std::vector<std::string> rows;
  rows.push_back("T" + std::to_string(i));
  std::string numbers(width, ' ');
  for (int p = 1; p <= 2 * b; ++p)
    numbers[2 * (p - 1)] = static_cast<char>('0' + p % 10);
  rows.push_back(numbers);
  rows.push_back(strand_row(n));
  for (std::size_t k = n; k-- > 0;) {
    const int e = letters[k];
    const auto g = static_cast<std::size_t>(std::abs(e));
    std::string row = strand_row(k);
    row[2 * (g - 1)] = ' ';
    row[2 * g] = ' ';
    row[2 * g - 1] = e > 0 ? '/' : '\\';
    rows.push_back(row);
    rows.push_back(strand_row(k));
  }
  while (rows.size() + 1 < height)
    rows.push_back(strand_row(0));
  std::string caps(width, ' ');
  for (int j = 0; j < b; ++j) {
    const auto c = static_cast<std::size_t>(4 * j);
    caps[c] = '\\';
    caps[c + 1] = levels ? strand_char(levels, 0, 2 * static_cast<std::size_t>(j)) : '_';
    caps[c + 2] = '/';
  }
  rows.push_back(caps);
  return rows;
}

void rstrip(std::string& s) {
  while (!s.empty() && s.back() == ' ')
    s.pop_back();
}

const char* stroke(const std::optional<std::vector<ColorVector>>& levels, std::size_t level,
                   std::size_t p) {
  if (!levels)
    return "#000000";
  switch ((*levels)[level][p]) {
  case Color::One:
    return "#d62728";
  case Color::Two:
    return "#1f77b4";
  case Color::Three:
    return "#2ca02c";
  }
  return "#000000";
}

void line(std::ostream& os, int x1, int y1, int x2, int y2, const char* color) {
  os << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
     << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
}

} // namespace

std::string render(const TpdDocument& doc, RenderFormat format) {
  return format == RenderFormat::Ascii ? render_ascii(doc) : render_svg(doc);
}

std::string render_ascii(const TpdDocument& doc) {
  const TriPlaneDiagram& d = doc.diagram;
  std::size_t height = 0;
  for (int i = 1; i <= 3; ++i)
    height = std::max(height, 4 + 2 * d.tangle(i).braid().size());

  std::array<std::vector<std::string>, 3> panels;
  for (int i = 1; i <= 3; ++i)
    panels[i - 1] = ascii_panel(doc, i, height);

  const auto width = static_cast<std::size_t>(4 * d.bridges() - 1);
  std::string out;
  for (std::size_t r = 0; r < height; ++r) {
    std::string row;
    for (std::size_t i = 0; i < 3; ++i) {
      std::string cell = panels[i][r];
      cell.resize(width, ' ');
      row += cell;
      if (i < 2)
        row += "   ";
    }
    rstrip(row);
    out += row + "\n";
  }
  out += "sectors:";
  for (int i = 1; i <= 3; ++i)
    out += " " + std::to_string(i) + "=" + to_string(d.sector(i));
  out += "\n";
  if (doc.coloring) {
    out += "coloring:";
    for (Color c : doc.coloring->bottom())
      out += " " + std::to_string(to_int(c));
    out += "\n";
  }
  return out;
}

std::string render_svg(const TpdDocument& doc) {
  constexpr int step = 20;  // horizontal spacing of boundary points
  constexpr int row = 30;   // height of one crossing
  constexpr int margin = 20;
  constexpr int top = 50;   // y of the boundary points

  const TriPlaneDiagram& d = doc.diagram;
  const int b = d.bridges();
  const int panel_width = step * (2 * b - 1);
  const int gap = 2 * step;
  std::size_t longest = 0;
  for (int i = 1; i <= 3; ++i)
    longest = std::max(longest, d.tangle(i).braid().size());
  const int bottom = top + row * static_cast<int>(longest);
  const int width = 2 * margin + 3 * panel_width + 2 * gap;
  const int height = bottom + step + margin + 20;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
     << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
     << "\" fill=\"#ffffff\"/>\n";

  for (int i = 1; i <= 3; ++i) {
    const int x0 = margin + (i - 1) * (panel_width + gap);
    const auto letters = d.tangle(i).braid().letters();
    const auto levels = level_colors(doc, i);
    const int n = static_cast<int>(letters.size());
    auto x = [&](std::size_t p) { return x0 + step * static_cast<int>(p); };
    // Letter k sits between y(k) (below) and y(k+1) (above); the letters are
    // stretched over the full panel height so the caps line up.
    auto y = [&](int level) { return n == 0 ? bottom : bottom - (bottom - top) * level / n; };

    os << "<g id=\"T" << i << "\">\n";
    os << "<text x=\"" << x0 << "\" y=\"" << top - 30 << "\" font-family=\"monospace\" "
       << "font-size=\"14\">T" << i << " (" << to_string(d.sector(i)) << ")</text>\n";
    for (int p = 0; p < 2 * b; ++p)
      os << "<text x=\"" << x(p) - 4 << "\" y=\"" << top - 8
         << "\" font-family=\"monospace\" font-size=\"12\">" << p + 1 << "</text>\n";

    if (n == 0)
      for (std::size_t p = 0; p < static_cast<std::size_t>(2 * b); ++p)
        line(os, x(p), top, x(p), bottom, stroke(levels, 0, p));
    for (int k = 0; k < n; ++k) {
      const int e = letters[k];
      const auto g = static_cast<std::size_t>(std::abs(e));
      const int y1 = y(k);
      const int y2 = y(k + 1);
      for (std::size_t p = 0; p < static_cast<std::size_t>(2 * b); ++p)
        if (p + 1 != g && p != g)
          line(os, x(p), y1, x(p), y2, stroke(levels, k, p));
      const std::size_t l = g - 1;
      const std::size_t r = g;
      // Over strand drawn whole; under strand broken around the crossing.
      const std::size_t over_from = e > 0 ? l : r;
      const std::size_t over_to = e > 0 ? r : l;
      const std::size_t under_from = e > 0 ? r : l;
      const std::size_t under_to = e > 0 ? l : r;
      line(os, x(over_from), y1, x(over_to), y2, stroke(levels, k, over_from));
      const int xa = x(under_from), xb = x(under_to);
      line(os, xa, y1, xa + (xb - xa) * 2 / 5, y1 + (y2 - y1) * 2 / 5,
           stroke(levels, k, under_from));
      line(os, xa + (xb - xa) * 3 / 5, y1 + (y2 - y1) * 3 / 5, xb, y2,
           stroke(levels, k + 1, under_to));
    }
    for (int j = 0; j < b; ++j) {
      const std::size_t p = 2 * static_cast<std::size_t>(j);
      os << "<path d=\"M " << x(p) << " " << bottom << " Q " << x(p) + step / 2 << " "
         << bottom + step << " " << x(p + 1) << " " << bottom << "\" fill=\"none\" stroke=\""
         << stroke(levels, 0, p) << "\" stroke-width=\"2\"/>\n";
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

} // namespace tpk
