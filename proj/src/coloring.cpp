#include "tpk/coloring.hpp"

#include <cstdlib>
#include <tuple>

#include "tpk/error.hpp"

namespace tpk {

std::pair<Color, Color> propagate_crossing(std::pair<Color, Color> below, int sign) noexcept {
  const auto [a, b] = below;
  if (sign > 0)
    return {conjugate(a, b), a};
  return {b, conjugate(b, a)};
}

ColorVector propagate_braid(const BraidWord& w, const ColorVector& bottom) {
  if (static_cast<int>(bottom.size()) != w.strands())
    throw InvalidInput("color vector has " + std::to_string(bottom.size()) +
                       " entries, braid has " + std::to_string(w.strands()) + " strands");
  ColorVector v = bottom;
  for (int e : w.letters()) {
    const std::size_t i = static_cast<std::size_t>(std::abs(e)) - 1;
    std::tie(v[i], v[i + 1]) = propagate_crossing({v[i], v[i + 1]}, e > 0 ? 1 : -1);
  }
  return v;
}

ColorVector expand_caps(std::span<const Color> caps) {
  ColorVector v;
  v.reserve(2 * caps.size());
  for (Color c : caps) {
    v.push_back(c);
    v.push_back(c);
  }
  return v;
}

std::optional<std::vector<Color>> cap_colors(std::span<const Color> v) {
  if (v.size() % 2 != 0)
    return std::nullopt;
  std::vector<Color> caps;
  caps.reserve(v.size() / 2);
  for (std::size_t i = 0; i < v.size(); i += 2) {
    if (v[i] != v[i + 1])
      return std::nullopt;
    caps.push_back(v[i]);
  }
  return caps;
}

Coloring::Coloring(std::vector<Color> bottom, ColorVector endpoints)
    : bottom_(std::move(bottom)), endpoints_(std::move(endpoints)) {
  if (endpoints_.size() != 2 * bottom_.size())
    throw InvalidInput("coloring needs two boundary colors per bridge");
}

Coloring make_coloring(const Tangle& anchor, std::vector<Color> bottom) {
  if (static_cast<int>(bottom.size()) != anchor.bridges())
    throw InvalidInput("coloring has " + std::to_string(bottom.size()) + " colors, tangle has " +
                       std::to_string(anchor.bridges()) + " bridges");
  ColorVector top = propagate_braid(anchor.braid(), expand_caps(bottom));
  return Coloring(std::move(bottom), std::move(top));
}

std::optional<std::vector<Color>> pull_back(const Tangle& t, std::span<const Color> endpoints) {
  const ColorVector v(endpoints.begin(), endpoints.end());
  return cap_colors(propagate_braid(t.braid().reverse_inverse(), v));
}

namespace {

// Calls f on every assignment of colors to b caps, lexicographically.
template <class F> void for_each_assignment(int b, F&& f) {
  std::vector<Color> caps(b, Color::One);
  while (true) {
    f(caps);
    int i = b - 1;
    while (i >= 0 && caps[i] == Color::Three) {
      caps[i] = Color::One;
      --i;
    }
    if (i < 0)
      return;
    caps[i] = static_cast<Color>(to_int(caps[i]) + 1);
  }
}

} // namespace

std::vector<Coloring> tangle_colorings(const Tangle& t) {
  std::vector<Coloring> out;
  for_each_assignment(t.bridges(), [&](const std::vector<Color>& caps) {
    out.push_back(make_coloring(t, caps));
  });
  return out;
}

std::vector<Coloring> link_colorings(const Tangle& t1, const Tangle& t2) {
  if (t1.bridges() != t2.bridges())
    throw InvalidInput("link_colorings: tangles have different bridge counts");
  const BraidWord back = t2.braid().reverse_inverse();
  std::vector<Coloring> out;
  for_each_assignment(t1.bridges(), [&](const std::vector<Color>& caps) {
    Coloring c = make_coloring(t1, caps);
    const ColorVector top(c.endpoint_colors().begin(), c.endpoint_colors().end());
    if (cap_colors(propagate_braid(back, top)))
      out.push_back(std::move(c));
  });
  return out;
}

bool is_triplane_coloring(const TriPlaneDiagram& d, const Coloring& c) {
  if (c.bridges() != d.bridges())
    return false;
  if (make_coloring(d.tangle(1), {c.bottom().begin(), c.bottom().end()}) != c)
    return false;
  return pull_back(d.tangle(2), c.endpoint_colors()) && pull_back(d.tangle(3), c.endpoint_colors());
}

std::vector<Coloring> triplane_colorings(const TriPlaneDiagram& d) {
  std::vector<Coloring> out;
  for_each_assignment(d.bridges(), [&](const std::vector<Color>& caps) {
    Coloring c = make_coloring(d.tangle(1), caps);
    if (pull_back(d.tangle(2), c.endpoint_colors()) && pull_back(d.tangle(3), c.endpoint_colors()))
      out.push_back(std::move(c));
  });
  return out;
}

int partial_coloring_count(const TriPlaneDiagram& d) {
  int n = 0;
  for_each_assignment(d.bridges(), [&](const std::vector<Color>& caps) {
    const Coloring c = make_coloring(d.tangle(1), caps);
    const bool on2 = pull_back(d.tangle(2), c.endpoint_colors()).has_value();
    const bool on3 = pull_back(d.tangle(3), c.endpoint_colors()).has_value();
    n += on2 != on3;
  });
  return n;
}

bool is_transitive(std::span<const Color> colors) noexcept {
  for (Color c : colors)
    if (c != colors.front())
      return true;
  return false;
}

bool is_transitive(const Coloring& c) noexcept { return is_transitive(c.bottom()); }

} // namespace tpk
