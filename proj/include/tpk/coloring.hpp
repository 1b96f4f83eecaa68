#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tpk/diagram.hpp"
#include "tpk/perm.hpp"

namespace tpk {

/// Colors of the strands at one horizontal level of a braid, left to right.
using ColorVector = std::vector<Color>;

/// Colors of the two strands at positions (e, e+1) just above a crossing,
/// given their colors just below it. sign +1: the left strand passes over.
std::pair<Color, Color> propagate_crossing(std::pair<Color, Color> below, int sign) noexcept;

/// Left fold of propagate_crossing over the word. Throws InvalidInput if
/// bottom.size() != w.strands().
ColorVector propagate_braid(const BraidWord& w, const ColorVector& bottom);

/// (c1,...,cb) -> (c1,c1,c2,c2,...,cb,cb): colors at the feet of the caps.
ColorVector expand_caps(std::span<const Color> caps);

/// Inverse of expand_caps; nullopt unless v is constant on every cap.
std::optional<std::vector<Color>> cap_colors(std::span<const Color> v);

/// A Fox 3-coloring, recorded as the colors of the bottom caps of an
/// anchor tangle together with the boundary colors they induce.
class Coloring {
public:
  Coloring(std::vector<Color> bottom, ColorVector endpoints);

  std::span<const Color> bottom() const noexcept { return bottom_; }
  std::span<const Color> endpoint_colors() const noexcept { return endpoints_; }
  int bridges() const noexcept { return static_cast<int>(bottom_.size()); }

  friend bool operator==(const Coloring&, const Coloring&) = default;
  friend auto operator<=>(const Coloring& a, const Coloring& b) { return a.bottom_ <=> b.bottom_; }

private:
  std::vector<Color> bottom_;
  ColorVector endpoints_;
};

/// Colors the caps of `anchor` with `bottom` and pushes them to the boundary.
Coloring make_coloring(const Tangle& anchor, std::vector<Color> bottom);

/// Cap colors of t that produce the given boundary colors, if any.
std::optional<std::vector<Color>> pull_back(const Tangle& t, std::span<const Color> endpoints);

/// All 3^b colorings of a single plat tangle, in lexicographic order of
/// the cap colors.
std::vector<Coloring> tangle_colorings(const Tangle& t);

/// Colorings of t1 whose boundary colors also extend over t2, i.e. the
/// colorings of the link t1 u mirror(t2). Throws InvalidInput on a bridge
/// mismatch.
std::vector<Coloring> link_colorings(const Tangle& t1, const Tangle& t2);

/// Colorings anchored at tangle 1 that extend over all three tangles.
std::vector<Coloring> triplane_colorings(const TriPlaneDiagram& d);

/// Whether c (anchored at tangle 1) extends over every tangle of d.
bool is_triplane_coloring(const TriPlaneDiagram& d, const Coloring& c);

/// Colorings that extend over tangle 1 and exactly one other tangle. These
/// are not tri-plane colorings; they are reported, never used.
int partial_coloring_count(const TriPlaneDiagram& d);

/// At least two distinct colors appear.
bool is_transitive(const Coloring& c) noexcept;
bool is_transitive(std::span<const Color> colors) noexcept;

} // namespace tpk
