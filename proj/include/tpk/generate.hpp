#pragma once

#include <optional>

#include "tpk/coloring.hpp"
#include "tpk/diagram.hpp"

namespace tpk {

/// Two plat tangles whose union is an unlink, plus its standard coloring.
struct UnlinkPlat {
  Tangle lower;
  Tangle upper;
  std::optional<Coloring> coloring; // anchored at `lower`
};

/// The crossingless n-component unlink in b-bridge plat position: the
/// lower tangle is crossingless and the upper tangle perturbs the last
/// component b-n times, one bridge at a time on the right. When colored,
/// the component through the leftmost cap is colored 1 and every other
/// component 2. Throws InvalidInput unless 1 <= n <= b.
UnlinkPlat generate_unlink_plat(int components, int bridges, bool colored);

enum class PairingVariant { Odd, Even };

/// A pairing of 2b points whose union with the standard caps is a single
/// circle. Throws InvalidInput if b < 2.
Matching generate_pairing(int bridges, PairingVariant variant);

/// A plat tangle inducing m, with a positive braid built by sorting.
Tangle tangle_from_matching(const Matching& m);

struct ColoredDiagram {
  TriPlaneDiagram diagram;
  std::optional<Coloring> coloring;
};

/// Tangles (crossingless, unlink partner, crossingless) for the
/// (k+2)-component unlink in (g+2)-bridge position. Sector 2 is a cone if
/// requested. Throws InvalidInput unless 0 <= k <= g.
ColoredDiagram lemma_family(int k, int g, bool cone_sector);

/// Unlink tangles from generate_unlink_plat with tangle 3 = tangle 1.
ColoredDiagram unlink_diagram(int components, int bridges, bool colored);

/// Two crossingless tangles and a third realizing generate_pairing; sectors
/// 2 and 3 are cones on knots. Carries the first transitive coloring, if any.
ColoredDiagram pairing_diagram(int bridges, PairingVariant variant);

} // namespace tpk
