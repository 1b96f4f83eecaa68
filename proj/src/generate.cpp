#include "tpk/generate.hpp"

#include <algorithm>

#include "tpk/error.hpp"

namespace tpk {

UnlinkPlat generate_unlink_plat(int components, int bridges, bool colored) {
  if (components < 1 || bridges < components)
    throw InvalidInput("unlink needs 1 <= components <= bridges");
  std::vector<int> letters;
  for (int m = components; m < bridges; ++m)
    letters.push_back(2 * m);
  UnlinkPlat out{Tangle::identity(bridges), Tangle(bridges, BraidWord(2 * bridges, letters)),
                 std::nullopt};
  if (colored) {
    // Caps components..bridges form one component; with a single component
    // that is the leftmost one.
    std::vector<Color> caps(bridges, Color::Two);
    if (components == 1)
      std::fill(caps.begin(), caps.end(), Color::One);
    else
      caps[0] = Color::One;
    out.coloring = make_coloring(out.lower, std::move(caps));
  }
  return out;
}

Matching generate_pairing(int bridges, PairingVariant variant) {
  if (bridges < 2)
    throw InvalidInput("pairing needs at least 2 bridges");
  const int n = 2 * bridges;
  std::vector<std::pair<int, int>> pairs;
  if (variant == PairingVariant::Odd) {
    // Shift by one: (2,3),(4,5),...,(2b,1).
    for (int j = 1; j < bridges; ++j)
      pairs.emplace_back(2 * j, 2 * j + 1);
    pairs.emplace_back(n, 1);
  } else {
    // Zigzag: (1,3),(2,5),(4,7),...,(2b-2,2b).
    pairs.emplace_back(1, 3);
    for (int j = 1; j <= bridges - 2; ++j)
      pairs.emplace_back(2 * j, 2 * j + 3);
    pairs.emplace_back(n - 2, n);
  }
  return Matching::from_pairs(n, pairs);
}

Tangle tangle_from_matching(const Matching& m) {
  const int n = m.points();
  // target[pos] = cap foot that must end at pos (feet numbered 1..n)
  std::vector<int> target(n);
  int foot = 1;
  for (auto [a, b] : m.pairs()) {
    target[a - 1] = foot++;
    target[b - 1] = foot++;
  }
  std::vector<int> at(n);
  for (int i = 0; i < n; ++i)
    at[i] = i + 1;
  std::vector<int> letters;
  for (int pos = 0; pos < n; ++pos) {
    int q = static_cast<int>(std::find(at.begin(), at.end(), target[pos]) - at.begin());
    for (; q > pos; --q) {
      std::swap(at[q - 1], at[q]);
      letters.push_back(q); // sigma_q swaps positions q and q+1 (1-based)
    }
  }
  return Tangle(m.bridges(), BraidWord(n, std::move(letters)));
}

ColoredDiagram lemma_family(int k, int g, bool cone_sector) {
  if (k < 0 || g < k)
    throw InvalidInput("lemma family needs 0 <= k <= g");
  UnlinkPlat u = generate_unlink_plat(k + 2, g + 2, true);
  const SectorPatch s2 = cone_sector ? SectorPatch::Cone : SectorPatch::TrivialDisks;
  TriPlaneDiagram d(g + 2, {u.lower, u.upper, u.lower},
                    {SectorPatch::TrivialDisks, s2, SectorPatch::TrivialDisks});
  return {std::move(d), std::move(u.coloring)};
}

ColoredDiagram unlink_diagram(int components, int bridges, bool colored) {
  UnlinkPlat u = generate_unlink_plat(components, bridges, colored);
  TriPlaneDiagram d(bridges, {u.lower, u.upper, u.lower},
                    {SectorPatch::TrivialDisks, SectorPatch::TrivialDisks,
                     SectorPatch::TrivialDisks});
  return {std::move(d), std::move(u.coloring)};
}

ColoredDiagram pairing_diagram(int bridges, PairingVariant variant) {
  const Tangle flat = Tangle::identity(bridges);
  TriPlaneDiagram d(bridges, {flat, flat, tangle_from_matching(generate_pairing(bridges, variant))},
                    {SectorPatch::TrivialDisks, SectorPatch::Cone, SectorPatch::Cone});
  std::optional<Coloring> coloring;
  for (Coloring& c : triplane_colorings(d)) {
    if (is_transitive(c)) {
      coloring = std::move(c);
      break;
    }
  }
  return {std::move(d), std::move(coloring)};
}

} // namespace tpk
