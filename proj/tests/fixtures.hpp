#pragma once

#include <random>
#include <vector>

#include "oracles.hpp"
#include "tpk/cover.hpp"
#include "tpk/generate.hpp"

namespace fixtures {

inline std::vector<int> v_of(const tpk::BraidWord& w) { return {w.letters().begin(), w.letters().end()}; }

inline tpk::SectorLink link_of(const tpk::BraidWord& w) {
  // Component and coloring counts from the independent oracles.
  const int b = w.strands() / 2;
  tpk::SectorLink l;
  l.bridges = b;
  l.braid = w;
  std::vector<int> std_partner(2 * b);
  for (int j = 0; j < b; ++j) {
    std_partner[2 * j] = 2 * j + 2;
    std_partner[2 * j + 1] = 2 * j + 1;
  }
  l.components = oracle::union_cycles(oracle::traced_partner(b, v_of(w)), std_partner);
  l.colorings = static_cast<int>(oracle::tangles_fox_count(b, {v_of(w), {}}));
  return l;
}

// Noisy crossingless unlinks: the standard plat, padded with a word that
// cancels, odd twists next to the bottom caps, and trivial perturbations.
inline tpk::BraidWord noisy_unlink(std::mt19937& rng, int n, int b) {
  const tpk::UnlinkPlat u = tpk::generate_unlink_plat(n, b, false);
  const int s = 2 * b;
  auto pad = oracle::random_letters(rng, s, 3);
  std::vector<int> lower;
  std::uniform_int_distribution<int> odd(0, b - 1);
  lower.push_back(2 * odd(rng) + 1);
  lower.insert(lower.end(), pad.begin(), pad.end());
  std::vector<int> upper = v_of(u.upper.braid());
  upper.insert(upper.begin(), 2 * odd(rng) + 1);
  upper.insert(upper.end(), pad.begin(), pad.end());
  return tpk::BraidWord(s, lower).concat(tpk::BraidWord(s, upper).reverse_inverse());
}

} // namespace fixtures
