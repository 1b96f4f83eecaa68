#include "tpk/diagram.hpp"

#include <algorithm>

#include "tpk/error.hpp"

namespace tpk {

Matching::Matching(std::vector<int> partner) : partner_(std::move(partner)) {
  const int n = points();
  if (n == 0 || n % 2 != 0)
    throw InvalidInput("a matching needs an even, positive number of points");
  for (int p = 1; p <= n; ++p) {
    const int q = partner_[p - 1];
    if (q < 1 || q > n || q == p || partner_[q - 1] != p)
      throw InvalidInput("point " + std::to_string(p) + " is not matched exactly once");
  }
}

Matching Matching::from_pairs(int points, const std::vector<std::pair<int, int>>& pairs) {
  if (points <= 0 || points % 2 != 0)
    throw InvalidInput("a matching needs an even, positive number of points");
  std::vector<int> partner(points, 0);
  for (auto [a, b] : pairs) {
    if (a < 1 || a > points || b < 1 || b > points || a == b || partner[a - 1] || partner[b - 1])
      throw InvalidInput("pair (" + std::to_string(a) + "," + std::to_string(b) + ") is not valid");
    partner[a - 1] = b;
    partner[b - 1] = a;
  }
  return Matching(std::move(partner));
}

Matching Matching::standard(int bridges) {
  if (bridges < 1)
    throw InvalidInput("need at least one bridge");
  std::vector<int> partner(2 * bridges);
  for (int j = 0; j < bridges; ++j) {
    partner[2 * j] = 2 * j + 2;
    partner[2 * j + 1] = 2 * j + 1;
  }
  return Matching(std::move(partner));
}

std::vector<std::pair<int, int>> Matching::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int p = 1; p <= points(); ++p)
    if (p < partner(p))
      out.emplace_back(p, partner(p));
  return out;
}

std::string Matching::to_string() const {
  std::string s = "{";
  bool first = true;
  for (auto [a, b] : pairs()) {
    if (!first)
      s += ',';
    s += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    first = false;
  }
  return s + "}";
}

Tangle::Tangle(int bridges, BraidWord braid) : bridges_(bridges), braid_(std::move(braid)) {
  if (bridges_ < 1)
    throw InvalidInput("a tangle needs at least one bridge");
  if (braid_.strands() != 2 * bridges_)
    throw InvalidInput("tangle on " + std::to_string(bridges_) + " bridges needs a braid on " +
                       std::to_string(2 * bridges_) + " strands");
}

Tangle Tangle::identity(int bridges) { return Tangle(bridges, BraidWord(2 * bridges)); }

Matching induced_matching(const Tangle& t) {
  const std::vector<int> perm = t.braid().permutation();
  std::vector<int> partner(perm.size());
  for (int j = 0; j < t.bridges(); ++j) {
    const int a = perm[2 * j];
    const int b = perm[2 * j + 1];
    partner[a - 1] = b;
    partner[b - 1] = a;
  }
  return Matching(std::move(partner));
}

std::string to_string(SectorPatch p) { return p == SectorPatch::Cone ? "cone" : "disks"; }

TriPlaneDiagram::TriPlaneDiagram(int bridges, std::array<Tangle, 3> tangles,
                                 std::array<SectorPatch, 3> sectors)
    : bridges_(bridges), tangles_(std::move(tangles)), sectors_(sectors) {
  for (int i = 0; i < 3; ++i)
    if (tangles_[i].bridges() != bridges_)
      throw InvalidInput("tangle " + std::to_string(i + 1) + " has " +
                         std::to_string(tangles_[i].bridges()) + " bridges, diagram has " +
                         std::to_string(bridges_));
}

const Tangle& TriPlaneDiagram::tangle(int i) const {
  if (i < 1 || i > 3)
    throw InvalidInput("tangle index must be 1, 2 or 3");
  return tangles_[i - 1];
}

SectorPatch TriPlaneDiagram::sector(int i) const {
  if (i < 1 || i > 3)
    throw InvalidInput("sector index must be 1, 2 or 3");
  return sectors_[i - 1];
}

int TriPlaneDiagram::cone_count() const noexcept {
  return static_cast<int>(std::count(sectors_.begin(), sectors_.end(), SectorPatch::Cone));
}

std::string TrisectionParams::to_string() const {
  return "(" + std::to_string(g) + ";" + std::to_string(k[0]) + "," + std::to_string(k[1]) + "," +
         std::to_string(k[2]) + ")";
}

} // namespace tpk
