#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "tpk/braid.hpp"

namespace tpk {

/// A perfect matching on boundary points 1..2b.
class Matching {
public:
  /// partner[p-1] is the point matched with p. Throws InvalidInput unless
  /// this is a fixed-point-free involution on an even, positive number of
  /// points.
  explicit Matching(std::vector<int> partner);

  static Matching from_pairs(int points, const std::vector<std::pair<int, int>>& pairs);

  /// {(1,2),(3,4),...}: the caps of a crossingless plat.
  static Matching standard(int bridges);

  int points() const noexcept { return static_cast<int>(partner_.size()); }
  int bridges() const noexcept { return points() / 2; }
  int partner(int point) const { return partner_.at(point - 1); }

  /// Pairs (i,j) with i<j, sorted by i.
  std::vector<std::pair<int, int>> pairs() const;

  std::string to_string() const;

  friend bool operator==(const Matching&, const Matching&) = default;

private:
  std::vector<int> partner_;
};

/// A trivial tangle in plat form: b standard caps at the bottom, pushed up
/// through a braid on 2b strands to the boundary points 1..2b.
class Tangle {
public:
  /// Throws InvalidInput unless braid.strands() == 2*bridges.
  Tangle(int bridges, BraidWord braid);

  /// Crossingless tangle on b bridges.
  static Tangle identity(int bridges);

  int bridges() const noexcept { return bridges_; }
  const BraidWord& braid() const noexcept { return braid_; }

  friend bool operator==(const Tangle&, const Tangle&) = default;

private:
  int bridges_;
  BraidWord braid_;
};

/// Boundary pairing of a plat tangle: caps traced through the braid.
Matching induced_matching(const Tangle& t);

enum class SectorPatch { TrivialDisks, Cone };

std::string to_string(SectorPatch p);

/// Three plat tangles on a shared set of 2b boundary points. Sector i is
/// bounded by the link formed from tangles i and i+1 (mod 3); indices here
/// are 1-based.
class TriPlaneDiagram {
public:
  TriPlaneDiagram(int bridges, std::array<Tangle, 3> tangles, std::array<SectorPatch, 3> sectors);

  int bridges() const noexcept { return bridges_; }
  const Tangle& tangle(int i) const;
  SectorPatch sector(int i) const;
  const std::array<Tangle, 3>& tangles() const noexcept { return tangles_; }
  const std::array<SectorPatch, 3>& sectors() const noexcept { return sectors_; }
  int cone_count() const noexcept;

  friend bool operator==(const TriPlaneDiagram&, const TriPlaneDiagram&) = default;

private:
  int bridges_;
  std::array<Tangle, 3> tangles_;
  std::array<SectorPatch, 3> sectors_;
};

/// Index following i in the cyclic order 1 -> 2 -> 3 -> 1.
constexpr int next_index(int i) noexcept { return i % 3 + 1; }

/// (g; k1, k2, k3).
struct TrisectionParams {
  int g = 0;
  std::array<int, 3> k{};

  std::string to_string() const;

  friend bool operator==(const TrisectionParams&, const TrisectionParams&) = default;
};

} // namespace tpk
