#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tpk/coloring.hpp"
#include "tpk/cover.hpp"
#include "tpk/diagram.hpp"
#include "tpk/search_budget.hpp"

namespace tpk {

/// Move kinds, in tie-breaking order. CapTwist is the plat-closure twist of
/// a single cap; it is not one of the braid-group moves.
enum class MoveKind { Cancel, FarCommute, BraidRelation, ThreeMove, Perturb, Deperturb, CapTwist };

std::string_view to_string(MoveKind k);
std::optional<MoveKind> move_kind_from_string(std::string_view s);

/// One rewriting step on a braid word.
///
/// position is a 0-based word index, generator a signed letter, and
/// direction is +1/-1. The meaning per kind:
///  - Cancel:        +1 deletes [g,-g] at position; -1 inserts it.
///  - FarCommute:    swaps the letters at position, position+1 (+1 only).
///  - BraidRelation: rewrites the three letters at position (+1 only):
///                   [a,b,a] -> [b,a,b], or a^e b^d a^-e -> b^-e a^d b^e.
///  - ThreeMove:     +1 deletes [g,g,g] at position; -1 inserts it.
///  - Perturb:       inserts two new strands and the crossing g at position.
///                   g is even; the new strands sit right of the crossing's
///                   old strand (+1, at |g|+1,|g|+2) or left of it (-1, at
///                   |g|-1,|g|).
///  - Deperturb:     inverse of Perturb with the same fields.
///  - CapTwist:      +1 deletes an odd letter at an end of the word that
///                   touches a cap; -1 inserts one.
struct Move {
  MoveKind kind = MoveKind::Cancel;
  std::size_t position = 0;
  int generator = 0;
  int direction = 1;

  friend bool operator==(const Move&, const Move&) = default;
};

/// Which ends of the word are capped. A tangle has caps only at the bottom;
/// a plat link has caps at both ends.
enum class Closure { Tangle, Plat };

/// Throws MoveError if the move does not apply.
BraidWord apply_move(const BraidWord& w, const Move& m, Closure closure);

/// Tangle version; Perturb/Deperturb change the bridge count by one.
Tangle apply_move(const Tangle& t, const Move& m);

/// A move undoing m, given the word m was applied to.
Move inverse(const Move& m, const BraidWord& before, Closure closure);

/// Applies m to tangle i of d. Perturb/Deperturb extend or shrink the other
/// two tangles by a crossingless cap at the same place. Throws MoveError if
/// the move or the matching change to the other tangles is not possible.
TriPlaneDiagram apply_move(const TriPlaneDiagram& d, int tangle, const Move& m);

/// Carries a coloring across a diagram move; nullopt if none survives.
std::optional<Coloring> transfer_coloring(const TriPlaneDiagram& before,
                                          const TriPlaneDiagram& after, int tangle,
                                          const Move& m, const Coloring& c);

/// Whether the colorings of t and apply_move(t, m) correspond: equal sets
/// of boundary colors, or for Perturb/Deperturb equal after deleting the
/// new cap, whose color is forced to match its neighbour.
bool moves_preserve_colorings(const Tangle& t, const Move& m);

/// The caps of the sector link carry (1,2,2,...,2) at the bottom and top,
/// where bottom_caps are the colors of its bottom caps.
bool is_normalized(const SectorLink& l, std::span<const Color> bottom_caps);

/// Same, for sector i of a diagram with coloring c.
bool is_normalized(const TriPlaneDiagram& d, int i, const Coloring& c);

struct Certification {
  UnlinkStatus status = UnlinkStatus::Unknown;
  /// Replayable with Closure::Plat on the sector braid; empty unless Yes.
  std::vector<Move> certificate;
  std::size_t states = 0;
};

/// Tries to reduce the plat braid to the empty word with isotopy moves
/// (cancellation, commutation, braid relations, cap twists,
/// deperturbations). No if the coloring count rules out an unlink.
Certification certify_unlink(const SectorLink& l, const SearchBudget& budget = {});

/// Replays moves and returns the final word.
BraidWord replay(const BraidWord& w, std::span<const Move> moves, Closure closure);

/// "KIND pos gen dir", e.g. "DEPERTURB 3 -6 +".
std::string format_move(const Move& m);

/// Parses one certificate line. Throws InvalidInput.
Move parse_move(std::string_view line);

/// One move per line; blank lines and '#' comments ignored.
std::vector<Move> parse_certificate(std::istream& in);

} // namespace tpk
