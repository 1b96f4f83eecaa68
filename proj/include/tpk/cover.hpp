#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tpk/coloring.hpp"
#include "tpk/diagram.hpp"
#include "tpk/search_budget.hpp"

namespace tpk {

enum class UnlinkStatus { Yes, No, Unknown };

std::string to_string(UnlinkStatus s);

/// The link bounding sector i: tangle i glued to the mirror of tangle i+1,
/// drawn as the plat closure of braid_i . reverse_inverse(braid_{i+1}).
struct SectorLink {
  int index = 1;
  int bridges = 1;
  BraidWord braid{2};
  int components = 1;
  int colorings = 0;
  UnlinkStatus certified_unlink = UnlinkStatus::Unknown;
};

/// Sector link with certified_unlink left Unknown.
SectorLink sector_link(const TriPlaneDiagram& d, int i);

/// Sector link with certified_unlink filled in by certify_unlink.
SectorLink certified_sector_link(const TriPlaneDiagram& d, int i, const SearchBudget& budget = {});

/// Number of cycles in the union of two perfect matchings on the same
/// points. Throws InvalidInput if the point counts differ.
int matching_union_components(const Matching& m1, const Matching& m2);

/// Genus of the connected irregular 3-fold cover of the bridge sphere
/// branched at the 2b boundary points. Throws InvalidInput if b < 2.
int core_genus(int bridges);

/// What the diagram and coloring determine about one sector.
struct SectorAnalysis {
  SectorLink link;
  /// Colors of the sector's caps at the bottom (tangle i) and top (tangle i+1).
  std::vector<Color> bottom_caps;
  std::vector<Color> top_caps;
  /// Component colors once the link has been reduced to a crossingless plat.
  std::optional<std::vector<Color>> component_colors;
  std::optional<int> handles;
  std::string label = "?";
  bool normalized = false;
  std::string diagnostic;
};

SectorAnalysis analyze_sector(const TriPlaneDiagram& d, int i, const Coloring& c,
                              const SearchBudget& budget = {});

/// (g; k1, k2, k3). Throws PreconditionFailure if c is not a transitive
/// coloring of d or some unlink has the wrong coloring pattern, and
/// UnknownParameters if a disk sector's link could not be certified.
TrisectionParams trisection_params(const TriPlaneDiagram& d, const Coloring& c,
                                   const SearchBudget& budget = {});

int euler_X(const TrisectionParams& p) noexcept;

/// Sum of patch counts minus b: cells are the 2b points, the 3b arcs, and
/// one disk per component of each disk sector or a single cone.
int branch_surface_euler(const TriPlaneDiagram& d);

int branch_surface_components(const TriPlaneDiagram& d);

struct Singularity {
  int sector = 0;
  int components = 0;
  std::string kind; // "cone on a knot" or "cone on a link"
};

struct ReportOptions {
  SearchBudget budget;
  /// Drop cones over links certified to be the unknot from the singularity list.
  bool smooth_unknot_cones = false;
};

std::vector<Singularity> singularity_report(const TriPlaneDiagram& d,
                                            const ReportOptions& options = {});

struct CoverReport {
  int bridges = 0;
  std::optional<int> core_genus;
  std::optional<Coloring> coloring;
  bool transitive = false;
  std::array<SectorAnalysis, 3> sectors;
  std::optional<TrisectionParams> params;
  std::optional<int> euler_X;
  int branch_euler = 0;
  int branch_components = 0;
  std::vector<Singularity> singularities;
  bool embedded = true;
  std::array<std::string, 3> manifold_labels;
  std::vector<std::string> diagnostics;
};

/// Everything at once. Without a coloring, the first transitive tri-plane
/// coloring (lexicographic in tangle 1's cap colors) is used.
CoverReport cover_report(const TriPlaneDiagram& d, const std::optional<Coloring>& coloring,
                         const ReportOptions& options = {});

} // namespace tpk
