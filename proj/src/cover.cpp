#include "tpk/cover.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "tpk/error.hpp"
#include "tpk/rewrite.hpp"

namespace tpk {

namespace {

std::string handles_label(int k) { return "#^" + std::to_string(k) + "(S¹×S²)"; }

// Colors of the components left after replaying an unlink certificate,
// starting from the sector's bottom cap colors.
std::vector<Color> reduced_component_colors(std::span<const Move> certificate,
                                            std::vector<Color> caps) {
  for (const Move& m : certificate) {
    if (m.kind != MoveKind::Deperturb)
      continue;
    const int g = std::abs(m.generator);
    const int p = m.direction > 0 ? g : g - 2;
    caps.erase(caps.begin() + p / 2);
  }
  return caps;
}

// One component in one color, all others in a second color.
bool has_lemma_pattern(std::span<const Color> colors) {
  std::array<int, 3> count{};
  for (Color c : colors)
    ++count[to_int(c) - 1];
  const auto used = std::count_if(count.begin(), count.end(), [](int n) { return n > 0; });
  return used == 2 && std::find(count.begin(), count.end(), 1) != count.end();
}

std::vector<Singularity> singularities_from(const TriPlaneDiagram& d,
                                            const std::array<SectorLink, 3>& links,
                                            bool smooth_unknot_cones) {
  std::vector<Singularity> out;
  for (int i = 1; i <= 3; ++i) {
    if (d.sector(i) != SectorPatch::Cone)
      continue;
    const SectorLink& l = links[i - 1];
    if (smooth_unknot_cones && l.components == 1 && l.certified_unlink == UnlinkStatus::Yes)
      continue;
    out.push_back({i, l.components, l.components == 1 ? "cone on a knot" : "cone on a link"});
  }
  return out;
}

} // namespace

std::string to_string(UnlinkStatus s) {
  switch (s) {
  case UnlinkStatus::Yes:
    return "yes";
  case UnlinkStatus::No:
    return "no";
  case UnlinkStatus::Unknown:
    break;
  }
  return "unknown";
}

int matching_union_components(const Matching& m1, const Matching& m2) {
  if (m1.points() != m2.points())
    throw InvalidInput("matchings are on different point counts");
  std::vector<bool> seen(m1.points() + 1, false);
  int cycles = 0;
  for (int start = 1; start <= m1.points(); ++start) {
    if (seen[start])
      continue;
    ++cycles;
    int p = start;
    while (!seen[p]) {
      seen[p] = true;
      const int q = m1.partner(p);
      seen[q] = true;
      p = m2.partner(q);
    }
  }
  return cycles;
}

SectorLink sector_link(const TriPlaneDiagram& d, int i) {
  const Tangle& lower = d.tangle(i);
  const Tangle& upper = d.tangle(next_index(i));
  SectorLink l;
  l.index = i;
  l.bridges = d.bridges();
  l.braid = lower.braid().concat(upper.braid().reverse_inverse());
  l.components = matching_union_components(induced_matching(lower), induced_matching(upper));
  l.colorings = static_cast<int>(link_colorings(lower, upper).size());
  l.certified_unlink = UnlinkStatus::Unknown;
  return l;
}

SectorLink certified_sector_link(const TriPlaneDiagram& d, int i, const SearchBudget& budget) {
  SectorLink l = sector_link(d, i);
  l.certified_unlink = certify_unlink(l, budget).status;
  return l;
}

int core_genus(int bridges) {
  if (bridges < 2)
    throw InvalidInput("a connected irregular 3-fold cover needs at least 2 bridges");
  // chi = 3*2 - 2b, one missing preimage per branch point
  const int chi = 6 - 2 * bridges;
  return (2 - chi) / 2;
}

SectorAnalysis analyze_sector(const TriPlaneDiagram& d, int i, const Coloring& c,
                              const SearchBudget& budget) {
  SectorAnalysis a;
  a.link = sector_link(d, i);
  const Certification cert = certify_unlink(a.link, budget);
  a.link.certified_unlink = cert.status;

  const auto bottom = pull_back(d.tangle(i), c.endpoint_colors());
  const auto top = pull_back(d.tangle(next_index(i)), c.endpoint_colors());
  if (!bottom || !top) {
    a.diagnostic = "sector " + std::to_string(i) + ": coloring does not extend over the sector link";
    return a;
  }
  a.bottom_caps = *bottom;
  a.top_caps = *top;
  a.normalized = is_normalized(a.link, a.bottom_caps);
  if (cert.status == UnlinkStatus::Yes)
    a.component_colors = reduced_component_colors(cert.certificate, a.bottom_caps);

  const std::string name = "sector " + std::to_string(i);
  if (d.sector(i) == SectorPatch::Cone) {
    if (!is_transitive(c.endpoint_colors())) {
      a.diagnostic = name + ": cone over a link whose coloring is not transitive";
      return a;
    }
    a.handles = 0;
    a.label = "S³";
    return a;
  }
  if (cert.status == UnlinkStatus::No) {
    a.diagnostic = name + ": link is not an unlink (" + std::to_string(a.link.colorings) +
                   " colorings, " + std::to_string(a.link.components) + " components)";
    return a;
  }
  if (cert.status == UnlinkStatus::Unknown) {
    a.diagnostic = name + ": unlink certification inconclusive within budget";
    return a;
  }
  if (!has_lemma_pattern(*a.component_colors)) {
    a.diagnostic = name + ": unlink is not colored with one component in one color and the rest "
                          "in another";
    return a;
  }
  a.handles = a.link.components - 2;
  a.label = handles_label(*a.handles);
  return a;
}

TrisectionParams trisection_params(const TriPlaneDiagram& d, const Coloring& c,
                                   const SearchBudget& budget) {
  if (!is_triplane_coloring(d, c))
    throw PreconditionFailure("coloring does not extend over all three tangles");
  if (!is_transitive(c))
    throw PreconditionFailure("coloring is not transitive; the cover is disconnected");
  if (d.bridges() < 2)
    throw PreconditionFailure("need at least 2 bridges");
  TrisectionParams p;
  p.g = core_genus(d.bridges());
  for (int i = 1; i <= 3; ++i) {
    const SectorAnalysis a = analyze_sector(d, i, c, budget);
    if (a.handles) {
      p.k[i - 1] = *a.handles;
      continue;
    }
    if (d.sector(i) == SectorPatch::TrivialDisks &&
        a.link.certified_unlink == UnlinkStatus::Unknown)
      throw UnknownParameters(a.diagnostic);
    throw PreconditionFailure(a.diagnostic);
  }
  return p;
}

int euler_X(const TrisectionParams& p) noexcept { return 2 + p.g - p.k[0] - p.k[1] - p.k[2]; }

int branch_surface_euler(const TriPlaneDiagram& d) {
  int patches = 0;
  for (int i = 1; i <= 3; ++i) {
    if (d.sector(i) == SectorPatch::Cone) {
      patches += 1;
      continue;
    }
    patches += matching_union_components(induced_matching(d.tangle(i)),
                                         induced_matching(d.tangle(next_index(i))));
  }
  return patches - d.bridges();
}

int branch_surface_components(const TriPlaneDiagram& d) {
  const int n = 2 * d.bridges();
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

  for (const Tangle& t : d.tangles()) {
    const Matching m = induced_matching(t);
    for (auto [a, b] : m.pairs())
      unite(a, b);
  }
  // A disk only caps a circle that is already connected; a cone joins every
  // component of its sector link, and each sector link passes through all points.
  if (d.cone_count() > 0)
    for (int p = 2; p <= n; ++p)
      unite(1, p);

  int roots = 0;
  for (int p = 1; p <= n; ++p)
    roots += find(p) == p;
  return roots;
}

std::vector<Singularity> singularity_report(const TriPlaneDiagram& d,
                                            const ReportOptions& options) {
  std::array<SectorLink, 3> links;
  for (int i = 1; i <= 3; ++i) {
    links[i - 1] = sector_link(d, i);
    if (options.smooth_unknot_cones && d.sector(i) == SectorPatch::Cone)
      links[i - 1].certified_unlink = certify_unlink(links[i - 1], options.budget).status;
  }
  return singularities_from(d, links, options.smooth_unknot_cones);
}

CoverReport cover_report(const TriPlaneDiagram& d, const std::optional<Coloring>& coloring,
                         const ReportOptions& options) {
  CoverReport r;
  r.bridges = d.bridges();
  if (d.bridges() >= 2)
    r.core_genus = core_genus(d.bridges());
  else
    r.diagnostics.push_back("fewer than 2 bridges: no connected irregular 3-fold cover");

  if (coloring) {
    if (is_triplane_coloring(d, *coloring))
      r.coloring = coloring;
    else
      r.diagnostics.push_back("given coloring does not extend over all three tangles");
  } else {
    for (Coloring& c : triplane_colorings(d)) {
      if (is_transitive(c)) {
        r.coloring = std::move(c);
        break;
      }
    }
    if (!r.coloring)
      r.diagnostics.push_back("diagram has no transitive coloring");
  }
  r.transitive = r.coloring && is_transitive(*r.coloring);
  if (r.coloring && !r.transitive)
    r.diagnostics.push_back("coloring is not transitive; the cover is disconnected");
  if (const int partial = partial_coloring_count(d); partial > 0)
    r.diagnostics.push_back(std::to_string(partial) +
                            " colorings extend over tangle 1 and only one other tangle");

  std::array<SectorLink, 3> links;
  for (int i = 1; i <= 3; ++i) {
    SectorAnalysis& a = r.sectors[i - 1];
    if (r.coloring) {
      a = analyze_sector(d, i, *r.coloring, options.budget);
      if (!a.diagnostic.empty())
        r.diagnostics.push_back(a.diagnostic);
    } else {
      a.link = certified_sector_link(d, i, options.budget);
    }
    links[i - 1] = a.link;
    r.manifold_labels[i - 1] = a.label;
  }

  const bool all_known = std::all_of(r.sectors.begin(), r.sectors.end(),
                                     [](const SectorAnalysis& a) { return a.handles.has_value(); });
  if (r.transitive && r.core_genus && all_known) {
    TrisectionParams p;
    p.g = *r.core_genus;
    for (int i = 0; i < 3; ++i)
      p.k[i] = *r.sectors[i].handles;
    r.params = p;
    r.euler_X = euler_X(p);
  }

  r.branch_euler = branch_surface_euler(d);
  r.branch_components = branch_surface_components(d);
  r.singularities = singularities_from(d, links, options.smooth_unknot_cones);
  r.embedded = std::all_of(r.singularities.begin(), r.singularities.end(),
                           [](const Singularity& s) { return s.components == 1; });
  return r;
}

} // namespace tpk
