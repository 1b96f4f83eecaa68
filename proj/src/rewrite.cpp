#include "tpk/rewrite.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <charconv>
#include <cstdlib>
#include <istream>
#include <queue>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_set>

#include "tpk/error.hpp"

namespace tpk {

namespace {

constexpr std::array<std::string_view, 7> kKindNames{
    "CANCEL", "FARCOMMUTE", "BRAID", "THREEMOVE", "PERTURB", "DEPERTURB", "CAPTWIST"};

int sgn(int e) noexcept { return e > 0 ? 1 : -1; }

std::optional<std::array<int, 3>> braid_relation_image(int a, int b, int c) {
  const int i = std::abs(a);
  const int j = std::abs(b);
  if (std::abs(c) != i || std::abs(i - j) != 1)
    return std::nullopt;
  if (sgn(a) == sgn(b) && sgn(b) == sgn(c))
    return std::array<int, 3>{b, a, b};
  if (sgn(a) == -sgn(c)) {
    const int e = sgn(a);
    return std::array<int, 3>{-e * j, sgn(b) * i, e * j};
  }
  return std::nullopt;
}

// Strands p+1, p+2 are the perturbed pair.
int perturbed_gap(const Move& m) {
  const int g = std::abs(m.generator);
  if (g < 2 || g % 2 != 0)
    throw MoveError(m.position, "perturbation crossing must be an even generator");
  return m.direction > 0 ? g : g - 2;
}

void check_direction(const Move& m, bool allow_undo) {
  if (m.direction != 1 && !(allow_undo && m.direction == -1))
    throw MoveError(m.position, "invalid direction for " + std::string(to_string(m.kind)));
}

// Opens a gap for two new strands after position p; fails if a crossing
// straddles it.
std::vector<int> open_gap(std::span<const int> letters, int p, std::size_t where) {
  std::vector<int> out;
  out.reserve(letters.size() + 1);
  for (int e : letters) {
    if (std::abs(e) == p)
      throw MoveError(where, "generator " + std::to_string(p) + " crosses the insertion gap");
    out.push_back(std::abs(e) > p ? e + 2 * sgn(e) : e);
  }
  return out;
}

// Deletes strands p+1, p+2, which must carry no crossings.
std::vector<int> close_gap(std::span<const int> letters, int p, std::size_t where) {
  std::vector<int> out;
  out.reserve(letters.size());
  for (int e : letters) {
    const int a = std::abs(e);
    if (a >= p && a <= p + 2)
      throw MoveError(where, "generator " + std::to_string(a) + " touches the perturbed strands");
    out.push_back(a >= p + 3 ? e - 2 * sgn(e) : e);
  }
  return out;
}

// Cancels adjacent inverse pairs, recording each as a Cancel move.
BraidWord reduce_recording(const BraidWord& w, std::vector<Move>& moves) {
  std::vector<int> out;
  out.reserve(w.size());
  for (int e : w.letters()) {
    if (!out.empty() && out.back() == -e) {
      moves.push_back({MoveKind::Cancel, out.size() - 1, out.back(), 1});
      out.pop_back();
    } else {
      out.push_back(e);
    }
  }
  return BraidWord(w.strands(), std::move(out));
}

struct KeyHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = v.size();
    for (int x : v)
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

std::vector<int> state_key(const BraidWord& w) {
  std::vector<int> key(w.letters().begin(), w.letters().end());
  key.push_back(w.strands() + 1000000);
  return key;
}

// Isotopy moves worth trying on a plat, in tie-breaking order.
std::vector<Move> candidate_moves(const BraidWord& w) {
  std::vector<Move> out;
  const auto v = w.letters();
  const std::size_t n = v.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (std::abs(std::abs(v[i]) - std::abs(v[i + 1])) >= 2)
      out.push_back({MoveKind::FarCommute, i, v[i], 1});
  for (std::size_t i = 0; i + 2 < n; ++i)
    if (braid_relation_image(v[i], v[i + 1], v[i + 2]))
      out.push_back({MoveKind::BraidRelation, i, v[i], 1});
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(v[i]) % 2 != 0)
      continue;
    out.push_back({MoveKind::Deperturb, i, v[i], 1});
    out.push_back({MoveKind::Deperturb, i, v[i], -1});
  }
  if (n > 0 && std::abs(v[0]) % 2 == 1)
    out.push_back({MoveKind::CapTwist, 0, v[0], 1});
  if (n > 1 && std::abs(v[n - 1]) % 2 == 1)
    out.push_back({MoveKind::CapTwist, n - 1, v[n - 1], 1});
  return out;
}

std::set<ColorVector> endpoint_set(const Tangle& t) {
  std::set<ColorVector> out;
  for (const Coloring& c : tangle_colorings(t))
    out.emplace(c.endpoint_colors().begin(), c.endpoint_colors().end());
  return out;
}

} // namespace

std::string_view to_string(MoveKind k) { return kKindNames[static_cast<std::size_t>(k)]; }

std::optional<MoveKind> move_kind_from_string(std::string_view s) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i)
    if (kKindNames[i] == s)
      return static_cast<MoveKind>(i);
  return std::nullopt;
}

BraidWord apply_move(const BraidWord& w, const Move& m, Closure closure) {
  std::vector<int> v(w.letters().begin(), w.letters().end());
  const std::size_t len = v.size();
  const std::size_t pos = m.position;
  const int g = m.generator;
  const int n = w.strands();
  auto in_range = [&](int e) { return e != 0 && std::abs(e) <= n - 1; };

  switch (m.kind) {
  case MoveKind::Cancel:
    check_direction(m, true);
    if (m.direction > 0) {
      if (pos + 1 >= len || v[pos] != g || v[pos + 1] != -g)
        throw MoveError(pos, "no cancelling pair [" + std::to_string(g) + "," +
                                 std::to_string(-g) + "]");
      v.erase(v.begin() + pos, v.begin() + pos + 2);
    } else {
      if (pos > len || !in_range(g))
        throw MoveError(pos, "cannot insert a cancelling pair here");
      v.insert(v.begin() + pos, {g, -g});
    }
    return BraidWord(n, std::move(v));

  case MoveKind::FarCommute:
    check_direction(m, false);
    if (pos + 1 >= len || (g != 0 && v[pos] != g))
      throw MoveError(pos, "letter mismatch");
    if (std::abs(std::abs(v[pos]) - std::abs(v[pos + 1])) < 2)
      throw MoveError(pos, "generators are adjacent and do not commute");
    std::swap(v[pos], v[pos + 1]);
    return BraidWord(n, std::move(v));

  case MoveKind::BraidRelation: {
    check_direction(m, false);
    if (pos + 2 >= len || (g != 0 && v[pos] != g))
      throw MoveError(pos, "letter mismatch");
    const auto image = braid_relation_image(v[pos], v[pos + 1], v[pos + 2]);
    if (!image)
      throw MoveError(pos, "no braid relation applies");
    std::copy(image->begin(), image->end(), v.begin() + pos);
    return BraidWord(n, std::move(v));
  }

  case MoveKind::ThreeMove:
    check_direction(m, true);
    if (m.direction > 0) {
      if (pos + 2 >= len || v[pos] != g || v[pos + 1] != g || v[pos + 2] != g)
        throw MoveError(pos, "no triple half-twist " + std::to_string(g));
      v.erase(v.begin() + pos, v.begin() + pos + 3);
    } else {
      if (pos > len || !in_range(g))
        throw MoveError(pos, "cannot insert a triple half-twist here");
      v.insert(v.begin() + pos, {g, g, g});
    }
    return BraidWord(n, std::move(v));

  case MoveKind::CapTwist: {
    check_direction(m, true);
    if (!in_range(g) || std::abs(g) % 2 == 0)
      throw MoveError(pos, "a cap twist uses an odd generator");
    const bool plat = closure == Closure::Plat;
    if (m.direction > 0) {
      if (pos >= len || v[pos] != g || !(pos == 0 || (plat && pos + 1 == len)))
        throw MoveError(pos, "no twist of an end cap here");
      v.erase(v.begin() + pos);
    } else {
      if (!(pos == 0 || (plat && pos == len)))
        throw MoveError(pos, "cap twists are inserted next to a cap");
      v.insert(v.begin() + pos, g);
    }
    return BraidWord(n, std::move(v));
  }

  case MoveKind::Perturb: {
    check_direction(m, true);
    const int p = perturbed_gap(m);
    if (m.direction > 0 ? p > n : p + 1 > n)
      throw MoveError(pos, "no old strand next to the new pair");
    if (pos > len)
      throw MoveError(pos, "position past the end of the word");
    std::vector<int> out = open_gap(v, p, pos);
    out.insert(out.begin() + pos, g);
    return BraidWord(n + 2, std::move(out));
  }

  case MoveKind::Deperturb: {
    check_direction(m, true);
    const int p = perturbed_gap(m);
    if (pos >= len || v[pos] != g)
      throw MoveError(pos, "letter mismatch");
    if (m.direction > 0 ? p + 2 > n : p + 3 > n)
      throw MoveError(pos, "perturbed strands out of range");
    v.erase(v.begin() + pos);
    return BraidWord(n - 2, close_gap(v, p, pos));
  }
  }
  throw MoveError(pos, "unknown move kind");
}

Tangle apply_move(const Tangle& t, const Move& m) {
  BraidWord w = apply_move(t.braid(), m, Closure::Tangle);
  const int b = w.strands() / 2;
  return Tangle(b, std::move(w));
}

Move inverse(const Move& m, const BraidWord& before, Closure closure) {
  switch (m.kind) {
  case MoveKind::Cancel:
  case MoveKind::ThreeMove:
  case MoveKind::CapTwist:
    return {m.kind, m.position, m.generator, -m.direction};
  case MoveKind::FarCommute:
    return {m.kind, m.position, before[m.position + 1], 1};
  case MoveKind::BraidRelation:
    return {m.kind, m.position, apply_move(before, m, closure)[m.position], 1};
  case MoveKind::Perturb:
    return {MoveKind::Deperturb, m.position, m.generator, m.direction};
  case MoveKind::Deperturb:
    return {MoveKind::Perturb, m.position, m.generator, m.direction};
  }
  return m;
}

TriPlaneDiagram apply_move(const TriPlaneDiagram& d, int tangle, const Move& m) {
  if (tangle < 1 || tangle > 3)
    throw InvalidInput("tangle index must be 1, 2 or 3");
  std::array<Tangle, 3> ts = d.tangles();
  ts[tangle - 1] = apply_move(d.tangle(tangle), m);
  const int b = ts[tangle - 1].bridges();
  if (m.kind == MoveKind::Perturb || m.kind == MoveKind::Deperturb) {
    const int p = perturbed_gap(m);
    for (int j = 1; j <= 3; ++j) {
      if (j == tangle)
        continue;
      const auto letters = d.tangle(j).braid().letters();
      std::vector<int> v = m.kind == MoveKind::Perturb ? open_gap(letters, p, m.position)
                                                       : close_gap(letters, p, m.position);
      ts[j - 1] = Tangle(b, BraidWord(2 * b, std::move(v)));
    }
  }
  return TriPlaneDiagram(b, std::move(ts), d.sectors());
}

std::optional<Coloring> transfer_coloring(const TriPlaneDiagram& before,
                                          const TriPlaneDiagram& after, int tangle,
                                          const Move& m, const Coloring& c) {
  (void)before;
  (void)tangle;
  std::vector<Color> caps(c.bottom().begin(), c.bottom().end());
  std::vector<std::vector<Color>> candidates;
  if (m.kind == MoveKind::Perturb) {
    const auto at = static_cast<std::ptrdiff_t>(perturbed_gap(m) / 2);
    for (Color k : kAllColors) {
      std::vector<Color> v = caps;
      v.insert(v.begin() + at, k);
      candidates.push_back(std::move(v));
    }
  } else if (m.kind == MoveKind::Deperturb) {
    caps.erase(caps.begin() + perturbed_gap(m) / 2);
    candidates.push_back(std::move(caps));
  } else {
    candidates.push_back(std::move(caps));
  }
  for (auto& v : candidates) {
    Coloring out = make_coloring(after.tangle(1), std::move(v));
    if (is_triplane_coloring(after, out))
      return out;
  }
  return std::nullopt;
}

bool moves_preserve_colorings(const Tangle& t, const Move& m) {
  Tangle after = t;
  try {
    after = apply_move(t, m);
  } catch (const MoveError&) {
    return false;
  }
  if (m.kind != MoveKind::Perturb && m.kind != MoveKind::Deperturb)
    return endpoint_set(t) == endpoint_set(after);

  const int p = perturbed_gap(m);
  const Tangle& big = m.kind == MoveKind::Perturb ? after : t;
  const Tangle& small = m.kind == MoveKind::Perturb ? t : after;
  std::set<ColorVector> restricted;
  std::size_t forced = 0;
  for (ColorVector v : endpoint_set(big)) {
    if (v[p] != v[p + 1])
      continue;
    ++forced;
    v.erase(v.begin() + p, v.begin() + p + 2);
    restricted.insert(std::move(v));
  }
  const std::set<ColorVector> expected = endpoint_set(small);
  return forced == expected.size() && restricted == expected;
}

bool is_normalized(const SectorLink& l, std::span<const Color> bottom_caps) {
  if (static_cast<int>(bottom_caps.size()) != l.bridges)
    return false;
  const ColorVector top = propagate_braid(l.braid, expand_caps(bottom_caps));
  const auto top_caps = cap_colors(top);
  if (!top_caps)
    return false;
  auto pattern = [](std::span<const Color> caps) {
    for (std::size_t j = 0; j < caps.size(); ++j)
      if (caps[j] != (j == 0 ? Color::One : Color::Two))
        return false;
    return true;
  };
  return pattern(bottom_caps) && pattern(*top_caps);
}

bool is_normalized(const TriPlaneDiagram& d, int i, const Coloring& c) {
  const auto caps = pull_back(d.tangle(i), c.endpoint_colors());
  return caps && is_normalized(sector_link(d, i), *caps);
}

Certification certify_unlink(const SectorLink& l, const SearchBudget& budget) {
  Certification result;
  long long expected = 1;
  for (int j = 0; j < l.components; ++j)
    expected *= 3;
  if (l.colorings != expected) {
    result.status = UnlinkStatus::No;
    return result;
  }

  struct Node {
    BraidWord word;
    int parent;
    std::vector<Move> moves;
    int depth;
  };
  std::vector<Node> nodes;
  std::unordered_set<std::vector<int>, KeyHash> visited;
  using Entry = std::tuple<std::size_t, int, std::size_t>; // length, depth, node id
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;

  {
    std::vector<Move> moves;
    BraidWord start = reduce_recording(l.braid, moves);
    visited.insert(state_key(start));
    open.emplace(start.size(), 0, 0);
    nodes.push_back({std::move(start), -1, std::move(moves), 0});
  }

  const auto t0 = std::chrono::steady_clock::now();
  std::size_t pops = 0;
  bool exhausted = false;
  while (!open.empty() && !exhausted) {
    const auto [len, depth, id] = open.top();
    open.pop();
    if (++pops % 256 == 0) {
      const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
      if (dt.count() > budget.time_limit_seconds)
        break;
    }
    if (len == 0) {
      std::vector<const Node*> chain;
      for (int k = static_cast<int>(id); k >= 0; k = nodes[k].parent)
        chain.push_back(&nodes[k]);
      for (auto it = chain.rbegin(); it != chain.rend(); ++it)
        result.certificate.insert(result.certificate.end(), (*it)->moves.begin(),
                                  (*it)->moves.end());
      result.status = UnlinkStatus::Yes;
      result.states = visited.size();
      return result;
    }
    if (depth >= budget.max_depth)
      continue;
    const BraidWord word = nodes[id].word;
    for (const Move& m : candidate_moves(word)) {
      BraidWord child{2};
      try {
        child = apply_move(word, m, Closure::Plat);
      } catch (const MoveError&) {
        continue;
      }
      std::vector<Move> moves{m};
      child = reduce_recording(child, moves);
      auto key = state_key(child);
      if (visited.count(key))
        continue;
      if (visited.size() >= budget.max_states) {
        exhausted = true;
        break;
      }
      visited.insert(std::move(key));
      open.emplace(child.size(), depth + 1, nodes.size());
      nodes.push_back({std::move(child), static_cast<int>(id), std::move(moves), depth + 1});
    }
  }
  result.states = visited.size();
  return result;
}

BraidWord replay(const BraidWord& w, std::span<const Move> moves, Closure closure) {
  BraidWord cur = w;
  for (const Move& m : moves)
    cur = apply_move(cur, m, closure);
  return cur;
}

std::string format_move(const Move& m) {
  std::string s(to_string(m.kind));
  s += ' ';
  s += std::to_string(m.position);
  s += ' ';
  s += std::to_string(m.generator);
  s += m.direction > 0 ? " +" : " -";
  return s;
}

Move parse_move(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::string kind, pos, gen, dir, extra;
  if (!(in >> kind >> pos >> gen >> dir) || (in >> extra))
    throw InvalidInput("move line needs exactly four fields: KIND pos gen dir");
  Move m;
  const auto k = move_kind_from_string(kind);
  if (!k)
    throw InvalidInput("unknown move kind '" + kind + "'");
  m.kind = *k;
  auto parse_int = [](const std::string& s, auto& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
  };
  if (!parse_int(pos, m.position))
    throw InvalidInput("bad position '" + pos + "'");
  if (!parse_int(gen, m.generator))
    throw InvalidInput("bad generator '" + gen + "'");
  if (dir == "+")
    m.direction = 1;
  else if (dir == "-")
    m.direction = -1;
  else
    throw InvalidInput("direction must be + or -");
  return m;
}

std::vector<Move> parse_certificate(std::istream& in) {
  std::vector<Move> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    try {
      out.push_back(parse_move(line));
    } catch (const InvalidInput& e) {
      throw InvalidInput("certificate line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

} // namespace tpk
