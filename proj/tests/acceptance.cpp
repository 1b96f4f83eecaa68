// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "random_docs.hpp"
#include "tpk/coloring.hpp"
#include "tpk/cover.hpp"
#include "tpk/error.hpp"
#include "tpk/generate.hpp"
#include "tpk/rewrite.hpp"
#include "tpk/tpd.hpp"

using namespace tpk;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string cli(const std::vector<std::string>& args, const std::string& input, int& code) {
  std::istringstream in(input);
  std::ostringstream out, err;
  code = cli::run(args, in, out, err);
  return out.str();
}

std::map<std::string, std::string> key_values(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    std::size_t cut = line.find(' ');
    if (line.rfind("sector ", 0) == 0)
      cut = line.find(' ', line.find(' ', cut + 1) + 1);
    if (cut != std::string::npos)
      kv[line.substr(0, cut)] = line.substr(cut + 1);
  }
  return kv;
}

std::vector<int> letters_of(const Tangle& t) { return fixtures::v_of(t.braid()); }

int euler_S_oracle(const TriPlaneDiagram& d) {
  const int b = d.bridges();
  int patches = 0;
  for (int i = 1; i <= 3; ++i) {
    if (d.sector(i) == SectorPatch::Cone) {
      ++patches;
      continue;
    }
    patches += oracle::union_cycles(oracle::traced_partner(b, letters_of(d.tangle(i))),
                                    oracle::traced_partner(b, letters_of(d.tangle(next_index(i)))));
  }
  return patches - b;
}

std::vector<ColorVector> all_vectors(int n) {
  std::vector<ColorVector> out{{}};
  for (int i = 0; i < n; ++i) {
    std::vector<ColorVector> next;
    for (const auto& v : out)
      for (Color c : kAllColors) {
        auto w = v;
        w.push_back(c);
        next.push_back(std::move(w));
      }
    out = std::move(next);
  }
  return out;
}

bool same_action(const BraidWord& a, const BraidWord& b) {
  for (const auto& v : all_vectors(a.strands()))
    if (propagate_braid(a, v) != propagate_braid(b, v))
      return false;
  return true;
}

Outcome lemma_reproduction() {
  Outcome r;
  const auto t0 = Clock::now();
  int runs = 0;
  for (int k = 0; k <= 4; ++k)
    for (int g = k; g <= k + 3; ++g) {
      int code = 0;
      const std::string doc = cli({"generate", "lemma-family", "--k", std::to_string(k), "--g",
                                   std::to_string(g)},
                                  "", code);
      r.expect(code == 0, "generate failed");
      auto kv = key_values(cli({"invariants"}, doc, code));
      const std::string at = " at k=" + std::to_string(k) + " g=" + std::to_string(g);
      r.expect(code == 0, "invariants failed" + at);
      r.expect(kv["core_genus"] == std::to_string(g), "core genus" + at);
      r.expect(kv["sector 1 label"] == "#^" + std::to_string(k) + "(S¹×S²)", "label" + at);
      r.expect(kv["transitive"] == "yes", "transitivity" + at);
      ++runs;
    }
  const double s = seconds_since(t0);
  r.expect(s < 5.0, "took " + std::to_string(s) + " s");
  if (r.ok)
    r.detail = std::to_string(runs) + " (k,g) pairs, " + std::to_string(s) + " s";
  return r;
}

// Same diagram after a homeomorphism of the bridge sphere.
ColoredDiagram twist_boundary(const ColoredDiagram& cd, const std::vector<int>& u) {
  const int b = cd.diagram.bridges();
  const BraidWord w(2 * b, u);
  std::vector<Tangle> ts;
  for (const Tangle& t : cd.diagram.tangles())
    ts.emplace_back(b, t.braid().concat(w));
  TriPlaneDiagram d(b, {ts[0], ts[1], ts[2]}, cd.diagram.sectors());
  std::optional<Coloring> c;
  if (cd.coloring)
    c = make_coloring(d.tangle(1), {cd.coloring->bottom().begin(), cd.coloring->bottom().end()});
  return {std::move(d), std::move(c)};
}

Outcome euler_identities() {
  Outcome r;
  const auto t0 = Clock::now();
  std::mt19937 rng(2024);
  SearchBudget budget;
  budget.max_depth = 8;
  budget.max_states = 5000;
  int defined = 0;
  std::array<int, 3> by_cones{};
  for (int trial = 0; trial < 200; ++trial) {
    const int cones = trial % 3;
    ColoredDiagram cd{TriPlaneDiagram(1, {Tangle::identity(1), Tangle::identity(1), Tangle::identity(1)}, {}),
                      std::nullopt};
    if (trial % 2 == 0) {
      // Structured: a lemma family or pairing diagram seen through a random twist.
      if (trial % 4 == 0) {
        const int k = (trial / 4) % 3;
        cd = lemma_family(k, k + (trial / 12) % 3, false);
      } else {
        cd = pairing_diagram(2 + (trial / 4) % 3, trial % 8 == 2 ? PairingVariant::Odd : PairingVariant::Even);
      }
      const int b = cd.diagram.bridges();
      cd = twist_boundary(cd, oracle::random_letters(rng, 2 * b, trial % 6));
    } else {
      const int b = 1 + (trial / 2) % 6;
      std::vector<Tangle> ts;
      for (int i = 0; i < 3; ++i)
        ts.emplace_back(b, BraidWord(2 * b, oracle::random_letters(rng, 2 * b, (trial / 2) % 7)));
      cd = {TriPlaneDiagram(b, {ts[0], ts[1], ts[2]}, {}), std::nullopt};
    }
    std::array<SectorPatch, 3> s{};
    s.fill(SectorPatch::TrivialDisks);
    for (int c = 0; c < cones; ++c)
      s[static_cast<std::size_t>((trial + c) % 3)] = SectorPatch::Cone;
    const TriPlaneDiagram d(cd.diagram.bridges(), cd.diagram.tangles(), s);
    const int chi_S = branch_surface_euler(d);
    r.expect(chi_S == euler_S_oracle(d), "euler_S disagrees with the oracle at trial " + std::to_string(trial));
    r.expect(d.cone_count() == cones, "cone count");

    std::optional<Coloring> c = cd.coloring;
    if (!c && d.bridges() >= 2) {
      for (const Coloring& x : triplane_colorings(d))
        if (is_transitive(x)) {
          c = x;
          break;
        }
    }
    if (!c)
      continue;
    try {
      const TrisectionParams p = trisection_params(d, *c, budget);
      ++defined;
      ++by_cones[static_cast<std::size_t>(cones)];
      r.expect(chi_S + euler_X(p) == 6 - cones,
               "chi(S)+chi(X) != " + std::to_string(6 - cones) + " at trial " + std::to_string(trial));
    } catch (const PreconditionFailure&) {
    } catch (const UnknownParameters&) {
    }
  }
  const double s = seconds_since(t0);
  r.expect(by_cones[1] > 0 && by_cones[2] > 0, "no diagram with defined parameters for some cone count");
  r.expect(s < 10.0, "took " + std::to_string(s) + " s");
  if (r.ok)
    r.detail = "200 diagrams, parameters defined on " + std::to_string(defined) + " (" +
               std::to_string(by_cones[0]) + "/" + std::to_string(by_cones[1]) + "/" +
               std::to_string(by_cones[2]) + " with 0/1/2 cones), " + std::to_string(s) + " s";
  return r;
}

Outcome euler_X_formula() {
  Outcome r;
  const std::vector<std::pair<TrisectionParams, int>> cases{
      {{0, {0, 0, 0}}, 2}, {{1, {0, 0, 0}}, 3}, {{2, {0, 0, 0}}, 4}, {{22, {0, 0, 0}}, 24}};
  std::string got;
  for (const auto& [p, want] : cases) {
    const int x = euler_X(p);
    got += (got.empty() ? "" : ",") + std::to_string(x);
    r.expect(x == want, p.to_string() + " gave " + std::to_string(x));
  }
  if (r.ok)
    r.detail = "S4, CP2, S2xS2, K3 -> " + got;
  return r;
}

Outcome coloring_counts() {
  Outcome r;
  const auto t0 = Clock::now();
  for (int n = 1; n <= 8; ++n) {
    const auto cs = link_colorings(Tangle::identity(n), Tangle::identity(n));
    r.expect(static_cast<long long>(cs.size()) == oracle::pow3(n), "unlink n=" + std::to_string(n));
  }
  const Tangle trefoil(2, BraidWord(4, {2, 2, 2}));
  r.expect(link_colorings(Tangle::identity(2), trefoil).size() == 9, "trefoil");
  std::mt19937 rng(4);
  for (int trial = 0; trial < 500; ++trial) {
    const int b = 1 + trial % 5;
    const auto w1 = oracle::random_letters(rng, 2 * b, trial % 11);
    const auto w2 = oracle::random_letters(rng, 2 * b, (trial * 3) % 11);
    const auto n = static_cast<long long>(
        link_colorings(Tangle(b, BraidWord(2 * b, w1)), Tangle(b, BraidWord(2 * b, w2))).size());
    r.expect(oracle::is_power_of_three(n), "not a power of 3 at trial " + std::to_string(trial));
    r.expect(n == oracle::tangles_fox_count(b, {w1, w2}), "oracle mismatch at trial " + std::to_string(trial));
  }
  const double s = seconds_since(t0);
  r.expect(s < 30.0, "took " + std::to_string(s) + " s");
  if (r.ok)
    r.detail = "unlinks n<=8, trefoil 9, 500 random plats, " + std::to_string(s) + " s";
  return r;
}

Outcome representation_property() {
  Outcome r;
  std::mt19937 rng(5);
  long long checked = 0;
  // Relations themselves, on all generators and signs.
  for (int n = 2; n <= 4; ++n)
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j)
        for (int si : {1, -1})
          for (int sj : {1, -1}) {
            const int a = si * i, b = sj * j;
            if (std::abs(i - j) == 1 && si == sj) {
              r.expect(same_action(BraidWord(n, {a, b, a}), BraidWord(n, {b, a, b})), "braid relation");
              ++checked;
            }
            if (std::abs(i - j) >= 2) {
              r.expect(same_action(BraidWord(n, {a, b}), BraidWord(n, {b, a})), "far commutation");
              ++checked;
            }
          }
  // Moves at every applicable position of random words.
  for (int n = 2; n <= 4; ++n)
    for (int trial = 0; trial < 60; ++trial) {
      const BraidWord w(n, oracle::random_letters(rng, n, trial % 9));
      for (std::size_t pos = 0; pos <= w.size(); ++pos) {
        for (MoveKind k : {MoveKind::BraidRelation, MoveKind::FarCommute}) {
          if (pos == w.size())
            break;
          try {
            const BraidWord after = apply_move(w, {k, pos, w.letters()[pos], 1}, Closure::Tangle);
            r.expect(same_action(w, after), std::string(to_string(k)) + " changed the action");
            ++checked;
          } catch (const MoveError&) {
          }
        }
        for (int g = 1; g < n; ++g)
          for (int e : {g, -g}) {
            const BraidWord after = apply_move(w, {MoveKind::ThreeMove, pos, e, -1}, Closure::Tangle);
            r.expect(same_action(w, after), "3-move insertion changed the action");
            ++checked;
          }
      }
    }
  if (r.ok)
    r.detail = std::to_string(checked) + " rewrites, all color vectors, n<=4";
  return r;
}

Outcome pairing_connectivity() {
  Outcome r;
  for (int b = 2; b <= 12; ++b)
    for (auto v : {PairingVariant::Odd, PairingVariant::Even}) {
      const Matching m = generate_pairing(b, v);
      std::vector<int> partner(static_cast<std::size_t>(2 * b));
      for (auto [i, j] : m.pairs()) {
        partner[static_cast<std::size_t>(i - 1)] = j;
        partner[static_cast<std::size_t>(j - 1)] = i;
      }
      const std::string at = " at b=" + std::to_string(b);
      r.expect(matching_union_components(m, Matching::standard(b)) == 1, "cycles" + at);
      r.expect(oracle::union_cycles(partner, oracle::traced_partner(b, {})) == 1, "oracle cycles" + at);
    }
  if (r.ok)
    r.detail = "b=2..12, odd and even";
  return r;
}

Outcome certification_soundness() {
  Outcome r;
  std::mt19937 rng(7);
  int fixtures_checked = 0;
  for (int n = 1; n <= 5; ++n)
    for (int b = n; b <= 8; ++b) {
      const BraidWord w = fixtures::noisy_unlink(rng, n, b);
      const SectorLink l = fixtures::link_of(w);
      const Certification c = certify_unlink(l);
      const std::string at = " at n=" + std::to_string(n) + " b=" + std::to_string(b);
      r.expect(c.status == UnlinkStatus::Yes, "not certified" + at);
      if (c.status == UnlinkStatus::Yes)
        r.expect(replay(w, c.certificate, Closure::Plat).empty(), "certificate does not replay" + at);
      ++fixtures_checked;
    }
  const SectorLink trefoil = fixtures::link_of(BraidWord(4, {2, 2, 2}));
  SectorLink forced = trefoil;
  forced.components = 2; // gets past the coloring count, so the search runs
  std::string statuses;
  for (std::size_t states : {std::size_t{10}, std::size_t{1000}, std::size_t{100000}}) {
    SearchBudget budget;
    budget.max_states = states;
    const UnlinkStatus a = certify_unlink(trefoil, budget).status;
    const UnlinkStatus b = certify_unlink(forced, budget).status;
    r.expect(a != UnlinkStatus::Yes && b != UnlinkStatus::Yes, "trefoil certified at " + std::to_string(states));
    statuses += " " + to_string(a) + "/" + to_string(b);
  }
  if (r.ok)
    r.detail = std::to_string(fixtures_checked) + " noisy unlinks Yes; trefoil (counted/forced):" + statuses;
  return r;
}

Outcome round_trip() {
  Outcome r;
  std::mt19937 rng(8);
  for (int trial = 0; trial < 1000; ++trial) {
    const TpdDocument doc = testing_support::random_document(rng);
    const std::string text = serialize_tpd(doc);
    const TpdDocument back = parse_tpd(text);
    r.expect(back == doc, "parse(serialize(d)) != d at trial " + std::to_string(trial));
    r.expect(serialize_tpd(back) == text, "not byte-stable at trial " + std::to_string(trial));
    r.expect(serialize_tpd(parse_tpd(serialize_tpd(back))) == text, "not canonical at trial " + std::to_string(trial));
  }
  if (r.ok)
    r.detail = "1000 documents";
  return r;
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"lemma reproduction", lemma_reproduction},
      {"euler identities", euler_identities},
      {"euler_X formula", euler_X_formula},
      {"coloring counts", coloring_counts},
      {"representation property", representation_property},
      {"pairing connectivity", pairing_connectivity},
      {"unlink certification soundness", certification_soundness},
      {"round-trip fidelity", round_trip},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += !o.ok;
    std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << index << " " << name << ": " << o.detail << "\n";
  }
  std::cout << "[NOTE] 9 covering construction: not reproducible here; the main theorem is an "
               "existence result and the covering maps themselves are not built\n";
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
