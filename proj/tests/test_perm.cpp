#include <doctest.h>

#include <algorithm>
#include <array>
#include <sstream>
#include <vector>

#include "tpk/error.hpp"
#include "tpk/perm.hpp"

using namespace tpk;

namespace {

using Table = std::array<int, 3>;

// All six bijections of {1,2,3} as image tables.
std::vector<Table> all_tables() {
  std::vector<Table> out;
  Table t{1, 2, 3};
  do
    out.push_back(t);
  while (std::next_permutation(t.begin(), t.end()));
  return out;
}

// "apply q, then p" on raw tables.
Table table_compose(const Table& p, const Table& q) {
  Table r{};
  for (int x = 1; x <= 3; ++x)
    r[x - 1] = p[q[x - 1] - 1];
  return r;
}

Table table_of(const PermS3& p) { return {p(1), p(2), p(3)}; }

} // namespace

TEST_CASE("compose matches the brute-force Cayley table") {
  const auto tables = all_tables();
  REQUIRE(tables.size() == 6);
  for (const Table& p : tables)
    for (const Table& q : tables)
      CHECK(table_of(compose(PermS3(p), PermS3(q))) == table_compose(p, q));
}

TEST_CASE("compose is associative with the identity neutral") {
  for (const Table& a : all_tables()) {
    const PermS3 p(a);
    CHECK(compose(PermS3::identity(), p) == p);
    CHECK(compose(p, PermS3::identity()) == p);
    CHECK(compose(p, p.inverse()) == PermS3::identity());
    for (const Table& b : all_tables())
      for (const Table& c : all_tables()) {
        const PermS3 q(b), r(c);
        CHECK(compose(compose(p, q), r) == compose(p, compose(q, r)));
      }
  }
}

TEST_CASE("compose examples") {
  const PermS3 t12 = PermS3::transposition(1, 2);
  const PermS3 t23 = PermS3::transposition(2, 3);
  CHECK(compose(t12, t12) == PermS3::identity());
  // By hand: 1 -> 1 -> 2, 2 -> 3 -> 3, 3 -> 2 -> 1.
  CHECK(compose(t12, t23) == PermS3({2, 3, 1}));
  CHECK(compose(t12, t23).to_string() == "(1 2 3)");
  CHECK(PermS3::identity().to_string() == "()");
}

TEST_CASE("color i is the transposition fixing i") {
  CHECK(as_transposition(Color::One) == PermS3::transposition(2, 3));
  CHECK(as_transposition(Color::Two) == PermS3::transposition(1, 3));
  CHECK(as_transposition(Color::Three) == PermS3::transposition(1, 2));
  for (Color c : kAllColors) {
    const PermS3 t = as_transposition(c);
    CHECK(t.is_transposition());
    CHECK(t.fixed_point_count() == 1);
    CHECK(t(to_int(c)) == to_int(c));
    CHECK(t.as_color() == c);
    CHECK(compose(t, t) == PermS3::identity());
  }
}

TEST_CASE("conjugating one reflection by another") {
  for (Color a : kAllColors)
    for (Color b : kAllColors) {
      const PermS3 ta = as_transposition(a);
      const PermS3 aba = compose(ta, compose(as_transposition(b), ta));
      CHECK(aba.is_transposition());
      CHECK((aba == as_transposition(b)) == (a == b));
      CHECK(conjugate(a, b) == aba.as_color());
      // Fox form: 2a - b mod 3.
      CHECK(to_int(conjugate(a, b)) % 3 == ((2 * to_int(a) - to_int(b)) % 3 + 3) % 3);
    }
}

TEST_CASE("invalid input is rejected") {
  CHECK_THROWS_AS(PermS3({1, 1, 3}), InvalidInput);
  CHECK_THROWS_AS(PermS3({0, 2, 3}), InvalidInput);
  CHECK_THROWS_AS(PermS3::transposition(2, 2), InvalidInput);
  CHECK_THROWS_AS(color_from_int(0), InvalidInput);
  CHECK_THROWS_AS(color_from_int(4), InvalidInput);
  CHECK_THROWS_AS(PermS3::identity().as_color(), InvalidInput);
  CHECK(color_from_int(2) == Color::Two);
}

TEST_CASE("stream output") {
  std::ostringstream os;
  os << Color::Three << " " << PermS3::transposition(1, 3);
  CHECK(os.str() == "3 (1 3)");
}
