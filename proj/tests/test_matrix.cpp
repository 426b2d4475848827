#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "coinv/matrix.hpp"

using namespace coinv;

namespace {

SparseIntRow row(std::vector<std::pair<int, long>> entries) {
  SparseIntRow r;
  for (auto& [c, v] : entries) r.emplace_back(c, Integer(v));
  return r;
}

}  // namespace

TEST_CASE("content normalization") {
  SparseIntRow r = row({{0, -2}, {2, -4}});
  normalize_content(r);
  CHECK(r == row({{0, 1}, {2, 2}}));
  SparseIntRow z;
  normalize_content(z);
  CHECK(z.empty());
}

TEST_CASE("sparse echelon ranks and pivots") {
  SparseEchelon e(4);
  CHECK(e.add_row(row({{1, 2}, {3, 4}})));
  CHECK(e.add_row(row({{0, 1}, {1, 1}})));
  CHECK_FALSE(e.add_row(row({{0, 2}, {1, 4}, {3, 4}})));  // sum of the first two
  CHECK(e.rank() == 2);
  CHECK(e.pivots() == std::vector<int>{0, 1});
  CHECK(e.add_row(row({{3, 5}})));
  CHECK(e.rank() == 3);
  CHECK_FALSE(e.add_row(SparseIntRow{}));
}

TEST_CASE("back elimination clears above pivots") {
  SparseEchelon e(3);
  e.add_row(row({{0, 1}, {1, 1}, {2, 1}}));
  e.add_row(row({{1, 1}, {2, 1}}));
  e.add_row(row({{2, 1}}));
  e.back_eliminate();
  const auto& rows = e.rows();
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == row({{0, 1}}));
  CHECK(rows[1] == row({{1, 1}}));
  CHECK(rows[2] == row({{2, 1}}));
}

TEST_CASE("rational matrix rank") {
  RationalMatrix m(3, 3);
  for (int i = 0; i < 3; ++i) m.at(i, i) = 1;
  CHECK(m.rank() == 3);
  RationalMatrix s(2, 2);
  s.at(0, 0) = Rational(1, 2);
  s.at(0, 1) = Rational(1);
  s.at(1, 0) = Rational(1, 4);
  s.at(1, 1) = Rational(1, 2);
  CHECK(s.rank() == 1);
  RationalMatrix z(2, 3);
  CHECK(z.rank() == 0);
}

TEST_CASE("null spaces in canonical form") {
  // x + y = 0 over two columns
  RationalMatrix m(1, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = 1;
  auto basis = m.null_space();
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == std::vector<Rational>{1, -1});

  // full-rank square: trivial null space
  RationalMatrix f(2, 2);
  f.at(0, 0) = 1;
  f.at(1, 1) = 3;
  CHECK(f.null_space().empty());

  // zero matrix: identity basis in column order
  RationalMatrix z(0, 3);
  auto id = z.null_space();
  REQUIRE(id.size() == 3);
  CHECK(id[0] == std::vector<Rational>{1, 0, 0});
  CHECK(id[1] == std::vector<Rational>{0, 1, 0});
  CHECK(id[2] == std::vector<Rational>{0, 0, 1});

  // one relation with a gap: 2a + 3c = 0 over (a, b, c)
  RationalMatrix g(1, 3);
  g.at(0, 0) = 2;
  g.at(0, 2) = 3;
  auto gb = g.null_space();
  REQUIRE(gb.size() == 2);
  // echelonized: leading entries 1 on distinct leading columns
  CHECK(gb[0] == std::vector<Rational>{1, 0, Rational(-2, 3)});
  CHECK(gb[1] == std::vector<Rational>{0, 1, 0});
}

TEST_CASE("null space vectors satisfy the system") {
  RationalMatrix m(2, 4);
  // x1 + 2x2 - x4 = 0 ; x3 + 5x4 = 0
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  m.at(0, 3) = -1;
  m.at(1, 2) = 1;
  m.at(1, 3) = 5;
  auto basis = m.null_space();
  REQUIRE(basis.size() == 2);
  for (const auto& v : basis) {
    for (int r = 0; r < 2; ++r) {
      Rational acc = 0;
      for (int c = 0; c < 4; ++c) acc += m.at(r, c) * v[c];
      CHECK(acc == 0);
    }
  }
  // leading coefficient of each basis vector is 1 and leads are distinct
  int lead0 = 0;
  while (basis[0][lead0] == 0) ++lead0;
  int lead1 = 0;
  while (basis[1][lead1] == 0) ++lead1;
  CHECK(basis[0][lead0] == 1);
  CHECK(basis[1][lead1] == 1);
  CHECK(lead0 < lead1);
}
