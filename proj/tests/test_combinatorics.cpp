#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "coinv/codes.hpp"
#include "coinv/ordered_set_partition.hpp"
#include "coinv/partition.hpp"
#include "coinv/tableau.hpp"

using namespace coinv;

TEST_CASE("partition validation and accessors") {
  Partition p({3, 3, 2, 2, 0, 0});
  CHECK(p.size() == 6);
  CHECK(p.weight() == 10);
  CHECK(p.nonzero_count() == 4);
  CHECK(p.first() == 3);
  CHECK(p.part(3) == 2);
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
  CHECK(Partition::parse("3,3,2,2,0,0").to_string() == "3,3,2,2,0,0");
  CHECK_THROWS_AS(Partition::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("2,x"), std::invalid_argument);
}

TEST_CASE("conjugates") {
  CHECK(Partition::parse("3,2").conjugate().to_string() == "2,2,1");
  CHECK(Partition::parse("3,2,2,0").conjugate(9).to_string() == "3,3,1,0,0,0,0,0,0");
  CHECK(Partition::parse("4,2,1").conjugate().to_string() == "3,2,1,1");
  CHECK(Partition::parse("0,0").conjugate(3).to_string() == "0,0,0");
  CHECK_THROWS_AS(Partition::parse("3,1").conjugate(2), std::invalid_argument);
  // involution when padded to the conjugate's largest part
  Partition q = Partition::parse("4,2,1");
  CHECK(q.conjugate().conjugate(4).to_string() == "4,2,1,0");
}

TEST_CASE("decrement re-sorts") {
  CHECK(Partition::parse("3,2,2").decrement(3).to_string() == "3,2,1");
  CHECK(Partition::parse("2,2").decrement(1).to_string() == "2,1");
  CHECK(Partition::parse("1,1").decrement(2).to_string() == "1,0");
  CHECK_THROWS_AS(Partition::parse("1,0").decrement(2), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("1,0").decrement(3), std::invalid_argument);
}

TEST_CASE("shape enumeration order") {
  auto shapes = enumerate_shapes(3);
  std::vector<std::string> got;
  for (const auto& s : shapes) got.push_back(s.to_string());
  std::vector<std::string> expect = {
      "3",     "2",     "1",     "0",     "3,0",   "2,1",   "2,0",   "1,1",  "1,0",
      "0,0",   "3,0,0", "2,1,0", "2,0,0", "1,1,1", "1,1,0", "1,0,0", "0,0,0"};
  CHECK(got == expect);
  // every shape has weight <= n and between 1 and n parts
  for (const auto& s : shapes) {
    CHECK(s.weight() <= 3);
    CHECK(s.size() >= 1);
    CHECK(s.size() <= 3);
  }
}

TEST_CASE("injective tableaux") {
  Partition shape = Partition::parse("3,3,1,0,0");
  auto t = InjectiveTableau::parse(shape, "2,1,3|5,4,9|6");
  CHECK(t.to_string() == "2,1,3|5,4,9|6");
  CHECK(t.entry(1, 2) == 1);
  CHECK(t.entry(3, 1) == 6);
  CHECK(t.max_entry() == 9);
  CHECK(t.column_count() == 3);
  CHECK(t.column(1) == std::vector<int>{2, 5, 6});
  CHECK(t.column(3) == std::vector<int>{3, 9});
  // column must increase strictly downward
  CHECK_THROWS_AS(InjectiveTableau::parse(shape, "5,1,3|2,4,9|6"), std::invalid_argument);
  CHECK_THROWS_AS(InjectiveTableau::parse(shape, "2,1,3|5,4,9|2"), std::invalid_argument);
  CHECK_THROWS_AS(InjectiveTableau::parse(shape, "2,1|5,4,9|6"), std::invalid_argument);
}

TEST_CASE("injective tableau streams") {
  // single column of height 2 from three letters
  int count = 0;
  for_each_injective_tableau(Partition::parse("1,1"), 3,
                             [&](const InjectiveTableau&) { ++count; });
  CHECK(count == 3);
  // two columns of heights 2 and 1
  std::vector<std::string> seen;
  for_each_injective_tableau(Partition::parse("2,1"), 3, [&](const InjectiveTableau& t) {
    seen.push_back(t.to_string());
  });
  CHECK(seen == std::vector<std::string>{"1,3|2", "1,2|3", "2,1|3"});
  // weight-zero shape: exactly the empty tableau
  count = 0;
  for_each_injective_tableau(Partition::parse("0,0"), 2, [&](const InjectiveTableau& t) {
    ++count;
    CHECK(t.max_entry() == 0);
  });
  CHECK(count == 1);
  // weight exceeding n: nothing
  count = 0;
  for_each_injective_tableau(Partition::parse("3"), 2,
                             [&](const InjectiveTableau&) { ++count; });
  CHECK(count == 0);
}

TEST_CASE("ordered set partition structure") {
  Partition shape = Partition::parse("3,3,2,2,0,0");
  auto osp = OrderedSetPartition::parse(16, shape, "1,3,5,9|6,7,8,10,14|2,12,15|4,13||11,16");
  CHECK(osp.to_string() == "1,3,5,9|6,7,8,10,14|2,12,15|4,13||11,16");
  CHECK(osp.block_of(9) == 1);
  CHECK(osp.block_of(16) == 6);
  CHECK(osp.is_floating(9));
  CHECK(osp.is_floating(14));
  CHECK_FALSE(osp.is_floating(5));
  CHECK(osp.container_row(5) == 1);
  CHECK(osp.container_row(1) == 3);
  CHECK(osp.container_row(2) == 2);
  CHECK(osp.container_row(13) == 1);
  CHECK(osp.tableau().to_string() == "5,2,1|8,3,6|12,4|13,7");
}

TEST_CASE("ordered set partition validation") {
  Partition shape = Partition::parse("2,1");
  CHECK_THROWS_AS(OrderedSetPartition::parse(3, shape, "1|2,3"), std::invalid_argument);
  CHECK_THROWS_AS(OrderedSetPartition::parse(3, shape, "1,2|4"), std::invalid_argument);
  CHECK_THROWS_AS(OrderedSetPartition::parse(3, shape, "1,2|2"), std::invalid_argument);
  CHECK_THROWS_AS(OrderedSetPartition::parse(4, shape, "1,2|3"), std::invalid_argument);
  CHECK_THROWS_AS(OrderedSetPartition::parse(3, shape, "1,2"), std::invalid_argument);
}

TEST_CASE("codes of small ordered set partitions") {
  Partition shape = Partition::parse("2,1");
  auto a = OrderedSetPartition::parse(3, shape, "1,2|3");
  CHECK(a.code() == std::vector<int>{0, 1, 0});
  CHECK(a.coinv() == 1);
  auto b = OrderedSetPartition::parse(3, shape, "1,3|2");
  CHECK(b.code() == std::vector<int>{0, 0, 0});
  auto c = OrderedSetPartition::parse(3, shape, "2,3|1");
  CHECK(c.code() == std::vector<int>{1, 0, 0});
  // floating letters score their block offset even with no boxes to the right
  Partition flat = Partition::parse("1,0");
  CHECK(OrderedSetPartition::parse(2, flat, "1,2|").code() == std::vector<int>{0, 0});
  CHECK(OrderedSetPartition::parse(2, flat, "1|2").code() == std::vector<int>{0, 1});
  CHECK(OrderedSetPartition::parse(2, flat, "2|1").code() == std::vector<int>{1, 0});
}

TEST_CASE("maxcode dominates code and hits the row bound") {
  Partition shape = Partition::parse("2,1");
  for (const auto& osp : enumerate_osp(3, shape)) {
    auto code = osp.code();
    auto mc = osp.maxcode();
    for (int i = 0; i < 3; ++i) CHECK(code[i] <= mc[i]);
  }
  CHECK(OrderedSetPartition::parse(2, Partition::parse("1,0"), "1|2").maxcode() ==
        std::vector<int>{0, 1});
  CHECK(OrderedSetPartition::parse(2, Partition::parse("1,1"), "1|2").maxcode() ==
        std::vector<int>{1, 0});
}

TEST_CASE("osp enumeration covers exactly the valid block assignments") {
  // shape (1,0): 3 ordered set partitions of {1,2}
  auto osps = enumerate_osp(2, Partition::parse("1,0"));
  std::vector<std::string> got;
  for (const auto& o : osps) got.push_back(o.to_string());
  CHECK(got == std::vector<std::string>{"1,2|", "1|2", "2|1"});
  // degenerate shape: all placements of 2 letters into 2 blocks
  CHECK(enumerate_osp(2, Partition::parse("0,0")).size() == 4);
  // block minimums prune assignments
  CHECK(enumerate_osp(3, Partition::parse("2,1")).size() == 3);
  // sizes (2,2) give C(4,2) = 6, sizes (3,1) give C(4,3) = 4
  CHECK(enumerate_osp(4, Partition::parse("2,1")).size() == 10);
}

TEST_CASE("code family membership") {
  Partition shape = Partition::parse("1,1");
  CHECK(code_family_contains({0, 0}, 2, shape));
  CHECK(code_family_contains({1, 0}, 2, shape));
  CHECK_FALSE(code_family_contains({0, 1}, 2, shape));
  CHECK_FALSE(code_family_contains({1, 1}, 2, shape));
  CHECK_FALSE(code_family_contains({2, 0}, 2, shape));  // entry >= s

  auto codes = enumerate_codes(3, Partition::parse("2,1"));
  std::vector<std::vector<int>> expect = {{0, 0, 0}, {0, 1, 0}, {1, 0, 0}};
  CHECK(codes == expect);
  for (const auto& c : codes) {
    CHECK(code_family_contains(c, 3, Partition::parse("2,1")));
    CHECK(code_family_contains_by_shuffle(c, 3, Partition::parse("2,1")));
  }
  CHECK_FALSE(code_family_contains_by_shuffle({0, 1}, 2, shape));
  CHECK_THROWS_AS(code_family_contains({0}, 2, shape), std::invalid_argument);
}

TEST_CASE("membership agrees with the shuffle oracle on a full cube") {
  for (const char* text : {"2,1", "1,1,0", "2,0"}) {
    Partition shape = Partition::parse(text);
    const int n = 3, s = shape.size();
    std::vector<int> v(n, 0);
    while (true) {
      CHECK(code_family_contains(v, n, shape) == code_family_contains_by_shuffle(v, n, shape));
      int i = n - 1;
      while (i >= 0 && v[i] == s) v[i--] = 0;
      if (i < 0) break;
      ++v[i];
    }
  }
}

TEST_CASE("code enumeration matches osp codes as a multiset") {
  for (const char* text : {"1,0", "1,1", "2,1", "0,0,0", "1,1,1"}) {
    Partition shape = Partition::parse(text);
    int n = std::max(3, shape.weight());
    auto codes = enumerate_codes(n, shape);
    std::set<std::vector<int>> code_set(codes.begin(), codes.end());
    CHECK(code_set.size() == codes.size());
    std::set<std::vector<int>> osp_codes;
    for (const auto& osp : enumerate_osp(n, shape)) osp_codes.insert(osp.code());
    CHECK(osp_codes == code_set);
  }
}
