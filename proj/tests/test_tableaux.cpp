#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "reference.hpp"
#include "subduce/errors.hpp"
#include "subduce/tableaux.hpp"

using namespace subduce;

namespace {
StandardTableau T(const char* text) { return StandardTableau::parse(text); }
}  // namespace

TEST_CASE("partition parsing and validation") {
  const auto p = Partition::parse("4,3,2,1");
  CHECK(p.size() == 10);
  CHECK(p.rows() == 4);
  CHECK(p.to_string() == "4,3,2,1");
  CHECK(p.row_length(7) == 0);
  CHECK(Partition::parse("3,1").conjugate() == Partition::parse("2,1,1"));
  CHECK(Partition::parse("3,2").contains(Partition::parse("2,2")));
  CHECK_FALSE(Partition::parse("3,2").contains(Partition::parse("1,1,1")));
  CHECK_THROWS_AS(Partition::parse("1,2"), InputError);
  CHECK_THROWS_AS(Partition::parse("2,0"), InputError);
  CHECK_THROWS_AS(Partition::parse("a"), InputError);
  CHECK_THROWS_AS(Partition::parse(""), InputError);
}

TEST_CASE("partitions_of matches a reference generator") {
  for (int n = 1; n <= 10; ++n) CHECK(partitions_of(n).size() == ref::partitions(n).size());
  CHECK(partitions_of(3).front() == Partition::parse("3"));
  CHECK(partitions_of(3).back() == Partition::parse("1,1,1"));
}

TEST_CASE("enumeration examples") {
  CHECK(enumerate_standard_tableaux(Partition::parse("1")).size() == 1);
  const auto four_one = enumerate_standard_tableaux(Partition::parse("4,1"));
  REQUIRE(four_one.size() == 4);
  // Second-row entry 5, 4, 3, 2.
  for (std::size_t k = 0; k < 4; ++k) CHECK(four_one[k].entry(1, 0) == 5 - static_cast<int>(k));
  CHECK(enumerate_standard_tableaux(Partition::parse("3,2,1")).size() == 16);
  const auto second = enumerate_standard_tableaux(Partition::parse("3,1"), 2);
  REQUIRE(second.size() == 3);
  CHECK(second[0].to_string() == "2 3 4/5");
  CHECK(second[2].to_string() == "2 4 5/3");
}

TEST_CASE("dimension equals brute-force count and hook formula for n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& shape : ref::partitions(n)) {
      const Partition p(shape);
      const auto tableaux = enumerate_standard_tableaux(p);
      CHECK(dimension(p) == ref::count_standard(shape));
      CHECK(dimension(p) == ref::hook_length(shape));
      CHECK(tableaux.size() == dimension(p));
      CHECK(std::is_sorted(tableaux.begin(), tableaux.end()));
      CHECK(std::set<StandardTableau>(tableaux.begin(), tableaux.end()).size() == tableaux.size());
    }
  }
  CHECK(dimension(Partition::parse("4,3,2,1")) == 768);
  CHECK(dimension(Partition::parse("7")) == 1);
  CHECK(dimension(Partition::parse("3,1")) == 3);
}

TEST_CASE("tableau parsing rejects non-standard fillings") {
  CHECK_THROWS_AS(T("2 1"), InputError);
  CHECK_THROWS_AS(T("1 2/2"), InputError);
  CHECK_THROWS_AS(T("1 3/4"), InputError);
  CHECK_THROWS_AS(T("1 2/3 4 5"), InputError);
  CHECK(T("1 2/3 4").shape() == Partition::parse("2,2"));
  CHECK(T("3 4/5").first_entry() == 3);
}

TEST_CASE("axial distance examples") {
  CHECK(axial_distance(T("1 2/3"), 1) == 1);
  CHECK(axial_distance(T("1 3/2"), 1) == -1);
  CHECK(axial_distance(T("1 2/3"), 2) == -2);
  CHECK_THROWS_AS(axial_distance(T("1 2/3"), 3), RangeError);
  CHECK_THROWS_AS(axial_distance(T("1 2/3"), 0), RangeError);
}

TEST_CASE("generator action examples") {
  CHECK(apply_generator(T("1 2/3"), 1) == T("1 2/3"));
  CHECK(apply_generator(T("1 2/3"), 2) == T("1 3/2"));
  CHECK(apply_generator(T("1 3/2"), 2) == T("1 2/3"));
}

TEST_CASE("generator action properties for n <= 7") {
  for (int n = 2; n <= 7; ++n) {
    for (const auto& shape : ref::partitions(n)) {
      for (const auto& m : enumerate_standard_tableaux(Partition(shape))) {
        for (int i = 1; i < n; ++i) {
          const int d = axial_distance(m, i);
          CHECK(d == ref::content_difference(m.rows(), i));
          CHECK(d != 0);
          const auto g = apply_generator(m, i);
          CHECK(apply_generator(g, i) == m);
          CHECK((std::abs(d) == 1) == (g == m));
          if (g != m) CHECK(axial_distance(g, i) == -d);
        }
      }
    }
  }
}

TEST_CASE("tableau pairs") {
  const TableauPair p(T("1"), T("2 3"));
  CHECK(axial_distance(p, 2) == 1);
  CHECK_THROWS_AS(axial_distance(p, 1), UndefinedActionError);
  CHECK(apply_generator(p, 2) == p);
  CHECK_THROWS_AS(apply_generator(p, 1), UndefinedActionError);

  CHECK(axial_distance(TableauPair(T("1 2"), T("3/4")), 3) == -1);

  const TableauPair q(T("1 2"), T("3 4/5"));
  CHECK(apply_generator(q, 4) == TableauPair(T("1 2"), T("3 5/4")));
  CHECK(apply_generator(q, 1) == q);

  CHECK_THROWS_AS(TableauPair(T("1 2"), T("4 5")), InputError);
}

TEST_CASE("tableau index tables agree with direct computation") {
  const TableauIndex index(Partition::parse("3,2"), 3);
  CHECK(index.size() == 5);
  CHECK(index.acts(3));
  CHECK_FALSE(index.acts(7));
  for (std::size_t k = 0; k < index.size(); ++k) {
    CHECK(index.index_of(index[k]) == k);
    for (int i = 3; i < 7; ++i) {
      CHECK(index[index.move(k, i)] == apply_generator(index[k], i));
      CHECK(index.distance(k, i) == axial_distance(index[k], i));
    }
  }
  CHECK_THROWS_AS(index.index_of(T("1 2 3/4 5")), InputError);
}
