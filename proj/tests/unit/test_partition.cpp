#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "eqlat/error.hpp"
#include "eqlat/partition.hpp"
#include "oracle/brute.hpp"

using eqlat::Partition;

namespace {

Partition P(const char* s) { return Partition::parse(s); }

}  // namespace

TEST_CASE("canonicalize from labels") {
  CHECK(eqlat::canonicalize(4, std::vector<std::int64_t>{7, 7, 2, 2}).to_string() == "0,1|2,3");
  CHECK(eqlat::canonicalize(1, std::vector<std::int64_t>{0}).to_string() == "0");
  CHECK(eqlat::canonicalize(4, std::vector<std::int64_t>{3, 1, 3, 1}).to_string() == "0,2|1,3");

  const auto p = eqlat::canonicalize(4, std::vector<std::int64_t>{3, 1, 3, 1});
  std::vector<std::int64_t> again(p.rgs().begin(), p.rgs().end());
  CHECK(eqlat::canonicalize(4, again) == p);

  CHECK_THROWS_AS(eqlat::canonicalize(4, std::vector<std::int64_t>{0, 0, 1}), eqlat::Error);
  std::map<eqlat::Element, std::int64_t> partial{{0, 1}, {2, 1}};
  try {
    eqlat::canonicalize(3, partial);
    FAIL("expected malformed input");
  } catch (const eqlat::Error& e) {
    CHECK(e.kind() == eqlat::ErrorKind::malformed_input);
  }
  std::map<eqlat::Element, std::int64_t> full{{0, 5}, {1, 6}, {2, 5}};
  CHECK(eqlat::canonicalize(3, full).to_string() == "0,2|1");
}

TEST_CASE("parse and print canonical text") {
  CHECK(P("0|1|2|3") == Partition::bottom(4));
  CHECK(P("0,1,2,3") == Partition::top(4));
  CHECK(P("1,3|0,2").to_string() == "0,2|1,3");
  CHECK(P("").size() == 0);
  CHECK(P("").to_string().empty());
  CHECK(Partition::parse("0,1|2", 3).block_count() == 2);

  for (const char* bad : {"0,0", "0,2", "0||1", "0,", "a", "0|1|3", "-1"})
    CHECK_THROWS_AS(P(bad), eqlat::Error);
  CHECK_THROWS_AS(Partition::parse("0,1", 3), eqlat::Error);
  CHECK_THROWS_AS(Partition::from_rgs({0, 2}), eqlat::Error);
}

TEST_CASE("blocks and block_of are consistent") {
  const auto p = P("0,3|1|2,4");
  REQUIRE(p.block_count() == 3);
  CHECK(p.blocks()[0] == std::vector<eqlat::Element>{0, 3});
  CHECK(p.block_of(4) == 2);
  CHECK(p.rgs() == std::vector<eqlat::Element>{0, 1, 2, 0, 2});
  CHECK(p.related(0, 3));
  CHECK_FALSE(p.related(0, 1));
}

TEST_CASE("as_relation") {
  CHECK(eqlat::as_relation(Partition::bottom(4)) == eqlat::BinaryRelation::identity(4));
  CHECK(eqlat::as_relation(Partition::top(4)) == eqlat::BinaryRelation::full(4));
  CHECK(eqlat::as_relation(P("0,1|2,3")).to_string() == "1100/1100/0011/0011");
}

TEST_CASE("from_relation inverts as_relation and names violated axioms") {
  CHECK(eqlat::from_relation(eqlat::BinaryRelation::identity(3)).to_string() == "0|1|2");
  for (std::size_t n = 0; n <= 4; ++n)
    for (const auto& p : eqlat::enumerate_partitions(n)) CHECK(eqlat::from_relation(eqlat::as_relation(p)) == p);

  auto r = eqlat::BinaryRelation::identity(3);
  r.insert(0, 1);
  try {
    eqlat::from_relation(r);
    FAIL("expected symmetry error");
  } catch (const eqlat::NotEquivalenceError& e) {
    CHECK(e.axiom() == eqlat::EquivalenceAxiom::symmetric);
    CHECK(e.witness() == std::vector<eqlat::Element>{0, 1});
  }

  eqlat::BinaryRelation empty(2);
  try {
    eqlat::from_relation(empty);
    FAIL("expected reflexivity error");
  } catch (const eqlat::NotEquivalenceError& e) {
    CHECK(e.axiom() == eqlat::EquivalenceAxiom::reflexive);
    CHECK(e.witness() == std::vector<eqlat::Element>{0});
  }

  auto chain = eqlat::BinaryRelation::identity(3);
  for (auto [x, y] : {std::pair{0u, 1u}, {1u, 0u}, {1u, 2u}, {2u, 1u}}) chain.insert(x, y);
  try {
    eqlat::from_relation(chain);
    FAIL("expected transitivity error");
  } catch (const eqlat::NotEquivalenceError& e) {
    CHECK(e.axiom() == eqlat::EquivalenceAxiom::transitive);
    CHECK(e.witness() == std::vector<eqlat::Element>{0, 1, 2});
  }
}

TEST_CASE("compose agrees with the pair-set oracle") {
  const auto all = eqlat::compose(P("0,1|2,3"), P("0,2|1,3"));
  CHECK(all == eqlat::BinaryRelation::full(4));

  const auto p = P("0,2|1|3");
  CHECK(eqlat::compose(p, Partition::bottom(4)) == eqlat::as_relation(p));

  CHECK(eqlat::compose(P("0,1|2|3"), P("0|1,2|3")).contains(0, 2));
  CHECK_FALSE(eqlat::compose(P("0|1,2|3"), P("0,1|2|3")).contains(0, 2));

  for (std::size_t n = 1; n <= 4; ++n) {
    const auto parts = eqlat::enumerate_partitions(n);
    for (const auto& a : parts)
      for (const auto& b : parts) {
        const auto r = eqlat::compose(a, b);
        const auto expected = oracle::compose(oracle::pairs_of(a), oracle::pairs_of(b));
        CHECK(r.count() == expected.size());
        for (auto [x, y] : expected) CHECK(r.contains(x, y));
        CHECK(r.is_reflexive());
        CHECK(r.converse() == eqlat::compose(b, a));
      }
  }
  CHECK_THROWS_AS(eqlat::compose(Partition::top(2), Partition::top(3)), eqlat::Error);
}

TEST_CASE("meet, join and leq examples") {
  CHECK(eqlat::meet(P("0,1|2,3"), P("0,2|1,3")) == Partition::bottom(4));
  CHECK(eqlat::meet(P("0,2|1|3"), Partition::top(4)) == P("0,2|1|3"));
  CHECK(eqlat::meet(P("0,1,2|3"), P("0,1|2,3")).to_string() == "0,1|2|3");

  CHECK(eqlat::join(P("0,1|2,3"), P("0,2|1,3")) == Partition::top(4));
  CHECK(eqlat::join(P("0,2|1|3"), Partition::bottom(4)) == P("0,2|1|3"));
  CHECK(eqlat::join(P("0,1|2|3"), P("0|1,2|3")).to_string() == "0,1,2|3");

  CHECK(eqlat::leq(P("0,1|2|3"), P("0,1|2,3")));
  CHECK_FALSE(eqlat::leq(P("0,1|2,3"), P("0,2|1,3")));
  for (const auto& p : eqlat::enumerate_partitions(4)) CHECK(eqlat::leq(Partition::bottom(4), p));

  CHECK_THROWS_AS(eqlat::meet(Partition::top(2), Partition::top(3)), eqlat::Error);
  CHECK_THROWS_AS(eqlat::join(Partition::top(2), Partition::top(3)), eqlat::Error);
  CHECK_THROWS_AS((void)eqlat::leq(Partition::top(2), Partition::top(3)), eqlat::Error);
}

TEST_CASE("meet and join agree with relation-level oracles, n <= 4") {
  for (std::size_t n = 0; n <= 4; ++n) {
    const auto parts = eqlat::enumerate_partitions(n);
    for (const auto& a : parts)
      for (const auto& b : parts) {
        CHECK(eqlat::meet(a, b).to_string() == oracle::meet_text(a, b));
        CHECK(eqlat::join(a, b).to_string() == oracle::join_text(a, b));
        CHECK(eqlat::leq(a, b) == oracle::subset(oracle::pairs_of(a), oracle::pairs_of(b)));
      }
  }
}

TEST_CASE("lattice axioms and order compatibility hold exhaustively, n <= 4") {
  for (std::size_t n = 0; n <= 4; ++n) {
    const auto parts = eqlat::enumerate_partitions(n);
    for (const auto& a : parts) {
      CHECK(eqlat::meet(a, a) == a);
      CHECK(eqlat::join(a, a) == a);
      for (const auto& b : parts) {
        CHECK(eqlat::meet(a, b) == eqlat::meet(b, a));
        CHECK(eqlat::join(a, b) == eqlat::join(b, a));
        CHECK(eqlat::meet(a, eqlat::join(a, b)) == a);
        CHECK(eqlat::join(a, eqlat::meet(a, b)) == a);
        const bool le = eqlat::leq(a, b);
        CHECK(le == (eqlat::meet(a, b) == a));
        CHECK(le == (eqlat::join(a, b) == b));
        for (const auto& c : parts) {
          CHECK(eqlat::meet(a, eqlat::meet(b, c)) == eqlat::meet(eqlat::meet(a, b), c));
          CHECK(eqlat::join(a, eqlat::join(b, c)) == eqlat::join(eqlat::join(a, b), c));
        }
      }
    }
  }
}

TEST_CASE("permutes examples") {
  CHECK(eqlat::permutes(P("0,1|2,3"), P("0,2|1,3")));
  const auto p = P("0,1|2|3");
  CHECK(eqlat::permutes(p, p));
  CHECK(eqlat::permutes(p, Partition::bottom(4)));
  CHECK(eqlat::permutes(p, Partition::top(4)));
  CHECK_FALSE(eqlat::permutes(P("0,1|2|3"), P("0|1,2|3")));
  CHECK(eqlat::permutation_witness(P("0,1|2|3"), P("0|1,2|3")) == eqlat::ElementPair{0, 2});
}

TEST_CASE("permutes iff the composite is transitive iff it is the join, n <= 4") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto parts = eqlat::enumerate_partitions(n);
    for (const auto& a : parts)
      for (const auto& b : parts) {
        const auto ab = eqlat::compose(a, b);
        const bool perm = eqlat::permutes(a, b);
        CHECK(perm == ab.is_transitive());
        CHECK(perm == (ab == eqlat::as_relation(eqlat::join(a, b))));
        if (perm) CHECK(eqlat::from_relation(ab) == eqlat::join(a, b));
        else CHECK_THROWS_AS(eqlat::from_relation(ab), eqlat::NotEquivalenceError);
      }
  }
}

TEST_CASE("enumeration order and Bell counts") {
  const auto bell = oracle::bell_numbers(8);
  CHECK(bell == std::vector<std::uint64_t>{1, 1, 2, 5, 15, 52, 203, 877, 4140});

  CHECK(eqlat::enumerate_partitions(0).size() == 1);
  const auto four = eqlat::enumerate_partitions(4);
  REQUIRE(four.size() == 15);
  CHECK(four.front().to_string() == "0,1,2,3");
  CHECK(four.back().to_string() == "0|1|2|3");
  CHECK(eqlat::enumerate_partitions(5).size() == 52);

  for (int n = 0; n <= 6; ++n) {
    const auto parts = eqlat::enumerate_partitions(n);
    CHECK(parts.size() == bell[n]);
    CHECK(std::is_sorted(parts.begin(), parts.end()));
    CHECK(std::adjacent_find(parts.begin(), parts.end()) == parts.end());
    std::set<std::string> texts;
    for (const auto& p : parts) texts.insert(p.to_string());
    CHECK(texts == oracle::all_partition_texts(n));
  }
}

TEST_CASE("enumeration cap") {
  try {
    eqlat::enumerate_partitions(11);
    FAIL("expected resource guard");
  } catch (const eqlat::Error& e) {
    CHECK(e.kind() == eqlat::ErrorKind::resource_guard);
  }
  CHECK(eqlat::enumerate_partitions(7, 7).size() == 877);
}

TEST_CASE("random refinements are finer") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    const auto p = eqlat::random_partition(9, rng);
    CHECK(p.size() == 9);
    CHECK(eqlat::leq(eqlat::random_refinement(p, rng), p));
  }
  CHECK(eqlat::random_partition(0, rng).size() == 0);
}
