#include "doctest.h"

#include <cmath>

#include "core/finder.hpp"
#include "core/generators.hpp"
#include "core/oracle.hpp"
#include "fixtures.hpp"

using namespace latin;

TEST_CASE("enumeration counts match the classical sequence") {
  CHECK(count_squares(1) == 1);
  CHECK(count_squares(2) == 2);
  CHECK(count_squares(3) == 12);
  CHECK(count_squares(4) == 576);
}

TEST_CASE("full order-5 enumeration" * doctest::skip(false)) {
  CHECK(count_squares(5) == 161280);
}

TEST_CASE("enumeration is lexicographic and caps at order 5") {
  std::vector<LatinSquare> first;
  enumerate_squares(3, [&](const LatinSquare& l) {
    first.push_back(l);
    return first.size() < 2;
  });
  REQUIRE(first.size() == 2);
  CHECK(first[0] == back_circulant(3));  // row-major smallest order-3 square
  CHECK(first[0].cells() < first[1].cells());
  CHECK_THROWS_AS(enumerate_squares(6, [](const LatinSquare&) { return true; }), Error);
}

TEST_CASE("exhaustive minimum trades of the small circulants") {
  CHECK(min_trade_exhaustive(back_circulant(2)).first == 4);
  CHECK(min_trade_exhaustive(back_circulant(3)).first == 6);
  CHECK(min_trade_exhaustive(back_circulant(4)).first == 4);
  auto [size, witness] = min_trade_exhaustive(back_circulant(4));
  CHECK(witness.size() == 4);
  CHECK(back_circulant(4).contains(witness.trade()));
}

TEST_CASE("branch-and-bound agrees with exhaustive on sampled squares") {
  for (int n : {3, 4, 5}) {
    for (uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
      auto l = random_square(n, seed);
      auto exact = min_trade_exhaustive(l);
      auto bnb = min_trade_bnb(l, 2 * n);
      REQUIRE(bnb.has_value());
      CHECK(bnb->first == exact.first);
      CHECK(l.contains(bnb->second.trade()));
    }
  }
}

TEST_CASE("branch-and-bound respects the size cap") {
  // B5 has no intercalate, so nothing of size <= 5 exists.
  CHECK_FALSE(min_trade_bnb(back_circulant(5), 5).has_value());
  CHECK_THROWS_AS((void)min_trade_bnb(back_circulant(9), 8), Error);
}

TEST_CASE("the order-5 circulant has minimum trade size 8") {
  // Smaller than any of its row cycles (all 10), so the witness spans three
  // or more rows; both oracles agree on the value.
  auto b5 = back_circulant(5);
  auto exact = min_trade_exhaustive(b5);
  CHECK(exact.first == 8);
  auto bnb = min_trade_bnb(b5, 10);
  REQUIRE(bnb.has_value());
  CHECK(bnb->first == 8);
  CHECK(b5.contains(bnb->second.trade()));
}

TEST_CASE("circulant minima respect the e*ln(p)+3 lower bound") {
  const double e = std::exp(1.0);
  CHECK(min_trade_exhaustive(back_circulant(3)).first >= e * std::log(3.0) + 3.0);
  CHECK(min_trade_exhaustive(back_circulant(5)).first >= e * std::log(5.0) + 3.0);
  auto b7 = min_trade_bnb(back_circulant(7), 14);
  REQUIRE(b7.has_value());
  CHECK(b7->first >= e * std::log(7.0) + 3.0);
}

TEST_CASE("count_completions on full, empty and punched squares") {
  auto l1 = ref7_a();
  CHECK(count_completions(l1.as_partial(), 2) == 1);
  CHECK(count_completions(PartialLatinSquare(3), 100) == 12);
  CHECK(count_completions(PartialLatinSquare(3), 2) == 2);  // early exit at the cap

  // Removing the 18 trade cells leaves a set both reference squares complete.
  auto l2 = ref7_b();
  auto diff = difference(l1, l2);
  std::vector<Triple> keep;
  for (int r = 0; r < 7; ++r)
    for (int c = 0; c < 7; ++c)
      if (!diff.cell_occupied(r, c)) keep.push_back({r, c, l1.at(r, c)});
  auto punched = PartialLatinSquare::from_triples(7, std::move(keep));
  CHECK(count_completions(punched, 5) >= 2);
}

TEST_CASE("is_defining_set on the trivial cases") {
  auto l = back_circulant(4);
  auto full = is_defining_set(l, l.as_partial());
  CHECK(full.is_defining);

  auto empty = is_defining_set(l, PartialLatinSquare(4));
  CHECK_FALSE(empty.is_defining);
  REQUIRE(empty.witness.has_value());
  CHECK_FALSE(*empty.witness == l);

  CHECK_THROWS_AS((void)is_defining_set(l, PartialLatinSquare::from_triples(4, {{0, 0, 1}})),
                  Error);
}

TEST_CASE("no 3-cell subset of B4 is defining") {
  auto l = back_circulant(4);
  auto triples = l.as_partial().triples();
  int checked = 0;
  for (size_t i = 0; i < triples.size(); ++i)
    for (size_t j = i + 1; j < triples.size(); ++j)
      for (size_t k = j + 1; k < triples.size(); ++k) {
        auto d = PartialLatinSquare::from_triples(4, {triples[i], triples[j], triples[k]});
        CHECK_FALSE(is_defining_set(l, d).is_defining);
        ++checked;
      }
  CHECK(checked == 560);
}

TEST_CASE("smallest defining sets of the tiny circulants") {
  auto [s1, d1] = smallest_defining_set(back_circulant(1));
  CHECK(s1 == 0);
  auto [s2, d2] = smallest_defining_set(back_circulant(2));
  CHECK(s2 == 1);
  auto [s3, d3] = smallest_defining_set(back_circulant(3));
  CHECK(s3 == 2);
  CHECK(is_defining_set(back_circulant(3), d3).is_defining);
  CHECK_THROWS_AS((void)smallest_defining_set(back_circulant(6)), Error);
}

TEST_CASE("smallest defining set of B4 has four cells") {
  auto l = back_circulant(4);
  auto [size, d] = smallest_defining_set(l);
  CHECK(size == 4);
  CHECK(is_defining_set(l, d).is_defining);
}

TEST_CASE("finder output never beats the exhaustive minimum") {
  for (int n : {4, 5}) {
    for (uint64_t seed : {10u, 20u}) {
      auto l = random_square(n, seed);
      auto exact = min_trade_exhaustive(l);
      auto found = find_small_trade(l);
      CHECK(found.size() >= exact.first);
    }
  }
}
