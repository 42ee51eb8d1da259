#include <catch2/catch.hpp>

#include <random>

#include "hk/word.hpp"

using namespace hk;

TEST_CASE("parse_word accepts all three syntaxes") {
  auto w = parse_word("4 3 1 4 2 1 3 2 4 3", MonoidFamily::circular, 4);
  CHECK(w.letters == std::vector<int>{4, 3, 1, 4, 2, 1, 3, 2, 4, 3});

  CHECK(parse_word("", MonoidFamily::linear, 5).letters.empty());
  CHECK(parse_word("x2.x1.x3", MonoidFamily::linear, 4).letters == std::vector<int>{2, 1, 3});
  CHECK(parse_word("2.1.3", MonoidFamily::linear, 4).letters == std::vector<int>{2, 1, 3});
  CHECK(parse_word("  x1   x1 ", MonoidFamily::linear, 1).letters == std::vector<int>{1, 1});
}

TEST_CASE("parse_word rejects bad input") {
  CHECK_THROWS_AS(parse_word("5", MonoidFamily::linear, 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("0", MonoidFamily::linear, 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("x", MonoidFamily::linear, 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("1a", MonoidFamily::linear, 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("1", MonoidFamily::linear, 0), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("1", MonoidFamily::circular, 2), std::invalid_argument);
}

TEST_CASE("parse and format round trip") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    MonoidFamily family = trial % 2 ? MonoidFamily::linear : MonoidFamily::circular;
    int n = (family == MonoidFamily::linear ? 1 : 3) + static_cast<int>(rng() % 5);
    std::vector<int> letters(rng() % 10);
    for (auto& l : letters) l = 1 + static_cast<int>(rng() % n);
    GeneratorWord w{family, n, letters};
    CHECK(parse_word(format_word(w), family, n) == w);
    // alternative serializations parse to the same word
    std::string dots, xs;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (i) {
        dots += '.';
        xs += ' ';
      }
      dots += std::to_string(letters[i]);
      xs += "x" + std::to_string(letters[i]);
    }
    CHECK(parse_word(dots, family, n) == w);
    CHECK(parse_word(xs, family, n) == w);
  }
}

TEST_CASE("concat") {
  auto w1 = make_word(MonoidFamily::linear, 4, {2, 1});
  auto w2 = make_word(MonoidFamily::linear, 4, {3});
  CHECK(concat(w1, w2).letters == std::vector<int>{2, 1, 3});
  auto e = make_word(MonoidFamily::linear, 4, {});
  CHECK(concat(e, w1) == w1);
  // free-word level: no relation applied
  auto x1 = make_word(MonoidFamily::linear, 4, {1});
  CHECK(concat(x1, x1).letters == std::vector<int>{1, 1});
  CHECK_THROWS_AS(concat(w1, make_word(MonoidFamily::linear, 5, {3})), std::invalid_argument);
  CHECK_THROWS_AS(concat(w1, make_word(MonoidFamily::circular, 4, {3})), std::invalid_argument);
}

TEST_CASE("commutes") {
  CHECK(commutes(1, 3, MonoidFamily::linear, 4));
  CHECK_FALSE(commutes(1, 4, MonoidFamily::circular, 4));  // cycle-adjacent
  CHECK(commutes(2, 5, MonoidFamily::circular, 5));
  CHECK_FALSE(commutes(1, 2, MonoidFamily::linear, 4));
  CHECK_FALSE(commutes(2, 2, MonoidFamily::linear, 4));
  // no far pairs exist on the 3-cycle
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) CHECK_FALSE(commutes(i, j, MonoidFamily::circular, 3));
}

TEST_CASE("commutes is symmetric") {
  for (auto family : {MonoidFamily::linear, MonoidFamily::circular}) {
    for (int n = min_rank(family); n <= 8; ++n)
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          CHECK(commutes(i, j, family, n) == commutes(j, i, family, n));
  }
}

TEST_CASE("apply_relation: the defining relations") {
  auto w11 = make_word(MonoidFamily::linear, 2, {1, 1});
  auto r = RelationInstance{RelationKind::idempotent, BraidForm::none, 0, true};
  REQUIRE(apply_relation(w11, r));
  CHECK(apply_relation(w11, r)->letters == std::vector<int>{1});

  // with the rightmost letter acting first, the braid contraction of
  // [i, i+1, i] is [i+1, i]
  auto w121 = make_word(MonoidFamily::linear, 2, {1, 2, 1});
  auto rc = RelationInstance{RelationKind::braid, BraidForm::contract_iji, 0, true};
  REQUIRE(apply_relation(w121, rc));
  CHECK(apply_relation(w121, rc)->letters == std::vector<int>{2, 1});

  auto w31 = make_word(MonoidFamily::linear, 4, {3, 1});
  auto rf = RelationInstance{RelationKind::far_commute, BraidForm::none, 0, true};
  REQUIRE(apply_relation(w31, rf));
  CHECK(apply_relation(w31, rf)->letters == std::vector<int>{1, 3});

  SECTION("swap and the other contraction") {
    auto rs = RelationInstance{RelationKind::braid, BraidForm::swap_triples, 0, true};
    REQUIRE(apply_relation(w121, rs));
    CHECK(apply_relation(w121, rs)->letters == std::vector<int>{2, 1, 2});
    auto w212 = make_word(MonoidFamily::linear, 2, {2, 1, 2});
    auto rj = RelationInstance{RelationKind::braid, BraidForm::contract_jij, 0, true};
    REQUIRE(apply_relation(w212, rj));
    CHECK(apply_relation(w212, rj)->letters == std::vector<int>{2, 1});
  }

  SECTION("circular wrap: the pair (n, 1)") {
    auto w = make_word(MonoidFamily::circular, 3, {3, 1, 3});
    auto rcw = RelationInstance{RelationKind::braid, BraidForm::contract_iji, 0, true};
    REQUIRE(apply_relation(w, rcw));
    CHECK(apply_relation(w, rcw)->letters == std::vector<int>{1, 3});
  }

  SECTION("not applicable") {
    auto w = make_word(MonoidFamily::linear, 2, {1, 2});
    CHECK_FALSE(apply_relation(w, r));   // no duplicate at 0
    CHECK_FALSE(apply_relation(w, rf));  // 1 and 2 do not commute
  }

  SECTION("position out of bounds") {
    CHECK_THROWS_AS(
        apply_relation(w11, RelationInstance{RelationKind::idempotent, BraidForm::none, 2, true}),
        std::out_of_range);
  }
}

TEST_CASE("apply then un-apply restores the word") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    MonoidFamily family = trial % 2 ? MonoidFamily::linear : MonoidFamily::circular;
    int n = (family == MonoidFamily::linear ? 2 : 3) + static_cast<int>(rng() % 4);
    std::vector<int> letters(1 + rng() % 9);
    for (auto& l : letters) l = 1 + static_cast<int>(rng() % n);
    GeneratorWord w{family, n, letters};
    auto rels = applicable_relations(w);
    REQUIRE_FALSE(rels.empty());
    const auto& r = rels[rng() % rels.size()];
    auto w2 = apply_relation(w, r);
    REQUIRE(w2);
    auto back = apply_relation(*w2, inverse(r));
    REQUIRE(back);
    CHECK(*back == w);
  }
}

TEST_CASE("applicable_relations is deterministic and left-to-right") {
  auto w = make_word(MonoidFamily::linear, 3, {1, 1, 2, 1});
  auto rels = applicable_relations(w);
  CHECK(rels == applicable_relations(w));
  for (std::size_t i = 0; i + 1 < rels.size(); ++i) CHECK(rels[i].position <= rels[i + 1].position);
  // every listed instance applies
  for (const auto& r : rels) CHECK(apply_relation(w, r));
}
