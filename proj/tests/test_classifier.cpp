#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "quadnorm/catalog.hpp"
#include "quadnorm/classifier.hpp"
#include "quadnorm/search.hpp"

using namespace quadnorm;

namespace {
  QuadMap sortF() {
    return sort_map({"a", "b", "c"});
  }
  Word w(QuadMap const& F, char const* t) {
    return Word::parse(F.alphabet(), t);
  }
  oracle::Names letter_names(QuadMap const& F) {
    oracle::Names out;
    for (auto const& l : F.alphabet()->letters()) {
      out.push_back(l.name);
    }
    return out;
  }
}  // namespace

TEST_CASE("is_normal") {
  auto F = sortF();
  CHECK(is_normal(F, w(F, "a b c")));
  CHECK_FALSE(is_normal(F, w(F, "c b a")));
  CHECK(is_normal(F, Word(F.alphabet())));
  CHECK(is_normal(F, w(F, "c")));
}

TEST_CASE("minimal class of the sort map") {
  auto F   = sortF();
  auto cls = minimal_class(F);
  CHECK(cls.left == 3);
  CHECK(cls.right == 3);
  REQUIRE(cls.left_witness);
  REQUIRE(cls.right_witness);
  // N12(s|s|r) = s|r|s and N21(s|r|r) = r|s|r for r < s.
  CHECK(*cls.left_witness == w(F, "b b a"));
  CHECK(apply_seq(F, *cls.left_witness, alt_seq(1, 2)) == w(F, "b a b"));
  CHECK(*cls.right_witness == w(F, "b a a"));
  CHECK(apply_seq(F, *cls.right_witness, alt_seq(2, 2)) == w(F, "a b a"));
  auto one = minimal_class(sort_map({"x"}));
  CHECK(one.left == 0);
  CHECK(one.right == 0);
  CHECK_FALSE(one.left_witness);
}

TEST_CASE("minimal class agrees with a direct evaluation of the equalities") {
  for (auto const& [name, fn] : {std::pair{"freecomm-abc", oracle::PairFn(oracle::sort_pair)},
                                 std::pair{"sign", oracle::PairFn(oracle::sign_pair)},
                                 std::pair{"ab5", oracle::PairFn(oracle::ab5_pair)}}) {
    CAPTURE(name);
    auto F   = load(name).map;
    auto cls = minimal_class(F);
    CHECK(cls.left == oracle::naive_class(fn, letter_names(F), 1));
    CHECK(cls.right == oracle::naive_class(fn, letter_names(F), 2));
  }
  auto ab5 = minimal_class(load("ab5").map);
  CHECK(ab5.left == 5);
  CHECK(ab5.right == 4);
  auto sign = minimal_class(load("sign").map);
  CHECK(sign.left == 3);
  CHECK(sign.right == 4);
}

TEST_CASE("minimal class rejects non-idempotent maps") {
  auto    A = Alphabet::make({"a", "b"});
  QuadMap F(A);
  F.set(0, 1, 1, 0);
  F.set(1, 0, 0, 1);
  CHECK_THROWS_AS(minimal_class(F), std::domain_error);
}

TEST_CASE("infinite class is detected with an orbit cycle") {
  std::size_t infinite = 0;
  for (auto const& F : enumerate_neutral_maps(2)) {
    auto cls = minimal_class(F);
    if (cls.finite()) {
      continue;
    }
    ++infinite;
    CHECK((cls.left_witness || cls.right_witness));
    if (cls.orbit_cycle) {
      CHECK(cls.orbit_cycle->length() == 3);
    }
    CHECK_THROWS_AS(is_of_class(F, 5, 4), std::domain_error);
    auto const&    A  = F.alphabet();
    oracle::PairFn fn = [&](oracle::Name const& s, oracle::Name const& t) {
      auto [x, y] = F(A->letter(s), A->letter(t));
      return std::pair{A->name(x), A->name(y)};
    };
    // Alternating orbits live on at most 2 * 27 states.
    CHECK(cls.left == oracle::naive_class(fn, letter_names(F), 1, 60));
    CHECK(cls.right == oracle::naive_class(fn, letter_names(F), 2, 60));
  }
  CHECK(infinite > 0);
}

TEST_CASE("is_of_class") {
  CHECK(is_of_class(sortF(), 4, 3).passed);
  CHECK(is_of_class(sortF(), 3, 3).passed);
  CHECK_FALSE(is_of_class(sortF(), 2, 3).passed);
  auto G = load("sign").map;
  CHECK(is_of_class(G, 5, 4).passed);
  auto r = is_of_class(G, 5, 3);
  CHECK_FALSE(r.passed);
  CHECK(r.witness == w(G, "+1 -1 -1"));
}

TEST_CASE("class is upward closed") {
  for (auto const& name : catalog_names()) {
    auto F   = load(name).map;
    auto cls = minimal_class(F);
    REQUIRE(cls.finite());
    for (std::size_t k = 0; k <= 3; ++k) {
      CHECK(is_of_class(F, *cls.left + k, *cls.right + k).passed);
      CHECK_FALSE(first_class_violation(F, 1, *cls.left + k));
      CHECK_FALSE(first_class_violation(F, 2, *cls.right + k));
    }
  }
}

TEST_CASE("normalize") {
  auto F = sortF();
  auto r = normalize(F, w(F, "c b a"), Strategy::left_alt);
  CHECK(r.word == w(F, "a b c"));
  CHECK(r.positions == PositionSeq{1, 2, 1});
  auto target = w(F, "a a b b c c");
  for (auto s : {Strategy::left_alt, Strategy::right_alt, Strategy::leftmost_reducible,
                 Strategy::recipe43}) {
    CAPTURE(to_string(s));
    auto n = normalize(F, w(F, "b a c a b c"), s);
    CHECK(n.normalised());
    CHECK(n.word == target);
    CHECK(apply_seq(F, w(F, "b a c a b c"), n.positions) == target);
  }
  auto H = load("ab5").map;
  auto h = normalize(H, w(H, "a b1 a"), Strategy::right_alt);
  CHECK(h.word == w(H, "a b5 a"));
  CHECK(h.positions == PositionSeq{2, 1, 2, 1});
  CHECK_THROWS_AS(normalize(H, w(H, "a b1 a"), Strategy::recipe43), std::domain_error);
}

TEST_CASE("normalize reports a cycle for a swapping map") {
  auto    A = Alphabet::make({"a", "b"});
  QuadMap F(A);
  F.set(0, 1, 1, 0);
  F.set(1, 0, 0, 1);
  auto r = normalize(F, Word::parse(A, "a b"), Strategy::leftmost_reducible);
  CHECK(r.outcome == NormalizeOutcome::cycle);
}

TEST_CASE("strategies agree and match sorting on the sort map") {
  auto F = sortF();
  for (std::size_t len = 0; len <= 5; ++len) {
    for (auto const& x : oracle::all_words({"a", "b", "c"}, len)) {
      auto sorted = x;
      std::sort(sorted.begin(), sorted.end());
      auto u = oracle::to_word(F.alphabet(), x);
      for (auto s : {Strategy::left_alt, Strategy::right_alt, Strategy::leftmost_reducible,
                     Strategy::recipe43}) {
        REQUIRE(oracle::names(normalize(F, u, s).word) == sorted);
      }
    }
  }
}

TEST_CASE("recipe43 agrees with leftmost reduction on class (4,3) maps") {
  for (auto const& name : catalog_names()) {
    auto F = load(name).map;
    if (!is_of_class(F, 4, 3).passed) {
      continue;
    }
    auto letters = F.alphabet()->positive_letters();
    for (std::size_t len = 0; len <= 5; ++len) {
      for (auto const& x : all_words(letters, len)) {
        Word u(F.alphabet(), x);
        REQUIRE(normalize(F, u, Strategy::recipe43).word
                == normalize(F, u, Strategy::leftmost_reducible).word);
      }
    }
  }
}

TEST_CASE("the first normal letter depends only on the first two letters for class (4,3)") {
  auto        F = sortF();
  auto const& L = F.alphabet()->positive_letters();
  for (auto t : L) {
    for (auto s1 : L) {
      std::optional<letter_type> first;
      for (std::size_t q = 1; q <= 4; ++q) {
        for (auto const& rest : all_words(L, q - 1)) {
          word_type x{t, s1};
          x.insert(x.end(), rest.begin(), rest.end());
          auto n = normalize(F, Word(F.alphabet(), x), Strategy::leftmost_reducible).word;
          // Only normal tails s1|...|sq are in scope.
          if (!is_normal(F, std::span<letter_type const>(x).subspan(1))) {
            continue;
          }
          if (!first) {
            first = n[0];
          }
          REQUIRE(n[0] == *first);
        }
      }
    }
  }
}

TEST_CASE("domino") {
  CHECK(check_domino(sortF()).passed);
  auto G = load("sign").map;
  auto g = check_domino(G);
  CHECK_FALSE(g.passed);
  CHECK(g.witness == w(G, "+1 -1 -1"));
  auto H = load("ab5").map;
  auto h = check_domino(H);
  CHECK_FALSE(h.passed);
  CHECK(h.witness == w(H, "a b1 a"));
}

TEST_CASE("domino agrees with a brute-force scan") {
  for (auto const& [name, fn] : {std::pair{"freecomm-abc", oracle::PairFn(oracle::sort_pair)},
                                 std::pair{"sign", oracle::PairFn(oracle::sign_pair)},
                                 std::pair{"ab5", oracle::PairFn(oracle::ab5_pair)}}) {
    CAPTURE(name);
    auto F        = load(name).map;
    auto got      = check_domino(F);
    auto failing  = oracle::naive_domino(fn, letter_names(F));
    CHECK(got.passed == failing.empty());
    if (!got.passed) {
      // The witness is a preimage of a failing configuration under F_2.
      auto config = oracle::apply(fn, oracle::names(*got.witness), {2});
      CHECK(std::find(failing.begin(), failing.end(), config) != failing.end());
    }
  }
}

TEST_CASE("weak domino") {
  auto G = load("sign").map;
  CHECK(check_weak_domino(G).passed);
  auto H = load("ab5").map;
  auto h = check_weak_domino(H);
  CHECK_FALSE(h.passed);
  CHECK(h.witness == w(H, "a b1 a"));
  CHECK(check_weak_domino(sortF().with_neutral("e")).passed);
  CHECK_THROWS_AS(check_weak_domino(sortF()), std::domain_error);
}
