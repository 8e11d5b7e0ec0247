#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "quadnorm/catalog.hpp"
#include "quadnorm/quadmap.hpp"

using namespace quadnorm;

namespace {
  QuadMap sortF() {
    return sort_map({"a", "b", "c"});
  }
  QuadMap signF() {
    return load("sign").map;
  }
  Word w(QuadMap const& F, char const* t) {
    return Word::parse(F.alphabet(), t);
  }
}  // namespace

TEST_CASE("catalog tables match independent constructions") {
  auto S = sortF();
  CHECK(S == oracle::build(S.alphabet(), oracle::sort_pair));
  auto G = signF();
  CHECK(G == oracle::build(G.alphabet(), oracle::sign_pair));
  auto H = load("ab5").map;
  CHECK(H == oracle::build(H.alphabet(), oracle::ab5_pair));
}

TEST_CASE("apply_at") {
  auto F = sortF();
  CHECK(apply_at(F, w(F, "c b a"), 2) == w(F, "c a b"));
  CHECK(apply_at(F, w(F, "a b c"), 1) == w(F, "a b c"));
  auto G = signF();
  CHECK(apply_at(G, w(G, "+1 -1 -1"), 1) == w(G, "0 0 -1"));
  CHECK_THROWS_AS(apply_at(F, w(F, "a b"), 2), std::out_of_range);
  CHECK_THROWS_AS(apply_at(F, w(F, "a b"), 0), std::out_of_range);
  CHECK_THROWS_AS(apply_at(F, w(G, "0 0"), 1), std::invalid_argument);
}

TEST_CASE("apply_at changes only positions i and i+1") {
  auto        F = sortF();
  auto const& L = F.alphabet()->positive_letters();
  for (std::size_t len = 2; len <= 5; ++len) {
    for (auto const& x : all_words(L, len)) {
      Word u(F.alphabet(), x);
      for (std::size_t i = 1; i < len; ++i) {
        auto v = apply_at(F, u, i);
        REQUIRE(v.length() == len);
        for (std::size_t j = 0; j < len; ++j) {
          if (j + 1 != i && j != i) {
            REQUIRE(v[j] == u[j]);
          }
        }
        REQUIRE(apply_at(F, v, i) == v);
      }
    }
  }
}

TEST_CASE("apply_seq") {
  auto F = sortF();
  CHECK(apply_seq(F, w(F, "c b a"), {2, 1, 2}) == w(F, "a b c"));
  auto G = signF();
  CHECK(apply_seq(G, w(G, "+1 -1 -1"), {2, 1, 2}) == w(G, "0 -1 0"));
  CHECK(apply_seq(G, w(G, "+1 -1 -1"), {2, 1, 2, 1}) == w(G, "-1 0 0"));
  CHECK_THROWS_AS(apply_seq(F, w(F, "a b c"), {1, 3}), std::out_of_range);
}

TEST_CASE("apply_seq agrees with the oracle and folds over splits") {
  auto G = signF();
  oracle::Names letters{"0", "+1", "-1"};
  std::vector<std::size_t> u{2, 1, 2, 1, 1, 2};
  for (auto const& x : oracle::triples(letters)) {
    auto word = oracle::to_word(G.alphabet(), x);
    CHECK(oracle::names(apply_seq(G, word, PositionSeq(u))) == oracle::apply(oracle::sign_pair, x, u));
    for (std::size_t k = 0; k <= u.size(); ++k) {
      PositionSeq head(std::vector<std::size_t>(u.begin(), u.begin() + k));
      PositionSeq tail(std::vector<std::size_t>(u.begin() + k, u.end()));
      CHECK(apply_seq(G, word, PositionSeq(u)) == apply_seq(G, apply_seq(G, word, head), tail));
    }
  }
}

TEST_CASE("sweep") {
  auto F = sortF();
  CHECK(sweep(F, w(F, "c b a")) == w(F, "b a c"));
  CHECK(sweep(F, w(F, "b")) == w(F, "b"));
  CHECK(sweep(F, Word(F.alphabet())).empty());
  auto G = signF();
  CHECK(sweep(G, w(G, "+1 -1 -1")) == w(G, "0 -1 0"));
}

TEST_CASE("check_idempotent") {
  CHECK(check_idempotent(sortF()).passed);
  CHECK(check_idempotent(signF()).passed);
  auto    A = Alphabet::make({"a", "b"});
  QuadMap swap(A);
  swap.set(A->letter("a"), A->letter("b"), A->letter("b"), A->letter("a"));
  swap.set(A->letter("b"), A->letter("a"), A->letter("a"), A->letter("b"));
  auto r = check_idempotent(swap);
  CHECK_FALSE(r.passed);
  CHECK(r.witness == Word::parse(A, "a b"));
}

TEST_CASE("check_neutral") {
  CHECK(check_neutral(signF()).passed);
  CHECK_THROWS_AS(check_neutral(sortF()), std::domain_error);
  auto    A = Alphabet::make({"a", "e"}, "e");
  QuadMap F(A);
  F.set(A->letter("a"), A->letter("e"), A->letter("a"), A->letter("e"));
  auto r = check_neutral(F);
  CHECK_FALSE(r.passed);
  CHECK(r.witness == Word::parse(A, "e a"));
}

TEST_CASE("with_neutral and forget_neutral") {
  auto F = sortF().with_neutral("e");
  CHECK(check_neutral(F).passed);
  CHECK(F.is_graded());
  CHECK_FALSE(F.forget_neutral().alphabet()->has_neutral());
  CHECK_THROWS_AS(F.with_neutral("z"), std::domain_error);
  CHECK_FALSE(signF().is_graded());
}
