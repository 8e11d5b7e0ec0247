#include <algorithm>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "quadnorm/catalog.hpp"
#include "quadnorm/classifier.hpp"
#include "quadnorm/factorability.hpp"
#include "quadnorm/rewriting.hpp"

using namespace quadnorm;

namespace {
  QuadMap sortF() {
    return sort_map({"a", "b", "c"});
  }
  Word w(AlphabetPtr const& A, char const* t) {
    return Word::parse(A, t);
  }
  std::set<std::string> rule_lines(RewriteSystem const& R) {
    std::set<std::string> out;
    for (auto const& r : R.rules()) {
      out.insert(format_rule(r));
    }
    return out;
  }
  RewriteSystem two_cycle() {
    auto A = Alphabet::make({"a", "b"});
    return RewriteSystem(A, {Rule{w(A, "b a"), w(A, "a b")}, Rule{w(A, "a b"), w(A, "b a")}});
  }
}  // namespace

TEST_CASE("derived rules") {
  auto R = derive_rules(sortF(), DeriveMode::plain);
  CHECK(rule_lines(R) == std::set<std::string>{"b a -> a b", "c a -> a c", "c b -> b c"});
  CHECK(R.is_reduced());
  CHECK(R.is_strongly_reduced());
  CHECK(R.is_quadratic());

  auto S = derive_rules(load("sign").map, DeriveMode::mod_e);
  CHECK(rule_lines(S) == std::set<std::string>{"+1 -1 -> ^", "-1 +1 -> ^"});
  CHECK_FALSE(S.is_quadratic());

  auto H = derive_rules(load("ab5").map, DeriveMode::plain);
  CHECK(rule_lines(H) == std::set<std::string>{"a b2 -> a b3", "a b4 -> a b5", "b1 a -> b2 a",
                                               "b3 a -> b4 a"});
  CHECK_THROWS_AS(derive_rules(load("sign").map, DeriveMode::plain), std::domain_error);
  CHECK_THROWS_AS(derive_rules(sortF(), DeriveMode::mod_e), std::domain_error);
}

TEST_CASE("catalog systems are strongly reduced") {
  for (auto const& name : catalog_names()) {
    auto const& F = load(name).map;
    auto        R = derive_rules(F, F.alphabet()->has_neutral() ? DeriveMode::mod_e : DeriveMode::plain);
    CHECK(R.is_strongly_reduced());
  }
}

TEST_CASE("rewrite system validation") {
  auto A = Alphabet::make({"a", "b", "e"}, "e");
  CHECK_THROWS_AS(RewriteSystem(A, {Rule{w(A, "a"), w(A, "b")}}), std::invalid_argument);
  CHECK_THROWS_AS(RewriteSystem(A, {Rule{w(A, "a b"), w(A, "a b")}}), std::invalid_argument);
  CHECK_THROWS_AS(RewriteSystem(A, {Rule{w(A, "a b"), w(A, "a b a")}}), std::invalid_argument);
  CHECK_THROWS_AS(RewriteSystem(A, {Rule{w(A, "a e"), w(A, "a")}}), std::invalid_argument);
  CHECK_THROWS_AS(RewriteSystem(A, {Rule{w(A, "b a"), w(A, "a b")}, Rule{w(A, "b a"), w(A, "a")}}),
                  std::invalid_argument);
  RewriteSystem R(A, {Rule{w(A, "b a"), w(A, "a b")}, Rule{w(A, "a b"), w(A, "a")}});
  CHECK_FALSE(R.is_reduced());
}

TEST_CASE("rewrite traces") {
  auto H  = load("ab5").map;
  auto RH = derive_rules(H, DeriveMode::mod_e);
  auto t  = rewrite_trace(RH, w(H.alphabet(), "a b1 a"), RewriteStrategy::leftmost, 100);
  CHECK(t.length() == 4);
  CHECK(t.final == w(H.alphabet(), "a b5 a"));
  CHECK(t.outcome == TraceOutcome::irreducible);
  CHECK(format_trace(t)
        == "a b1 a @2 -> a b2 a\na b2 a @1 -> a b3 a\na b3 a @2 -> a b4 a\na b4 a @1 -> a b5 a\n");
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    auto const& st = t.steps[i];
    CHECK(RH.rewrite_at(st.before.view(), st.position) == st.after.letters());
    CHECK(st.before == (i == 0 ? t.initial : t.steps[i - 1].after));
  }

  auto RS = derive_rules(sortF(), DeriveMode::plain);
  for (auto s : {RewriteStrategy::leftmost, RewriteStrategy::rightmost, RewriteStrategy::all_maximal}) {
    auto z = rewrite_trace(RS, w(sortF().alphabet(), "a b c"), s, 100);
    CHECK(z.length() == 0);
    CHECK(z.final == w(sortF().alphabet(), "a b c"));
  }

  auto G  = load("sign").map;
  auto RG = derive_rules(G, DeriveMode::mod_e);
  auto g  = rewrite_trace(RG, w(G.alphabet(), "+1 -1 -1"), RewriteStrategy::leftmost, 100);
  CHECK(g.length() == 1);
  CHECK(g.final == w(G.alphabet(), "-1"));
}

TEST_CASE("rewrite trace outcomes") {
  auto R = two_cycle();
  auto c = rewrite_trace(R, w(R.alphabet(), "b a"), RewriteStrategy::leftmost, 100);
  CHECK(c.outcome == TraceOutcome::cycle);
  CHECK(c.final == c.initial);
  auto RS = derive_rules(sortF(), DeriveMode::plain);
  auto b  = rewrite_trace(RS, w(sortF().alphabet(), "c b a"), RewriteStrategy::leftmost, 1);
  CHECK(b.outcome == TraceOutcome::budget_exhausted);
  CHECK(b.length() == 1);
  CHECK(parse_rewrite_strategy("rightmost") == RewriteStrategy::rightmost);
  CHECK_FALSE(parse_rewrite_strategy("sideways"));
}

TEST_CASE("critical pairs") {
  auto H  = load("ab5").map;
  auto A  = H.alphabet();
  auto cp = critical_pairs(derive_rules(H, DeriveMode::mod_e));
  CHECK_FALSE(cp.empty());
  for (auto const& p : cp) {
    CHECK(p.status == JoinStatus::joinable);
    // The diamond b_i a b_j with i odd and j even.
    auto n = oracle::names(p.overlap);
    CHECK(n[1] == "a");
    CHECK((n[0][1] - '0') % 2 == 1);
    CHECK((n[2][1] - '0') % 2 == 0);
  }
  auto diamond = std::find_if(cp.begin(), cp.end(), [&](auto const& p) { return p.overlap == w(A, "b1 a b2"); });
  REQUIRE(diamond != cp.end());
  CHECK(diamond->reduct1 == w(A, "b2 a b2"));
  CHECK(diamond->reduct2 == w(A, "b1 a b3"));
  CHECK(diamond->normal1 == w(A, "b2 a b3"));
  CHECK(diamond->normal2 == w(A, "b2 a b3"));

  auto RS = derive_rules(sortF(), DeriveMode::plain);
  auto sp = critical_pairs(RS);
  REQUIRE(sp.size() == 1);
  CHECK(sp[0].overlap == w(sortF().alphabet(), "c b a"));
  CHECK(sp[0].reduct1 == w(sortF().alphabet(), "b c a"));
  CHECK(sp[0].reduct2 == w(sortF().alphabet(), "c a b"));
  CHECK(sp[0].normal1 == w(sortF().alphabet(), "a b c"));
  CHECK(sp[0].status == JoinStatus::joinable);

  for (auto const& p : critical_pairs(two_cycle())) {
    CHECK(p.status != JoinStatus::joinable);
  }
}

TEST_CASE("a proven non-joinable pair") {
  auto          A = Alphabet::make({"a", "b", "c"});
  RewriteSystem R(A, {Rule{w(A, "a b"), w(A, "c")}, Rule{w(A, "b a"), w(A, "b")}});
  auto          cp = critical_pairs(R);
  bool          found = std::any_of(cp.begin(), cp.end(), [](auto const& p) {
    return p.status == JoinStatus::not_joinable;
  });
  CHECK(found);
}

TEST_CASE("termination of the sort system equals the maximum inversion count") {
  auto R   = derive_rules(sortF(), DeriveMode::plain);
  auto rep = termination_analysis(R, 6);
  CHECK(rep.verdict == TerminationVerdict::terminating_at_scale);
  for (std::size_t p = 2; p <= 6; ++p) {
    std::size_t most = 0;
    for (auto const& x : oracle::all_words({"a", "b", "c"}, p)) {
      most = std::max(most, oracle::inversions(x));
    }
    CHECK(rep.max_sequence_length[p] == most);
    CHECK(rep.max_sequence_length[p] <= (std::size_t{1} << p) - p - 1);
  }
  CHECK(rep.max_sequence_length[3] == 3);
  CHECK(rep.max_sequence_length[4] == 5);
  CHECK(rep.max_sequence_length[5] == 8);
  CHECK_THROWS_AS(termination_analysis(R, 1), std::invalid_argument);
}

TEST_CASE("class (4,3) systems respect the length bound") {
  for (auto const& name : catalog_names()) {
    auto const& F = load(name).map;
    auto        R = derive_rules(F, F.alphabet()->has_neutral() ? DeriveMode::mod_e : DeriveMode::plain);
    if (!check_domino(F).passed) {
      continue;
    }
    auto rep = termination_analysis(R, F.alphabet_size() > 3 ? 5 : 6);
    CHECK(rep.verdict == TerminationVerdict::terminating_at_scale);
    for (std::size_t p = 2; p < rep.max_sequence_length.size(); ++p) {
      CHECK(rep.max_sequence_length[p] <= (std::size_t{1} << p) - p - 1);
    }
  }
}

TEST_CASE("termination verdicts") {
  auto H = load("ab5").map;
  CHECK(termination_analysis(derive_rules(H, DeriveMode::mod_e), 6).verdict
        == TerminationVerdict::terminating_at_scale);
  auto R   = two_cycle();
  auto rep = termination_analysis(R, 3);
  CHECK(rep.verdict == TerminationVerdict::cycle_found);
  REQUIRE(rep.witness);
  auto const& steps = rep.witness->steps;
  REQUIRE_FALSE(steps.empty());
  CHECK(std::any_of(steps.begin(), steps.end(),
                    [&](auto const& s) { return s.before == rep.witness->final; }));
  auto small = termination_analysis(derive_rules(sortF(), DeriveMode::plain), 5, 10);
  CHECK(small.verdict == TerminationVerdict::budget_exhausted);
}

TEST_CASE("strategies agree on convergent systems and match n_phi") {
  for (auto const& name : catalog_names()) {
    auto const& F       = load(name).map;
    bool        neutral = F.alphabet()->has_neutral();
    auto        R       = derive_rules(F, neutral ? DeriveMode::mod_e : DeriveMode::plain);
    auto        cps     = critical_pairs(R);
    bool        joinable = std::all_of(cps.begin(), cps.end(),
                                       [](auto const& p) { return p.status == JoinStatus::joinable; });
    if (!joinable || termination_analysis(R, 4).verdict != TerminationVerdict::terminating_at_scale) {
      continue;
    }
    bool factorable = neutral && check_local_factorability(F).overall;
    CAPTURE(name);
    std::size_t max_len = F.alphabet_size() > 4 ? 4 : 5;
    for (std::size_t len = 0; len <= max_len; ++len) {
      for (auto const& x : all_words(R.letters(), len)) {
        Word u(F.alphabet(), x);
        auto l = rewrite_trace(R, u, RewriteStrategy::leftmost, 1000).final;
        REQUIRE(rewrite_trace(R, u, RewriteStrategy::rightmost, 1000).final == l);
        REQUIRE(rewrite_trace(R, u, RewriteStrategy::all_maximal, 100000).final == l);
        if (factorable) {
          REQUIRE(l == strip_neutral(n_phi(F, u)));
        }
      }
    }
  }
}

TEST_CASE("convergence at scale") {
  CHECK(check_convergent_at_scale(sortF()).passed);
  CHECK(check_convergent_at_scale(load("freecomm-abc").map).passed);
  CHECK(check_convergent_at_scale(load("ab5").map, 4).passed);
  auto    A = Alphabet::make({"a", "b"});
  QuadMap swap(A);
  swap.set(0, 1, 1, 0);
  swap.set(1, 0, 0, 1);
  auto r = check_convergent_at_scale(swap, 4);
  CHECK_FALSE(r.passed);
  CHECK(r.witness);
}
