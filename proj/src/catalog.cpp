#include "quadnorm/catalog.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <stdexcept>

#include "quadnorm/classifier.hpp"
#include "quadnorm/factorability.hpp"
#include "quadnorm/rewriting.hpp"

namespace quadnorm {

  QuadMap sort_map(std::vector<std::string> letters) {
    QuadMap F(Alphabet::make(std::move(letters)));
    auto    n = static_cast<letter_type>(F.alphabet_size());
    for (letter_type s = 0; s < n; ++s) {
      for (letter_type t = 0; t < n; ++t) {
        F.set(s, t, std::min(s, t), std::max(s, t));
      }
    }
    return F;
  }

  namespace {

    MonoidOracle count_oracle(std::string name, std::size_t letters, bool neutral_last) {
      std::vector<MonoidOracle::value_type> images;
      for (std::size_t i = 0; i < letters; ++i) {
        MonoidOracle::value_type v(letters, 0);
        v[i] = 1;
        images.push_back(v);
      }
      if (neutral_last) {
        images.emplace_back(letters, 0);
      }
      return MonoidOracle(std::move(name), std::move(images));
    }

    CatalogEntry freecomm_abc() {
      CatalogEntry c;
      c.name        = "freecomm-abc";
      c.description = "free commutative monoid on a, b, c with neutral e; sorting map";
      c.map         = sort_map({"a", "b", "c"}).with_neutral("e");
      c.oracle      = count_oracle("multiset", 3, true);
      c.expected_class = {3, 3};
      c.expected       = {{"idempotent", true},         {"neutral", true},
                          {"domino", true},             {"weak-domino", true},
                          {"local-factorability", true}, {"stable212", true},
                          {"class43", true},            {"class54", true},
                          {"roundtrip", true},          {"2121-extended-form", true},
                          {"normalisation", true},      {"confluence", true},
                          {"termination", true},        {"factorisation", true},
                          {"stronger-assumption", true}, {"stable212-elements", true},
                          {"left-weighted", false},     {"greedy", false},
                          {"left-cancellative", true},  {"no-invertibles", true},
                          {"monoid-laws", true},        {"oracle", true},
                          {"nf-eta", true}};
      return c;
    }

    CatalogEntry freecomm_ab() {
      CatalogEntry c;
      c.name           = "freecomm-ab";
      c.description    = "free commutative monoid on a, b; sorting map, no neutral letter";
      c.map            = sort_map({"a", "b"});
      c.oracle         = count_oracle("multiset", 2, false);
      c.expected_class = {3, 3};
      c.expected       = {{"idempotent", true},     {"domino", true},
                          {"stable212", true},      {"class43", true},
                          {"confluence", true},     {"termination", true},
                          {"factorisation", true},  {"left-weighted", false},
                          {"greedy", false},        {"left-cancellative", true},
                          {"no-invertibles", true}, {"monoid-laws", true},
                          {"oracle", true},         {"nf-eta", true}};
      return c;
    }

    CatalogEntry free_x() {
      CatalogEntry c;
      c.name           = "free-x";
      c.description    = "free monoid on one generator x; identity map";
      c.map            = QuadMap(Alphabet::make({"x"}));
      c.oracle         = MonoidOracle("count", {{1}});
      c.expected_class = {0, 0};
      c.expected       = {{"idempotent", true},        {"domino", true},
                          {"stable212", true},         {"class43", true},
                          {"confluence", true},        {"termination", true},
                          {"factorisation", true},     {"stronger-assumption", true},
                          {"stable212-elements", true}, {"left-weighted", true},
                          {"greedy", true},            {"left-cancellative", true},
                          {"no-invertibles", true},    {"monoid-laws", true},
                          {"oracle", true},            {"nf-eta", true}};
      return c;
    }

    int sgn(int g) {
      return (g > 0) - (g < 0);
    }

    // Generators 0, +1, -1; the table is eta(mu(g,h)) with the
    // factorisation g -> (sgn g, g - sgn g) of the integers.
    CatalogEntry sign() {
      CatalogEntry c;
      c.name        = "sign";
      c.description = "integers under addition; factorisation g -> (sgn g, g - sgn g)";
      auto A        = Alphabet::make({"0", "+1", "-1"}, "0");
      std::vector<int> value{0, 1, -1};
      auto letter_of = [&](int v) {
        return static_cast<letter_type>(std::find(value.begin(), value.end(), v) - value.begin());
      };
      QuadMap F(A);
      for (letter_type s = 0; s < 3; ++s) {
        for (letter_type t = 0; t < 3; ++t) {
          int g = value[s] + value[t];
          F.set(s, t, letter_of(sgn(g)), letter_of(g - sgn(g)));
        }
      }
      c.map            = F;
      c.oracle         = MonoidOracle("integer", {{0}, {1}, {-1}});
      c.expected_class = {3, 4};
      c.expected       = {{"idempotent", true},         {"neutral", true},
                          {"domino", false},            {"weak-domino", true},
                          {"local-factorability", true}, {"stable212", false},
                          {"class43", false},           {"class54", true},
                          {"roundtrip", true},          {"2121-extended-form", true},
                          {"normalisation", true},      {"confluence", true},
                          {"termination", true},        {"factorisation", true},
                          {"stronger-assumption", false}, {"stable212-elements", false},
                          {"left-weighted", true},      {"left-cancellative", true},
                          {"no-invertibles", false},    {"monoid-laws", true},
                          {"oracle", true},             {"nf-eta", true}};
      return c;
    }

    // Rules a b_i -> a b_{i+1} for even i < 5 and b_i a -> b_{i+1} a for
    // odd i < 5, with a neutral letter adjoined.
    CatalogEntry ab5() {
      CatalogEntry c;
      c.name        = "ab5";
      c.description = "letters a, b1..b5: a b_i -> a b_i+1 (i even), b_i a -> b_i+1 a (i odd)";
      auto    A = Alphabet::make({"a", "b1", "b2", "b3", "b4", "b5"});
      QuadMap F(A);
      for (letter_type i = 1; i < 5; ++i) {
        if (i % 2 == 0) {
          F.set(0, i, 0, i + 1);
        } else {
          F.set(i, 0, i + 1, 0);
        }
      }
      c.map            = F.with_neutral("e");
      c.expected_class = {5, 4};
      c.expected       = {{"idempotent", true},          {"neutral", true},
                          {"domino", false},             {"weak-domino", false},
                          {"local-factorability", false}, {"stable212", false},
                          {"class43", false},            {"class54", true},
                          {"confluence", true},          {"termination", true},
                          {"factorisation", true},       {"monoid-laws", true},
                          {"nf-eta", true}};
      return c;
    }

    using Builder = std::function<CatalogEntry()>;

    std::vector<std::pair<std::string, Builder>> const& builders() {
      static std::vector<std::pair<std::string, Builder>> const b{
          {"freecomm-abc", freecomm_abc},
          {"freecomm-ab", freecomm_ab},
          {"free-x", free_x},
          {"sign", sign},
          {"ab5", ab5}};
      return b;
    }

    RewriteSystem entry_rules(QuadMap const& F) {
      return derive_rules(F, F.alphabet()->has_neutral() ? DeriveMode::mod_e : DeriveMode::plain);
    }

    CheckReport class_check(QuadMap const& F, std::size_t m, std::size_t n) {
      auto cls = minimal_class(F);
      auto name = "class" + std::to_string(m) + std::to_string(n);
      if (!cls.finite()) {
        return CheckReport::fail(name, cls.left ? *cls.right_witness : *cls.left_witness,
                                 "the minimal class is infinite");
      }
      auto r = is_of_class(F, m, n);
      r.name = name;
      return r;
    }

    CheckReport confluence_check(QuadMap const& F) {
      for (auto const& cp : critical_pairs(entry_rules(F))) {
        if (cp.status != JoinStatus::joinable) {
          return CheckReport::fail("confluence", cp.overlap, to_string(cp.status));
        }
      }
      return CheckReport::pass("confluence");
    }

    CheckReport termination_check(QuadMap const& F) {
      auto t = termination_analysis(entry_rules(F), 5);
      if (t.verdict == TerminationVerdict::terminating_at_scale) {
        return CheckReport::pass("termination", "up to length 5");
      }
      return CheckReport::fail("termination",
                               t.witness ? t.witness->initial : Word(F.alphabet()),
                               to_string(t.verdict));
    }

    class Runner {
     public:
      explicit Runner(CatalogEntry const& entry) : _e(entry) {}

      CheckReport compute(std::string const& check) {
        auto const& F = _e.map;
        if (check == "idempotent") {
          return check_idempotent(F);
        }
        if (check == "neutral") {
          return check_neutral(F);
        }
        if (check == "domino") {
          return check_domino(F);
        }
        if (check == "weak-domino") {
          return check_weak_domino(F);
        }
        if (check == "local-factorability") {
          auto rep = check_local_factorability(F, _e.oracle ? &*_e.oracle : nullptr);
          for (auto const& r : rep.all()) {
            if (!r.passed) {
              return CheckReport::fail("local-factorability", *r.witness, r.name);
            }
          }
          return CheckReport::pass("local-factorability");
        }
        if (check == "stable212") {
          return check_stable212(F);
        }
        if (check == "class43") {
          return class_check(F, 4, 3);
        }
        if (check == "class54") {
          return class_check(F, 5, 4);
        }
        if (check == "roundtrip") {
          return roundtrip_check(F);
        }
        if (check == "2121-extended-form") {
          return check_2121_extended_form(F);
        }
        if (check == "normalisation") {
          return check_normalisation_clauses(F, 4);
        }
        if (check == "confluence") {
          return confluence_check(F);
        }
        if (check == "termination") {
          return termination_check(F);
        }
        if (check == "factorisation") {
          return check_factorisation_axioms(model(), 4);
        }
        if (check == "stronger-assumption") {
          return check_stronger_assumption(model(), 5);
        }
        if (check == "stable212-elements") {
          return check_stable212_elements(model(), 3);
        }
        if (check == "left-weighted") {
          return check_left_weighted(model(), 3);
        }
        if (check == "greedy") {
          return check_greedy(model(), 3);
        }
        if (check == "left-cancellative") {
          return check_left_cancellative(model(), 4);
        }
        if (check == "no-invertibles") {
          return check_no_invertibles(model(), 3);
        }
        if (check == "monoid-laws") {
          return check_monoid_laws(model(), 6);
        }
        if (check == "oracle") {
          if (!_e.oracle) {
            throw std::logic_error("entry " + _e.name + " has no oracle");
          }
          return check_oracle_agreement(model(), *_e.oracle, 5);
        }
        if (check == "nf-eta") {
          return check_nf_eta(model(), 5);
        }
        throw std::logic_error("unknown catalog check " + check);
      }

     private:
      MonoidModel const& model() {
        if (!_model) {
          _model = std::make_unique<MonoidModel>(_e.map);
        }
        return *_model;
      }

      CatalogEntry const&          _e;
      std::unique_ptr<MonoidModel> _model;
    };

    std::string outcome(CheckReport const& r) {
      std::string s = r.passed ? "PASS" : "FAIL";
      if (r.witness) {
        s += " witness=" + r.witness->to_string();
      }
      return s;
    }

  }  // namespace

  std::vector<std::string> catalog_names() {
    std::vector<std::string> out;
    for (auto const& [name, _] : builders()) {
      out.push_back(name);
    }
    return out;
  }

  CatalogEntry load(std::string_view name) {
    for (auto const& [n, build] : builders()) {
      if (n == name) {
        return build();
      }
    }
    throw std::invalid_argument("unknown catalog entry '" + std::string(name) + "'");
  }

  std::vector<CheckReport> run_all(CatalogEntry const& entry) {
    std::vector<CheckReport> out;
    auto                     empty = Word(entry.map.alphabet());

    auto cls      = minimal_class(entry.map);
    auto expected = "left=" + std::to_string(entry.expected_class.first)
                    + " right=" + std::to_string(entry.expected_class.second);
    auto got = "left=" + format_class_value(cls.left) + " right=" + format_class_value(cls.right);
    if (got == expected) {
      out.push_back(CheckReport::pass("expect-class", got));
    } else {
      out.push_back(CheckReport::fail("expect-class", empty, "expected " + expected + ", got " + got));
    }

    Runner runner(entry);
    for (auto const& [check, want] : entry.expected) {
      auto r    = runner.compute(check);
      auto name = "expect-" + check;
      auto msg  = std::string("expected ") + (want ? "PASS" : "FAIL") + ", got " + outcome(r);
      if (r.passed == want) {
        out.push_back(CheckReport::pass(name, msg));
      } else {
        out.push_back(CheckReport::fail(name, r.witness.value_or(empty), msg));
      }
    }
    return out;
  }

}  // namespace quadnorm
