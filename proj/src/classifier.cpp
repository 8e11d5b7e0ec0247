#include "quadnorm/classifier.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace quadnorm {

  std::string format_class_value(ClassValue const& v) {
    return v ? std::to_string(*v) : std::string("inf");
  }

  bool is_normal(QuadMap const& F, std::span<letter_type const> w) {
    for (std::size_t i = 1; i < w.size(); ++i) {
      if (!F.is_fixed(w[i - 1], w[i])) {
        return false;
      }
    }
    return true;
  }

  bool is_normal(QuadMap const& F, Word const& w) {
    if (!same_alphabet(F.alphabet(), w.alphabet())) {
      throw std::invalid_argument("the word and the map use different alphabets");
    }
    return is_normal(F, w.view());
  }

  namespace {

    void require_idempotent(QuadMap const& F) {
      if (!check_idempotent(F).passed) {
        throw std::domain_error("the map is not idempotent");
      }
    }

    Word triple_word(QuadMap const& F, Triple const& t) {
      return Word(F.alphabet(), {t[0], t[1], t[2]});
    }

    template <typename Fn>
    void for_each_triple(std::size_t n, Fn&& fn) {
      Triple t{};
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          for (std::size_t c = 0; c < n; ++c) {
            t = {static_cast<letter_type>(a), static_cast<letter_type>(b),
                 static_cast<letter_type>(c)};
            if (!fn(t)) {
              return;
            }
          }
        }
      }
    }

    void apply_triple(QuadMap const& F, Triple& t, std::size_t pos) {
      auto [a, b]      = F(t[pos - 1], t[pos]);
      t[pos - 1]       = a;
      t[pos]           = b;
    }

    bool bistable(QuadMap const& F, Triple const& t) {
      return F.is_fixed(t[0], t[1]) && F.is_fixed(t[1], t[2]);
    }

    // The alternating orbit F_{s[k]}(t), k = 0, 1, ..., truncated once it
    // becomes stable at both positions (after which it is constant).
    struct Orbit {
      std::vector<Triple> words;
      bool                stabilised = false;

      Triple const& at(std::size_t k) const {
        return k < words.size() ? words[k] : words.back();
      }
    };

    Orbit alternating_orbit(QuadMap const& F, Triple t, std::size_t start, std::size_t cap) {
      Orbit o;
      o.words.push_back(t);
      std::size_t pos = start;
      for (std::size_t k = 0; k < cap; ++k) {
        if (bistable(F, t)) {
          o.stabilised = true;
          return o;
        }
        apply_triple(F, t, pos);
        pos = 3 - pos;
        o.words.push_back(t);
      }
      o.stabilised = bistable(F, t);
      return o;
    }

    // Least m with own[m] = own[m+1] = other[m+1], if any.
    std::optional<std::size_t> least_index(Orbit const& own, Orbit const& other) {
      // own[m] = own[m+1] forces own[m] to be stable at both positions, and
      // then other[m+1] = own[m] forces the same of the other orbit.
      if (!own.stabilised || !other.stabilised) {
        return std::nullopt;
      }
      std::size_t limit = std::max(own.words.size(), other.words.size()) + 1;
      for (std::size_t m = 0; m <= limit; ++m) {
        if (own.at(m) == own.at(m + 1) && own.at(m) == other.at(m + 1)) {
          return m;
        }
      }
      return std::nullopt;
    }

    Triple apply_alt(QuadMap const& F, Triple t, std::size_t start, std::size_t m) {
      std::size_t pos = start;
      for (std::size_t k = 0; k < m; ++k) {
        apply_triple(F, t, pos);
        pos = 3 - pos;
      }
      return t;
    }

  }  // namespace

  ClassReport minimal_class(QuadMap const& F) {
    require_idempotent(F);
    std::size_t const n   = F.alphabet_size();
    std::size_t const cap = 2 * n * n * n + 2;

    ClassReport report;
    report.left  = 0;
    report.right = 0;
    std::optional<Triple> left_w, right_w;

    for_each_triple(n, [&](Triple const& t) {
      auto lo = alternating_orbit(F, t, 1, cap);
      auto ro = alternating_orbit(F, t, 2, cap);
      if (report.left) {
        auto m = least_index(lo, ro);
        if (!m) {
          report.left = std::nullopt;
          left_w      = t;
          if (!lo.stabilised && !report.orbit_cycle) {
            report.orbit_cycle = triple_word(F, t);
          }
        } else if (*m > *report.left) {
          report.left = *m;
          left_w      = t;
        }
      }
      if (report.right) {
        auto m = least_index(ro, lo);
        if (!m) {
          report.right = std::nullopt;
          right_w      = t;
          if (!ro.stabilised && !report.orbit_cycle) {
            report.orbit_cycle = triple_word(F, t);
          }
        } else if (*m > *report.right) {
          report.right = *m;
          right_w      = t;
        }
      }
      return report.left.has_value() || report.right.has_value();
    });

    if (left_w) {
      report.left_witness = triple_word(F, *left_w);
    }
    if (right_w) {
      report.right_witness = triple_word(F, *right_w);
    }
    return report;
  }

  std::optional<Triple> first_class_violation(QuadMap const& F,
                                              std::size_t    start,
                                              std::size_t    m) {
    if (start != 1 && start != 2) {
      throw std::invalid_argument("alternating sequences start at 1 or 2");
    }
    std::optional<Triple> result;
    for_each_triple(F.alphabet_size(), [&](Triple const& t) {
      auto x = apply_alt(F, t, start, m);
      auto y = apply_alt(F, t, start, m + 1);
      auto z = apply_alt(F, t, 3 - start, m + 1);
      if (x != y || x != z) {
        result = t;
        return false;
      }
      return true;
    });
    return result;
  }

  CheckReport is_of_class(QuadMap const& F, std::size_t m, std::size_t n) {
    auto cls = minimal_class(F);
    if (!cls.finite()) {
      throw std::domain_error("the minimal class of the map is infinite");
    }
    std::string name = "class(" + std::to_string(m) + "," + std::to_string(n) + ")";
    if (auto t = first_class_violation(F, 1, m)) {
      return CheckReport::fail(name, triple_word(F, *t),
                               "left-class " + std::to_string(m) + " fails");
    }
    if (auto t = first_class_violation(F, 2, n)) {
      return CheckReport::fail(name, triple_word(F, *t),
                               "right-class " + std::to_string(n) + " fails");
    }
    return CheckReport::pass(name);
  }

  ////////////////////////////////////////////////////////////////////////
  // normalize
  ////////////////////////////////////////////////////////////////////////

  std::optional<Strategy> parse_strategy(std::string_view name) {
    if (name == "left_alt" || name == "left-alt") {
      return Strategy::left_alt;
    }
    if (name == "right_alt" || name == "right-alt") {
      return Strategy::right_alt;
    }
    if (name == "leftmost_reducible" || name == "leftmost-reducible" || name == "leftmost") {
      return Strategy::leftmost_reducible;
    }
    if (name == "recipe43") {
      return Strategy::recipe43;
    }
    return std::nullopt;
  }

  std::string to_string(Strategy s) {
    switch (s) {
      case Strategy::left_alt:
        return "left_alt";
      case Strategy::right_alt:
        return "right_alt";
      case Strategy::leftmost_reducible:
        return "leftmost_reducible";
      case Strategy::recipe43:
        return "recipe43";
    }
    return "unknown";
  }

  namespace {

    std::size_t default_budget(std::size_t alphabet_size, std::size_t len) {
      constexpr std::size_t cap = std::numeric_limits<std::size_t>::max() / 4;
      std::size_t           b   = 1;
      for (std::size_t i = 0; i < len; ++i) {
        if (b > cap / std::max<std::size_t>(alphabet_size, 1)) {
          return 2 * cap;
        }
        b *= alphabet_size;
      }
      return 2 * b;
    }

    // Applies F at `pos` and records the position if the word changed.
    bool step(QuadMap const& F, word_type& w, std::size_t pos, PositionSeq& trace) {
      if (F.is_fixed(w[pos - 1], w[pos])) {
        return false;
      }
      apply_at_unchecked(F, w, pos);
      trace.push_back(pos);
      return true;
    }

    // Cyclic position schedules: forward sweeps 1..n-1 or backward sweeps
    // n-1..1. For length three these are 1212... and 2121...
    NormalizeResult run_schedule(QuadMap const& F,
                                 Word const&    w,
                                 bool           forward,
                                 std::size_t    budget) {
      word_type   letters = w.letters();
      PositionSeq trace;
      std::size_t n = letters.size();
      if (is_normal(F, letters)) {
        return {w, trace, NormalizeOutcome::normal};
      }
      std::set<std::pair<word_type, std::size_t>> seen;
      std::size_t                                 k     = 0;
      std::size_t                                 steps = 0;
      while (true) {
        std::size_t pos = forward ? (k % (n - 1)) + 1 : (n - 1) - (k % (n - 1));
        if (!seen.emplace(letters, k % (n - 1)).second) {
          return {Word(w.alphabet(), letters), trace, NormalizeOutcome::cycle};
        }
        if (step(F, letters, pos, trace)) {
          if (is_normal(F, letters)) {
            return {Word(w.alphabet(), letters), trace, NormalizeOutcome::normal};
          }
          if (++steps >= budget) {
            return {Word(w.alphabet(), letters), trace, NormalizeOutcome::budget_exhausted};
          }
        }
        ++k;
      }
    }

    NormalizeResult run_leftmost(QuadMap const& F, Word const& w, std::size_t budget) {
      word_type         letters = w.letters();
      PositionSeq       trace;
      std::set<word_type> seen;
      std::size_t       steps = 0;
      while (true) {
        std::size_t pos = 0;
        for (std::size_t i = 1; i < letters.size(); ++i) {
          if (!F.is_fixed(letters[i - 1], letters[i])) {
            pos = i;
            break;
          }
        }
        if (pos == 0) {
          return {Word(w.alphabet(), letters), trace, NormalizeOutcome::normal};
        }
        if (!seen.insert(letters).second) {
          return {Word(w.alphabet(), letters), trace, NormalizeOutcome::cycle};
        }
        if (steps++ >= budget) {
          return {Word(w.alphabet(), letters), trace, NormalizeOutcome::budget_exhausted};
        }
        step(F, letters, pos, trace);
      }
    }

    // Normalise right to left: with the suffix after position i already
    // normal, one sweep i, i+1, ..., |w|-1 normalises the suffix from i.
    NormalizeResult run_recipe43(QuadMap const& F, Word const& w) {
      auto cls = is_of_class(F, 4, 3);
      if (!cls.passed) {
        throw std::domain_error("recipe43 needs a map of class (4,3)");
      }
      word_type   letters = w.letters();
      PositionSeq trace;
      std::size_t n = letters.size();
      for (std::size_t i = n > 1 ? n - 1 : 0; i >= 1; --i) {
        for (std::size_t p = i; p + 1 <= n; ++p) {
          step(F, letters, p, trace);
        }
      }
      auto outcome = is_normal(F, letters) ? NormalizeOutcome::normal
                                           : NormalizeOutcome::budget_exhausted;
      return {Word(w.alphabet(), letters), trace, outcome};
    }

  }  // namespace

  NormalizeResult normalize(QuadMap const&             F,
                            Word const&                w,
                            Strategy                   strategy,
                            std::optional<std::size_t> budget) {
    if (!same_alphabet(F.alphabet(), w.alphabet())) {
      throw std::invalid_argument("the word and the map use different alphabets");
    }
    std::size_t b = budget.value_or(default_budget(F.alphabet_size(), w.length()));
    switch (strategy) {
      case Strategy::left_alt:
        return run_schedule(F, w, true, b);
      case Strategy::right_alt:
        return run_schedule(F, w, false, b);
      case Strategy::leftmost_reducible:
        return run_leftmost(F, w, b);
      case Strategy::recipe43:
        return run_recipe43(F, w);
    }
    throw std::invalid_argument("unknown strategy");
  }

  ////////////////////////////////////////////////////////////////////////
  // Domino rules
  ////////////////////////////////////////////////////////////////////////

  CheckReport check_domino(QuadMap const& F) {
    // Every configuration t0 | s1 | s2 with s1|s2 fixed is F_2 of itself,
    // so scanning F_2(r,s,t) over A^3 covers all of them; the reported
    // witness is the scanned triple.
    std::optional<Triple> bad;
    for_each_triple(F.alphabet_size(), [&](Triple const& w) {
      Triple c = w;
      apply_triple(F, c, 2);
      auto [t0, s1, s2] = c;
      if (!F.is_fixed(s1, s2)) {
        return true;
      }
      auto [s1p, t1] = F(t0, s1);
      auto [s2p, t2] = F(t1, s2);
      if (F.is_fixed(s1p, t1) && F.is_fixed(s2p, t2) && !F.is_fixed(s1p, s2p)) {
        bad = w;
        return false;
      }
      return true;
    });
    if (bad) {
      return CheckReport::fail("domino", triple_word(F, *bad),
                               "the upper row of the domino is not normal");
    }
    return CheckReport::pass("domino");
  }

  CheckReport check_weak_domino_on(QuadMap const&               F,
                                   std::span<letter_type const> letters,
                                   std::string                  name) {
    auto e = F.alphabet()->neutral();
    if (!e) {
      throw std::domain_error("the weak domino rule needs a neutral letter");
    }
    for (auto r : letters) {
      for (auto s : letters) {
        for (auto t : letters) {
          Triple x{r, s, t};
          x = apply_alt(F, x, 2, 3);
          if (F.is_fixed(x[0], x[1])) {
            continue;
          }
          if (std::find(x.begin(), x.end(), *e) != x.end()) {
            continue;
          }
          return CheckReport::fail(name, Word(F.alphabet(), {r, s, t}),
                                   "F_212 is not stable at position 1 and contains no neutral letter");
        }
      }
    }
    return CheckReport::pass(name);
  }

  CheckReport check_weak_domino(QuadMap const& F) {
    std::vector<letter_type> all(F.alphabet_size());
    for (std::size_t i = 0; i < all.size(); ++i) {
      all[i] = static_cast<letter_type>(i);
    }
    return check_weak_domino_on(F, all, "weak-domino");
  }

}  // namespace quadnorm
