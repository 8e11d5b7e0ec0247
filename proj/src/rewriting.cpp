#include "quadnorm/rewriting.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace quadnorm {

  RewriteSystem::RewriteSystem(AlphabetPtr alphabet, std::vector<Rule> rules)
      : _alphabet(std::move(alphabet)),
        _n(_alphabet ? _alphabet->size() : 0),
        _rules(std::move(rules)),
        _index(_n * _n, npos) {
    if (_alphabet == nullptr) {
      throw std::invalid_argument("a rewriting system needs an alphabet");
    }
    for (std::size_t k = 0; k < _rules.size(); ++k) {
      auto const& r = _rules[k];
      if (!same_alphabet(r.lhs.alphabet(), _alphabet)
          || !same_alphabet(r.rhs.alphabet(), _alphabet)) {
        throw std::invalid_argument("rule over a different alphabet");
      }
      if (r.lhs.length() != 2) {
        throw std::invalid_argument("left-hand sides must have length two");
      }
      if (r.rhs.length() > 2) {
        throw std::invalid_argument("right-hand sides may have length at most two");
      }
      if (r.lhs == r.rhs) {
        throw std::invalid_argument("rule " + format_rule(r) + " does not rewrite anything");
      }
      if (r.lhs.contains_neutral() || r.rhs.contains_neutral()) {
        throw std::invalid_argument("rule " + format_rule(r) + " uses the neutral letter");
      }
      auto& slot = _index[r.lhs[0] * _n + r.lhs[1]];
      if (slot != npos) {
        throw std::invalid_argument("two rules with left-hand side " + r.lhs.to_string());
      }
      slot = k;
      if (r.rhs.length() != 2) {
        _quadratic = false;
      }
    }
    for (auto const& r : _rules) {
      if (!is_irreducible(r.rhs.view())) {
        _reduced = false;
      }
    }
  }

  bool RewriteSystem::is_irreducible(std::span<letter_type const> w) const noexcept {
    for (std::size_t i = 1; i < w.size(); ++i) {
      if (_index[w[i - 1] * _n + w[i]] != npos) {
        return false;
      }
    }
    return true;
  }

  word_type RewriteSystem::rewrite_at(std::span<letter_type const> w, std::size_t i) const {
    if (i < 1 || i + 1 > w.size()) {
      throw std::out_of_range("rewrite position out of range");
    }
    auto r = rule_at(w[i - 1], w[i]);
    if (!r) {
      throw std::invalid_argument("no rule applies at position " + std::to_string(i));
    }
    auto const& rhs = _rules[*r].rhs.letters();
    word_type   out(w.begin(), w.begin() + (i - 1));
    out.insert(out.end(), rhs.begin(), rhs.end());
    out.insert(out.end(), w.begin() + (i + 1), w.end());
    return out;
  }

  RewriteSystem derive_rules(QuadMap const& F, DeriveMode mode) {
    auto const& A = F.alphabet();
    auto        e = A->neutral();
    if (mode == DeriveMode::mod_e && !e) {
      throw std::domain_error("mod_e rules need a neutral letter");
    }
    std::vector<Rule> rules;
    for (auto s : A->positive_letters()) {
      for (auto t : A->positive_letters()) {
        if (F.is_fixed(s, t)) {
          continue;
        }
        auto [a, b] = F(s, t);
        Word image(A, {a, b});
        if (mode == DeriveMode::plain) {
          if (image.contains_neutral()) {
            throw std::domain_error("F(" + A->name(s) + "," + A->name(t)
                                    + ") contains the neutral letter; use mod_e rules");
          }
          rules.push_back({Word(A, {s, t}), image});
        } else {
          rules.push_back({Word(A, {s, t}), strip_neutral(image)});
        }
      }
    }
    return RewriteSystem(A, std::move(rules));
  }

  std::string format_rule(Rule const& r) {
    return r.lhs.to_string() + " -> " + r.rhs.to_string();
  }

  std::optional<RewriteStrategy> parse_rewrite_strategy(std::string_view name) {
    if (name == "leftmost") {
      return RewriteStrategy::leftmost;
    }
    if (name == "rightmost") {
      return RewriteStrategy::rightmost;
    }
    if (name == "all_maximal" || name == "all-maximal") {
      return RewriteStrategy::all_maximal;
    }
    return std::nullopt;
  }

  std::string to_string(TraceOutcome o) {
    switch (o) {
      case TraceOutcome::irreducible:
        return "irreducible";
      case TraceOutcome::cycle:
        return "cycle";
      case TraceOutcome::budget_exhausted:
        return "budget_exhausted";
    }
    return "unknown";
  }

  std::string to_string(JoinStatus s) {
    switch (s) {
      case JoinStatus::joinable:
        return "joinable";
      case JoinStatus::not_joinable:
        return "not_joinable";
      case JoinStatus::undetermined:
        return "undetermined";
    }
    return "unknown";
  }

  std::string to_string(TerminationVerdict v) {
    switch (v) {
      case TerminationVerdict::terminating_at_scale:
        return "terminating_at_scale";
      case TerminationVerdict::cycle_found:
        return "cycle_found";
      case TerminationVerdict::budget_exhausted:
        return "budget_exhausted";
    }
    return "unknown";
  }

  std::string format_trace(RewriteTrace const& trace) {
    std::string out;
    for (auto const& s : trace.steps) {
      out += s.before.to_string() + " @" + std::to_string(s.position) + " -> "
             + s.after.to_string() + "\n";
    }
    return out;
  }

  namespace {

    struct RawStep {
      word_type   before;
      std::size_t position;
      std::size_t rule;
      word_type   after;
    };

    RewriteTrace make_trace(RewriteSystem const&        R,
                            word_type const&            initial,
                            std::vector<RawStep> const& steps,
                            word_type const&            final,
                            TraceOutcome                outcome) {
      auto const&  A = R.alphabet();
      RewriteTrace t;
      t.initial = Word(A, initial);
      for (auto const& s : steps) {
        t.steps.push_back({Word(A, s.before), s.position, s.rule, Word(A, s.after)});
      }
      t.final   = Word(A, final);
      t.outcome = outcome;
      return t;
    }

    // Depth-first exploration of the reduction graph with memoised longest
    // sequence lengths. Stops at the first cycle or when the budget of
    // distinct words is spent.
    class Explorer {
     public:
      Explorer(RewriteSystem const& R, std::size_t budget) : _R(R), _budget(budget) {}

      std::optional<std::size_t> longest(word_type const& w) {
        if (auto it = _done.find(w); it != _done.end()) {
          return it->second;
        }
        if (_active.count(w) != 0) {
          _cycle = _path;
          return std::nullopt;
        }
        if (_done.size() + _active.size() >= _budget) {
          _exhausted = true;
          return std::nullopt;
        }
        _active.insert(w);
        std::size_t best = 0;
        for (std::size_t i = 1; i < w.size(); ++i) {
          auto r = _R.rule_at(w[i - 1], w[i]);
          if (!r) {
            continue;
          }
          auto next = _R.rewrite_at(w, i);
          _path.push_back({w, i, *r, next});
          auto len = longest(next);
          _path.pop_back();
          if (!len) {
            return std::nullopt;
          }
          best = std::max(best, *len + 1);
        }
        _active.erase(w);
        _done.emplace(w, best);
        return best;
      }

      bool exhausted() const noexcept {
        return _exhausted;
      }

      std::optional<std::vector<RawStep>> const& cycle() const noexcept {
        return _cycle;
      }

      std::size_t memo(word_type const& w) const {
        return _done.at(w);
      }

     private:
      RewriteSystem const&                _R;
      std::size_t                         _budget;
      std::map<word_type, std::size_t>    _done;
      std::set<word_type>                 _active;
      std::vector<RawStep>                _path;
      std::optional<std::vector<RawStep>> _cycle;
      bool                                _exhausted = false;
    };

    RewriteTrace trace_greedy(RewriteSystem const& R,
                              word_type const&     initial,
                              bool                 leftmost,
                              std::size_t          budget) {
      word_type            w = initial;
      std::vector<RawStep> steps;
      std::set<word_type>  seen{w};
      while (true) {
        std::size_t pos = 0;
        for (std::size_t k = 1; k < w.size(); ++k) {
          std::size_t i = leftmost ? k : w.size() - k;
          if (R.rule_at(w[i - 1], w[i])) {
            pos = i;
            break;
          }
        }
        if (pos == 0) {
          return make_trace(R, initial, steps, w, TraceOutcome::irreducible);
        }
        if (steps.size() >= budget) {
          return make_trace(R, initial, steps, w, TraceOutcome::budget_exhausted);
        }
        auto next = R.rewrite_at(w, pos);
        steps.push_back({w, pos, *R.rule_at(w[pos - 1], w[pos]), next});
        w = std::move(next);
        if (!seen.insert(w).second) {
          return make_trace(R, initial, steps, w, TraceOutcome::cycle);
        }
      }
    }

    RewriteTrace trace_longest(RewriteSystem const& R,
                               word_type const&     initial,
                               std::size_t          budget) {
      Explorer ex(R, budget);
      auto     total = ex.longest(initial);
      if (!total) {
        if (ex.cycle()) {
          auto const& c = *ex.cycle();
          return make_trace(R, initial, c, c.back().after, TraceOutcome::cycle);
        }
        return make_trace(R, initial, {}, initial, TraceOutcome::budget_exhausted);
      }
      word_type            w = initial;
      std::vector<RawStep> steps;
      std::size_t          remaining = *total;
      while (remaining > 0) {
        for (std::size_t i = 1; i < w.size(); ++i) {
          auto r = R.rule_at(w[i - 1], w[i]);
          if (!r) {
            continue;
          }
          auto next = R.rewrite_at(w, i);
          if (ex.memo(next) + 1 == remaining) {
            steps.push_back({w, i, *r, next});
            w = std::move(next);
            break;
          }
        }
        --remaining;
      }
      return make_trace(R, initial, steps, w, TraceOutcome::irreducible);
    }

  }  // namespace

  RewriteTrace rewrite_trace(RewriteSystem const& R,
                             Word const&          w,
                             RewriteStrategy      strategy,
                             std::size_t          budget) {
    if (!same_alphabet(R.alphabet(), w.alphabet())) {
      throw std::invalid_argument("the word and the rewriting system use different alphabets");
    }
    switch (strategy) {
      case RewriteStrategy::leftmost:
        return trace_greedy(R, w.letters(), true, budget);
      case RewriteStrategy::rightmost:
        return trace_greedy(R, w.letters(), false, budget);
      case RewriteStrategy::all_maximal:
        return trace_longest(R, w.letters(), budget);
    }
    throw std::invalid_argument("unknown strategy");
  }

  std::vector<CriticalPair> critical_pairs(RewriteSystem const& R, std::size_t budget) {
    auto const&               A = R.alphabet();
    std::vector<CriticalPair> result;
    for (auto x : R.letters()) {
      for (auto y : R.letters()) {
        if (!R.rule_at(x, y)) {
          continue;
        }
        for (auto z : R.letters()) {
          if (!R.rule_at(y, z)) {
            continue;
          }
          word_type    overlap{x, y, z};
          CriticalPair cp;
          cp.overlap = Word(A, overlap);
          cp.reduct1 = Word(A, R.rewrite_at(overlap, 1));
          cp.reduct2 = Word(A, R.rewrite_at(overlap, 2));
          auto t1    = rewrite_trace(R, cp.reduct1, RewriteStrategy::leftmost, budget);
          auto t2    = rewrite_trace(R, cp.reduct2, RewriteStrategy::leftmost, budget);
          if (t1.outcome == TraceOutcome::irreducible) {
            cp.normal1 = t1.final;
          }
          if (t2.outcome == TraceOutcome::irreducible) {
            cp.normal2 = t2.final;
          }
          if (cp.normal1 && cp.normal2) {
            cp.status = *cp.normal1 == *cp.normal2 ? JoinStatus::joinable
                                                   : JoinStatus::not_joinable;
          }
          result.push_back(std::move(cp));
        }
      }
    }
    return result;
  }

  TerminationReport termination_analysis(RewriteSystem const& R,
                                         std::size_t          max_len,
                                         std::size_t          budget) {
    if (max_len < 2) {
      throw std::invalid_argument("termination analysis needs max_len >= 2");
    }
    TerminationReport report;
    report.max_sequence_length.assign(max_len + 1, 0);
    Explorer ex(R, budget);
    for (std::size_t p = 0; p <= max_len; ++p) {
      for (auto const& w : all_words(R.letters(), p)) {
        auto len = ex.longest(w);
        if (!len) {
          if (ex.cycle()) {
            auto const& c   = *ex.cycle();
            report.verdict  = TerminationVerdict::cycle_found;
            report.witness  = make_trace(R, c.front().before, c, c.back().after,
                                         TraceOutcome::cycle);
          } else {
            report.verdict = TerminationVerdict::budget_exhausted;
          }
          return report;
        }
        report.max_sequence_length[p] = std::max(report.max_sequence_length[p], *len);
      }
    }
    return report;
  }

  CheckReport check_convergent_at_scale(QuadMap const& F, std::size_t max_len) {
    auto G = F.forget_neutral();
    auto R = derive_rules(G, DeriveMode::plain);
    if (!R.is_reduced()) {
      for (auto const& r : R.rules()) {
        if (!R.is_irreducible(r.rhs.view())) {
          return CheckReport::fail("convergent", r.lhs, "the system is not reduced");
        }
      }
    }
    auto t = termination_analysis(R, max_len);
    if (t.verdict != TerminationVerdict::terminating_at_scale) {
      return CheckReport::fail("convergent",
                               t.witness ? t.witness->initial : Word(G.alphabet()),
                               to_string(t.verdict));
    }
    for (auto const& cp : critical_pairs(R)) {
      if (cp.status != JoinStatus::joinable) {
        return CheckReport::fail("convergent", cp.overlap, "critical pair " + to_string(cp.status));
      }
    }
    return CheckReport::pass("convergent", "up to length " + std::to_string(max_len));
  }

}  // namespace quadnorm
