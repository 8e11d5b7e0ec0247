// Rewriting systems with length-two left-hand sides: derivation from a
// quadratic map, traced rule execution, critical pairs and termination
// analysis.

#ifndef QUADNORM_REWRITING_HPP_
#define QUADNORM_REWRITING_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "quadnorm/check_report.hpp"
#include "quadnorm/quadmap.hpp"
#include "quadnorm/words.hpp"

namespace quadnorm {

  struct Rule {
    Word lhs;  // length 2
    Word rhs;  // length 0, 1 or 2
  };

  class RewriteSystem {
   public:
    // Throws std::invalid_argument if a left-hand side does not have length
    // two, a right-hand side is longer than two, lhs == rhs, a rule uses the
    // neutral letter, or two rules share a left-hand side.
    RewriteSystem(AlphabetPtr alphabet, std::vector<Rule> rules);

    AlphabetPtr const& alphabet() const noexcept {
      return _alphabet;
    }

    std::vector<Rule> const& rules() const noexcept {
      return _rules;
    }

    // Letters the system rewrites over: S_+.
    std::vector<letter_type> const& letters() const noexcept {
      return _alphabet->positive_letters();
    }

    // Index of the rule with left-hand side s|t, if any.
    std::optional<std::size_t> rule_at(letter_type s, letter_type t) const noexcept {
      auto r = _index[s * _n + t];
      return r == npos ? std::nullopt : std::optional<std::size_t>(r);
    }

    bool is_irreducible(std::span<letter_type const> w) const noexcept;

    // Every right-hand side is irreducible (left-hand sides, being distinct
    // words of length two, are irreducible with respect to the other rules).
    bool is_reduced() const noexcept {
      return _reduced;
    }

    // Reduced, and no single letter is reducible; with length-two
    // left-hand sides the second half always holds.
    bool is_strongly_reduced() const noexcept {
      return _reduced;
    }

    // Every right-hand side has length two.
    bool is_quadratic() const noexcept {
      return _quadratic;
    }

    // Rewrites w at 1-based position i with the matching rule.
    word_type rewrite_at(std::span<letter_type const> w, std::size_t i) const;

   private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    AlphabetPtr              _alphabet;
    std::size_t              _n = 0;
    std::vector<Rule>        _rules;
    std::vector<std::size_t> _index;
    bool                     _reduced   = true;
    bool                     _quadratic = true;
  };

  enum class DeriveMode { plain, mod_e };

  // One rule s|t -> F(s,t) (plain) or s|t -> strip_neutral(F(s,t)) (mod_e)
  // for every non-fixed pair over S_+. Plain mode throws std::domain_error if
  // some such F(s,t) contains the neutral letter; mod_e mode throws without
  // a neutral letter.
  RewriteSystem derive_rules(QuadMap const& F, DeriveMode mode);

  std::string format_rule(Rule const& r);

  enum class RewriteStrategy { leftmost, rightmost, all_maximal };

  std::optional<RewriteStrategy> parse_rewrite_strategy(std::string_view name);

  enum class TraceOutcome { irreducible, cycle, budget_exhausted };

  std::string to_string(TraceOutcome o);

  struct RewriteStep {
    Word        before;
    std::size_t position;  // 1-based
    std::size_t rule;      // index into RewriteSystem::rules()
    Word        after;
  };

  struct RewriteTrace {
    Word                     initial;
    std::vector<RewriteStep> steps;
    Word                     final;
    TraceOutcome             outcome = TraceOutcome::irreducible;

    std::size_t length() const noexcept {
      return steps.size();
    }
  };

  // leftmost / rightmost: rewrite at the smallest / largest reducible
  // position until irreducible, a word recurs (cycle) or `budget` steps
  // have been made. all_maximal: explore every rewriting sequence from w
  // (at most `budget` distinct words) and return a longest one, or a trace
  // ending in a repeated word if the reduction graph has a cycle.
  RewriteTrace rewrite_trace(RewriteSystem const& R,
                             Word const&          w,
                             RewriteStrategy      strategy,
                             std::size_t          budget);

  // One line per step: "<word> @<position> -> <word>".
  std::string format_trace(RewriteTrace const& trace);

  enum class JoinStatus { joinable, not_joinable, undetermined };

  std::string to_string(JoinStatus s);

  struct CriticalPair {
    Word                overlap;
    Word                reduct1;  // rewritten at position 1
    Word                reduct2;  // rewritten at position 2
    std::optional<Word> normal1;
    std::optional<Word> normal2;
    JoinStatus          status = JoinStatus::undetermined;
  };

  // Every word of length three reducible at both positions. Reducts are
  // normalised with the leftmost strategy; a cycle or an exhausted budget
  // leaves the pair undetermined.
  std::vector<CriticalPair> critical_pairs(RewriteSystem const& R,
                                           std::size_t          budget = 10000);

  enum class TerminationVerdict { terminating_at_scale, cycle_found, budget_exhausted };

  std::string to_string(TerminationVerdict v);

  struct TerminationReport {
    TerminationVerdict verdict = TerminationVerdict::terminating_at_scale;
    // Entry p is the longest rewriting sequence from a word of length p.
    std::vector<std::size_t>    max_sequence_length;
    std::optional<RewriteTrace> witness;
  };

  // Explores every rewriting sequence from every word over S_+ of length at
  // most max_len, memoising per word; `budget` bounds the number of distinct
  // words visited. Throws std::invalid_argument if max_len < 2.
  TerminationReport termination_analysis(RewriteSystem const& R,
                                         std::size_t          max_len,
                                         std::size_t          budget = 1'000'000);

  // The plain system of F.forget_neutral() (the neutral letter read as an
  // ordinary letter) is reduced, terminates on words of length at most
  // max_len and has only joinable critical pairs; by Newman's lemma this
  // makes F the restriction of a quadratic normalisation at that scale.
  CheckReport check_convergent_at_scale(QuadMap const& F, std::size_t max_len = 5);

}  // namespace quadnorm

#endif  // QUADNORM_REWRITING_HPP_
