// Class analysis of a quadratic map: normality, minimal class (m,n),
// full-word normalisation strategies, and the domino / weak domino rules.

#ifndef QUADNORM_CLASSIFIER_HPP_
#define QUADNORM_CLASSIFIER_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <string>

#include "quadnorm/check_report.hpp"
#include "quadnorm/quadmap.hpp"
#include "quadnorm/words.hpp"

namespace quadnorm {

  using Triple = std::array<letter_type, 3>;

  // A class value; std::nullopt stands for infinity.
  using ClassValue = std::optional<std::size_t>;

  std::string format_class_value(ClassValue const& v);

  struct ClassReport {
    ClassValue left;
    ClassValue right;
    // For a finite value m > 0: a triple on which m - 1 does not suffice.
    // For an infinite value: the first triple with no stabilisation index.
    std::optional<Word> left_witness;
    std::optional<Word> right_witness;
    // Set when the alternating orbit of the infinite-class witness cycles
    // without ever becoming stable at both positions.
    std::optional<Word> orbit_cycle;

    bool finite() const noexcept {
      return left.has_value() && right.has_value();
    }
  };

  bool is_normal(QuadMap const& F, Word const& w);
  bool is_normal(QuadMap const& F, std::span<letter_type const> w);

  // Throws std::domain_error for a non-idempotent map.
  ClassReport minimal_class(QuadMap const& F);

  // Passes iff (m,n) is a class of F; the witness is the first triple on
  // which the defining equalities fail. Throws std::domain_error when the
  // minimal class is infinite or F is not idempotent.
  CheckReport is_of_class(QuadMap const& F, std::size_t m, std::size_t n);

  // Evaluates F_{12[m]} = F_{12[m+1]} = F_{21[m+1]} on A^3 (start == 1) or
  // F_{21[n]} = F_{21[n+1]} = F_{12[n+1]} (start == 2) and returns the first
  // failing triple.
  std::optional<Triple> first_class_violation(QuadMap const& F,
                                              std::size_t    start,
                                              std::size_t    m);

  enum class Strategy { left_alt, right_alt, leftmost_reducible, recipe43 };

  std::optional<Strategy> parse_strategy(std::string_view name);
  std::string             to_string(Strategy s);

  enum class NormalizeOutcome { normal, cycle, budget_exhausted };

  struct NormalizeResult {
    Word             word;
    PositionSeq      positions;  // effective steps only
    NormalizeOutcome outcome = NormalizeOutcome::normal;

    bool normalised() const noexcept {
      return outcome == NormalizeOutcome::normal;
    }
  };

  // The default budget is 2 * |A|^|w| steps (saturating). recipe43 throws
  // std::domain_error unless F is of class (4,3).
  NormalizeResult normalize(QuadMap const&             F,
                            Word const&                w,
                            Strategy                   strategy,
                            std::optional<std::size_t> budget = std::nullopt);

  CheckReport check_domino(QuadMap const& F);

  // Throws std::domain_error without a neutral letter.
  CheckReport check_weak_domino(QuadMap const& F);

  // Weak domino restricted to triples over the given letters.
  CheckReport check_weak_domino_on(QuadMap const&               F,
                                   std::span<letter_type const> letters,
                                   std::string                  name);

}  // namespace quadnorm

#endif  // QUADNORM_CLASSIFIER_HPP_
