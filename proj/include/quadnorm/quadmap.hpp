// The finite table F : A^2 -> A^2 and its positional application to words.
//
// The same table plays the role of the restriction of a quadratic
// normalisation to length-two words and of a local factorability
// structure; which reading applies depends on the checks it passes.

#ifndef QUADNORM_QUADMAP_HPP_
#define QUADNORM_QUADMAP_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "quadnorm/check_report.hpp"
#include "quadnorm/words.hpp"

namespace quadnorm {

  using LetterPair = std::pair<letter_type, letter_type>;

  class QuadMap {
   public:
    QuadMap() = default;

    // The identity table over the alphabet.
    explicit QuadMap(AlphabetPtr alphabet);

    AlphabetPtr const& alphabet() const noexcept {
      return _alphabet;
    }

    std::size_t alphabet_size() const noexcept {
      return _n;
    }

    LetterPair operator()(letter_type s, letter_type t) const noexcept {
      return _table[s * _n + t];
    }

    bool is_fixed(letter_type s, letter_type t) const noexcept {
      return _table[s * _n + t] == LetterPair{s, t};
    }

    void set(letter_type s, letter_type t, letter_type s2, letter_type t2);
    void set(LetterPair from, LetterPair to) {
      set(from.first, from.second, to.first, to.second);
    }

    // The same table over a copy of the alphabet in which the neutral
    // letter is an ordinary letter.
    QuadMap forget_neutral() const;

    // Adjoins a new letter, declared neutral, with F(s,e) = F(e,s) = (s,e).
    // Throws std::domain_error if a neutral letter already exists.
    QuadMap with_neutral(std::string const& name) const;

    // True when no pair over S_+ is sent to a pair containing the neutral
    // letter; always true without a neutral letter.
    bool is_graded() const;

    bool operator==(QuadMap const& other) const;

   private:
    AlphabetPtr             _alphabet;
    std::size_t             _n = 0;
    std::vector<LetterPair> _table;
  };

  // In-place application on raw letters; i is 1-based and unchecked.
  inline void apply_at_unchecked(QuadMap const& F, std::span<letter_type> w, std::size_t i) {
    auto [a, b] = F(w[i - 1], w[i]);
    w[i - 1]    = a;
    w[i]        = b;
  }

  // Throws std::out_of_range unless 1 <= i <= |w| - 1, and
  // std::invalid_argument if w is over another alphabet.
  Word apply_at(QuadMap const& F, Word const& w, std::size_t i);

  // F_{i_n} o ... o F_{i_1}; the first listed position is applied first.
  Word apply_seq(QuadMap const& F, Word const& w, PositionSeq const& u);

  // F_{|w|-1} o ... o F_1; words of length at most one are unchanged.
  Word sweep(QuadMap const& F, Word const& w);
  void sweep_in_place(QuadMap const& F, word_type& w);

  CheckReport check_idempotent(QuadMap const& F);

  // F(s,e) = (s,e) and F(e,s) = (s,e) for every s (so F(e,e) = (e,e)).
  // Throws std::domain_error without a neutral letter.
  CheckReport check_neutral(QuadMap const& F);

}  // namespace quadnorm

#endif  // QUADNORM_QUADMAP_HPP_
