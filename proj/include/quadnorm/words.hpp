// Alphabets, letters, words and position sequences.
//
// Letters are interned as small integers when an Alphabet is built; every
// word operation compares ids. A Word keeps a shared pointer to its
// alphabet so that mixing words over different alphabets is caught.

#ifndef QUADNORM_WORDS_HPP_
#define QUADNORM_WORDS_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace quadnorm {

  using letter_type = std::uint16_t;
  using word_type   = std::vector<letter_type>;

  struct Letter {
    letter_type id;
    std::string name;
  };

  class Alphabet;
  using AlphabetPtr = std::shared_ptr<Alphabet const>;

  class Alphabet {
   public:
    static constexpr std::size_t max_size = 256;

    // Throws std::invalid_argument on an empty list, duplicate or blank
    // names, or a neutral name that is not among the letters.
    static AlphabetPtr make(std::vector<std::string>  names,
                            std::optional<std::string> neutral = std::nullopt);

    std::size_t size() const noexcept {
      return _letters.size();
    }

    std::vector<Letter> const& letters() const noexcept {
      return _letters;
    }

    std::string const& name(letter_type id) const;

    std::optional<letter_type> find(std::string_view name) const;

    // Like find, but throws std::invalid_argument for an unknown name.
    letter_type letter(std::string_view name) const;

    std::optional<letter_type> neutral() const noexcept {
      return _neutral;
    }

    bool has_neutral() const noexcept {
      return _neutral.has_value();
    }

    bool is_neutral(letter_type id) const noexcept {
      return _neutral && *_neutral == id;
    }

    // S_+ : every letter except the neutral one, in alphabet order.
    std::vector<letter_type> const& positive_letters() const noexcept {
      return _positive;
    }

    bool operator==(Alphabet const& other) const;

   private:
    Alphabet() = default;

    std::vector<Letter>        _letters;
    std::optional<letter_type> _neutral;
    std::vector<letter_type>   _positive;
  };

  // Structural comparison, short-circuiting on pointer identity.
  bool same_alphabet(AlphabetPtr const& a, AlphabetPtr const& b);

  class Word {
   public:
    Word() = default;
    explicit Word(AlphabetPtr alphabet, word_type letters = {});
    Word(AlphabetPtr alphabet, std::initializer_list<letter_type> letters);

    // Space-separated letter names; "^" (or an empty string) is the empty
    // word.
    static Word parse(AlphabetPtr alphabet, std::string_view text);

    AlphabetPtr const& alphabet() const noexcept {
      return _alphabet;
    }

    word_type const& letters() const noexcept {
      return _letters;
    }

    std::span<letter_type const> view() const noexcept {
      return _letters;
    }

    std::size_t length() const noexcept {
      return _letters.size();
    }

    bool empty() const noexcept {
      return _letters.empty();
    }

    letter_type operator[](std::size_t i) const {
      return _letters[i];
    }

    auto begin() const noexcept {
      return _letters.begin();
    }

    auto end() const noexcept {
      return _letters.end();
    }

    bool contains_neutral() const noexcept;

    std::string to_string() const;

    bool operator==(Word const& other) const;
    bool operator<(Word const& other) const;

   private:
    AlphabetPtr _alphabet;
    word_type   _letters;
  };

  // Names separated by single spaces; "^" for the empty word.
  std::string format_letters(Alphabet const& alphabet,
                             std::span<letter_type const> letters);

  // 1-based positions, as in F_{i_1}, ..., F_{i_n}.
  class PositionSeq {
   public:
    PositionSeq() = default;
    explicit PositionSeq(std::vector<std::size_t> positions);
    PositionSeq(std::initializer_list<std::size_t> positions);

    std::vector<std::size_t> const& positions() const noexcept {
      return _positions;
    }

    std::size_t size() const noexcept {
      return _positions.size();
    }

    bool empty() const noexcept {
      return _positions.empty();
    }

    auto begin() const noexcept {
      return _positions.begin();
    }

    auto end() const noexcept {
      return _positions.end();
    }

    void push_back(std::size_t position);

    std::string to_string() const;

    bool operator==(PositionSeq const&) const = default;

   private:
    std::vector<std::size_t> _positions;
  };

  PositionSeq concat(PositionSeq const& u, PositionSeq const& v);

  Word concat(Word const& u, Word const& v);

  // Removes every occurrence of the neutral letter. Throws
  // std::domain_error when the alphabet has no neutral letter.
  Word strip_neutral(Word const& w);

  // Appends neutral letters up to target_len. Throws std::domain_error
  // without a neutral letter and std::invalid_argument if
  // target_len < |w|.
  Word pad_neutral(Word const& w, std::size_t target_len);

  // 12[m] for start == 1, 21[m] for start == 2.
  PositionSeq alt_seq(std::size_t start, std::size_t m);

  // All words of length exactly len over the given letters, in
  // lexicographic order of letter positions within `letters`.
  std::vector<word_type> all_words(std::span<letter_type const> letters,
                                   std::size_t                  len);

}  // namespace quadnorm

#endif  // QUADNORM_WORDS_HPP_
