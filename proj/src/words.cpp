#include "quadnorm/words.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace quadnorm {

  AlphabetPtr Alphabet::make(std::vector<std::string>  names,
                             std::optional<std::string> neutral) {
    if (names.empty()) {
      throw std::invalid_argument("an alphabet must contain at least one letter");
    }
    if (names.size() > max_size) {
      throw std::invalid_argument("an alphabet may contain at most "
                                  + std::to_string(max_size) + " letters");
    }
    std::unordered_set<std::string> seen;
    auto                            result = std::shared_ptr<Alphabet>(new Alphabet());
    for (std::size_t i = 0; i < names.size(); ++i) {
      auto const& n = names[i];
      if (n.empty() || n.find_first_of(" \t\r\n") != std::string::npos) {
        throw std::invalid_argument("invalid letter name \"" + n + "\"");
      }
      if (n == "^") {
        throw std::invalid_argument("\"^\" is reserved for the empty word");
      }
      if (!seen.insert(n).second) {
        throw std::invalid_argument("duplicate letter name \"" + n + "\"");
      }
      result->_letters.push_back({static_cast<letter_type>(i), n});
    }
    if (neutral) {
      auto it = std::find(names.begin(), names.end(), *neutral);
      if (it == names.end()) {
        throw std::invalid_argument("neutral letter \"" + *neutral
                                    + "\" is not in the alphabet");
      }
      result->_neutral = static_cast<letter_type>(it - names.begin());
    }
    for (auto const& l : result->_letters) {
      if (!result->is_neutral(l.id)) {
        result->_positive.push_back(l.id);
      }
    }
    return result;
  }

  std::string const& Alphabet::name(letter_type id) const {
    if (id >= _letters.size()) {
      throw std::out_of_range("letter id " + std::to_string(id)
                              + " out of range");
    }
    return _letters[id].name;
  }

  std::optional<letter_type> Alphabet::find(std::string_view name) const {
    for (auto const& l : _letters) {
      if (l.name == name) {
        return l.id;
      }
    }
    return std::nullopt;
  }

  letter_type Alphabet::letter(std::string_view name) const {
    auto id = find(name);
    if (!id) {
      throw std::invalid_argument("unknown letter \"" + std::string(name)
                                  + "\"");
    }
    return *id;
  }

  bool Alphabet::operator==(Alphabet const& other) const {
    if (_neutral != other._neutral || _letters.size() != other._letters.size()) {
      return false;
    }
    for (std::size_t i = 0; i < _letters.size(); ++i) {
      if (_letters[i].name != other._letters[i].name) {
        return false;
      }
    }
    return true;
  }

  bool same_alphabet(AlphabetPtr const& a, AlphabetPtr const& b) {
    if (a == b) {
      return true;
    }
    if (a == nullptr || b == nullptr) {
      return false;
    }
    return *a == *b;
  }

  std::string format_letters(Alphabet const&              alphabet,
                             std::span<letter_type const> letters) {
    if (letters.empty()) {
      return "^";
    }
    std::string out;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (i != 0) {
        out += ' ';
      }
      out += alphabet.name(letters[i]);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Word
  ////////////////////////////////////////////////////////////////////////

  Word::Word(AlphabetPtr alphabet, word_type letters)
      : _alphabet(std::move(alphabet)), _letters(std::move(letters)) {
    if (_alphabet == nullptr) {
      throw std::invalid_argument("a word needs an alphabet");
    }
    for (auto l : _letters) {
      if (l >= _alphabet->size()) {
        throw std::invalid_argument("letter id " + std::to_string(l)
                                    + " is not in the alphabet");
      }
    }
  }

  Word::Word(AlphabetPtr alphabet, std::initializer_list<letter_type> letters)
      : Word(std::move(alphabet), word_type(letters)) {}

  Word Word::parse(AlphabetPtr alphabet, std::string_view text) {
    if (alphabet == nullptr) {
      throw std::invalid_argument("a word needs an alphabet");
    }
    std::istringstream in{std::string(text)};
    word_type          letters;
    std::string        token;
    while (in >> token) {
      if (token == "^") {
        continue;
      }
      letters.push_back(alphabet->letter(token));
    }
    return Word(std::move(alphabet), std::move(letters));
  }

  bool Word::contains_neutral() const noexcept {
    auto n = _alphabet ? _alphabet->neutral() : std::nullopt;
    return n && std::find(_letters.begin(), _letters.end(), *n) != _letters.end();
  }

  std::string Word::to_string() const {
    return _alphabet ? format_letters(*_alphabet, _letters) : std::string("^");
  }

  bool Word::operator==(Word const& other) const {
    return _letters == other._letters && same_alphabet(_alphabet, other._alphabet);
  }

  bool Word::operator<(Word const& other) const {
    if (_letters.size() != other._letters.size()) {
      return _letters.size() < other._letters.size();
    }
    return _letters < other._letters;
  }

  ////////////////////////////////////////////////////////////////////////
  // PositionSeq
  ////////////////////////////////////////////////////////////////////////

  PositionSeq::PositionSeq(std::vector<std::size_t> positions)
      : _positions(std::move(positions)) {
    for (auto p : _positions) {
      if (p == 0) {
        throw std::invalid_argument("positions are 1-based");
      }
    }
  }

  PositionSeq::PositionSeq(std::initializer_list<std::size_t> positions)
      : PositionSeq(std::vector<std::size_t>(positions)) {}

  void PositionSeq::push_back(std::size_t position) {
    if (position == 0) {
      throw std::invalid_argument("positions are 1-based");
    }
    _positions.push_back(position);
  }

  std::string PositionSeq::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < _positions.size(); ++i) {
      if (i != 0) {
        out += ' ';
      }
      out += std::to_string(_positions[i]);
    }
    return out;
  }

  PositionSeq concat(PositionSeq const& u, PositionSeq const& v) {
    auto all = u.positions();
    all.insert(all.end(), v.begin(), v.end());
    return PositionSeq(std::move(all));
  }

  ////////////////////////////////////////////////////////////////////////
  // Free functions
  ////////////////////////////////////////////////////////////////////////

  Word concat(Word const& u, Word const& v) {
    if (!same_alphabet(u.alphabet(), v.alphabet())) {
      throw std::invalid_argument("cannot concatenate words over different alphabets");
    }
    word_type letters = u.letters();
    letters.insert(letters.end(), v.begin(), v.end());
    return Word(u.alphabet(), std::move(letters));
  }

  Word strip_neutral(Word const& w) {
    auto n = w.alphabet()->neutral();
    if (!n) {
      throw std::domain_error("the alphabet has no neutral letter");
    }
    word_type letters;
    letters.reserve(w.length());
    std::copy_if(w.begin(), w.end(), std::back_inserter(letters),
                 [n](letter_type l) { return l != *n; });
    return Word(w.alphabet(), std::move(letters));
  }

  Word pad_neutral(Word const& w, std::size_t target_len) {
    auto n = w.alphabet()->neutral();
    if (!n) {
      throw std::domain_error("the alphabet has no neutral letter");
    }
    if (target_len < w.length()) {
      throw std::invalid_argument("cannot pad a word of length "
                                  + std::to_string(w.length()) + " to length "
                                  + std::to_string(target_len));
    }
    word_type letters = w.letters();
    letters.resize(target_len, *n);
    return Word(w.alphabet(), std::move(letters));
  }

  PositionSeq alt_seq(std::size_t start, std::size_t m) {
    if (start != 1 && start != 2) {
      throw std::invalid_argument("alternating sequences start at 1 or 2");
    }
    std::vector<std::size_t> out(m);
    for (std::size_t i = 0; i < m; ++i) {
      out[i] = (i % 2 == 0) ? start : 3 - start;
    }
    return PositionSeq(std::move(out));
  }

  std::vector<word_type> all_words(std::span<letter_type const> letters,
                                   std::size_t                  len) {
    std::vector<word_type> out;
    if (letters.empty()) {
      if (len == 0) {
        out.emplace_back();
      }
      return out;
    }
    std::vector<std::size_t> idx(len, 0);
    while (true) {
      word_type w(len);
      for (std::size_t i = 0; i < len; ++i) {
        w[i] = letters[idx[i]];
      }
      out.push_back(std::move(w));
      std::size_t k = len;
      while (k > 0) {
        --k;
        if (++idx[k] < letters.size()) {
          break;
        }
        idx[k] = 0;
        if (k == 0) {
          return out;
        }
      }
      if (len == 0) {
        return out;
      }
    }
  }

}  // namespace quadnorm
