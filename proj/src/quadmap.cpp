#include "quadnorm/quadmap.hpp"

#include <stdexcept>

namespace quadnorm {

  std::string format_check_line(CheckReport const& report) {
    std::string line = "CHECK " + report.name + (report.passed ? " PASS" : " FAIL");
    if (report.witness) {
      line += " witness=" + report.witness->to_string();
    }
    return line;
  }

  QuadMap::QuadMap(AlphabetPtr alphabet)
      : _alphabet(std::move(alphabet)), _n(_alphabet ? _alphabet->size() : 0) {
    if (_alphabet == nullptr) {
      throw std::invalid_argument("a map needs an alphabet");
    }
    _table.resize(_n * _n);
    for (std::size_t s = 0; s < _n; ++s) {
      for (std::size_t t = 0; t < _n; ++t) {
        _table[s * _n + t] = {static_cast<letter_type>(s), static_cast<letter_type>(t)};
      }
    }
  }

  void QuadMap::set(letter_type s, letter_type t, letter_type s2, letter_type t2) {
    if (s >= _n || t >= _n || s2 >= _n || t2 >= _n) {
      throw std::out_of_range("letter id out of range for this map");
    }
    _table[s * _n + t] = {s2, t2};
  }

  QuadMap QuadMap::forget_neutral() const {
    std::vector<std::string> names;
    for (auto const& l : _alphabet->letters()) {
      names.push_back(l.name);
    }
    QuadMap result(Alphabet::make(std::move(names)));
    result._table = _table;
    return result;
  }

  QuadMap QuadMap::with_neutral(std::string const& name) const {
    if (_alphabet->has_neutral()) {
      throw std::domain_error("the map already has a neutral letter");
    }
    std::vector<std::string> names;
    for (auto const& l : _alphabet->letters()) {
      names.push_back(l.name);
    }
    names.push_back(name);
    QuadMap result(Alphabet::make(std::move(names), name));
    auto    e = static_cast<letter_type>(_n);
    for (letter_type s = 0; s < _n; ++s) {
      for (letter_type t = 0; t < _n; ++t) {
        result.set(s, t, (*this)(s, t).first, (*this)(s, t).second);
      }
    }
    for (letter_type s = 0; s <= e; ++s) {
      result.set(s, e, s, e);
      result.set(e, s, s, e);
    }
    return result;
  }

  bool QuadMap::is_graded() const {
    auto e = _alphabet->neutral();
    if (!e) {
      return true;
    }
    for (auto s : _alphabet->positive_letters()) {
      for (auto t : _alphabet->positive_letters()) {
        auto [a, b] = (*this)(s, t);
        if (a == *e || b == *e) {
          return false;
        }
      }
    }
    return true;
  }

  bool QuadMap::operator==(QuadMap const& other) const {
    return same_alphabet(_alphabet, other._alphabet) && _table == other._table;
  }

  ////////////////////////////////////////////////////////////////////////

  namespace {
    void check_alphabet(QuadMap const& F, Word const& w) {
      if (!same_alphabet(F.alphabet(), w.alphabet())) {
        throw std::invalid_argument("the word and the map use different alphabets");
      }
    }

    void check_position(std::size_t i, std::size_t len) {
      if (i < 1 || i + 1 > len) {
        throw std::out_of_range("position " + std::to_string(i)
                                + " is not valid for a word of length "
                                + std::to_string(len));
      }
    }
  }  // namespace

  Word apply_at(QuadMap const& F, Word const& w, std::size_t i) {
    check_alphabet(F, w);
    check_position(i, w.length());
    word_type letters = w.letters();
    apply_at_unchecked(F, letters, i);
    return Word(w.alphabet(), std::move(letters));
  }

  Word apply_seq(QuadMap const& F, Word const& w, PositionSeq const& u) {
    check_alphabet(F, w);
    for (auto i : u) {
      check_position(i, w.length());
    }
    word_type letters = w.letters();
    for (auto i : u) {
      apply_at_unchecked(F, letters, i);
    }
    return Word(w.alphabet(), std::move(letters));
  }

  void sweep_in_place(QuadMap const& F, word_type& w) {
    for (std::size_t i = 1; i < w.size(); ++i) {
      apply_at_unchecked(F, w, i);
    }
  }

  Word sweep(QuadMap const& F, Word const& w) {
    check_alphabet(F, w);
    word_type letters = w.letters();
    sweep_in_place(F, letters);
    return Word(w.alphabet(), std::move(letters));
  }

  CheckReport check_idempotent(QuadMap const& F) {
    auto n = static_cast<letter_type>(F.alphabet_size());
    for (letter_type s = 0; s < n; ++s) {
      for (letter_type t = 0; t < n; ++t) {
        auto [a, b] = F(s, t);
        if (!F.is_fixed(a, b)) {
          return CheckReport::fail("idempotent", Word(F.alphabet(), {s, t}),
                                   "F(F(s,t)) differs from F(s,t)");
        }
      }
    }
    return CheckReport::pass("idempotent");
  }

  CheckReport check_neutral(QuadMap const& F) {
    auto e = F.alphabet()->neutral();
    if (!e) {
      throw std::domain_error("check_neutral needs a neutral letter");
    }
    auto n = static_cast<letter_type>(F.alphabet_size());
    for (letter_type s = 0; s < n; ++s) {
      if (F(*e, s) != LetterPair{s, *e}) {
        return CheckReport::fail("neutral", Word(F.alphabet(), {*e, s}),
                                 "F(e,s) differs from (s,e)");
      }
      if (F(s, *e) != LetterPair{s, *e}) {
        return CheckReport::fail("neutral", Word(F.alphabet(), {s, *e}),
                                 "F(s,e) differs from (s,e)");
      }
    }
    return CheckReport::pass("neutral");
  }

}  // namespace quadnorm
