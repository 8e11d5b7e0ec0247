#include "quadnorm/qmap_format.hpp"

#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace quadnorm {

  namespace {

    std::vector<std::string> tokens(std::string_view line) {
      std::vector<std::string> out;
      std::istringstream       in{std::string(line)};
      std::string              tok;
      while (in >> tok) {
        out.push_back(tok);
      }
      return out;
    }

  }  // namespace

  QuadMap parse_qmap(std::string_view text) {
    std::optional<std::vector<std::string>>              names;
    std::optional<std::string>                           neutral;
    std::vector<std::pair<std::size_t, std::vector<std::string>>> maps;
    bool                                                 default_identity = false;
    std::size_t                                          alphabet_line    = 0;

    std::size_t lineno = 0;
    std::size_t start  = 0;
    while (start <= text.size()) {
      auto end = text.find('\n', start);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      ++lineno;
      auto line = text.substr(start, end - start);
      start     = end + 1;
      if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      auto tok = tokens(line);
      if (tok.empty()) {
        continue;
      }
      auto const& kw = tok[0];
      if (!names && kw != "alphabet") {
        throw ParseError(lineno, "the first line must declare the alphabet");
      }
      if (kw == "alphabet") {
        if (names) {
          throw ParseError(lineno, "the alphabet is declared twice");
        }
        if (tok.size() < 2) {
          throw ParseError(lineno, "the alphabet is empty");
        }
        names.emplace(tok.begin() + 1, tok.end());
        alphabet_line = lineno;
        for (auto const& n : *names) {
          if (n == "->") {
            throw ParseError(lineno, "'->' cannot be a letter");
          }
        }
      } else if (kw == "neutral") {
        if (neutral) {
          throw ParseError(lineno, "more than one neutral line");
        }
        if (tok.size() != 2) {
          throw ParseError(lineno, "expected 'neutral <name>'");
        }
        neutral = tok[1];
      } else if (kw == "map") {
        if (tok.size() != 6 || tok[3] != "->") {
          throw ParseError(lineno, "expected 'map <s> <t> -> <s'> <t'>'");
        }
        maps.emplace_back(lineno, std::vector<std::string>(tok.begin() + 1, tok.end()));
      } else if (kw == "default") {
        if (tok.size() != 2 || tok[1] != "identity") {
          throw ParseError(lineno, "expected 'default identity'");
        }
        default_identity = true;
      } else {
        throw ParseError(lineno, "unknown directive '" + kw + "'");
      }
      if (end == text.size()) {
        break;
      }
    }
    if (!names) {
      throw ParseError(lineno, "no alphabet declared");
    }

    AlphabetPtr A;
    try {
      A = Alphabet::make(*names, neutral);
    } catch (std::invalid_argument const& e) {
      throw ParseError(alphabet_line, e.what());
    }
    QuadMap                   F(A);
    std::set<LetterPair>      listed;
    for (auto const& [ln, m] : maps) {
      letter_type id[4];
      for (int i = 0; i < 4; ++i) {
        auto const& name = m[i < 2 ? i : i + 1];
        auto        f    = A->find(name);
        if (!f) {
          throw ParseError(ln, "undeclared letter '" + name + "'");
        }
        id[i] = *f;
      }
      if (!listed.emplace(id[0], id[1]).second) {
        throw ParseError(ln, "pair " + m[0] + " " + m[1] + " is listed twice");
      }
      F.set(id[0], id[1], id[2], id[3]);
    }
    if (!default_identity && listed.size() != A->size() * A->size()) {
      throw ParseError(lineno, "some pairs are not listed and there is no 'default identity'");
    }
    return F;
  }

  std::string to_qmap(QuadMap const& F) {
    auto const& A = F.alphabet();
    std::string out = "alphabet";
    for (auto const& l : A->letters()) {
      out += " " + l.name;
    }
    out += "\n";
    if (auto e = A->neutral()) {
      out += "neutral " + A->name(*e) + "\n";
    }
    auto n = static_cast<letter_type>(A->size());
    for (letter_type s = 0; s < n; ++s) {
      for (letter_type t = 0; t < n; ++t) {
        if (!F.is_fixed(s, t)) {
          auto [a, b] = F(s, t);
          out += "map " + A->name(s) + " " + A->name(t) + " -> " + A->name(a) + " " + A->name(b)
                 + "\n";
        }
      }
    }
    out += "default identity\n";
    return out;
  }

}  // namespace quadnorm
