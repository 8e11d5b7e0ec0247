#include "quadnorm/monoid_model.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "quadnorm/classifier.hpp"
#include "quadnorm/factorability.hpp"
#include "quadnorm/rewriting.hpp"

namespace quadnorm {

  MonoidOracle::MonoidOracle(std::string name, std::vector<value_type> images)
      : _name(std::move(name)), _images(std::move(images)) {
    if (_images.empty()) {
      throw std::invalid_argument("an oracle needs one image per letter");
    }
    _dim = _images.front().size();
    for (auto const& v : _images) {
      if (v.size() != _dim) {
        throw std::invalid_argument("oracle images must have equal dimension");
      }
    }
  }

  MonoidOracle::value_type MonoidOracle::ev(std::span<letter_type const> w) const {
    value_type out(_dim, 0);
    for (auto x : w) {
      auto const& img = _images.at(x);
      for (std::size_t i = 0; i < _dim; ++i) {
        out[i] += img[i];
      }
    }
    return out;
  }

  std::string to_string(MonoidModel::Route r) {
    switch (r) {
      case MonoidModel::Route::automatic:
        return "automatic";
      case MonoidModel::Route::n_phi:
        return "n_phi";
      case MonoidModel::Route::rewriting:
        return "rewriting";
    }
    return "unknown";
  }

  namespace {

    RewriteSystem model_rules(QuadMap const& F) {
      return derive_rules(F, F.alphabet()->has_neutral() ? DeriveMode::mod_e : DeriveMode::plain);
    }

  }  // namespace

  MonoidModel::MonoidModel(QuadMap F, Route route) : _F(std::move(F)), _graded(_F.is_graded()) {
    if (route == Route::automatic) {
      bool factorable = _F.alphabet()->has_neutral()
                        && check_local_factorability_axioms(_F).overall;
      route = factorable ? Route::n_phi : Route::rewriting;
    }
    _route = route;
    if (_route == Route::rewriting) {
      auto t = termination_analysis(model_rules(_F), 4);
      if (t.verdict != TerminationVerdict::terminating_at_scale) {
        throw std::domain_error("the derived rewriting system does not terminate on short words");
      }
    }
  }

  word_type MonoidModel::normal_form(word_type w) const {
    if (auto e = _F.alphabet()->neutral()) {
      std::erase(w, *e);
    }
    if (_route == Route::n_phi) {
      return n_phi(_F, w);
    }
    // Rewriting route: every rule either shortens the word or rewrites
    // within a finite set, and the system terminates at the checked scale.
    std::size_t const budget = 1'000'000;
    for (std::size_t step = 0; step < budget; ++step) {
      std::size_t pos = 0;
      for (std::size_t i = 1; i < w.size(); ++i) {
        if (!_F.is_fixed(w[i - 1], w[i])) {
          pos = i;
          break;
        }
      }
      if (pos == 0) {
        return w;
      }
      auto [a, b] = _F(w[pos - 1], w[pos]);
      w[pos - 1]  = a;
      w[pos]      = b;
      if (auto e = _F.alphabet()->neutral()) {
        std::erase(w, *e);
      }
    }
    throw std::runtime_error("rewriting did not terminate within budget");
  }

  MonoidElement MonoidModel::identity() const {
    return {Word(alphabet())};
  }

  MonoidElement MonoidModel::ev(std::span<letter_type const> w) const {
    return {Word(alphabet(), normal_form(word_type(w.begin(), w.end())))};
  }

  MonoidElement MonoidModel::ev(Word const& w) const {
    if (!same_alphabet(alphabet(), w.alphabet())) {
      throw std::invalid_argument("the word and the model use different alphabets");
    }
    return ev(w.view());
  }

  MonoidElement MonoidModel::generator(letter_type s) const {
    word_type w{s};
    return ev(w);
  }

  std::vector<MonoidElement> MonoidModel::enumerate_elements(std::size_t max_len) const {
    std::vector<MonoidElement> out;
    for (std::size_t len = 0; len <= max_len; ++len) {
      for (auto& w : all_words(alphabet()->positive_letters(), len)) {
        if (is_normal(_F, w)) {
          out.push_back({Word(alphabet(), std::move(w))});
        }
      }
    }
    return out;
  }

  MonoidElement MonoidModel::multiply(MonoidElement const& f, MonoidElement const& g) const {
    word_type w = f.canonical.letters();
    w.insert(w.end(), g.canonical.begin(), g.canonical.end());
    return ev(w);
  }

  FactorisationPair MonoidModel::eta(MonoidElement const& f) const {
    if (f.is_identity()) {
      return {identity(), identity()};
    }
    auto const& w = f.canonical.letters();
    return {{Word(alphabet(), {w.front()})},
            {Word(alphabet(), word_type(w.begin() + 1, w.end()))}};
  }

  Word MonoidModel::nf_eta(MonoidElement const& f) const {
    word_type     out;
    MonoidElement rest = f;
    while (!rest.is_identity()) {
      auto [head, tail] = eta(rest);
      out.push_back(head.canonical[0]);
      rest = std::move(tail);
    }
    return Word(alphabet(), out);
  }

  MonoidModel::Divisibility MonoidModel::left_divides(MonoidElement const& f,
                                                      MonoidElement const& g,
                                                      std::size_t          search_len) const {
    Divisibility d;
    if (_graded) {
      // Every complement has length |g| - |f|.
      if (f.length() > g.length()) {
        d.complete = true;
        return d;
      }
      std::size_t k = g.length() - f.length();
      d.complete    = search_len >= k;
      if (!d.complete) {
        return d;
      }
      for (auto const& w : all_words(alphabet()->positive_letters(), k)) {
        if (is_normal(_F, w) && multiply(f, {Word(alphabet(), w)}) == g) {
          d.divides = true;
          return d;
        }
      }
      return d;
    }
    for (auto const& h : enumerate_elements(search_len)) {
      if (multiply(f, h) == g) {
        d.divides = true;
        return d;
      }
    }
    return d;
  }

  namespace {

    std::string letters_of(MonoidElement const& f) {
      return f.canonical.to_string();
    }

    std::vector<std::vector<MonoidElement>> elements_by_length(MonoidModel const& M,
                                                               std::size_t        max_len) {
      std::vector<std::vector<MonoidElement>> out(max_len + 1);
      for (auto& f : M.enumerate_elements(max_len)) {
        out[f.length()].push_back(std::move(f));
      }
      return out;
    }

    Word join(std::initializer_list<Word> parts, AlphabetPtr const& A) {
      Word out(A);
      for (auto const& p : parts) {
        out = concat(out, p);
      }
      return out;
    }

  }  // namespace

  CheckReport check_factorisation_axioms(MonoidModel const& M, std::size_t max_len) {
    std::string const name = "factorisation";
    auto const&       A    = M.alphabet();
    auto const&       F    = M.map();
    // eta is a map on M only if equal elements get equal canonical words:
    // a word and its image under a defining relation must agree.
    for (std::size_t len = 2; len <= max_len; ++len) {
      for (auto const& w : all_words(A->positive_letters(), len)) {
        auto f = M.ev(w);
        for (std::size_t i = 1; i < len; ++i) {
          auto v = w;
          apply_at_unchecked(F, v, i);
          if (M.ev(v) != f) {
            return CheckReport::fail(name, Word(A, w),
                                     "rewriting at position " + std::to_string(i)
                                         + " changes the element");
          }
        }
      }
    }
    for (auto const& f : M.enumerate_elements(max_len)) {
      if (f.is_identity()) {
        continue;
      }
      auto [head, tail] = M.eta(f);
      if (head.length() != 1 || A->is_neutral(head.canonical[0])) {
        return CheckReport::fail(name, f.canonical, "the head is not a letter of S_+");
      }
      if (M.multiply(head, tail) != f) {
        return CheckReport::fail(name, f.canonical, "head * tail does not give the element back");
      }
      if (f.length() != 1 + tail.length()) {
        return CheckReport::fail(name, f.canonical, "the factorisation is not geodesic");
      }
      // |f| must be the least number of generators representing f.
      for (std::size_t len = 0; len < f.length(); ++len) {
        for (auto const& w : all_words(A->positive_letters(), len)) {
          if (M.ev(w) == f) {
            return CheckReport::fail(name, f.canonical,
                                     "the shorter word " + Word(A, w).to_string()
                                         + " represents the same element");
          }
        }
      }
    }
    return CheckReport::pass(name);
  }

  CheckReport check_stronger_assumption(MonoidModel const& M, std::size_t max_len) {
    std::string const name     = "stronger-assumption";
    auto const&       A        = M.alphabet();
    auto              elements = M.enumerate_elements(max_len);
    for (auto s : A->positive_letters()) {
      auto gs = M.generator(s);
      for (auto const& f : elements) {
        if (f.is_identity()) {
          continue;
        }
        auto sf      = M.eta(M.multiply(gs, f));
        auto [fh, ft] = M.eta(f);
        auto sfh     = M.eta(M.multiply(gs, fh));
        if (sf.head != sfh.head || sf.tail != M.multiply(sfh.tail, ft)) {
          return CheckReport::fail(name, concat(gs.canonical, f.canonical),
                                   "s=" + letters_of(gs) + " f=" + letters_of(f));
        }
      }
    }
    return CheckReport::pass(name);
  }

  CheckReport check_stable212_elements(MonoidModel const& M, std::size_t max_len) {
    std::string const name     = "stable212-elements";
    auto              elements = M.enumerate_elements(max_len);
    auto              em       = [&](MonoidElement& x, MonoidElement& y) {
      auto p = M.eta(M.multiply(x, y));
      x      = std::move(p.head);
      y      = std::move(p.tail);
    };
    for (auto const& f : elements) {
      for (auto const& g : elements) {
        for (auto const& h : elements) {
          std::array<MonoidElement, 3> x{f, g, h};
          em(x[1], x[2]);
          em(x[0], x[1]);
          em(x[1], x[2]);
          auto y = x;
          em(y[0], y[1]);
          if (x != y) {
            return CheckReport::fail(
                name, join({f.canonical, g.canonical, h.canonical}, M.alphabet()),
                "f=" + letters_of(f) + " g=" + letters_of(g) + " h=" + letters_of(h)
                    + " (bounded to length " + std::to_string(max_len) + ")");
          }
        }
      }
    }
    return CheckReport::pass(name, "bounded to length " + std::to_string(max_len));
  }

  CheckReport check_left_weighted(MonoidModel const& M, std::size_t search_len) {
    std::string const name = "left-weighted";
    auto const&       A    = M.alphabet();
    auto const&       F    = M.map();
    bool              bounded = false;
    for (std::size_t i = 0; i < A->size(); ++i) {
      for (std::size_t j = 0; j < A->size(); ++j) {
        auto s = static_cast<letter_type>(i);
        auto t = static_cast<letter_type>(j);
        auto d = M.left_divides(M.generator(s), M.generator(F(s, t).first), search_len);
        if (!d.divides) {
          return CheckReport::fail(name, Word(A, {s, t}),
                                   d.complete ? "s does not divide s'"
                                              : "s does not divide s' within the search bound");
        }
        bounded = bounded || !d.complete;
      }
    }
    return CheckReport::pass(name, bounded ? "some divisions found only by bounded search" : "");
  }

  CheckReport check_greedy(MonoidModel const& M, std::size_t max_len) {
    std::string const name     = "greedy";
    auto const&       A        = M.alphabet();
    auto const&       F        = M.map();
    auto              elements = M.enumerate_elements(max_len);
    // Normal pairs occurring in elements up to max_len.
    std::vector<std::pair<letter_type, letter_type>> pairs;
    if (max_len >= 2) {
      for (auto s : A->positive_letters()) {
        for (auto t : A->positive_letters()) {
          if (F.is_fixed(s, t)) {
            pairs.emplace_back(s, t);
          }
        }
      }
    }
    for (auto const& f : elements) {
      for (auto [si, sj] : pairs) {
        auto fs   = M.multiply(f, M.generator(si));
        auto fss  = M.multiply(fs, M.generator(sj));
        auto bound = std::max(fss.length(), max_len + 2);
        for (auto t : A->positive_letters()) {
          auto gt = M.generator(t);
          if (!M.left_divides(gt, fss, bound).divides) {
            continue;
          }
          auto d = M.left_divides(gt, fs, bound);
          if (!d.divides) {
            return CheckReport::fail(
                name, join({gt.canonical, f.canonical, Word(A, {si, sj})}, A),
                "t=" + letters_of(gt) + " divides f s_i s_i+1 but not f s_i"
                    + (d.complete ? "" : " within the search bound"));
          }
        }
      }
    }
    return CheckReport::pass(name);
  }

  CheckReport check_left_cancellative(MonoidModel const& M, std::size_t max_len) {
    std::string const name      = "left-cancellative";
    auto              by_length = elements_by_length(M, max_len);
    for (std::size_t lf = 0; lf <= max_len; ++lf) {
      for (auto const& f : by_length[lf]) {
        std::map<MonoidElement, MonoidElement const*> seen;
        for (std::size_t lg = 0; lf + lg <= max_len; ++lg) {
          for (auto const& g : by_length[lg]) {
            auto [it, fresh] = seen.emplace(M.multiply(f, g), &g);
            if (!fresh) {
              return CheckReport::fail(
                  name, join({f.canonical, it->second->canonical, g.canonical}, M.alphabet()),
                  "f=" + letters_of(f) + " g=" + letters_of(*it->second) + " h=" + letters_of(g)
                      + " with fg = fh");
            }
          }
        }
      }
    }
    return CheckReport::pass(name, "bounded to length " + std::to_string(max_len));
  }

  CheckReport check_no_invertibles(MonoidModel const& M, std::size_t max_len) {
    std::string const name     = "no-invertibles";
    auto              elements = M.enumerate_elements(max_len);
    for (auto const& f : elements) {
      if (f.is_identity()) {
        continue;
      }
      for (auto const& g : elements) {
        if (M.multiply(f, g).is_identity()) {
          return CheckReport::fail(name, concat(f.canonical, g.canonical),
                                   "f=" + letters_of(f) + " g=" + letters_of(g) + " with fg = 1");
        }
      }
    }
    return CheckReport::pass(name, "bounded to length " + std::to_string(max_len));
  }

  CheckReport check_monoid_laws(MonoidModel const& M, std::size_t max_len) {
    std::string const name = "monoid-laws";
    auto              one  = M.identity();
    auto              by_length = elements_by_length(M, max_len);
    for (auto const& bucket : by_length) {
      for (auto const& f : bucket) {
        if (M.multiply(f, one) != f || M.multiply(one, f) != f) {
          return CheckReport::fail(name, f.canonical, "the identity is not neutral");
        }
      }
    }
    for (std::size_t lf = 0; lf <= max_len; ++lf) {
      for (std::size_t lg = 0; lf + lg <= max_len; ++lg) {
        for (std::size_t lh = 0; lf + lg + lh <= max_len; ++lh) {
          for (auto const& f : by_length[lf]) {
            for (auto const& g : by_length[lg]) {
              auto fg = M.multiply(f, g);
              for (auto const& h : by_length[lh]) {
                if (M.multiply(fg, h) != M.multiply(f, M.multiply(g, h))) {
                  return CheckReport::fail(
                      name, join({f.canonical, g.canonical, h.canonical}, M.alphabet()),
                      "f=" + letters_of(f) + " g=" + letters_of(g) + " h=" + letters_of(h)
                          + " is not associative");
                }
              }
            }
          }
        }
      }
    }
    return CheckReport::pass(name);
  }

  CheckReport check_oracle_agreement(MonoidModel const&  M,
                                     MonoidOracle const& oracle,
                                     std::size_t         max_len) {
    std::string const        name = "oracle";
    auto const&              A    = M.alphabet();
    std::vector<letter_type> letters(A->size());
    for (std::size_t i = 0; i < letters.size(); ++i) {
      letters[i] = static_cast<letter_type>(i);
    }
    for (std::size_t len = 0; len <= max_len; ++len) {
      for (auto const& w : all_words(letters, len)) {
        if (oracle.ev(w) != oracle.ev(M.ev(w).canonical)) {
          return CheckReport::fail(name, Word(A, w),
                                   "the model and the " + oracle.name() + " oracle disagree");
        }
      }
    }
    std::map<MonoidOracle::value_type, MonoidElement> values;
    for (auto const& f : M.enumerate_elements(max_len)) {
      auto [it, fresh] = values.emplace(oracle.ev(f.canonical), f);
      if (!fresh) {
        return CheckReport::fail(name, concat(it->second.canonical, f.canonical),
                                 "elements " + letters_of(it->second) + " and " + letters_of(f)
                                     + " have the same oracle value");
      }
    }
    return CheckReport::pass(name);
  }

  CheckReport check_nf_eta(MonoidModel const& M, std::size_t max_len) {
    for (auto const& f : M.enumerate_elements(max_len)) {
      if (M.nf_eta(f) != f.canonical) {
        return CheckReport::fail("nf-eta", f.canonical, "nf_eta differs from the canonical word");
      }
    }
    return CheckReport::pass("nf-eta");
  }

}  // namespace quadnorm
