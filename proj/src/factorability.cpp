#include "quadnorm/factorability.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "quadnorm/classifier.hpp"
#include "quadnorm/monoid_model.hpp"
#include "quadnorm/rewriting.hpp"

namespace quadnorm {

  word_type n_phi(QuadMap const& F, std::span<letter_type const> w) {
    if (w.empty()) {
      return {};
    }
    auto e = F.alphabet()->neutral();
    if (e && std::find(w.begin(), w.end(), *e) != w.end()) {
      word_type stripped;
      for (auto x : w) {
        if (x != *e) {
          stripped.push_back(x);
        }
      }
      return n_phi(F, stripped);
    }
    word_type u{w[0]};
    auto      rest = n_phi(F, w.subspan(1));
    u.insert(u.end(), rest.begin(), rest.end());
    sweep_in_place(F, u);
    if (e && std::find(u.begin(), u.end(), *e) != u.end()) {
      return n_phi(F, u);
    }
    return u;
  }

  Word n_phi(QuadMap const& F, Word const& w) {
    if (!same_alphabet(F.alphabet(), w.alphabet())) {
      throw std::invalid_argument("the word and the map use different alphabets");
    }
    return Word(F.alphabet(), n_phi(F, w.view()));
  }

  namespace {

    word_type n_phi_prime_raw(QuadMap const& F, std::span<letter_type const> w) {
      auto r = n_phi(F, w);
      if (r.size() < w.size()) {
        // Shorter results only arise by removing neutral letters.
        r.resize(w.size(), *F.alphabet()->neutral());
      }
      return r;
    }

    // Words compared up to the placement of neutral letters.
    word_type strip_raw(QuadMap const& F, word_type w) {
      if (auto e = F.alphabet()->neutral()) {
        std::erase(w, *e);
      }
      return w;
    }

    std::vector<letter_type> all_letters(QuadMap const& F) {
      std::vector<letter_type> out(F.alphabet_size());
      for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = static_cast<letter_type>(i);
      }
      return out;
    }

    word_type apply_positions(QuadMap const& F, word_type w, std::initializer_list<std::size_t> ps) {
      for (auto p : ps) {
        apply_at_unchecked(F, w, p);
      }
      return w;
    }

    CheckReport axiom3(QuadMap const& F) {
      auto const& A = F.alphabet();
      auto        e = *A->neutral();
      for (auto s : A->positive_letters()) {
        if (F(e, s) != LetterPair{s, e}) {
          return CheckReport::fail("axiom3-neutral", Word(A, {e, s}), "F(e,s) is not (s,e)");
        }
      }
      return CheckReport::pass("axiom3-neutral");
    }

    CheckReport axiom5(QuadMap const& F) {
      auto const& A  = F.alphabet();
      auto const& Sp = A->positive_letters();
      for (auto r : Sp) {
        for (auto s : Sp) {
          for (auto t : Sp) {
            word_type w{r, s, t};
            if (n_phi(F, w) != n_phi(F, apply_positions(F, w, {1}))) {
              return CheckReport::fail("axiom5-nphi", Word(A, w),
                                       "N_phi(r,s,t) differs from N_phi(F_1(r,s,t))");
            }
          }
        }
      }
      return CheckReport::pass("axiom5-nphi");
    }

    FactorabilityReport axioms(QuadMap const& F) {
      if (!F.alphabet()->has_neutral()) {
        throw std::domain_error("local factorability needs a neutral letter");
      }
      FactorabilityReport rep;
      rep.axiom2      = check_idempotent(F);
      rep.axiom2.name = "axiom2-idempotent";
      rep.axiom3      = axiom3(F);
      rep.axiom4      = check_weak_domino_on(F, F.alphabet()->positive_letters(),
                                             "axiom4-weak-domino");
      rep.axiom5      = axiom5(F);
      return rep;
    }

    CheckReport presentation(QuadMap const& F, MonoidOracle const& oracle) {
      auto const& A = F.alphabet();
      for (std::size_t s = 0; s < A->size(); ++s) {
        for (std::size_t t = 0; t < A->size(); ++t) {
          auto      a = static_cast<letter_type>(s);
          auto      b = static_cast<letter_type>(t);
          auto [c, d] = F(a, b);
          word_type lhs{a, b};
          word_type rhs{c, d};
          if (oracle.ev(lhs) != oracle.ev(rhs)) {
            return CheckReport::fail("axiom1-presentation", Word(A, lhs),
                                     "s|t and F(s,t) evaluate differently");
          }
        }
      }
      return CheckReport::pass("axiom1-presentation");
    }

    CheckReport confluence(QuadMap const& F) {
      auto        R            = derive_rules(F, DeriveMode::mod_e);
      std::size_t undetermined = 0;
      for (auto const& cp : critical_pairs(R)) {
        if (cp.status == JoinStatus::not_joinable) {
          return CheckReport::fail("confluence", cp.overlap,
                                   "critical pair " + cp.reduct1.to_string() + " / "
                                       + cp.reduct2.to_string() + " is not joinable");
        }
        if (cp.status == JoinStatus::undetermined) {
          ++undetermined;
        }
      }
      if (undetermined != 0) {
        return CheckReport::pass("confluence", std::to_string(undetermined)
                                                   + " critical pairs undetermined within budget");
      }
      return CheckReport::pass("confluence");
    }

  }  // namespace

  Word n_phi_prime(QuadMap const& F, Word const& w) {
    if (!same_alphabet(F.alphabet(), w.alphabet())) {
      throw std::invalid_argument("the word and the map use different alphabets");
    }
    return Word(F.alphabet(), n_phi_prime_raw(F, w.view()));
  }

  std::vector<CheckReport> FactorabilityReport::all() const {
    std::vector<CheckReport> out{axiom2, axiom3, axiom4, axiom5};
    if (presentation) {
      out.push_back(*presentation);
    }
    out.push_back(confluence);
    return out;
  }

  FactorabilityReport check_local_factorability_axioms(QuadMap const& F) {
    auto rep       = axioms(F);
    rep.confluence = CheckReport::pass("confluence", "not evaluated");
    rep.overall    = rep.axioms_pass();
    return rep;
  }

  FactorabilityReport check_local_factorability(QuadMap const& F, MonoidOracle const* oracle) {
    auto rep = axioms(F);
    if (oracle != nullptr) {
      rep.presentation = presentation(F, *oracle);
    }
    rep.confluence = confluence(F);
    rep.overall    = rep.axioms_pass() && rep.confluence.passed
                  && (!rep.presentation || rep.presentation->passed);
    return rep;
  }

  namespace {

    // Words reachable from w by applying F at single positions.
    bool reachable(QuadMap const& F, word_type const& from, word_type const& to) {
      std::set<word_type>   seen{from};
      std::deque<word_type> queue{from};
      while (!queue.empty()) {
        auto w = std::move(queue.front());
        queue.pop_front();
        if (w == to) {
          return true;
        }
        for (std::size_t i = 1; i < w.size(); ++i) {
          if (F.is_fixed(w[i - 1], w[i])) {
            continue;
          }
          auto v = w;
          apply_at_unchecked(F, v, i);
          if (seen.insert(v).second) {
            queue.push_back(std::move(v));
          }
        }
      }
      return false;
    }

  }  // namespace

  CheckReport roundtrip_check(QuadMap const& F, std::size_t max_len) {
    auto const& A       = F.alphabet();
    auto        letters = all_letters(F);
    for (auto s : letters) {
      for (auto t : letters) {
        word_type w{s, t};
        auto [a, b] = F(s, t);
        if (strip_raw(F, n_phi_prime_raw(F, w)) != strip_raw(F, {a, b})) {
          return CheckReport::fail("roundtrip", Word(A, w), "N_phi' differs from F on this pair");
        }
      }
    }
    for (std::size_t len = 3; len <= max_len; ++len) {
      for (auto const& w : all_words(letters, len)) {
        auto n = n_phi_prime_raw(F, w);
        if (!is_normal(F, n)) {
          return CheckReport::fail("roundtrip", Word(A, w), "N_phi' of this word is not normal");
        }
        if (is_normal(F, w) && n != w) {
          return CheckReport::fail("roundtrip", Word(A, w), "N_phi' moves this normal word");
        }
        if (!reachable(F, w, n)) {
          return CheckReport::fail("roundtrip", Word(A, w),
                                   "N_phi' of this word is not reachable by applying F");
        }
      }
    }
    auto clauses = check_normalisation_clauses(F, max_len);
    if (!clauses.passed) {
      return CheckReport::fail("roundtrip", *clauses.witness, clauses.detail);
    }
    return CheckReport::pass("roundtrip");
  }

  CheckReport check_stable212(QuadMap const& F) {
    auto const& A  = F.alphabet();
    auto const& Sp = A->positive_letters();
    for (auto r : Sp) {
      for (auto s : Sp) {
        for (auto t : Sp) {
          word_type w{r, s, t};
          auto      x = apply_positions(F, w, {2, 1, 2});
          auto      y = apply_positions(F, x, {1});
          if (x != y) {
            return CheckReport::fail("stable212", Word(A, w), "F_2121 differs from F_212");
          }
        }
      }
    }
    return CheckReport::pass("stable212");
  }

  CheckReport check_2121_extended_form(QuadMap const& F) {
    auto const& A       = F.alphabet();
    auto        letters = all_letters(F);
    for (auto r : letters) {
      for (auto s : letters) {
        for (auto t : letters) {
          word_type w{r, s, t};
          if (apply_positions(F, w, {2, 1, 2, 1}) != n_phi_prime_raw(F, w)) {
            return CheckReport::fail("2121-extended-form", Word(A, w),
                                     "F_2121 is not the padded N_phi");
          }
        }
      }
    }
    return CheckReport::pass("2121-extended-form");
  }

  CheckReport check_normalisation_clauses(QuadMap const& F, std::size_t max_len) {
    auto const& A       = F.alphabet();
    auto        letters = all_letters(F);
    std::size_t base    = letters.size() + 1;

    // N_phi' memoised by a base-(|A|+1) code, which is unique across lengths.
    std::vector<std::optional<word_type>> memo;
    std::size_t                           cap = 1;
    for (std::size_t k = 0; k <= max_len; ++k) {
      cap *= base;
    }
    memo.resize(cap);
    auto code = [&](std::span<letter_type const> w) {
      std::size_t c = 0;
      for (auto x : w) {
        c = c * base + x + 1;
      }
      return c;
    };
    auto N = [&](std::span<letter_type const> w) -> word_type const& {
      auto& slot = memo[code(w)];
      if (!slot) {
        slot = n_phi_prime_raw(F, w);
      }
      return *slot;
    };

    for (auto s : letters) {
      word_type w{s};
      if (N(w) != w) {
        return CheckReport::fail("normalisation", Word(A, w), "not the identity on letters");
      }
    }
    for (std::size_t len = 0; len <= max_len; ++len) {
      for (auto const& w : all_words(letters, len)) {
        auto const& nw = N(w);
        if (nw.size() != w.size()) {
          return CheckReport::fail("normalisation", Word(A, w), "length not preserved");
        }
        for (std::size_t i = 0; i <= len; ++i) {
          for (std::size_t j = i; j <= len; ++j) {
            std::span<letter_type const> v(w.begin() + i, w.begin() + j);
            word_type                    x(w.begin(), w.begin() + i);
            auto const&                  nv = N(v);
            x.insert(x.end(), nv.begin(), nv.end());
            x.insert(x.end(), w.begin() + j, w.end());
            if (N(x) != nw) {
              return CheckReport::fail("normalisation", Word(A, w),
                                       "N(u|N(v)|w) differs from N(u|v|w) for the factor at "
                                           + std::to_string(i + 1) + ".."
                                           + std::to_string(j));
            }
          }
        }
      }
    }
    return CheckReport::pass("normalisation");
  }

}  // namespace quadnorm
