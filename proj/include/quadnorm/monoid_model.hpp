// A finite-scale model of the monoid presented by a quadratic map.
// Elements are canonical normal words over S_+; the identity is the empty
// word.

#ifndef QUADNORM_MONOID_MODEL_HPP_
#define QUADNORM_MONOID_MODEL_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "quadnorm/check_report.hpp"
#include "quadnorm/quadmap.hpp"
#include "quadnorm/words.hpp"

namespace quadnorm {

  struct MonoidElement {
    Word canonical;

    std::size_t length() const noexcept {
      return canonical.length();
    }

    bool is_identity() const noexcept {
      return canonical.empty();
    }

    bool operator==(MonoidElement const& other) const {
      return canonical == other.canonical;
    }

    bool operator<(MonoidElement const& other) const {
      return canonical < other.canonical;
    }
  };

  struct FactorisationPair {
    MonoidElement head;  // a letter of S_+, or the identity
    MonoidElement tail;
  };

  // An independent commutative monoid to compare against: every letter is
  // sent to a vector of integers and words evaluate to the sum. Covers free
  // commutative monoids (letter counts) and the integers under addition.
  class MonoidOracle {
   public:
    using value_type = std::vector<std::int64_t>;

    MonoidOracle(std::string name, std::vector<value_type> images);

    std::string const& name() const noexcept {
      return _name;
    }

    value_type identity() const {
      return value_type(_dim, 0);
    }

    value_type ev(std::span<letter_type const> w) const;

    value_type ev(Word const& w) const {
      return ev(w.view());
    }

   private:
    std::string             _name;
    std::size_t             _dim = 0;
    std::vector<value_type> _images;
  };

  class MonoidModel {
   public:
    // n_phi: multiply by strip_neutral(N_phi(f|g)). rewriting: multiply by
    // leftmost rewriting with the derived rules (mod_e with a neutral
    // letter, plain otherwise). automatic picks n_phi when the map has a
    // neutral letter and passes the local factorability axioms.
    enum class Route { automatic, n_phi, rewriting };

    // Throws std::domain_error if the rewriting route is chosen (or falls
    // out of automatic) and the derived system does not terminate on the
    // words of length at most four.
    explicit MonoidModel(QuadMap F, Route route = Route::automatic);

    QuadMap const& map() const noexcept {
      return _F;
    }

    AlphabetPtr const& alphabet() const noexcept {
      return _F.alphabet();
    }

    Route route() const noexcept {
      return _route;
    }

    MonoidElement identity() const;

    // The element represented by a word over the full alphabet.
    MonoidElement ev(Word const& w) const;
    MonoidElement ev(std::span<letter_type const> w) const;

    MonoidElement generator(letter_type s) const;

    // Normal words over S_+ of length at most max_len, shortest first.
    std::vector<MonoidElement> enumerate_elements(std::size_t max_len) const;

    MonoidElement multiply(MonoidElement const& f, MonoidElement const& g) const;

    FactorisationPair eta(MonoidElement const& f) const;

    // Iterated head splitting.
    Word nf_eta(MonoidElement const& f) const;

    struct Divisibility {
      bool divides  = false;
      bool complete = false;  // a negative answer is final
    };

    // Searches f' with |f'| <= search_len and f f' = g. Complete when the
    // map is graded and search_len >= |g| - |f|.
    Divisibility left_divides(MonoidElement const& f,
                              MonoidElement const& g,
                              std::size_t          search_len) const;

   private:
    word_type normal_form(word_type w) const;

    QuadMap _F;
    Route   _route = Route::n_phi;
    bool    _graded = true;
  };

  std::string to_string(MonoidModel::Route r);

  // Every non-identity element up to max_len splits as a letter of S_+ times
  // the tail, with head * tail = f and |f| = 1 + |tail|.
  CheckReport check_factorisation_axioms(MonoidModel const& M, std::size_t max_len);

  // (sf)' = (s f')' and bar(sf) = bar(s f') bar(f) for s in S_+ and
  // 1 <= |f| <= max_len. The witness is s followed by f.
  CheckReport check_stronger_assumption(MonoidModel const& M, std::size_t max_len);

  // (eta mu)_2121 = (eta mu)_212 on triples of elements of length at most
  // max_len; a bounded stand-in for the statement on all of M^3. The
  // witness is f|g|h.
  CheckReport check_stable212_elements(MonoidModel const& M, std::size_t max_len);

  // s divides s' in M whenever (s',t') = F(s,t).
  CheckReport check_left_weighted(MonoidModel const& M, std::size_t search_len);

  // t | f s_i s_{i+1} implies t | f s_i for normal pairs s_i|s_{i+1}, letters
  // t and elements f of length at most max_len. The witness is
  // t|f|s_i|s_{i+1}.
  CheckReport check_greedy(MonoidModel const& M, std::size_t max_len);

  // fg = fh implies g = h, over elements with |f|+|g|, |f|+|h| <= max_len.
  CheckReport check_left_cancellative(MonoidModel const& M, std::size_t max_len);

  // No non-identity f of length at most max_len has fg = 1 for some g of
  // length at most max_len.
  CheckReport check_no_invertibles(MonoidModel const& M, std::size_t max_len);

  // multiply is associative and unital on elements with combined length at
  // most max_len.
  CheckReport check_monoid_laws(MonoidModel const& M, std::size_t max_len);

  // The model and the oracle agree on every word over the alphabet of
  // length at most max_len, and distinct elements up to max_len have
  // distinct oracle values.
  CheckReport check_oracle_agreement(MonoidModel const&  M,
                                     MonoidOracle const& oracle,
                                     std::size_t         max_len);

  // nf_eta(f) is the canonical word of every element up to max_len.
  CheckReport check_nf_eta(MonoidModel const& M, std::size_t max_len);

}  // namespace quadnorm

#endif  // QUADNORM_MONOID_MODEL_HPP_
