// The recursive normalisation map N_phi of a local factorability
// structure, its length-preserving extension, the table-level axioms and
// the syntactic sides of the correspondence with quadratic normalisation.

#ifndef QUADNORM_FACTORABILITY_HPP_
#define QUADNORM_FACTORABILITY_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "quadnorm/check_report.hpp"
#include "quadnorm/quadmap.hpp"
#include "quadnorm/words.hpp"

namespace quadnorm {

  class MonoidOracle;

  // N_phi:
  //   ()                 -> ()
  //   w containing e     -> N_phi(w with every e removed)
  //   s_1 | ... | s_n    -> u = sweep(s_1 | N_phi(s_2 ... s_n)),
  //                         returned if it contains no e, else N_phi(u).
  // Without a neutral letter the second clause never applies.
  Word      n_phi(QuadMap const& F, Word const& w);
  word_type n_phi(QuadMap const& F, std::span<letter_type const> w);

  // N_phi(w) padded with neutral letters to |w|. Needs a neutral letter.
  Word n_phi_prime(QuadMap const& F, Word const& w);

  struct FactorabilityReport {
    CheckReport                axiom2;  // idempotent
    CheckReport                axiom3;  // F(e,s) = (s,e) for s in S_+
    CheckReport                axiom4;  // weak domino on S_+^3
    CheckReport                axiom5;  // N_phi(r,s,t) = N_phi(F_1(r,s,t)) on S_+^3
    std::optional<CheckReport> presentation;  // axiom (1), oracle only
    // Local confluence of the derived mod-e rewriting system. Fails only on
    // a critical pair proven non-joinable; undetermined pairs are reported
    // in the detail.
    CheckReport confluence;
    bool        overall = false;

    bool axioms_pass() const noexcept {
      return axiom2.passed && axiom3.passed && axiom4.passed && axiom5.passed;
    }

    std::vector<CheckReport> all() const;
  };

  // Throws std::domain_error without a neutral letter.
  FactorabilityReport check_local_factorability(QuadMap const&      F,
                                                MonoidOracle const* oracle = nullptr);

  // The same axiom checks without the rewriting-system and oracle parts;
  // cheap enough for exhaustive sampling.
  FactorabilityReport check_local_factorability_axioms(QuadMap const& F);

  // N_phi' restricted to A^2 equals F up to the placement of neutral
  // letters, and on words of length at most max_len N_phi' is a quadratic
  // normalisation for F: its values are F-normal and reachable by applying
  // F at positions, it fixes F-normal words, and it satisfies the clauses
  // checked by check_normalisation_clauses. The witness is a word.
  CheckReport roundtrip_check(QuadMap const& F, std::size_t max_len = 4);

  // F_2121 = F_212 on S_+^3.
  CheckReport check_stable212(QuadMap const& F);

  // F_2121(r,s,t) = pad(N_phi(r,s,t), 3) on A^3.
  CheckReport check_2121_extended_form(QuadMap const& F);

  // The three clauses of a normalisation for N_phi': length-preserving,
  // identity on letters, and N(u|N(v)|w) = N(u|v|w) for |u|+|v|+|w| <=
  // max_len.
  CheckReport check_normalisation_clauses(QuadMap const& F, std::size_t max_len);

}  // namespace quadnorm

#endif  // QUADNORM_FACTORABILITY_HPP_
