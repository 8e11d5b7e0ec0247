// Enumeration and sampling of idempotent maps satisfying the neutral
// axioms, and their classification.
//
// Over S_+ = {a, b, ...} plus a neutral letter e, such a map is fixed on a
// chosen set P of pairs over S_+ and sends every other pair over S_+ to a
// fixed point: a pair of P, some (s,e), or (e,e). These are all of them.

#ifndef QUADNORM_SEARCH_HPP_
#define QUADNORM_SEARCH_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "quadnorm/classifier.hpp"
#include "quadnorm/quadmap.hpp"

namespace quadnorm {

  // Letters a, b, c, ... (skipping e) followed by the neutral letter e.
  AlphabetPtr search_alphabet(std::size_t k);

  // Number of maps produced by enumerate_neutral_maps(k), saturating.
  std::uint64_t count_neutral_maps(std::size_t k);

  // Every idempotent map with the neutral axioms on k letters plus e.
  std::vector<QuadMap> enumerate_neutral_maps(std::size_t k);

  // The index-th random map for the seed; each pair over S_+ is fixed with
  // probability fixed_probability. Independent of any other index.
  QuadMap sample_neutral_map(std::size_t   k,
                             std::uint64_t seed,
                             std::uint64_t index,
                             double        fixed_probability = 0.7);

  // Property names accepted by the filters.
  std::vector<std::string> search_properties();

  struct Classification {
    ClassReport                 cls;
    std::map<std::string, bool> properties;
  };

  // Properties: domino, weak-domino, local-factorability (the four table
  // axioms), stable212, class43, class54.
  Classification classify(QuadMap const& F);

  // Worker count: QUADNORM_WORKERS if set to a positive integer, else the
  // hardware concurrency.
  std::size_t worker_count();

  // Calls fn(i) for i in [0, n) on the given number of threads.
  void parallel_for(std::size_t n, std::size_t workers, std::function<void(std::size_t)> const& fn);

  struct SearchOptions {
    std::size_t              letters = 2;
    std::size_t              count   = 100;
    std::uint64_t            seed    = 0;
    std::vector<std::string> require;
    std::vector<std::string> forbid;
    std::uint64_t            ceiling = 1'000'000;
    std::size_t              workers = 1;
  };

  struct SearchHit {
    std::size_t    index;
    QuadMap        map;
    Classification classification;
  };

  struct SearchResult {
    bool                   exhaustive = false;
    std::size_t            candidates = 0;
    std::vector<SearchHit> hits;  // in candidate order
  };

  // Exhaustive when (K+1)^(2(K+1)^2) <= ceiling, otherwise `count` random
  // candidates. Throws std::invalid_argument for an unknown property name.
  SearchResult search(SearchOptions const& options);

}  // namespace quadnorm

#endif  // QUADNORM_SEARCH_HPP_
