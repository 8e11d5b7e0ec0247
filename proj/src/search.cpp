#include "quadnorm/search.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>
#include <thread>

#include "quadnorm/factorability.hpp"

namespace quadnorm {

  AlphabetPtr search_alphabet(std::size_t k) {
    if (k == 0 || k > 25) {
      throw std::invalid_argument("the number of letters must be between 1 and 25");
    }
    std::vector<std::string> names;
    for (char c = 'a'; names.size() < k; ++c) {
      if (c != 'e') {
        names.emplace_back(1, c);
      }
    }
    names.emplace_back("e");
    return Alphabet::make(names, "e");
  }

  namespace {

    std::vector<LetterPair> positive_pairs(Alphabet const& A) {
      std::vector<LetterPair> out;
      for (auto s : A.positive_letters()) {
        for (auto t : A.positive_letters()) {
          out.emplace_back(s, t);
        }
      }
      return out;
    }

    // Fixed points available as targets once the pairs in `fixed` are
    // declared fixed.
    std::vector<LetterPair> targets(Alphabet const& A, std::vector<LetterPair> const& fixed) {
      auto e   = *A.neutral();
      auto out = fixed;
      for (auto s : A.positive_letters()) {
        out.emplace_back(s, e);
      }
      out.emplace_back(e, e);
      return out;
    }

    std::uint64_t saturating_pow(std::uint64_t b, std::uint64_t x) {
      std::uint64_t r = 1;
      for (std::uint64_t i = 0; i < x; ++i) {
        if (b != 0 && r > std::numeric_limits<std::uint64_t>::max() / b) {
          return std::numeric_limits<std::uint64_t>::max();
        }
        r *= b;
      }
      return r;
    }

  }  // namespace

  std::uint64_t count_neutral_maps(std::size_t k) {
    // Sum over |P| = j of C(k^2, j) (j + k + 1)^(k^2 - j).
    std::uint64_t const max   = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t       pairs = k * k;
    std::uint64_t       total = 0;
    std::uint64_t       binom = 1;
    for (std::uint64_t j = 0; j <= pairs; ++j) {
      auto term = saturating_pow(j + k + 1, pairs - j);
      if (term != 0 && binom > max / term) {
        return max;
      }
      if (total > max - binom * term) {
        return max;
      }
      total += binom * term;
      if (j < pairs) {
        if (binom > max / (pairs - j)) {
          binom = max;
        } else {
          binom = binom * (pairs - j) / (j + 1);
        }
      }
    }
    return total;
  }

  std::vector<QuadMap> enumerate_neutral_maps(std::size_t k) {
    auto A     = search_alphabet(k);
    auto pairs = positive_pairs(*A);
    if (pairs.size() > 16) {
      throw std::invalid_argument("too many pairs to enumerate");
    }
    std::vector<QuadMap> out;
    QuadMap              identity(A);
    auto    e = *A->neutral();
    for (auto s : A->positive_letters()) {
      identity.set(e, s, s, e);
    }
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
      std::vector<LetterPair> fixed, moving;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        ((mask >> i) & 1u ? fixed : moving).push_back(pairs[i]);
      }
      auto tgt = targets(*A, fixed);
      std::vector<std::size_t> choice(moving.size(), 0);
      while (true) {
        QuadMap F = identity;
        for (std::size_t i = 0; i < moving.size(); ++i) {
          F.set(moving[i], tgt[choice[i]]);
        }
        out.push_back(std::move(F));
        std::size_t i = 0;
        while (i < choice.size() && ++choice[i] == tgt.size()) {
          choice[i++] = 0;
        }
        if (i == choice.size()) {
          break;
        }
      }
    }
    return out;
  }

  QuadMap sample_neutral_map(std::size_t   k,
                             std::uint64_t seed,
                             std::uint64_t index,
                             double        fixed_probability) {
    auto A     = search_alphabet(k);
    auto pairs = positive_pairs(*A);
    auto e     = *A->neutral();

    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    std::mt19937_64             rng(seq);
    std::bernoulli_distribution coin(fixed_probability);

    std::vector<LetterPair> fixed, moving;
    for (auto const& p : pairs) {
      (coin(rng) ? fixed : moving).push_back(p);
    }
    auto    tgt = targets(*A, fixed);
    QuadMap F(A);
    for (auto s : A->positive_letters()) {
      F.set(e, s, s, e);
    }
    std::uniform_int_distribution<std::size_t> pick(0, tgt.size() - 1);
    for (auto const& p : moving) {
      F.set(p, tgt[pick(rng)]);
    }
    return F;
  }

  std::vector<std::string> search_properties() {
    return {"domino", "weak-domino", "local-factorability", "stable212", "class43", "class54"};
  }

  Classification classify(QuadMap const& F) {
    Classification c;
    c.cls                              = minimal_class(F);
    c.properties["domino"]             = check_domino(F).passed;
    c.properties["weak-domino"]        = check_weak_domino(F).passed;
    c.properties["local-factorability"] = check_local_factorability_axioms(F).overall;
    c.properties["stable212"]          = check_stable212(F).passed;
    c.properties["class43"]            = c.cls.finite() && *c.cls.left <= 4 && *c.cls.right <= 3;
    c.properties["class54"]            = c.cls.finite() && *c.cls.left <= 5 && *c.cls.right <= 4;
    return c;
  }

  std::size_t worker_count() {
    if (char const* env = std::getenv("QUADNORM_WORKERS")) {
      char* end = nullptr;
      auto  v   = std::strtoul(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) {
        return v;
      }
    }
    return std::max(1u, std::thread::hardware_concurrency());
  }

  void parallel_for(std::size_t n, std::size_t workers, std::function<void(std::size_t)> const& fn) {
    workers = std::max<std::size_t>(1, std::min(workers, n));
    if (workers == 1) {
      for (std::size_t i = 0; i < n; ++i) {
        fn(i);
      }
      return;
    }
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        for (std::size_t i = w; i < n; i += workers) {
          fn(i);
        }
      });
    }
    for (auto& t : threads) {
      t.join();
    }
  }

  SearchResult search(SearchOptions const& options) {
    auto props = search_properties();
    for (auto const& list : {options.require, options.forbid}) {
      for (auto const& p : list) {
        if (std::find(props.begin(), props.end(), p) == props.end()) {
          throw std::invalid_argument("unknown property '" + p + "'");
        }
      }
    }
    std::uint64_t k1 = options.letters + 1;
    SearchResult  result;
    result.exhaustive = saturating_pow(k1, 2 * k1 * k1) <= options.ceiling;

    std::vector<QuadMap> maps;
    if (result.exhaustive) {
      maps = enumerate_neutral_maps(options.letters);
    } else {
      maps.resize(options.count);
      parallel_for(options.count, options.workers, [&](std::size_t i) {
        maps[i] = sample_neutral_map(options.letters, options.seed, i);
      });
    }
    result.candidates = maps.size();

    std::vector<std::optional<Classification>> matched(maps.size());
    parallel_for(maps.size(), options.workers, [&](std::size_t i) {
      auto c  = classify(maps[i]);
      bool ok = true;
      for (auto const& p : options.require) {
        ok = ok && c.properties.at(p);
      }
      for (auto const& p : options.forbid) {
        ok = ok && !c.properties.at(p);
      }
      if (ok) {
        matched[i] = std::move(c);
      }
    });
    for (std::size_t i = 0; i < maps.size(); ++i) {
      if (matched[i]) {
        result.hits.push_back({i, std::move(maps[i]), std::move(*matched[i])});
      }
    }
    return result;
  }

}  // namespace quadnorm
