// Built-in example structures with their expected check outcomes.

#ifndef QUADNORM_CATALOG_HPP_
#define QUADNORM_CATALOG_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quadnorm/check_report.hpp"
#include "quadnorm/monoid_model.hpp"
#include "quadnorm/quadmap.hpp"

namespace quadnorm {

  struct CatalogEntry {
    std::string                 name;
    std::string                 description;
    QuadMap                     map;
    std::optional<MonoidOracle> oracle;
    // Expected minimal class, or nullopt when a direction is infinite.
    std::pair<std::size_t, std::size_t> expected_class;
    // Expected outcome per check name; see run_all for the names.
    std::map<std::string, bool> expected;
  };

  // freecomm-abc, freecomm-ab, free-x, sign, ab5.
  std::vector<std::string> catalog_names();

  // Throws std::invalid_argument for an unknown name.
  CatalogEntry load(std::string_view name);

  // The sort map over the given letters: F(s,t) = (min, max).
  QuadMap sort_map(std::vector<std::string> letters);

  // Runs every applicable check and reports one "expect-<check>" line per
  // expectation, passing when the computed outcome matches.
  std::vector<CheckReport> run_all(CatalogEntry const& entry);

}  // namespace quadnorm

#endif  // QUADNORM_CATALOG_HPP_
