#ifndef QUADNORM_CHECK_REPORT_HPP_
#define QUADNORM_CHECK_REPORT_HPP_

#include <optional>
#include <string>

#include "quadnorm/words.hpp"

namespace quadnorm {

  // Outcome of a named check. A failed check always carries a witness.
  struct CheckReport {
    std::string         name;
    bool                passed = true;
    std::optional<Word> witness;
    std::string         detail;

    static CheckReport pass(std::string name, std::string detail = {}) {
      return CheckReport{std::move(name), true, std::nullopt, std::move(detail)};
    }

    static CheckReport fail(std::string name, Word witness, std::string detail = {}) {
      return CheckReport{std::move(name), false, std::move(witness), std::move(detail)};
    }

    explicit operator bool() const noexcept {
      return passed;
    }
  };

  // "CHECK <name> PASS|FAIL [witness=<letters>]"
  std::string format_check_line(CheckReport const& report);

}  // namespace quadnorm

#endif  // QUADNORM_CHECK_REPORT_HPP_
