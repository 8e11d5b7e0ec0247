// The line-oriented .qmap text format:
//
//   alphabet <name>+          required, first
//   neutral <name>            optional, at most once
//   map <s> <t> -> <s'> <t'>  one per listed pair
//   default identity          required when some pair is not listed
//
// '#' starts a comment.

#ifndef QUADNORM_QMAP_FORMAT_HPP_
#define QUADNORM_QMAP_FORMAT_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "quadnorm/quadmap.hpp"

namespace quadnorm {

  class ParseError : public std::runtime_error {
   public:
    ParseError(std::size_t line, std::string const& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), _line(line) {}

    std::size_t line() const noexcept {
      return _line;
    }

   private:
    std::size_t _line;
  };

  QuadMap parse_qmap(std::string_view text);

  // Lists the non-fixed pairs followed by "default identity".
  std::string to_qmap(QuadMap const& F);

}  // namespace quadnorm

#endif  // QUADNORM_QMAP_FORMAT_HPP_
