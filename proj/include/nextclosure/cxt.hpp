#pragma once

// Burmeister .cxt format:
//
//   B
//   <name line, optional, may be blank>
//   <object count>
//   <attribute count>
//   <blank line>
//   <object names, one per line>
//   <attribute names, one per line>
//   <one row per object: attribute-count characters from {'.', 'X'}>
//
// The name line is taken as absent iff the fourth line is blank. Trailing
// blank lines are accepted; anything else after the rows is an error.
// A trailing '\r' on any line is ignored.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "nextclosure/context.hpp"

namespace nextclosure {

class CxtParseError : public std::runtime_error {
 public:
  CxtParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  /// 1-based line number of the offending line.
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

FormalContext parse_cxt(std::string_view text);

/// Canonical form: blank name line, '\n' line endings, final newline.
std::string write_cxt(const FormalContext& k);

}  // namespace nextclosure
