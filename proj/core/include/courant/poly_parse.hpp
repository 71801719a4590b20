#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "courant/poly.hpp"

namespace courant {

// Syntax or range error in polynomial text; offset is the byte position of the
// offending token in the source.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : std::runtime_error(message + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Grammar:
//   expr     := term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := atom ('^' uint)?
//   atom     := rational | var | '(' expr ')'
//   rational := ['-'] uint ('/' uint)?
//   var      := 'x' uint
// Whitespace between tokens is ignored. Variables are x1..x{nvars}.
Poly parse_poly(std::string_view source, int nvars);

}  // namespace courant
