#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "anu/types.hpp"

namespace anu::notation {

// Token grammar (fixed):
//
//   sentence   := token (' ' token)*
//   token      := '!' raw | unit ('_' unit)* annotation? punct?
//   unit       := lexeme mark? '*'? | '[' member ('|' member)+ ']' | '*'
//   mark       := '`' | '-'
//   annotation := '{' feature-text '}'
//   punct      := '?' | '.' | ','
//
// '_' joins units, '[a|b]' is an ambiguity set, '{...}' a feature
// annotation, '`'/'-' unit-final sense marks, '*' a placeholder, '!' the
// unknown-token prefix.  Lexeme text contains none of these characters;
// raw is the source surface verbatim.  The grammar is unambiguous: every
// rendered string has exactly one parse.

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, std::string expected);

  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

std::string render_token(const AnnotatedToken& token);

// Canonical form: tokens joined by single spaces, no leading/trailing space.
std::string render_sentence(const std::vector<AnnotatedToken>& tokens);

// Inverse of render_sentence on structure; reconstructed tokens carry no
// provenance (source_index unset, unit origin Parsed).
std::vector<AnnotatedToken> parse_sentence(const std::string& text);

}  // namespace anu::notation
