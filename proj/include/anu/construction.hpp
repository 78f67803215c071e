#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "anu/types.hpp"

namespace anu {
struct TableSet;
}

namespace anu::construction {

// Rule file line grammar (whitespace-normalized):
//
//   name : PRED+ => EMIT+ @priority
//   PRED ::= pos=X | cat=C | lex=W | neg
//   EMIT ::= $i | ins(unit[,star]) | att($i, unit+)
//
// One predicate per pattern slot. A unit spec is a lexeme, optionally
// carrying a trailing sense mark and/or '*'; ins(jo,star) and ins(jo*)
// are equivalent. '#' starts a comment line.

enum class PredKind { PosIs, CategoryIs, LexemeIs, Negation };

struct Predicate {
  PredKind kind = PredKind::PosIs;
  Pos pos = Pos::Noun;
  SuffixCategory category = SuffixCategory::Tam;
  std::string lexeme;  // source root for lex=W
};

struct EmitUnit {
  std::string text;
  SenseMark mark = SenseMark::None;
  bool star = false;
};

enum class EmitKind { Keep, Insert, Attach };

struct Emit {
  EmitKind kind = EmitKind::Keep;
  std::size_t slot = 0;         // Keep / Attach
  std::vector<EmitUnit> units;  // Insert / Attach
};

struct Rule {
  std::string name;
  std::vector<Predicate> pattern;
  std::vector<Emit> rewrite;
  int priority = 0;
};

// Parses rule declarations; file is used in error messages only.
// Throws LoadError (MalformedRow for syntax, RuleReference for dangling
// or duplicated slot references).
std::vector<Rule> parse_rules(const std::string& text, const std::string& file);

// Applies rules in a single left-to-right pass, trying rules in priority
// order (declaration order breaking ties) at each position; matches do
// not overlap. Pattern predicates test the source analyses, so inserted
// tokens and tokens already rewritten by a rule never re-match. Every
// input token survives in order; rule output only adds.
std::vector<AnnotatedToken> apply_rules(const std::vector<AnnotatedToken>& tokens,
                                        const std::vector<MorphAnalysis>& analyses,
                                        const std::vector<Rule>& rules,
                                        const TableSet& tables,
                                        std::vector<std::string>* trace = nullptr);

}  // namespace anu::construction
