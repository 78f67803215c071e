#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace anu {

enum class Pos { Noun, Verb, Pronoun, Adjective, Indeclinable };

// Suffix slot category. Schema order puts participial/tam before clitics.
enum class SuffixCategory { Tam, Case, Plural, Clitic, Participial };

// Unit-final sense mark keeping source distinctions the target lexeme
// would otherwise merge (vaha` "he" vs vaha- "that").
enum class SenseMark { None, Backtick, Hyphen };

const char* to_string(Pos pos);
const char* to_string(SuffixCategory cat);
std::optional<Pos> pos_from_string(const std::string& s);
std::optional<SuffixCategory> category_from_string(const std::string& s);

inline bool is_punct_char(char c) { return c == '?' || c == '.' || c == ','; }

// Characters that are notation syntax and therefore banned in lexeme text.
inline bool is_reserved_char(char c) {
  return c == '_' || c == '[' || c == ']' || c == '{' || c == '}' ||
         c == '|' || c == '*' || c == '`' || c == '-';
}

// ---------------------------------------------------------------- source side

struct SourceToken {
  std::string surface;    // punctuation already detached, never empty
  std::size_t index = 0;  // ordinal position in the sentence
  char trailing_punct = 0;  // one of ? . , — or 0 when absent
};

// One stripped suffix. Analyses list these root-outward.
struct SuffixUse {
  std::string surface;
  SuffixCategory category = SuffixCategory::Tam;
  std::string label;     // key into the TAM/case table
  int sandhi_rule = -1;  // which sandhi alternative rewrote the stem, -1 none
};

struct MorphAnalysis {
  SourceToken token;
  std::string root;
  std::vector<SuffixUse> suffixes;  // root-outward
  std::string gnp;                  // agreement features, may be empty
  bool is_unknown = false;
  bool is_negative = false;  // root is a declared negation lexeme
};

// ---------------------------------------------------------------- target side

enum class UnitKind { Lexeme, AltSet, Placeholder };

// Where a unit came from. Never rendered; used by traces and to keep
// construction rules from matching their own output.
enum class UnitOrigin { Lexicon, Tam, Clitic, Rule, Degradation, Parsed };

struct Unit {
  UnitKind kind = UnitKind::Lexeme;
  std::string text;                  // lexeme text; empty otherwise
  std::vector<std::string> members;  // altset members, >= 2, distinct
  SenseMark mark = SenseMark::None;
  bool has_star = false;
  UnitOrigin origin = UnitOrigin::Lexicon;

  static Unit lexeme(std::string text, SenseMark mark = SenseMark::None,
                     bool star = false, UnitOrigin origin = UnitOrigin::Lexicon);
  static Unit altset(std::vector<std::string> members,
                     UnitOrigin origin = UnitOrigin::Tam);
  static Unit placeholder(UnitOrigin origin = UnitOrigin::Degradation);
};

// A target-side token in the annotated intermediate notation.
//
// Invariants: units non-empty; unknown tokens hold exactly one lexeme unit
// equal to the source surface and carry no annotation; a token whose final
// lexeme text ends in a punctuation character also carries trailing_punct
// (otherwise the rendered form would re-tokenize differently).
struct AnnotatedToken {
  std::vector<Unit> units;
  std::string annotation;  // brace content, may be empty
  char trailing_punct = 0;
  std::optional<std::size_t> source_index;  // none for rule-inserted tokens
  bool inserted = false;
  bool unknown = false;
};

// Structural equality: units, annotation, punctuation, unknown flag.
// Provenance (source_index, inserted, unit origin) is excluded so that
// parsed notation can be compared against pipeline output.
bool structurally_equal(const Unit& a, const Unit& b);
bool structurally_equal(const AnnotatedToken& a, const AnnotatedToken& b);
bool structurally_equal(const std::vector<AnnotatedToken>& a,
                        const std::vector<AnnotatedToken>& b);

// ---------------------------------------------------------------- load errors

enum class LoadErrorKind {
  MissingFile,
  MalformedRow,
  DuplicateKey,
  ReservedCharInGloss,
  RuleReference,
  MalformedCorpus,
};

class LoadError : public std::runtime_error {
 public:
  LoadError(LoadErrorKind kind, std::string file, std::size_t line,
            const std::string& detail);

  LoadErrorKind kind() const { return kind_; }
  const std::string& file() const { return file_; }
  std::size_t line() const { return line_; }  // 0 when not line-specific

 private:
  LoadErrorKind kind_;
  std::string file_;
  std::size_t line_;
};

}  // namespace anu
