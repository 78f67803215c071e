#include "anu/types.hpp"

namespace anu {

const char* to_string(Pos pos) {
  switch (pos) {
    case Pos::Noun: return "noun";
    case Pos::Verb: return "verb";
    case Pos::Pronoun: return "pronoun";
    case Pos::Adjective: return "adjective";
    case Pos::Indeclinable: return "indeclinable";
  }
  return "?";
}

const char* to_string(SuffixCategory cat) {
  switch (cat) {
    case SuffixCategory::Tam: return "tam";
    case SuffixCategory::Case: return "case";
    case SuffixCategory::Plural: return "plural";
    case SuffixCategory::Clitic: return "clitic";
    case SuffixCategory::Participial: return "participial";
  }
  return "?";
}

std::optional<Pos> pos_from_string(const std::string& s) {
  if (s == "noun") return Pos::Noun;
  if (s == "verb") return Pos::Verb;
  if (s == "pronoun") return Pos::Pronoun;
  if (s == "adjective") return Pos::Adjective;
  if (s == "indeclinable") return Pos::Indeclinable;
  return std::nullopt;
}

std::optional<SuffixCategory> category_from_string(const std::string& s) {
  if (s == "tam") return SuffixCategory::Tam;
  if (s == "case") return SuffixCategory::Case;
  if (s == "plural") return SuffixCategory::Plural;
  if (s == "clitic") return SuffixCategory::Clitic;
  if (s == "participial") return SuffixCategory::Participial;
  return std::nullopt;
}

Unit Unit::lexeme(std::string text, SenseMark mark, bool star, UnitOrigin origin) {
  Unit u;
  u.kind = UnitKind::Lexeme;
  u.text = std::move(text);
  u.mark = mark;
  u.has_star = star;
  u.origin = origin;
  return u;
}

Unit Unit::altset(std::vector<std::string> members, UnitOrigin origin) {
  Unit u;
  u.kind = UnitKind::AltSet;
  u.members = std::move(members);
  u.origin = origin;
  return u;
}

Unit Unit::placeholder(UnitOrigin origin) {
  Unit u;
  u.kind = UnitKind::Placeholder;
  u.has_star = true;
  u.origin = origin;
  return u;
}

bool structurally_equal(const Unit& a, const Unit& b) {
  return a.kind == b.kind && a.text == b.text && a.members == b.members &&
         a.mark == b.mark && a.has_star == b.has_star;
}

bool structurally_equal(const AnnotatedToken& a, const AnnotatedToken& b) {
  if (a.unknown != b.unknown || a.annotation != b.annotation ||
      a.trailing_punct != b.trailing_punct || a.units.size() != b.units.size())
    return false;
  for (std::size_t i = 0; i < a.units.size(); ++i)
    if (!structurally_equal(a.units[i], b.units[i])) return false;
  return true;
}

bool structurally_equal(const std::vector<AnnotatedToken>& a,
                        const std::vector<AnnotatedToken>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!structurally_equal(a[i], b[i])) return false;
  return true;
}

namespace {

std::string describe(LoadErrorKind kind, const std::string& file,
                     std::size_t line, const std::string& detail) {
  const char* what = "";
  switch (kind) {
    case LoadErrorKind::MissingFile: what = "missing file"; break;
    case LoadErrorKind::MalformedRow: what = "malformed row"; break;
    case LoadErrorKind::DuplicateKey: what = "duplicate key"; break;
    case LoadErrorKind::ReservedCharInGloss: what = "reserved character in gloss"; break;
    case LoadErrorKind::RuleReference: what = "bad rule reference"; break;
    case LoadErrorKind::MalformedCorpus: what = "malformed corpus"; break;
  }
  std::string msg = file;
  if (line > 0) msg += ":" + std::to_string(line);
  msg += ": ";
  msg += what;
  if (!detail.empty()) {
    msg += ": ";
    msg += detail;
  }
  return msg;
}

}  // namespace

LoadError::LoadError(LoadErrorKind kind, std::string file, std::size_t line,
                     const std::string& detail)
    : std::runtime_error(describe(kind, file, line, detail)),
      kind_(kind),
      file_(std::move(file)),
      line_(line) {}

}  // namespace anu
