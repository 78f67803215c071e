#include "anu/notation.hpp"

namespace anu::notation {

ParseError::ParseError(std::size_t position, std::string expected)
    : std::runtime_error("parse error at " + std::to_string(position) +
                         ": expected " + expected),
      position_(position),
      expected_(std::move(expected)) {}

std::string render_token(const AnnotatedToken& t) {
  std::string out;
  if (t.unknown) {
    out += '!';
    out += t.units.front().text;
  } else {
    bool first = true;
    for (const Unit& u : t.units) {
      if (!first) out += '_';
      first = false;
      switch (u.kind) {
        case UnitKind::Lexeme:
          out += u.text;
          if (u.mark == SenseMark::Backtick) out += '`';
          if (u.mark == SenseMark::Hyphen) out += '-';
          if (u.has_star) out += '*';
          break;
        case UnitKind::AltSet: {
          out += '[';
          for (std::size_t i = 0; i < u.members.size(); ++i) {
            if (i) out += '|';
            out += u.members[i];
          }
          out += ']';
          break;
        }
        case UnitKind::Placeholder:
          out += '*';
          break;
      }
    }
    if (!t.annotation.empty()) {
      out += '{';
      out += t.annotation;
      out += '}';
    }
  }
  if (t.trailing_punct) out += t.trailing_punct;
  return out;
}

std::string render_sentence(const std::vector<AnnotatedToken>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += ' ';
    out += render_token(tokens[i]);
  }
  return out;
}

namespace {

// Parses one token spanning text[begin, end); end is the token boundary
// (space or end of sentence). begin/end are absolute offsets so ParseError
// positions refer to the whole sentence string.
AnnotatedToken parse_token(const std::string& text, std::size_t begin,
                           std::size_t end) {
  AnnotatedToken token;

  if (text[begin] == '!') {
    std::size_t i = begin + 1;
    if (i >= end) throw ParseError(i, "unknown-token text after '!'");
    std::string raw = text.substr(i, end - i);
    if (raw.size() > 1 && is_punct_char(raw.back())) {
      token.trailing_punct = raw.back();
      raw.pop_back();
    }
    token.unknown = true;
    token.units.push_back(Unit::lexeme(std::move(raw), SenseMark::None, false,
                                       UnitOrigin::Parsed));
    return token;
  }

  // Token-final punctuation belongs to the token, not to its last unit.
  if (end - begin > 1 && is_punct_char(text[end - 1])) {
    token.trailing_punct = text[end - 1];
    --end;
  }

  std::size_t i = begin;
  bool expect_unit = true;
  while (i < end && expect_unit) {
    char c = text[i];
    if (c == '[') {
      std::size_t open = i++;
      std::vector<std::string> members;
      std::string cur;
      bool closed = false;
      while (i < end) {
        c = text[i];
        if (c == ']') {
          if (cur.empty()) throw ParseError(i, "alternative before ']'");
          members.push_back(cur);
          ++i;
          closed = true;
          break;
        }
        if (c == '|') {
          if (cur.empty()) throw ParseError(i, "alternative before '|'");
          members.push_back(cur);
          cur.clear();
          ++i;
          continue;
        }
        if (is_reserved_char(c)) throw ParseError(i, "plain alternative text");
        cur += c;
        ++i;
      }
      if (!closed) throw ParseError(i, "']'");
      if (members.size() < 2) throw ParseError(open, "at least two alternatives");
      token.units.push_back(Unit::altset(std::move(members), UnitOrigin::Parsed));
    } else if (c == '*') {
      token.units.push_back(Unit::placeholder(UnitOrigin::Parsed));
      ++i;
    } else {
      std::string lex;
      while (i < end && !is_reserved_char(text[i])) lex += text[i++];
      if (lex.empty()) throw ParseError(i, "unit");
      SenseMark mark = SenseMark::None;
      bool star = false;
      if (i < end && text[i] == '`') { mark = SenseMark::Backtick; ++i; }
      else if (i < end && text[i] == '-') { mark = SenseMark::Hyphen; ++i; }
      if (i < end && text[i] == '*') { star = true; ++i; }
      token.units.push_back(
          Unit::lexeme(std::move(lex), mark, star, UnitOrigin::Parsed));
    }

    // After a unit: another unit, the annotation, or the token end.
    expect_unit = false;
    if (i < end) {
      if (text[i] == '_') {
        ++i;
        expect_unit = true;
        if (i >= end) throw ParseError(i, "unit after '_'");
      } else if (text[i] == '{') {
        std::size_t open = i++;
        std::string feature;
        while (i < end && text[i] != '}') {
          if (text[i] == '{') throw ParseError(i, "'}'");
          feature += text[i++];
        }
        if (i >= end) throw ParseError(i, "'}'");
        if (feature.empty()) throw ParseError(open + 1, "feature text");
        ++i;  // consume '}'
        if (i != end) throw ParseError(i, "end of token after annotation");
        token.annotation = std::move(feature);
      } else {
        throw ParseError(i, "'_', '{' or end of token");
      }
    }
  }
  if (token.units.empty()) throw ParseError(begin, "unit");
  return token;
}

}  // namespace

std::vector<AnnotatedToken> parse_sentence(const std::string& text) {
  std::vector<AnnotatedToken> tokens;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    if (text[i] == ' ') { ++i; continue; }
    std::size_t end = i;
    while (end < n && text[end] != ' ') ++end;
    AnnotatedToken tok = parse_token(text, i, end);
    tok.source_index = std::nullopt;
    tokens.push_back(std::move(tok));
    i = end;
  }
  return tokens;
}

}  // namespace anu::notation
