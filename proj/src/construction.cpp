#include "anu/construction.hpp"

#include <algorithm>
#include <sstream>

#include "anu/lexicon.hpp"

namespace anu::construction {

namespace {

// Splits a rule line into tokens; parenthesized groups stay together so
// "att($0, jo*, vaHa)" survives internal spaces.
std::vector<std::string> lex_line(const std::string& line, const std::string& file,
                                  std::size_t lineno) {
  std::vector<std::string> out;
  std::size_t i = 0;
  const std::size_t n = line.size();
  while (i < n) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) { ++i; continue; }
    std::string tok;
    int depth = 0;
    while (i < n && (depth > 0 || !std::isspace(static_cast<unsigned char>(line[i])))) {
      char c = line[i++];
      if (c == '(') ++depth;
      if (c == ')') {
        if (--depth < 0)
          throw LoadError(LoadErrorKind::MalformedRow, file, lineno, "unbalanced ')'");
      }
      tok += c;
    }
    if (depth != 0)
      throw LoadError(LoadErrorKind::MalformedRow, file, lineno, "unbalanced '('");
    out.push_back(std::move(tok));
  }
  return out;
}

EmitUnit parse_unit_spec(std::string spec, const std::string& file, std::size_t lineno) {
  EmitUnit u;
  if (!spec.empty() && spec.back() == '*') {
    u.star = true;
    spec.pop_back();
  }
  if (!spec.empty() && spec.back() == '`') {
    u.mark = SenseMark::Backtick;
    spec.pop_back();
  } else if (!spec.empty() && spec.back() == '-') {
    u.mark = SenseMark::Hyphen;
    spec.pop_back();
  }
  if (spec.empty())
    throw LoadError(LoadErrorKind::MalformedRow, file, lineno, "empty unit");
  for (char c : spec)
    if (is_reserved_char(c) || is_punct_char(c) || c == '(' || c == ')' || c == '$')
      throw LoadError(LoadErrorKind::MalformedRow, file, lineno,
                      "bad character in unit '" + spec + "'");
  u.text = std::move(spec);
  return u;
}

std::size_t parse_slot(const std::string& tok, const std::string& file,
                       std::size_t lineno) {
  if (tok.size() < 2 || tok[0] != '$' ||
      tok.find_first_not_of("0123456789", 1) != std::string::npos)
    throw LoadError(LoadErrorKind::MalformedRow, file, lineno,
                    "expected slot reference, got '" + tok + "'");
  return static_cast<std::size_t>(std::stoul(tok.substr(1)));
}

Predicate parse_pred(const std::string& tok, const std::string& file,
                     std::size_t lineno) {
  Predicate p;
  if (tok == "neg") {
    p.kind = PredKind::Negation;
    return p;
  }
  std::size_t eq = tok.find('=');
  if (eq == std::string::npos)
    throw LoadError(LoadErrorKind::MalformedRow, file, lineno,
                    "expected predicate, got '" + tok + "'");
  std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
  if (key == "pos") {
    auto pos = pos_from_string(val);
    if (!pos)
      throw LoadError(LoadErrorKind::MalformedRow, file, lineno,
                      "unknown part of speech '" + val + "'");
    p.kind = PredKind::PosIs;
    p.pos = *pos;
  } else if (key == "cat") {
    auto cat = category_from_string(val);
    if (!cat)
      throw LoadError(LoadErrorKind::MalformedRow, file, lineno,
                      "unknown suffix category '" + val + "'");
    p.kind = PredKind::CategoryIs;
    p.category = *cat;
  } else if (key == "lex") {
    if (val.empty())
      throw LoadError(LoadErrorKind::MalformedRow, file, lineno, "empty lexeme");
    p.kind = PredKind::LexemeIs;
    p.lexeme = val;
  } else {
    throw LoadError(LoadErrorKind::MalformedRow, file, lineno,
                    "unknown predicate '" + key + "'");
  }
  return p;
}

// Splits "a, b, c" on commas, trimming blanks.
std::vector<std::string> split_args(const std::string& body) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : body) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

Emit parse_emit(const std::string& tok, const std::string& file, std::size_t lineno) {
  Emit e;
  if (tok[0] == '$') {
    e.kind = EmitKind::Keep;
    e.slot = parse_slot(tok, file, lineno);
    return e;
  }
  if (tok.size() < 5 || tok.back() != ')')
    throw LoadError(LoadErrorKind::MalformedRow, file, lineno,
                    "expected emit instruction, got '" + tok + "'");
  std::string head = tok.substr(0, 4);
  std::string body = tok.substr(4, tok.size() - 5);
  std::vector<std::string> args = split_args(body);
  if (head == "ins(") {
    e.kind = EmitKind::Insert;
    // ins(unit[,star]): a trailing "star" argument stars the unit.
    if (args.size() == 2 && args.back() == "star") {
      EmitUnit u = parse_unit_spec(args[0], file, lineno);
      u.star = true;
      e.units.push_back(std::move(u));
    } else {
      for (const std::string& a : args)
        e.units.push_back(parse_unit_spec(a, file, lineno));
    }
  } else if (head == "att(") {
    e.kind = EmitKind::Attach;
    if (args.size() < 2)
      throw LoadError(LoadErrorKind::MalformedRow, file, lineno,
                      "att needs a slot and at least one unit");
    e.slot = parse_slot(args[0], file, lineno);
    for (std::size_t i = 1; i < args.size(); ++i)
      e.units.push_back(parse_unit_spec(args[i], file, lineno));
  } else {
    throw LoadError(LoadErrorKind::MalformedRow, file, lineno,
                    "expected emit instruction, got '" + tok + "'");
  }
  return e;
}

}  // namespace

std::vector<Rule> parse_rules(const std::string& text, const std::string& file) {
  std::vector<Rule> rules;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;

    std::vector<std::string> toks = lex_line(line, file, lineno);
    auto it = std::find(toks.begin(), toks.end(), ":");
    auto arrow = std::find(toks.begin(), toks.end(), "=>");
    if (toks.size() < 5 || it != toks.begin() + 1 || arrow == toks.end())
      throw LoadError(LoadErrorKind::MalformedRow, file, lineno,
                      "expected 'name : PRED+ => EMIT+ @priority'");

    Rule rule;
    rule.name = toks.front();
    for (auto p = toks.begin() + 2; p != arrow; ++p)
      rule.pattern.push_back(parse_pred(*p, file, lineno));
    if (rule.pattern.empty())
      throw LoadError(LoadErrorKind::MalformedRow, file, lineno, "empty pattern");

    auto e = arrow + 1;
    for (; e != toks.end(); ++e) {
      if ((*e)[0] == '@') {
        if (e + 1 != toks.end())
          throw LoadError(LoadErrorKind::MalformedRow, file, lineno,
                          "priority must be last");
        try {
          rule.priority = std::stoi(e->substr(1));
        } catch (const std::exception&) {
          throw LoadError(LoadErrorKind::MalformedRow, file, lineno,
                          "bad priority '" + *e + "'");
        }
        break;
      }
      rule.rewrite.push_back(parse_emit(*e, file, lineno));
    }
    if (rule.rewrite.empty())
      throw LoadError(LoadErrorKind::MalformedRow, file, lineno, "empty rewrite");

    // Faithfulness: every slot referenced exists and is kept exactly once.
    std::vector<int> kept(rule.pattern.size(), 0);
    for (const Emit& em : rule.rewrite) {
      if (em.kind == EmitKind::Insert) continue;
      if (em.slot >= rule.pattern.size())
        throw LoadError(LoadErrorKind::RuleReference, file, lineno,
                        "rule '" + rule.name + "' references slot $" +
                            std::to_string(em.slot) + " outside its pattern");
      ++kept[em.slot];
    }
    for (std::size_t s = 0; s < kept.size(); ++s)
      if (kept[s] != 1)
        throw LoadError(LoadErrorKind::RuleReference, file, lineno,
                        "rule '" + rule.name + "' keeps slot $" + std::to_string(s) +
                            " " + std::to_string(kept[s]) + " times");

    rules.push_back(std::move(rule));
  }
  return rules;
}

namespace {

bool pred_matches(const Predicate& p, const MorphAnalysis& a, const TableSet& tables) {
  if (a.is_unknown) return false;
  switch (p.kind) {
    case PredKind::PosIs:
      for (const LexEntry* e : tables.lookup_root(a.root))
        if (e->pos == p.pos) return true;
      return false;
    case PredKind::CategoryIs:
      for (const SuffixUse& s : a.suffixes)
        if (s.category == p.category) return true;
      return false;
    case PredKind::LexemeIs:
      return a.root == p.lexeme;
    case PredKind::Negation:
      return a.is_negative;
  }
  return false;
}

// A token is a candidate pattern slot only if it still carries its source
// analysis and no rule has touched it yet.
bool eligible(const AnnotatedToken& t, std::size_t analyses_size) {
  if (!t.source_index || *t.source_index >= analyses_size) return false;
  for (const Unit& u : t.units)
    if (u.origin == UnitOrigin::Rule) return false;
  return true;
}

Unit make_rule_unit(const EmitUnit& eu) {
  return Unit::lexeme(eu.text, eu.mark, eu.star, UnitOrigin::Rule);
}

}  // namespace

std::vector<AnnotatedToken> apply_rules(const std::vector<AnnotatedToken>& tokens,
                                        const std::vector<MorphAnalysis>& analyses,
                                        const std::vector<Rule>& rules,
                                        const TableSet& tables,
                                        std::vector<std::string>* trace) {
  std::vector<const Rule*> order;
  order.reserve(rules.size());
  for (const Rule& r : rules) order.push_back(&r);
  std::stable_sort(order.begin(), order.end(),
                   [](const Rule* a, const Rule* b) { return a->priority > b->priority; });

  std::vector<AnnotatedToken> out;
  out.reserve(tokens.size());
  std::size_t i = 0;
  while (i < tokens.size()) {
    const Rule* fired = nullptr;
    for (const Rule* r : order) {
      const std::size_t k = r->pattern.size();
      if (i + k > tokens.size()) continue;
      bool ok = true;
      for (std::size_t j = 0; ok && j < k; ++j) {
        const AnnotatedToken& t = tokens[i + j];
        ok = eligible(t, analyses.size()) &&
             pred_matches(r->pattern[j], analyses[*t.source_index], tables);
      }
      if (!ok) continue;
      fired = r;
      for (const Emit& em : r->rewrite) {
        switch (em.kind) {
          case EmitKind::Keep:
            out.push_back(tokens[i + em.slot]);
            break;
          case EmitKind::Insert: {
            AnnotatedToken ins;
            ins.inserted = true;
            for (const EmitUnit& eu : em.units) ins.units.push_back(make_rule_unit(eu));
            out.push_back(std::move(ins));
            break;
          }
          case EmitKind::Attach: {
            AnnotatedToken att = tokens[i + em.slot];
            for (const EmitUnit& eu : em.units) att.units.push_back(make_rule_unit(eu));
            out.push_back(std::move(att));
            break;
          }
        }
      }
      if (trace)
        trace->push_back("rule " + r->name + " fired at tokens " + std::to_string(i) +
                         ".." + std::to_string(i + k - 1));
      i += k;
      break;
    }
    if (!fired) {
      out.push_back(tokens[i]);
      ++i;
    }
  }
  return out;
}

}  // namespace anu::construction
