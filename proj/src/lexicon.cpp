#include "anu/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace anu {

const std::string* TamEntry::clitic_target(const std::string& clitic) const {
  for (const auto& [src, tgt] : clitic_map)
    if (src == clitic) return &tgt;
  return nullptr;
}

std::vector<const LexEntry*> TableSet::lookup_root(const std::string& root,
                                                   std::optional<Pos> pos) const {
  std::vector<const LexEntry*> out;
  auto it = root_index.find(root);
  if (it == root_index.end()) return out;
  for (std::size_t idx : it->second) {
    const LexEntry& e = roots[idx];
    if (!pos || e.pos == *pos) out.push_back(&e);
  }
  return out;
}

const TamEntry* TableSet::lookup_tam(const std::string& label) const {
  auto it = tam_index.find(label);
  return it == tam_index.end() ? nullptr : &tams[it->second];
}

bool TableSet::is_negative_root(const std::string& root) const {
  return negative_roots.count(root) > 0;
}

bool valid_lexeme_text(const std::string& text) {
  if (text.empty() || text.front() == '!') return false;
  if (is_punct_char(text.back())) return false;
  for (char c : text)
    if (is_reserved_char(c) || std::isspace(static_cast<unsigned char>(c)))
      return false;
  return true;
}

namespace {

struct Row {
  std::size_t lineno;
  std::vector<std::string> fields;
};

// Reads a TSV file: '#' lines and blank lines are skipped, fields are
// tab-separated, rows shorter than `min_fields` are rejected and all rows
// are padded to `max_fields`.
std::vector<Row> read_tsv(const std::filesystem::path& path, std::size_t min_fields,
                          std::size_t max_fields) {
  std::ifstream in(path);
  if (!in)
    throw LoadError(LoadErrorKind::MissingFile, path.string(), 0, "");
  std::vector<Row> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    Row row{lineno, {}};
    std::size_t start = 0;
    while (true) {
      std::size_t tab = line.find('\t', start);
      row.fields.push_back(line.substr(start, tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (row.fields.size() < min_fields || row.fields.size() > max_fields)
      throw LoadError(LoadErrorKind::MalformedRow, path.string(), lineno,
                      "expected " + std::to_string(min_fields) + ".." +
                          std::to_string(max_fields) + " fields, got " +
                          std::to_string(row.fields.size()));
    row.fields.resize(max_fields);
    rows.push_back(std::move(row));
  }
  return rows;
}

SenseMark parse_mark(const std::string& s, const std::string& file, std::size_t lineno) {
  if (s.empty()) return SenseMark::None;
  if (s == "`") return SenseMark::Backtick;
  if (s == "-") return SenseMark::Hyphen;
  throw LoadError(LoadErrorKind::MalformedRow, file, lineno,
                  "sense mark must be '`', '-' or empty");
}

void check_lexeme(const std::string& text, const std::string& file, std::size_t lineno) {
  if (!valid_lexeme_text(text))
    throw LoadError(LoadErrorKind::ReservedCharInGloss, file, lineno,
                    "'" + text + "'");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t p = s.find(sep, start);
    out.push_back(s.substr(start, p - start));
    if (p == std::string::npos) break;
    start = p + 1;
  }
  return out;
}

std::vector<LexEntry> load_roots(const std::filesystem::path& path, bool* saw_eng) {
  const std::string file = path.string();
  std::vector<LexEntry> entries;
  std::unordered_set<std::string> keys;
  for (const Row& row : read_tsv(path, 6, 7)) {
    LexEntry e;
    e.src_root = row.fields[0];
    if (e.src_root.empty())
      throw LoadError(LoadErrorKind::MalformedRow, file, row.lineno, "empty root");
    auto pos = pos_from_string(row.fields[1]);
    if (!pos)
      throw LoadError(LoadErrorKind::MalformedRow, file, row.lineno,
                      "unknown part of speech '" + row.fields[1] + "'");
    e.pos = *pos;
    e.sense_id = row.fields[2];
    for (const std::string& g : split(row.fields[3], '_')) {
      check_lexeme(g, file, row.lineno);
      e.gloss.push_back(g);
    }
    e.sense_mark = parse_mark(row.fields[4], file, row.lineno);
    if (row.fields[5] != "0" && row.fields[5] != "1")
      throw LoadError(LoadErrorKind::MalformedRow, file, row.lineno,
                      "is_proper must be 0 or 1");
    e.is_proper = row.fields[5] == "1";
    e.eng_gloss = row.fields[6];
    if (!e.eng_gloss.empty()) *saw_eng = true;

    std::string key = e.src_root + "\x1f" + to_string(e.pos) + "\x1f" + e.sense_id;
    if (!keys.insert(key).second)
      throw LoadError(LoadErrorKind::DuplicateKey, file, row.lineno,
                      "(" + e.src_root + ", " + to_string(e.pos) + ", " +
                          e.sense_id + ")");
    entries.push_back(std::move(e));
  }
  return entries;
}

// Unit syntax in tam.tsv: '_' joins units, '[a|b]' is an ambiguity set,
// a leading '+' marks a bound morpheme glued onto the previous unit, a
// trailing '`' or '-' is a sense mark on the unit.
std::vector<TamUnit> parse_tam_units(const std::string& field, const std::string& file,
                                     std::size_t lineno) {
  std::vector<TamUnit> units;
  for (std::string spec : split(field, '_')) {
    TamUnit u;
    if (!spec.empty() && spec.front() == '+') {
      u.fuse = true;
      spec.erase(spec.begin());
    }
    if (spec.size() >= 2 && spec.front() == '[' && spec.back() == ']') {
      if (u.fuse)
        throw LoadError(LoadErrorKind::MalformedRow, file, lineno,
                        "'+' cannot apply to an ambiguity set");
      u.is_altset = true;
      std::unordered_set<std::string> seen;
      for (const std::string& m : split(spec.substr(1, spec.size() - 2), '|')) {
        check_lexeme(m, file, lineno);
        if (!seen.insert(m).second)
          throw LoadError(LoadErrorKind::MalformedRow, file, lineno,
                          "repeated alternative '" + m + "'");
        u.members.push_back(m);
      }
      if (u.members.size() < 2)
        throw LoadError(LoadErrorKind::MalformedRow, file, lineno,
                        "ambiguity set needs at least two alternatives");
    } else {
      if (!spec.empty() && spec.back() == '`') {
        u.mark = SenseMark::Backtick;
        spec.pop_back();
      } else if (!spec.empty() && spec.back() == '-') {
        u.mark = SenseMark::Hyphen;
        spec.pop_back();
      }
      check_lexeme(spec, file, lineno);
      u.text = spec;
    }
    units.push_back(std::move(u));
  }
  return units;
}

std::vector<TamEntry> load_tams(const std::filesystem::path& path) {
  const std::string file = path.string();
  std::vector<TamEntry> entries;
  std::unordered_set<std::string> labels;
  for (const Row& row : read_tsv(path, 2, 4)) {
    TamEntry e;
    e.src_label = row.fields[0];
    if (e.src_label.empty())
      throw LoadError(LoadErrorKind::MalformedRow, file, row.lineno, "empty label");
    if (!labels.insert(e.src_label).second)
      throw LoadError(LoadErrorKind::DuplicateKey, file, row.lineno, e.src_label);
    if (!row.fields[1].empty())
      e.units = parse_tam_units(row.fields[1], file, row.lineno);
    e.gnp_slot = row.fields[2];
    for (char c : e.gnp_slot)
      if (c == '{' || c == '}' || std::isspace(static_cast<unsigned char>(c)))
        throw LoadError(LoadErrorKind::MalformedRow, file, row.lineno,
                        "bad character in gnp slot");
    if (!row.fields[3].empty()) {
      for (const std::string& pair : split(row.fields[3], ';')) {
        std::size_t eq = pair.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == pair.size())
          throw LoadError(LoadErrorKind::MalformedRow, file, row.lineno,
                          "clitic map entries look like 'A=kyA'");
        std::string tgt = pair.substr(eq + 1);
        check_lexeme(tgt, file, row.lineno);
        e.clitic_map.emplace_back(pair.substr(0, eq), tgt);
      }
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

std::vector<SuffixEntry> load_suffixes(const std::filesystem::path& path) {
  const std::string file = path.string();
  std::vector<SuffixEntry> entries;
  std::unordered_set<std::string> keys;
  for (const Row& row : read_tsv(path, 3, 4)) {
    SuffixEntry e;
    e.surface = row.fields[0];
    if (e.surface.empty())
      throw LoadError(LoadErrorKind::MalformedRow, file, row.lineno, "empty surface");
    auto cat = category_from_string(row.fields[1]);
    if (!cat)
      throw LoadError(LoadErrorKind::MalformedRow, file, row.lineno,
                      "unknown suffix category '" + row.fields[1] + "'");
    e.category = *cat;
    e.label = row.fields[2];
    if (e.label.empty())
      throw LoadError(LoadErrorKind::MalformedRow, file, row.lineno, "empty label");
    if (!keys.insert(e.surface + "\x1f" + to_string(e.category)).second)
      throw LoadError(LoadErrorKind::DuplicateKey, file, row.lineno,
                      "(" + e.surface + ", " + to_string(e.category) + ")");
    if (!row.fields[3].empty()) {
      // Alternatives 'old>new' joined by ';'; each may lengthen the stem
      // by at most 2 characters.
      for (const std::string& alt : split(row.fields[3], ';')) {
        std::size_t gt = alt.find('>');
        if (gt == std::string::npos)
          throw LoadError(LoadErrorKind::MalformedRow, file, row.lineno,
                          "sandhi rules look like 'old>new'");
        SandhiRule rule{alt.substr(0, gt), alt.substr(gt + 1)};
        if (rule.root_ends.size() > rule.stem_ends.size() + 2)
          throw LoadError(LoadErrorKind::MalformedRow, file, row.lineno,
                          "sandhi rewrite '" + alt + "' lengthens the stem by more than 2");
        e.sandhi.push_back(std::move(rule));
      }
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw LoadError(LoadErrorKind::MissingFile, path.string(), 0, "");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TableSet load_tables(const std::filesystem::path& root_path) {
  TableSet t;
  t.roots = load_roots(root_path / "roots.tsv", &t.has_eng_gloss);
  t.tams = load_tams(root_path / "tam.tsv");
  t.suffixes = load_suffixes(root_path / "suffixes.tsv");
  t.rules = construction::parse_rules(read_file(root_path / "rules.txt"),
                                      (root_path / "rules.txt").string());

  for (std::size_t i = 0; i < t.roots.size(); ++i) {
    t.root_index[t.roots[i].src_root].push_back(i);
    if (t.roots[i].sense_id == "neg") t.negative_roots.insert(t.roots[i].src_root);
  }
  for (std::size_t i = 0; i < t.tams.size(); ++i) t.tam_index[t.tams[i].src_label] = i;

  t.suffix_order_.resize(t.suffixes.size());
  for (std::size_t i = 0; i < t.suffixes.size(); ++i) t.suffix_order_[i] = i;
  std::sort(t.suffix_order_.begin(), t.suffix_order_.end(),
            [&](std::size_t a, std::size_t b) {
              const std::string& sa = t.suffixes[a].surface;
              const std::string& sb = t.suffixes[b].surface;
              if (sa.size() != sb.size()) return sa.size() > sb.size();
              if (sa != sb) return sa < sb;
              return a < b;
            });

  // Homographs are allowed, but a set indistinguishable in rendered output
  // (same mark, none proper) reproduces greedy-dictionary mistranslations;
  // warn so the lexicographer sees it.
  std::map<std::pair<std::string, Pos>, std::vector<const LexEntry*>> groups;
  for (const LexEntry& e : t.roots) groups[{e.src_root, e.pos}].push_back(&e);
  for (const auto& [key, group] : groups) {
    if (group.size() < 2) continue;
    bool any_proper = false;
    std::unordered_set<int> marks;
    for (const LexEntry* e : group) {
      any_proper |= e->is_proper;
      marks.insert(static_cast<int>(e->sense_mark));
    }
    if (!any_proper && marks.size() < group.size())
      t.warnings.push_back("homograph set (" + key.first + ", " +
                           to_string(key.second) +
                           ") is not distinguishable in rendered output");
  }
  return t;
}

}  // namespace anu
