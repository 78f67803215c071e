#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "anu/construction.hpp"
#include "anu/types.hpp"

namespace anu {

struct LexEntry {
  std::string src_root;
  Pos pos = Pos::Noun;
  std::string sense_id;  // distinguishes homographs; "neg" flags negation lexemes
  std::vector<std::string> gloss;  // target lexemes, '_'-joined when rendered
  SenseMark sense_mark = SenseMark::None;
  bool is_proper = false;
  std::string eng_gloss;  // optional reader gloss for the !E: line
};

// One target unit of a TAM/case row.
struct TamUnit {
  bool is_altset = false;
  std::string text;
  std::vector<std::string> members;
  SenseMark mark = SenseMark::None;
  bool fuse = false;  // bound morpheme: glued onto the previous unit, no '_'
};

struct TamEntry {
  std::string src_label;
  std::vector<TamUnit> units;
  std::string gnp_slot;  // agreement features carried into the brace annotation
  std::vector<std::pair<std::string, std::string>> clitic_map;

  const std::string* clitic_target(const std::string& clitic) const;
};

// Stem rewrite attached to a suffix: after stripping the suffix surface,
// a stem ending in `stem_ends` is a root ending in `root_ends` instead.
struct SandhiRule {
  std::string stem_ends;  // may be empty: rule always applies
  std::string root_ends;
};

struct SuffixEntry {
  std::string surface;
  SuffixCategory category = SuffixCategory::Tam;
  std::string label;
  std::vector<SandhiRule> sandhi;  // alternatives; empty = stem is the root
};

// The four resource tables, indexed. Immutable after load and safe to
// share across concurrent sentence pipelines.
struct TableSet {
  std::vector<LexEntry> roots;
  std::vector<TamEntry> tams;
  std::vector<SuffixEntry> suffixes;
  std::vector<construction::Rule> rules;
  std::vector<std::string> warnings;  // bare-homograph notes from the loader
  bool has_eng_gloss = false;

  // Matching entries in table order; empty when absent (never an error).
  std::vector<const LexEntry*> lookup_root(const std::string& root,
                                           std::optional<Pos> pos = std::nullopt) const;
  const TamEntry* lookup_tam(const std::string& label) const;

  bool is_negative_root(const std::string& root) const;

  // Suffix row indices ordered longest surface first.
  const std::vector<std::size_t>& suffixes_by_length() const { return suffix_order_; }

  // Populated by load_tables.
  std::unordered_map<std::string, std::vector<std::size_t>> root_index;
  std::unordered_map<std::string, std::size_t> tam_index;
  std::unordered_set<std::string> negative_roots;
  std::vector<std::size_t> suffix_order_;
};

// Loads roots.tsv, tam.tsv, suffixes.tsv and rules.txt from a directory,
// validating every table invariant. Throws LoadError.
TableSet load_tables(const std::filesystem::path& root_path);

// True iff the text may appear as a lexeme in rendered notation: no
// reserved character, no whitespace, not '!'-initial, and no trailing
// punctuation character (all of which would collide with token syntax).
bool valid_lexeme_text(const std::string& text);

}  // namespace anu
