#include "tonality/leadsheet.hpp"

#include <algorithm>
#include <cctype>

#include "tonality/embedding.hpp"

namespace tonality {

const char* quality_name(Quality q) {
  switch (q) {
    case Quality::maj: return "maj";
    case Quality::min: return "min";
    case Quality::dom: return "dom";
    case Quality::dim: return "dim";
    case Quality::aug: return "aug";
    case Quality::half_dim: return "half_dim";
    case Quality::sus4: return "sus4";
  }
  return "?";
}

std::string alteration_name(Alteration a, bool unicode) {
  const char* flat = unicode ? "♭" : "b";
  const char* sharp = unicode ? "♯" : "#";
  switch (a) {
    case Alteration::flat5: return std::string(flat) + "5";
    case Alteration::sharp5: return std::string(sharp) + "5";
    case Alteration::flat9: return std::string(flat) + "9";
    case Alteration::sharp9: return std::string(sharp) + "9";
    case Alteration::sharp11: return std::string(sharp) + "11";
    case Alteration::flat13: return std::string(flat) + "13";
    case Alteration::alt: return "alt";
  }
  return "?";
}

namespace {

// Display names for computed voicings and packing roots: flats except F#,
// following the chord-name spellings used throughout the published tables.
const char* kChordNoteNames[12] = {"C",  "Db", "D",  "Eb", "E",  "F",
                                   "F#", "G",  "Ab", "A",  "Bb", "B"};

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_spaces() {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  }
  bool done() const { return pos >= text.size(); }
  char peek() const { return pos < text.size() ? text[pos] : '\0'; }

  bool eat(std::string_view token) {
    if (text.substr(pos, token.size()) == token) {
      pos += token.size();
      return true;
    }
    return false;
  }

  // -1 flat, +1 sharp, 0 none. Accepts ASCII and the unicode accidentals.
  int eat_accidental() {
    if (eat("#") || eat("♯")) return 1;
    if (eat("b") || eat("♭")) return -1;
    return 0;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ChordParseError(pos, message);
  }
};

constexpr int kLetterPc[7] = {9, 11, 0, 2, 4, 5, 7};  // A..G

int eat_degree(Cursor& c) {
  if (c.eat("13")) return 13;
  if (c.eat("11")) return 11;
  if (c.eat("9")) return 9;
  if (c.eat("7")) return 7;
  if (c.eat("6")) return 6;
  if (c.eat("5")) return 5;
  return 0;
}

// Parses one parenthesized item or bare suffix body. Returns false when the
// cursor does not start an item.
bool parse_item(Cursor& c, ChordSymbol& sym, bool inside_parens) {
  c.skip_spaces();
  if (c.eat("sus4")) {
    sym.quality = Quality::sus4;
    return true;
  }
  if (c.eat("maj7") || c.eat("Maj7") || c.eat("M7") || c.eat("Δ" "7")) {
    sym.major_seventh = true;
    sym.extensions.insert(7);
    return true;
  }
  if (c.eat("alt")) {
    sym.alterations.insert(Alteration::alt);
    return true;
  }
  if (c.eat("add")) {
    c.skip_spaces();
    int acc = c.eat_accidental();
    int deg = eat_degree(c);
    if (deg == 0) c.fail("expected a degree after 'add'");
    sym.additions.insert({deg, acc});
    return true;
  }
  std::size_t mark = c.pos;
  int acc = c.eat_accidental();
  if (acc != 0) {
    int deg = eat_degree(c);
    if (deg == 0) c.fail("expected a degree after the accidental");
    if (acc < 0 && deg == 5) sym.alterations.insert(Alteration::flat5);
    else if (acc > 0 && deg == 5) sym.alterations.insert(Alteration::sharp5);
    else if (acc < 0 && deg == 9) sym.alterations.insert(Alteration::flat9);
    else if (acc > 0 && deg == 9) sym.alterations.insert(Alteration::sharp9);
    else if (acc > 0 && deg == 11) sym.alterations.insert(Alteration::sharp11);
    else if (acc < 0 && deg == 13) sym.alterations.insert(Alteration::flat13);
    else c.fail("unsupported altered degree");
    return true;
  }
  if (inside_parens) {
    int deg = eat_degree(c);
    if (deg != 0) {
      sym.extensions.insert(deg);  // e.g. "Cmin7(11)"
      return true;
    }
  }
  c.pos = mark;
  return false;
}

void canonicalize(ChordSymbol& sym) {
  // min7(b5) is the half-diminished quality.
  if (sym.quality == Quality::min && sym.alterations.count(Alteration::flat5)) {
    sym.quality = Quality::half_dim;
    sym.alterations.erase(Alteration::flat5);
  }
  if (sym.quality == Quality::half_dim) sym.alterations.erase(Alteration::flat5);
  // Common imprecise dominant notation (final Remark of the lead-sheet
  // discussion): b5 means #11 and #5 means b13 when a perfect fifth is
  // conceptually still available.
  if (sym.quality == Quality::dom || sym.quality == Quality::sus4) {
    if (sym.alterations.erase(Alteration::flat5)) {
      sym.alterations.insert(Alteration::sharp11);
      sym.warnings.push_back("b5 on a dominant normalized to #11");
    }
    if (sym.alterations.erase(Alteration::sharp5)) {
      sym.alterations.insert(Alteration::flat13);
      sym.warnings.push_back("#5 on a dominant normalized to b13");
    }
  }
}

}  // namespace

ChordSymbol parse_chord(std::string_view text) {
  Cursor c{text};
  c.skip_spaces();
  if (c.done()) c.fail("empty chord symbol");
  char letter = c.peek();
  if (letter < 'A' || letter > 'G') c.fail("expected a root letter A-G");
  ++c.pos;
  int acc = c.eat_accidental();

  ChordSymbol sym;
  sym.root = PitchClass(kLetterPc[letter - 'A'] + acc);
  sym.root_spelling = std::string(1, letter) + (acc > 0 ? "#" : acc < 0 ? "b" : "");

  // Quality marker, longest first.
  c.skip_spaces();
  bool explicit_quality = true;
  if (c.eat("maj") || c.eat("Maj") || c.eat("Δ")) sym.quality = Quality::maj;
  else if (c.eat("min") || c.eat("m") || c.eat("-")) sym.quality = Quality::min;
  else if (c.eat("dim") || c.eat("°")) sym.quality = Quality::dim;
  else if (c.eat("aug") || c.eat("+")) sym.quality = Quality::aug;
  else if (c.eat("Ø") || c.eat("ø")) {
    sym.quality = Quality::half_dim;
    sym.extensions.insert(7);
  } else if (c.eat("sus4")) sym.quality = Quality::sus4;
  else if (c.eat("dom")) sym.quality = Quality::dom;
  else if (c.eat("M")) sym.quality = Quality::maj;
  else explicit_quality = false;

  // min(maj7) written without parens: Cminmaj7 / CmM7.
  if (sym.quality == Quality::min) {
    if (c.eat("maj7") || c.eat("Maj7") || c.eat("M7") || c.eat("Δ" "7")) {
      sym.major_seventh = true;
      sym.extensions.insert(7);
    }
  }

  // Primary extension.
  int ext = eat_degree(c);
  if (ext == 5) c.fail("5 is not an extension");
  if (ext != 0) sym.extensions.insert(ext);
  if (!explicit_quality) sym.quality = (ext == 0 || ext == 6) ? Quality::maj : Quality::dom;

  // Suffixes: parenthesized lists, bare alterations, alt, sus4, slash bass.
  while (!c.done()) {
    c.skip_spaces();
    if (c.done()) break;
    if (c.eat("(")) {
      do {
        if (!parse_item(c, sym, true)) c.fail("expected an item in the list");
        c.skip_spaces();
      } while (c.eat(","));
      if (!c.eat(")")) c.fail("expected ')'");
      continue;
    }
    if (c.peek() == '/') {
      ++c.pos;
      c.skip_spaces();
      char b = c.peek();
      if (b < 'A' || b > 'G') c.fail("expected a bass letter after '/'");
      ++c.pos;
      int bacc = c.eat_accidental();
      sym.slash_bass = PitchClass(kLetterPc[b - 'A'] + bacc);
      continue;
    }
    if (parse_item(c, sym, false)) continue;
    c.fail("unexpected input");
  }

  canonicalize(sym);
  return sym;
}

namespace {

std::string spell(PitchClass pc) { return kChordNoteNames[pc.value()]; }

}  // namespace

std::string print_chord(const ChordSymbol& sym, bool unicode) {
  std::string out = sym.root_spelling.empty() ? spell(sym.root) : sym.root_spelling;
  if (unicode) {
    std::string u;
    for (char ch : out) {
      if (ch == '#') u += "♯";
      else if (ch == 'b') u += "♭";
      else u += ch;
    }
    out = u;
  }

  std::set<int> ext = sym.extensions;
  bool print_maj7_item = false;
  switch (sym.quality) {
    case Quality::maj:
      if (ext.count(6)) { out += "6"; ext.erase(6); }
      else if (!ext.empty()) out += "maj";
      break;
    case Quality::min:
      out += "min";
      if (sym.major_seventh) { print_maj7_item = true; ext.erase(7); }
      break;
    case Quality::dom:
      break;
    case Quality::dim:
      out += "dim";
      break;
    case Quality::aug:
      out += "aug";
      break;
    case Quality::half_dim:
      out += "min";
      break;
    case Quality::sus4:
      break;
  }
  for (int e : {7, 9, 11, 13, 6}) {
    if (ext.count(e)) {
      out += std::to_string(e);
      break;  // one primary extension
    }
  }
  if (print_maj7_item) out += "(maj7)";
  if (sym.quality == Quality::sus4) out += "(sus4)";

  std::vector<std::string> items;
  if (sym.quality == Quality::half_dim)
    items.push_back(alteration_name(Alteration::flat5, unicode));
  bool has_alt = false;
  for (Alteration a : sym.alterations) {
    if (a == Alteration::alt) { has_alt = true; continue; }
    items.push_back(alteration_name(a, unicode));
  }
  if (has_alt) out += "alt";
  if (!items.empty()) {
    out += "(";
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i) out += ",";
      out += items[i];
    }
    out += ")";
  }
  for (const Addition& add : sym.additions) {
    out += "(add";
    if (add.accidental < 0) out += unicode ? "♭" : "b";
    if (add.accidental > 0) out += unicode ? "♯" : "#";
    out += std::to_string(add.degree);
    out += ")";
  }
  if (sym.slash_bass) out += "/" + std::string(sym.slash_bass->flat_name());
  return out;
}

PitchClassSet chord_tones(const ChordSymbol& sym) {
  int r = sym.root.value();
  PitchClassSet tones;
  tones = tones.with(PitchClass(r));
  int fifth = 7;
  bool fifth_altered = false;
  switch (sym.quality) {
    case Quality::maj:
    case Quality::dom:
      tones = tones.with(PitchClass(r + 4));
      break;
    case Quality::min:
      tones = tones.with(PitchClass(r + 3));
      break;
    case Quality::dim:
    case Quality::half_dim:
      tones = tones.with(PitchClass(r + 3));
      fifth = 6;
      fifth_altered = true;
      break;
    case Quality::aug:
      tones = tones.with(PitchClass(r + 4));
      fifth = 8;
      fifth_altered = true;
      break;
    case Quality::sus4:
      tones = tones.with(PitchClass(r + 5));
      break;
  }

  bool drop5 = false;
  bool keep5 = false;
  bool want7 = sym.extensions.count(7) || sym.extensions.count(9) ||
               sym.extensions.count(11) || sym.extensions.count(13) ||
               sym.quality == Quality::half_dim;
  if (sym.extensions.count(6)) tones = tones.with(PitchClass(r + 9));
  if (sym.extensions.count(9)) { tones = tones.with(PitchClass(r + 2)); drop5 = true; }
  if (sym.extensions.count(11)) { tones = tones.with(PitchClass(r + 5)); drop5 = true; }
  if (sym.extensions.count(13)) { tones = tones.with(PitchClass(r + 9)); drop5 = true; }

  if (want7) {
    int seventh = 10;
    if (sym.major_seventh || sym.quality == Quality::maj) seventh = 11;
    if (sym.quality == Quality::dim) seventh = 9;
    tones = tones.with(PitchClass(r + seventh));
  }

  for (Alteration a : sym.alterations) {
    switch (a) {
      case Alteration::flat5:
        if (fifth_altered && fifth != 6)
          throw std::invalid_argument("contradictory fifth alterations");
        fifth = 6;
        fifth_altered = true;
        break;
      case Alteration::sharp5:
        if (fifth_altered && fifth != 8)
          throw std::invalid_argument("contradictory fifth alterations");
        fifth = 8;
        fifth_altered = true;
        break;
      case Alteration::flat9: tones = tones.with(PitchClass(r + 1)); drop5 = true; break;
      case Alteration::sharp9: tones = tones.with(PitchClass(r + 3)); drop5 = true; break;
      case Alteration::sharp11: tones = tones.with(PitchClass(r + 6)); drop5 = true; break;
      case Alteration::flat13: tones = tones.with(PitchClass(r + 8)); drop5 = true; break;
      case Alteration::alt: drop5 = true; break;
    }
  }

  for (const Addition& add : sym.additions) {
    static const std::pair<int, int> kDegreePc[] = {
        {5, 7}, {6, 9}, {7, 10}, {9, 2}, {11, 5}, {13, 9}};
    int base = -1;
    for (auto [d, pc] : kDegreePc)
      if (d == add.degree) base = pc;
    if (base < 0) throw std::invalid_argument("unsupported added degree");
    if (add.degree == 5) {
      if (add.accidental == 0 && fifth_altered)
        throw std::invalid_argument("both an altered and a natural 5th demanded");
      keep5 = add.accidental == 0;
      if (add.accidental != 0) {
        tones = tones.with(PitchClass(r + base + add.accidental));
        continue;
      }
    }
    tones = tones.with(PitchClass(r + base + add.accidental));
  }

  if (fifth_altered) {
    tones = tones.with(PitchClass(r + fifth));
  } else if (!drop5 || keep5) {
    tones = tones.with(PitchClass(r + fifth));
  }
  return tones;
}

// ---------------------------------------------------------------------------
// Correspondence data (rooted at C, transposed on lookup).
// ---------------------------------------------------------------------------

namespace {

struct VoicingSpec {
  const char* chord;  // catalog chord name, "maj6", or "dem" (voicing shape)
  int offset;         // semitones above the symbol root
};

struct ModeSpec {
  const char* harmony;
  int root_offset;  // harmony representative root above the symbol root
};

struct Row {
  Quality quality;
  std::set<int> ext;
  std::set<Alteration> alts;
  bool maj7flag;
  ModeSpec mode;
  std::vector<ModeSpec> mode_alts;
  VoicingSpec voicing;
  std::vector<VoicingSpec> voicing_alts;
  const char* symbol_text;
  std::vector<const char*> symbol_alts;
  const char* mode_text;
};

const std::vector<Row>& rows() {
  static const std::vector<Row> table = {
      {Quality::maj, {7}, {}, false,
       {"MAJ", 7}, {{"MAJ", 0}},
       {"min7", 4}, {{"maj6", 0}},
       "Cmaj7", {"CΔ" "7", "CM7"},
       "C Lydian (or C Ionian), 4th mode of G MAJ"},
      {Quality::min, {7}, {}, false,
       {"MAJ", 10}, {},
       {"maj7", 3}, {},
       "Cmin7", {"C-7", "Cm7"},
       "C Dorian, 2nd mode of Bb MAJ"},
      {Quality::dom, {7}, {}, false,
       {"MAJ", 5}, {},
       {"maj7b5", 10}, {{"min7b5", 4}},
       "C7", {"Cdom7"},
       "C Mixolydian, 5th mode of F MAJ"},
      {Quality::sus4, {7}, {}, false,
       {"MAJ", 5}, {},
       {"maj7", 10}, {},
       "C7(sus4)", {},
       "C Mixolydian, 5th mode of F MAJ"},
      {Quality::dom, {7}, {Alteration::sharp11}, false,
       {"MEL", 7}, {},
       {"dom#11", 0}, {},
       "C7(#11)", {},
       "4th mode of G MEL"},
      {Quality::dom, {7}, {Alteration::flat13}, false,
       {"MEL", 5}, {},
       {"dom#11", 10}, {},
       "C7(b13)", {},
       "5th mode of F MEL"},
      {Quality::dom, {7}, {Alteration::flat9, Alteration::flat13}, false,
       {"HMIN", 5}, {},
       {"min7b5", 10}, {},
       "C7(b9,b13)", {},
       "5th mode of F HMIN"},
      {Quality::dom, {7}, {Alteration::alt}, false,
       {"MEL", 1}, {},
       {"maj7b5", 4}, {},
       "C7alt", {"C7(#9)"},
       "7th mode of Db MEL"},
      {Quality::dom, {7}, {Alteration::flat9}, false,
       {"DIM", 10}, {},
       {"dom7", 6}, {{"dim7", 7}},
       "C7(b9)", {},
       "2nd mode of Bb DIM"},
      {Quality::dom, {13}, {Alteration::sharp9}, false,
       {"DIM", 10}, {},
       {"dem", 10}, {},
       "C13(#9)", {},
       "2nd mode of Bb DIM"},
      {Quality::min, {7}, {}, true,
       {"MEL", 0}, {},
       {"aug", 3}, {},
       "Cmin(maj7)", {},
       "1st mode of C MEL"},
      {Quality::dim, {7}, {}, false,
       {"DIM", 0}, {},
       {"dom7", 11}, {{"dim7", 0}},
       "Cdim7", {"C°"},
       "1st mode of C DIM"},
      {Quality::half_dim, {7}, {}, false,
       {"HMIN", 10}, {{"MAJ", 1}},
       {"min7b5", 0}, {},
       "Cmin7(b5)", {"CØ"},
       "2nd mode of Bb HMIN (C Locrian)"},
  };
  return table;
}

// The voicing reading of dem: two tritones a semitone apart, spelled from
// the root whose tritone sits below ({0,5,6,11}).
const PitchClassSet kDemVoicing = PitchClassSet::of({0, 5, 6, 11});
const PitchClassSet kMaj6 = PitchClassSet::of({0, 4, 7, 9});

PitchClassSet voicing_pattern(const std::string& chord) {
  if (chord == "dem") return kDemVoicing;
  if (chord == "maj6") return kMaj6;
  return Catalog::instance().chord(chord).pattern;
}

Voicing realize_voicing(const VoicingSpec& spec, PitchClass symbol_root) {
  PitchClass chord_root = symbol_root + spec.offset;
  PitchClassSet shape = voicing_pattern(spec.chord).transposed(chord_root.value());
  std::string name = spell(chord_root) + spec.chord;
  return Voicing{name, shape, symbol_root};
}

const Row* find_row(const ChordSymbol& sym) {
  std::set<Alteration> alts = sym.alterations;
  for (int pass = 0; pass < 2; ++pass) {
    for (const Row& row : rows()) {
      if (row.quality == sym.quality && row.ext == sym.extensions &&
          row.alts == alts && row.maj7flag == sym.major_seventh) {
        return &row;
      }
    }
    // The (#9) spelling of the altered dominant.
    if (alts == std::set<Alteration>{Alteration::sharp9}) {
      alts = {Alteration::alt};
      continue;
    }
    break;
  }
  return nullptr;
}

Mode mode_from_spec(const ModeSpec& spec, PitchClass symbol_root) {
  const CatalogEntry& h = Catalog::instance().harmony(spec.harmony);
  return make_mode(h, symbol_root + spec.root_offset, symbol_root);
}

}  // namespace

ModeChoice chord_to_mode(const ChordSymbol& sym) {
  if (const Row* row = find_row(sym)) {
    ModeChoice choice{mode_from_spec(row->mode, sym.root), {}, true};
    for (const ModeSpec& alt : row->mode_alts)
      choice.alternatives.push_back(mode_from_spec(alt, sym.root));
    return choice;
  }
  PitchClassSet tones = chord_tones(sym);
  for (Mode& m : major_modes_for_bass(sym.root)) {
    if (tones.subset_of(m.scale)) return {m, {}, false};
  }
  for (const CatalogEntry& h : Catalog::instance().harmonies()) {
    for (int r = 0; r < 12; ++r) {
      PitchClassSet scale = h.pattern.transposed(r);
      if (scale.contains(sym.root) && tones.subset_of(scale)) {
        return {make_mode(h, PitchClass(r), sym.root), {}, false};
      }
    }
  }
  throw std::invalid_argument("no harmony contains the tones of " + print_chord(sym));
}

VoicingResult standard_voicing(const ChordSymbol& sym) {
  VoicingResult result;
  if (const Row* row = find_row(sym)) {
    result.standard = true;
    result.mode = chord_to_mode(sym);
    result.voicing = realize_voicing(row->voicing, sym.root);
    for (const VoicingSpec& alt : row->voicing_alts)
      result.alternatives.push_back(realize_voicing(alt, sym.root));
    return result;
  }
  result.standard = false;
  result.mode = chord_to_mode(sym);
  PitchClassSet scale = result.mode.primary.scale;
  for (const Embedding& e : harmonization_candidates(scale, sym.root, false)) {
    result.candidates.push_back(
        Voicing{spell(e.root) + e.inner->name, e.subset, sym.root});
  }
  return result;
}

namespace {

struct PackingRow {
  Quality quality;
  std::set<int> ext;
  std::set<Alteration> alts;
  bool maj7flag;
  std::vector<std::pair<const char*, int>> packings;  // name, offset
  const char* symbol_text;
};

const std::vector<PackingRow>& packing_rows() {
  static const std::vector<PackingRow> table = {
      {Quality::maj, {}, {}, false, {{"penta", 0}}, "Cmaj"},
      {Quality::maj, {7}, {}, false, {{"penta", 7}, {"penta", 0}}, "Cmaj7"},
      {Quality::min, {7}, {}, false, {{"penta", 3}, {"penta", 10}}, "Cmin7"},
      {Quality::dom, {7}, {}, false, {{"dpenta", 0}}, "C7"},
      {Quality::sus4, {7}, {}, false, {{"penta", 10}}, "C7(sus4)"},
      {Quality::dom, {7}, {Alteration::sharp11}, false, {{"dpenta", 2}}, "C7(#11)"},
      {Quality::dom, {7}, {Alteration::flat9, Alteration::flat13}, false,
       {{"dim", 10}, {"hmaj", 1}}, "C7(b9,b13)"},
      {Quality::dom, {7}, {Alteration::alt}, false, {{"dpenta", 6}}, "C7alt"},
      {Quality::half_dim, {7}, {}, false, {{"dim", 0}, {"hmaj", 6}}, "Cmin7(b5)"},
      {Quality::dim, {7}, {}, false, {{"dim", 0}}, "Cdim7"},
      {Quality::min, {7}, {}, true, {{"dpenta", 5}}, "Cmin(maj7)"},
  };
  return table;
}

const PackingRow* find_packing_row(const ChordSymbol& sym) {
  std::set<Alteration> alts = sym.alterations;
  for (int pass = 0; pass < 2; ++pass) {
    for (const PackingRow& row : packing_rows()) {
      if (row.quality == sym.quality && row.ext == sym.extensions &&
          row.alts == alts && row.maj7flag == sym.major_seventh) {
        return &row;
      }
    }
    if (alts == std::set<Alteration>{Alteration::sharp9}) {
      alts = {Alteration::alt};
      continue;
    }
    break;
  }
  return nullptr;
}

}  // namespace

std::vector<PackingSuggestion> improvisation_packing(const ChordSymbol& sym) {
  const PackingRow* row = find_packing_row(sym);
  if (!row)
    throw std::invalid_argument("no packing suggestion for " + print_chord(sym));
  std::vector<PackingSuggestion> out;
  for (auto [name, offset] : row->packings) {
    out.push_back({&Catalog::instance().packing(name), sym.root + offset});
  }
  return out;
}

ChordSymbol tritone_substitute(const ChordSymbol& sym) {
  if (sym.quality != Quality::dom)
    throw std::invalid_argument("tritone substitution applies to dominant chords");
  ChordSymbol out = sym;
  out.root = sym.root + 6;
  out.root_spelling = spell(out.root);
  if (out.slash_bass) out.slash_bass = *out.slash_bass + 6;
  return out;
}

const std::vector<CorrespondenceRow>& correspondence_table() {
  static const std::vector<CorrespondenceRow> table = [] {
    std::vector<CorrespondenceRow> out;
    for (const Row& row : rows()) {
      CorrespondenceRow r;
      r.symbol = row.symbol_text;
      for (const char* alt : row.symbol_alts) r.symbol_alternatives.push_back(alt);
      r.mode_text = row.mode_text;
      r.voicing = realize_voicing(row.voicing, PitchClass(0)).name;
      for (const VoicingSpec& alt : row.voicing_alts)
        r.voicing_alternatives.push_back(realize_voicing(alt, PitchClass(0)).name);
      out.push_back(std::move(r));
    }
    return out;
  }();
  return table;
}

const std::vector<PackingTranslationRow>& packing_translation_table() {
  static const std::vector<PackingTranslationRow> table = [] {
    std::vector<PackingTranslationRow> out;
    for (const PackingRow& row : packing_rows()) {
      PackingTranslationRow r;
      r.symbol = row.symbol_text;
      for (auto [name, offset] : row.packings) {
        r.packings.push_back(std::string(spell(PitchClass(offset))) + " " + name);
      }
      out.push_back(std::move(r));
    }
    return out;
  }();
  return table;
}

}  // namespace tonality
