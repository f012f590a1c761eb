#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "tonality/catalog.hpp"
#include "tonality/modes.hpp"
#include "tonality/pcset.hpp"

namespace tonality {

enum class Quality { maj, min, dom, dim, aug, half_dim, sus4 };

enum class Alteration { flat5, sharp5, flat9, sharp9, sharp11, flat13, alt };

const char* quality_name(Quality q);
std::string alteration_name(Alteration a, bool unicode = false);

/// An explicitly added tone, e.g. "(add 9)" or "(add b11)".
struct Addition {
  int degree = 0;       // 5, 6, 7, 9, 11 or 13
  int accidental = 0;   // -1 flat, 0 natural, +1 sharp

  friend bool operator==(const Addition& a, const Addition& b) {
    return a.degree == b.degree && a.accidental == b.accidental;
  }
  friend bool operator<(const Addition& a, const Addition& b) {
    return a.degree != b.degree ? a.degree < b.degree : a.accidental < b.accidental;
  }
};

/// Parsed abstract syntax of a lead-sheet chord symbol.
struct ChordSymbol {
  PitchClass root;
  std::string root_spelling;  // as written, ASCII accidentals
  Quality quality = Quality::maj;
  bool major_seventh = false;  // min(maj7) marker
  std::set<int> extensions;    // subset of {6, 7, 9, 11, 13}
  std::set<Alteration> alterations;
  std::set<Addition> additions;
  std::optional<PitchClass> slash_bass;
  std::vector<std::string> warnings;  // notation normalizations applied

  friend bool operator==(const ChordSymbol& a, const ChordSymbol& b) {
    return a.root == b.root && a.quality == b.quality &&
           a.major_seventh == b.major_seventh && a.extensions == b.extensions &&
           a.alterations == b.alterations && a.additions == b.additions &&
           a.slash_bass == b.slash_bass;
  }
};

class ChordParseError : public std::runtime_error {
 public:
  ChordParseError(std::size_t position, const std::string& message)
      : std::runtime_error("at position " + std::to_string(position) + ": " + message),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses a chord symbol. Unicode and ASCII accidentals both accepted;
/// imprecise dominant notation (b5, #5) is normalized to #11 / b13 with a
/// recorded warning. Throws ChordParseError on malformed input.
ChordSymbol parse_chord(std::string_view text);

/// Canonical printing; parse(print(s)) == s. ASCII by default.
std::string print_chord(const ChordSymbol& sym, bool unicode = false);

/// Realizes the symbol's tone set. Extensions beyond the plain 7th chord
/// drop the 5th. Throws std::invalid_argument on contradictory symbols.
PitchClassSet chord_tones(const ChordSymbol& sym);

/// The mode associated with a symbol: the correspondence table first, then
/// the brightest major mode containing the chord tones, then a catalog-wide
/// search. Throws std::invalid_argument when no harmony contains the tones.
struct ModeChoice {
  Mode primary;
  std::vector<Mode> alternatives;
  bool from_table = false;
};
ModeChoice chord_to_mode(const ChordSymbol& sym);

/// A concrete chord shape over a bass, printed "name/bass".
struct Voicing {
  std::string name;       // e.g. "Emin7"
  PitchClassSet chord;
  PitchClass bass;

  std::string str() const { return name + "/" + bass.flat_name(); }
};

struct VoicingResult {
  bool standard = false;   // covered by the correspondence table
  ModeChoice mode;
  std::optional<Voicing> voicing;
  std::vector<Voicing> alternatives;
  std::vector<Voicing> candidates;  // harmonization candidates when not covered
};
VoicingResult standard_voicing(const ChordSymbol& sym);

/// Improvisation packing suggestions, transposed to the symbol's root.
struct PackingSuggestion {
  const CatalogEntry* packing;
  PitchClass root;
};
std::vector<PackingSuggestion> improvisation_packing(const ChordSymbol& sym);

/// Shifts a dominant chord's root by a tritone. Rejects non-dominant input.
ChordSymbol tritone_substitute(const ChordSymbol& sym);

/// One row of the symbol/mode/voicing correspondence table, rooted at C.
struct CorrespondenceRow {
  std::string symbol;                   // canonical ASCII form at root C
  std::vector<std::string> symbol_alternatives;
  std::string mode_text;                // as published
  std::string voicing;                  // voicing name at root C
  std::vector<std::string> voicing_alternatives;
};
const std::vector<CorrespondenceRow>& correspondence_table();

/// One row of the symbol -> packing translation table, rooted at C.
struct PackingTranslationRow {
  std::string symbol;
  std::vector<std::string> packings;  // e.g. {"G penta", "C penta"}
};
const std::vector<PackingTranslationRow>& packing_translation_table();

}  // namespace tonality
