#pragma once

#include <string>
#include <vector>

#include "tonality/catalog.hpp"
#include "tonality/pcset.hpp"

namespace tonality {

/// A scale with a designated bass tone. `root` is the starting tone of the
/// harmony representative ("G MAJ"), `degree` the 1-based position of the
/// bass counting up from that root.
struct Mode {
  const CatalogEntry* harmony = nullptr;
  PitchClassSet scale;
  PitchClass root;
  PitchClass bass;
  int degree = 0;
  int brightness_rank = -1;  // 0 = brightest; defined for MAJ and DIM/AUG only

  std::string description() const;  // e.g. "4th mode of G MAJ"
};

/// Number of modes up to transposition: size * transpositions / 12.
int distinct_modes(const CatalogEntry& harmony);

/// The seven windows of consecutive fifths containing `bass`, ordered
/// brightest (Lydian) to darkest (Locrian).
std::vector<Mode> major_modes_for_bass(PitchClass bass);

/// Greek names for MAJ degrees; "Lydian Dominant" and "altered" aliases for
/// MEL degrees 4 and 7; "Nth mode of X" otherwise. Throws on bad degree.
std::string mode_name(const CatalogEntry& harmony, int degree);

/// Builds the Mode for a harmony representative at `root` with the given bass.
Mode make_mode(const CatalogEntry& harmony, PitchClass root, PitchClass bass);

/// A dominant-bearing mode and its alterations against the Mixolydian
/// reference on the same bass.
struct DominantEmbeddingRow {
  Mode mode;
  std::string mode_label;               // e.g. "5th mode of HMIN"
  std::vector<std::string> alterations; // e.g. {"b9", "b13"}; empty = none
};

/// Enumerates every mode whose scale contains root+{0,4,10}; nine rows.
std::vector<DominantEmbeddingRow> classify_dominant_modes();

/// Of the two DIM (or AUG) modes over `bass`, the brighter one: the mode
/// whose auxiliary chord sits nearer the bass along ascending fifths.
Mode dim_aug_bright_mode(const CatalogEntry& harmony, PitchClass bass);

}  // namespace tonality
