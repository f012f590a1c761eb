#pragma once

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "tonality/pcset.hpp"

namespace tonality {

enum class Family {
  harmony,
  packing_blockfree,
  packing_irreducible,
  chord_irreducible,
  chord_reducible_named,
  triad,
  scale_irreducible,
};

const char* family_name(Family f);

/// A named classified shape. `pattern` is the shape spelled from its
/// conventional starting tone (e.g. penta = {0,2,4,7,9}); embedding roots
/// are reported against this pattern.
struct CatalogEntry {
  std::string name;
  ShapeClass shape;
  PitchClassSet pattern;
  Family family = Family::harmony;
  int transposition_count = 0;
};

struct DualityPair {
  const CatalogEntry* harmony;
  const CatalogEntry* packing;
  bool self_dual;
};

using CompletenessPredicate = std::function<bool(PitchClassSet)>;

/// A scale is complete when every absent tone strictly increases the number
/// of semitone cells.
bool is_scale_complete(PitchClassSet s);

/// A packing is complete when every absent tone strictly increases the number
/// of semitone blocks.
bool is_packing_complete(PitchClassSet s);

/// A chord is complete when every absent tone strictly increases the number
/// of semitone blocks or the number of tone cells.
bool is_chord_complete(PitchClassSet s);

/// Completeness with the tone-block counter (triad classification).
bool is_tone_block_complete(PitchClassSet s);

/// True iff no proper subset satisfies the predicate. Throws
/// std::invalid_argument when s itself does not satisfy it.
bool is_irreducible(PitchClassSet s, const CompletenessPredicate& complete);

/// Exhaustive sweeps over all 4096 subsets. Each returns the discovered
/// shape classes sorted by canonical mask.
std::vector<ShapeClass> classify_harmonies();

struct PackingClassification {
  std::vector<ShapeClass> blockfree;
  std::vector<ShapeClass> irreducible;
  int complete_subsets = 0;  // raw subset count
  int complete_classes = 0;  // transposition classes
};
PackingClassification classify_packings();

struct ChordClassification {
  std::vector<ShapeClass> irreducible;
  int complete_subsets = 0;
  int complete_classes = 0;
};
ChordClassification classify_chords();

/// Complete chords with at most one semitone block and zero tone cells that
/// are not irreducible. Exactly four classes.
std::vector<ShapeClass> characterize_one_block_chords();

/// Complete chords with zero semitone blocks and at most one tone cell that
/// are not irreducible. Exactly two classes.
std::vector<ShapeClass> characterize_one_cell_chords();

/// Tone-block-complete sets with zero tone blocks. Exactly four classes.
std::vector<ShapeClass> classify_triads();

struct ScaleClassification {
  std::array<int, 13> census{};  // class count per semitone-cell count
  int total_classes = 0;
  std::vector<ShapeClass> irreducible;
};
ScaleClassification classify_scales_with_cells();

/// The assembled catalog: every family rediscovered by exhaustive search and
/// then matched against the named fixtures (a mismatch throws).
class Catalog {
 public:
  static const Catalog& instance();

  const std::vector<CatalogEntry>& harmonies() const { return harmonies_; }
  const std::vector<CatalogEntry>& packings() const { return packings_; }
  const std::vector<CatalogEntry>& chords() const { return chords_; }
  const std::vector<CatalogEntry>& triads() const { return triads_; }
  const std::vector<CatalogEntry>& irreducible_scales() const { return scales_; }
  const std::vector<CatalogEntry>& named_reducible_chords() const {
    return reducible_chords_;
  }

  const CatalogEntry& harmony(std::string_view name) const;
  const CatalogEntry& packing(std::string_view name) const;
  const CatalogEntry& chord(std::string_view name) const;

  const CatalogEntry* find_harmony(PitchClassSet s) const;  // by shape class

  std::vector<DualityPair> verify_duality() const;

  int packing_complete_subsets() const { return packing_complete_subsets_; }
  int packing_complete_classes() const { return packing_complete_classes_; }
  int chord_complete_subsets() const { return chord_complete_subsets_; }
  int chord_complete_classes() const { return chord_complete_classes_; }
  const std::array<int, 13>& scale_census() const { return census_; }
  int complete_scale_classes() const { return scale_classes_; }

 private:
  Catalog();

  std::vector<CatalogEntry> harmonies_;
  std::vector<CatalogEntry> packings_;
  std::vector<CatalogEntry> chords_;
  std::vector<CatalogEntry> triads_;
  std::vector<CatalogEntry> scales_;
  std::vector<CatalogEntry> reducible_chords_;
  int packing_complete_subsets_ = 0;
  int packing_complete_classes_ = 0;
  int chord_complete_subsets_ = 0;
  int chord_complete_classes_ = 0;
  std::array<int, 13> census_{};
  int scale_classes_ = 0;
};

/// Triad completion (single harmony/triad pair): irreducible chord subsets c
/// with triad ⊆ c ⊆ harmony. Preconditions are checked.
std::vector<PitchClassSet> complete_triad_in_harmony(PitchClassSet triad,
                                                     PitchClassSet harmony);

/// The four basic triads of the notation appendix, used as completion inputs.
const std::vector<CatalogEntry>& basic_triads();

}  // namespace tonality
