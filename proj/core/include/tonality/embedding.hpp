#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tonality/catalog.hpp"
#include "tonality/pcset.hpp"

namespace tonality {

/// A copy of a catalog shape placed inside an outer set. `root` is the
/// transposition applied to the entry's named pattern.
struct Embedding {
  const CatalogEntry* inner;
  PitchClassSet outer;
  PitchClass root;
  PitchClassSet subset;  // inner.pattern transposed by root
};

/// Every root r with pattern+r contained in outer. Symmetric shapes report
/// one root per symmetry image, so the same subset may appear several times.
std::vector<PitchClass> embedding_roots(PitchClassSet pattern, PitchClassSet outer);

std::vector<Embedding> embeddings_of(const CatalogEntry& inner, PitchClassSet outer);

/// Embeddings collapsed to distinct subsets, each labeled by its smallest
/// root against the entry's named pattern.
std::vector<Embedding> distinct_embeddings(const CatalogEntry& inner,
                                           PitchClassSet outer);

/// One row of the packing-into-harmony table: roots per packing.
struct PackingEmbeddingRow {
  const CatalogEntry* harmony;
  std::vector<std::vector<PitchClass>> roots_per_packing;  // catalog packing order
};
std::vector<PackingEmbeddingRow> packing_embeddings_table(PitchClass harmony_root);

/// One row of the chord-into-harmony table: roots per irreducible chord.
/// Roots follow the published naming: the min7 column is labeled by the
/// maj6 starting tone, and a few symmetric cells keep the published
/// representative (see table_root_overrides in the implementation).
struct ChordEmbeddingRow {
  const CatalogEntry* harmony;
  std::vector<std::vector<PitchClass>> roots_per_chord;  // catalog chord order
};
std::vector<ChordEmbeddingRow> chord_embeddings_table(PitchClass harmony_root);

/// Unique projection of a harmony tone onto an embedded complete packing:
/// the tone itself when it is a member, otherwise its single semitone
/// neighbor inside the packing. Throws std::invalid_argument on violated
/// preconditions and std::logic_error if zero or two neighbors qualify.
PitchClass project(PitchClass tone, PitchClassSet packing, PitchClassSet harmony);

std::vector<PitchClass> project_line(const std::vector<PitchClass>& tones,
                                     PitchClassSet packing, PitchClassSet harmony);

/// Classification of the complement tones of a complete packing.
struct BlueNoteReport {
  PitchClassSet packing;
  PitchClassSet creates_cell;       // adding the tone creates a semitone cell
  PitchClassSet unique_projection;  // exactly one semitone neighbor in packing
  PitchClassSet double_resolution;  // both semitone neighbors in packing
};
BlueNoteReport blue_notes(PitchClassSet packing);

/// All embedded irreducible chords containing `top`; optionally drops chords
/// that also contain the tone a semitone below it.
std::vector<Embedding> harmonization_candidates(PitchClassSet harmony, PitchClass top,
                                                bool avoid_semitone_below);

/// Whether copies of the dual packing cover the harmony; for HMIN/HMAJ the
/// dual does not embed and a chord cover is reported instead.
struct CoverReport {
  const CatalogEntry* harmony;
  PitchClass harmony_root;
  bool covered_by_dual;
  std::vector<Embedding> packing_copies;     // embedded dual copies
  std::vector<PitchClass> uncovered;         // tones missed by the packings
  std::vector<Embedding> chord_cover;        // irreducible chords closing the gap
};
CoverReport covering_check(const CatalogEntry& harmony, PitchClass root);

}  // namespace tonality
