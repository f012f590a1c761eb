#include "tonality/embedding.hpp"

#include <algorithm>
#include <stdexcept>

namespace tonality {

std::vector<PitchClass> embedding_roots(PitchClassSet pattern, PitchClassSet outer) {
  std::vector<PitchClass> out;
  if (pattern.empty()) return out;
  for (int r = 0; r < 12; ++r) {
    if (pattern.transposed(r).subset_of(outer)) out.push_back(PitchClass(r));
  }
  return out;
}

std::vector<Embedding> embeddings_of(const CatalogEntry& inner, PitchClassSet outer) {
  std::vector<Embedding> out;
  for (PitchClass r : embedding_roots(inner.pattern, outer)) {
    out.push_back({&inner, outer, r, inner.pattern.transposed(r.value())});
  }
  return out;
}

std::vector<Embedding> distinct_embeddings(const CatalogEntry& inner,
                                           PitchClassSet outer) {
  std::vector<Embedding> out;
  for (const Embedding& e : embeddings_of(inner, outer)) {
    bool seen = false;
    for (const Embedding& f : out)
      if (f.subset == e.subset) seen = true;
    if (!seen) out.push_back(e);
  }
  return out;
}

namespace {

// The published tables label the min7 column by the maj6 starting tone
// (the same shape read from its other conventional root).
const PitchClassSet kMaj6Pattern = PitchClassSet::of({0, 4, 7, 9});

// Representative overrides where the published table names a symmetric
// shape by a functional root instead of the smallest one.
struct RootOverride {
  const char* harmony;
  const char* chord;
  std::uint16_t subset_mask;
  int root;
};

const RootOverride kTable3Overrides[] = {
    // aug chord {Eb,G,B} is written Gaug in MEL and HMIN (the V degree).
    {"MEL", "aug", 0x888, 7},
    {"HMIN", "aug", 0x888, 7},
    // dem {B,C,F,Gb} is written Bdem, not Fdem.
    {"DIM", "dem", 0x861, 11},
};

std::vector<PitchClass> table_cell_roots(const CatalogEntry& harmony_entry,
                                         const CatalogEntry& chord,
                                         PitchClassSet outer, PitchClass harmony_root) {
  PitchClassSet pattern = chord.name == "min7" ? kMaj6Pattern : chord.pattern;
  // First root per distinct subset, scanning roots in ascending order.
  std::vector<PitchClass> reps;
  std::vector<PitchClassSet> seen;
  for (PitchClass r : embedding_roots(pattern, outer)) {
    PitchClassSet subset = pattern.transposed(r.value());
    if (std::find(seen.begin(), seen.end(), subset) != seen.end()) continue;
    seen.push_back(subset);
    PitchClass rep = r;
    for (const RootOverride& o : kTable3Overrides) {
      if (harmony_entry.name == o.harmony && chord.name == o.chord &&
          subset.transposed(-harmony_root.value()).mask() == o.subset_mask) {
        rep = PitchClass(o.root) + harmony_root.value();
      }
    }
    reps.push_back(rep);
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

}  // namespace

std::vector<PackingEmbeddingRow> packing_embeddings_table(PitchClass harmony_root) {
  const Catalog& cat = Catalog::instance();
  std::vector<PackingEmbeddingRow> rows;
  for (const CatalogEntry& h : cat.harmonies()) {
    PitchClassSet scale = h.pattern.transposed(harmony_root.value());
    PackingEmbeddingRow row{&h, {}};
    for (const CatalogEntry& p : cat.packings()) {
      std::vector<PitchClass> reps;
      for (const Embedding& e : distinct_embeddings(p, scale)) reps.push_back(e.root);
      std::sort(reps.begin(), reps.end());
      row.roots_per_packing.push_back(std::move(reps));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<ChordEmbeddingRow> chord_embeddings_table(PitchClass harmony_root) {
  const Catalog& cat = Catalog::instance();
  std::vector<ChordEmbeddingRow> rows;
  for (const CatalogEntry& h : cat.harmonies()) {
    PitchClassSet scale = h.pattern.transposed(harmony_root.value());
    ChordEmbeddingRow row{&h, {}};
    for (const CatalogEntry& c : cat.chords()) {
      row.roots_per_chord.push_back(table_cell_roots(h, c, scale, harmony_root));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

PitchClass project(PitchClass tone, PitchClassSet packing, PitchClassSet harmony) {
  if (!packing.subset_of(harmony))
    throw std::invalid_argument("project: packing is not contained in the harmony");
  if (!is_packing_complete(packing))
    throw std::invalid_argument("project: packing is not complete");
  if (count_semitone_cells(harmony) != 0)
    throw std::invalid_argument("project: harmony has semitone cells");
  if (!harmony.contains(tone))
    throw std::invalid_argument("project: tone is not in the harmony");
  if (packing.contains(tone)) return tone;
  bool up = packing.contains(tone + 1);
  bool down = packing.contains(tone - 1);
  if (up == down) {
    throw std::logic_error(std::string("projection theorem violated at tone ") +
                           tone.sharp_name());
  }
  return up ? tone + 1 : tone - 1;
}

std::vector<PitchClass> project_line(const std::vector<PitchClass>& tones,
                                     PitchClassSet packing, PitchClassSet harmony) {
  std::vector<PitchClass> out;
  out.reserve(tones.size());
  for (std::size_t i = 0; i < tones.size(); ++i) {
    try {
      out.push_back(project(tones[i], packing, harmony));
    } catch (const std::exception& e) {
      throw std::invalid_argument("project_line at position " + std::to_string(i) +
                                  ": " + e.what());
    }
  }
  return out;
}

BlueNoteReport blue_notes(PitchClassSet packing) {
  if (!is_packing_complete(packing))
    throw std::invalid_argument("blue_notes: packing is not complete");
  BlueNoteReport report{packing, {}, {}, {}};
  int base = count_semitone_cells(packing);
  for (int t = 0; t < 12; ++t) {
    PitchClass pc(t);
    if (packing.contains(pc)) continue;
    if (count_semitone_cells(packing.with(pc)) > base)
      report.creates_cell = report.creates_cell.with(pc);
    int neighbors = int(packing.contains(pc + 1)) + int(packing.contains(pc - 1));
    if (neighbors == 1) report.unique_projection = report.unique_projection.with(pc);
    if (neighbors == 2) report.double_resolution = report.double_resolution.with(pc);
  }
  return report;
}

std::vector<Embedding> harmonization_candidates(PitchClassSet harmony, PitchClass top,
                                                bool avoid_semitone_below) {
  if (!harmony.contains(top))
    throw std::invalid_argument("harmonization_candidates: tone not in harmony");
  std::vector<Embedding> out;
  for (const CatalogEntry& chord : Catalog::instance().chords()) {
    for (const Embedding& e : distinct_embeddings(chord, harmony)) {
      if (!e.subset.contains(top)) continue;
      if (avoid_semitone_below && e.subset.contains(top - 1)) continue;
      out.push_back(e);
    }
  }
  return out;
}

CoverReport covering_check(const CatalogEntry& harmony, PitchClass root) {
  const Catalog& cat = Catalog::instance();
  PitchClassSet scale = harmony.pattern.transposed(root.value());
  const CatalogEntry* dual = nullptr;
  for (const DualityPair& pair : cat.verify_duality()) {
    if (pair.harmony->name == harmony.name) dual = pair.packing;
  }
  CoverReport report{&harmony, root, false, {}, {}, {}};
  PitchClassSet covered;
  // The packings that actually embed: the dual plus anything else available.
  for (const CatalogEntry& p : cat.packings()) {
    for (const Embedding& e : distinct_embeddings(p, scale)) {
      if (p.name == dual->name) report.packing_copies.push_back(e);
      covered = covered | e.subset;
    }
  }
  PitchClassSet dual_union;
  for (const Embedding& e : report.packing_copies) dual_union = dual_union | e.subset;
  report.covered_by_dual = dual_union == scale;
  for (PitchClass t : scale.tones())
    if (!covered.contains(t)) report.uncovered.push_back(t);

  if (!report.covered_by_dual) {
    // Greedy chord cover for the harmonies the packings cannot close.
    PitchClassSet done;
    while (done != scale) {
      Embedding chosen{nullptr, scale, PitchClass(0), {}};
      int best_gain = 0;
      for (const CatalogEntry& chord : cat.chords()) {
        for (const Embedding& e : distinct_embeddings(chord, scale)) {
          int gain = (e.subset & done.complement()).size();
          if (gain > best_gain) {
            best_gain = gain;
            chosen = e;
          }
        }
      }
      if (!chosen.inner) break;
      report.chord_cover.push_back(chosen);
      done = done | chosen.subset;
    }
  }
  return report;
}

}  // namespace tonality
