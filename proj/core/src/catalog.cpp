#include "tonality/catalog.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace tonality {

const char* family_name(Family f) {
  switch (f) {
    case Family::harmony: return "harmony";
    case Family::packing_blockfree: return "packing_blockfree";
    case Family::packing_irreducible: return "packing_irreducible";
    case Family::chord_irreducible: return "chord_irreducible";
    case Family::chord_reducible_named: return "chord_reducible_named";
    case Family::triad: return "triad";
    case Family::scale_irreducible: return "scale_irreducible";
  }
  return "?";
}

namespace {

bool complete_under(PitchClassSet s, int (*counter)(PitchClassSet)) {
  int base = counter(s);
  for (int t = 0; t < 12; ++t) {
    PitchClass pc(t);
    if (s.contains(pc)) continue;
    if (counter(s.with(pc)) <= base) return false;
  }
  return true;
}

int chord_dissonance(PitchClassSet s) {
  return count_semitone_blocks(s) + count_tone_cells(s);
}

}  // namespace

bool is_scale_complete(PitchClassSet s) {
  return complete_under(s, &count_semitone_cells);
}

bool is_packing_complete(PitchClassSet s) {
  return complete_under(s, &count_semitone_blocks);
}

bool is_chord_complete(PitchClassSet s) {
  // Adding a tone never removes blocks or cells, so a strict increase of the
  // sum is equivalent to increasing either counter.
  return complete_under(s, &chord_dissonance);
}

bool is_tone_block_complete(PitchClassSet s) {
  return complete_under(s, &count_tone_blocks);
}

bool is_irreducible(PitchClassSet s, const CompletenessPredicate& complete) {
  if (!complete(s)) {
    throw std::invalid_argument("is_irreducible: set is not complete: " + s.str());
  }
  std::uint16_t m = s.mask();
  for (std::uint16_t sub = (m - 1) & m; sub; sub = (sub - 1) & m) {
    if (complete(PitchClassSet::from_mask(sub))) return false;
  }
  return true;
}

namespace {

std::vector<ShapeClass> sorted_classes(const std::set<std::uint16_t>& canon) {
  std::vector<ShapeClass> out;
  out.reserve(canon.size());
  for (std::uint16_t m : canon) out.push_back(ShapeClass::of(PitchClassSet::from_mask(m)));
  return out;
}

}  // namespace

std::vector<ShapeClass> classify_harmonies() {
  std::set<std::uint16_t> canon;
  for (int m = 0; m < 4096; ++m) {
    PitchClassSet s = PitchClassSet::from_mask(std::uint16_t(m));
    if (count_semitone_cells(s) == 0 && is_scale_complete(s))
      canon.insert(ShapeClass::of(s).canonical.mask());
  }
  return sorted_classes(canon);
}

PackingClassification classify_packings() {
  PackingClassification out;
  std::set<std::uint16_t> canon, blockfree;
  for (int m = 0; m < 4096; ++m) {
    PitchClassSet s = PitchClassSet::from_mask(std::uint16_t(m));
    if (!is_packing_complete(s)) continue;
    ++out.complete_subsets;
    canon.insert(ShapeClass::of(s).canonical.mask());
    if (count_semitone_blocks(s) == 0) blockfree.insert(ShapeClass::of(s).canonical.mask());
  }
  out.complete_classes = int(canon.size());
  out.blockfree = sorted_classes(blockfree);
  std::set<std::uint16_t> irr;
  for (std::uint16_t c : canon) {
    if (is_irreducible(PitchClassSet::from_mask(c), is_packing_complete)) irr.insert(c);
  }
  out.irreducible = sorted_classes(irr);
  return out;
}

ChordClassification classify_chords() {
  // Chord families sweep subsets of size >= 2; size-0/1 sets are vacuous
  // (and never chord-complete anyway).
  ChordClassification out;
  std::set<std::uint16_t> canon;
  for (int m = 0; m < 4096; ++m) {
    PitchClassSet s = PitchClassSet::from_mask(std::uint16_t(m));
    if (s.size() < 2 || !is_chord_complete(s)) continue;
    ++out.complete_subsets;
    canon.insert(ShapeClass::of(s).canonical.mask());
  }
  out.complete_classes = int(canon.size());
  std::set<std::uint16_t> irr;
  for (std::uint16_t c : canon) {
    if (is_irreducible(PitchClassSet::from_mask(c), is_chord_complete)) irr.insert(c);
  }
  out.irreducible = sorted_classes(irr);
  return out;
}

std::vector<ShapeClass> characterize_one_block_chords() {
  ChordClassification chords = classify_chords();
  std::set<std::uint16_t> irr;
  for (const ShapeClass& sc : chords.irreducible) irr.insert(sc.canonical.mask());
  std::set<std::uint16_t> residue;
  for (int m = 0; m < 4096; ++m) {
    PitchClassSet s = PitchClassSet::from_mask(std::uint16_t(m));
    if (s.size() < 2) continue;
    if (count_semitone_blocks(s) > 1 || count_tone_cells(s) != 0) continue;
    if (!is_chord_complete(s)) continue;
    std::uint16_t c = ShapeClass::of(s).canonical.mask();
    if (!irr.count(c)) residue.insert(c);
  }
  return sorted_classes(residue);
}

std::vector<ShapeClass> characterize_one_cell_chords() {
  ChordClassification chords = classify_chords();
  std::set<std::uint16_t> irr;
  for (const ShapeClass& sc : chords.irreducible) irr.insert(sc.canonical.mask());
  std::set<std::uint16_t> residue;
  for (int m = 0; m < 4096; ++m) {
    PitchClassSet s = PitchClassSet::from_mask(std::uint16_t(m));
    if (s.size() < 2) continue;
    if (count_semitone_blocks(s) != 0 || count_tone_cells(s) > 1) continue;
    if (!is_chord_complete(s)) continue;
    std::uint16_t c = ShapeClass::of(s).canonical.mask();
    if (!irr.count(c)) residue.insert(c);
  }
  return sorted_classes(residue);
}

std::vector<ShapeClass> classify_triads() {
  std::set<std::uint16_t> canon;
  for (int m = 0; m < 4096; ++m) {
    PitchClassSet s = PitchClassSet::from_mask(std::uint16_t(m));
    if (s.size() < 2) continue;
    if (count_tone_blocks(s) == 0 && is_tone_block_complete(s))
      canon.insert(ShapeClass::of(s).canonical.mask());
  }
  return sorted_classes(canon);
}

ScaleClassification classify_scales_with_cells() {
  ScaleClassification out;
  std::set<std::uint16_t> canon;
  for (int m = 0; m < 4096; ++m) {
    PitchClassSet s = PitchClassSet::from_mask(std::uint16_t(m));
    if (is_scale_complete(s)) canon.insert(ShapeClass::of(s).canonical.mask());
  }
  out.total_classes = int(canon.size());
  std::set<std::uint16_t> irr;
  for (std::uint16_t c : canon) {
    PitchClassSet s = PitchClassSet::from_mask(c);
    out.census[std::size_t(count_semitone_cells(s))]++;
    if (is_irreducible(s, is_scale_complete)) irr.insert(c);
  }
  out.irreducible = sorted_classes(irr);
  return out;
}

namespace {

struct NamedPattern {
  const char* name;
  std::initializer_list<int> tones;
};

// Fixture patterns spelled from their conventional starting tone. The
// classifier rediscovers every class; these only attach names and roots.
const NamedPattern kHarmonies[] = {
    {"WTONE", {0, 2, 4, 6, 8, 10}}, {"MAJ", {0, 2, 4, 5, 7, 9, 11}},
    {"MEL", {0, 2, 3, 5, 7, 9, 11}}, {"DIM", {0, 2, 3, 5, 6, 8, 9, 11}},
    {"AUG", {0, 1, 4, 5, 8, 9}},     {"HMIN", {0, 2, 3, 5, 7, 8, 11}},
    {"HMAJ", {0, 2, 4, 5, 7, 8, 11}},
};

const NamedPattern kPackings[] = {
    {"penta", {0, 2, 4, 7, 9}}, {"dpenta", {0, 2, 4, 7, 10}},
    {"dim", {0, 3, 6, 9}},      {"wtone", {0, 2, 4, 6, 8, 10}},
    {"aug", {0, 1, 4, 5, 8, 9}}, {"hmaj", {0, 3, 4, 7, 9}},
    {"hmin", {0, 1, 4, 7, 9}},
};

const NamedPattern kChords[] = {
    {"min7", {0, 3, 7, 10}},   {"maj7", {0, 4, 7, 11}},
    {"dom7", {0, 4, 7, 10}},   {"dim7", {0, 3, 6, 9}},
    {"min7b5", {0, 3, 6, 10}}, {"maj7b5", {0, 4, 6, 11}},
    {"aug", {0, 4, 8}},        {"min11", {0, 3, 5, 10}},
    {"dom#11", {0, 4, 6, 10}}, {"dom11", {0, 4, 5, 10}},
    {"dem", {0, 1, 6, 7}},
};

const NamedPattern kTriadClasses[] = {
    {"major", {0, 4, 7}},
    {"minor", {0, 3, 7}},
    {"augmented", {0, 4, 8}},
    {"diminished", {0, 3, 6, 9}},  // the tone-block-complete diminished shape
};

const NamedPattern kReducibleChords[] = {
    {"aug(add13)", {0, 4, 8, 9}},
    {"aug(add5)", {0, 4, 7, 8}},
    {"min7(addb11)", {0, 3, 4, 7, 10}},   // the hmin packing shape
    {"min7(add#11)", {0, 3, 6, 7, 10}},   // the hmaj packing shape
    {"aug(addmin7)", {0, 4, 8, 10}},
    {"maj6(add9)", {0, 2, 4, 7, 9}},      // the penta shape
};

const NamedPattern kIrreducibleScalesWithCells[] = {
    {"one-cell-a", {0, 1, 2, 4, 6, 8, 9}},
    {"double-harmonic", {0, 1, 4, 5, 7, 8, 11}},
    {"one-cell-b", {0, 1, 3, 5, 7, 8, 9}},
    {"four-cell", {0, 1, 2, 3, 6, 7, 8, 9}},
};

const NamedPattern kBasicTriads[] = {
    {"maj", {0, 4, 7}},
    {"min", {0, 3, 7}},
    {"aug", {0, 4, 8}},
    {"dim", {0, 3, 6}},
};

std::vector<CatalogEntry> name_classes(const std::vector<ShapeClass>& classes,
                                       const NamedPattern* names, std::size_t n,
                                       Family family) {
  if (classes.size() != n) {
    throw std::logic_error(std::string("classification size mismatch for family ") +
                           family_name(family));
  }
  std::vector<CatalogEntry> out;
  for (std::size_t i = 0; i < n; ++i) {
    PitchClassSet pattern = PitchClassSet::of(names[i].tones);
    ShapeClass sc = ShapeClass::of(pattern);
    auto it = std::find_if(classes.begin(), classes.end(),
                           [&](const ShapeClass& c) { return c == sc; });
    if (it == classes.end()) {
      throw std::logic_error(std::string("named shape not rediscovered: ") + names[i].name);
    }
    out.push_back({names[i].name, *it, pattern, family, it->multiplicity});
  }
  return out;
}

}  // namespace

Catalog::Catalog() {
  harmonies_ = name_classes(classify_harmonies(), kHarmonies, 7, Family::harmony);

  PackingClassification packs = classify_packings();
  packing_complete_subsets_ = packs.complete_subsets;
  packing_complete_classes_ = packs.complete_classes;
  packings_ = name_classes(packs.irreducible, kPackings, 7, Family::packing_irreducible);
  for (std::size_t i = 0; i < 4; ++i) {
    // penta, dpenta, dim, wtone are the block-free four
    const CatalogEntry& e = packing(kPackings[i].name);
    if (count_semitone_blocks(e.shape.canonical) != 0)
      throw std::logic_error("expected block-free packing: " + e.name);
  }
  if (packs.blockfree.size() != 4) throw std::logic_error("block-free packing count");

  ChordClassification chords = classify_chords();
  chord_complete_subsets_ = chords.complete_subsets;
  chord_complete_classes_ = chords.complete_classes;
  chords_ = name_classes(chords.irreducible, kChords, 11, Family::chord_irreducible);

  triads_ = name_classes(classify_triads(), kTriadClasses, 4, Family::triad);

  ScaleClassification scales = classify_scales_with_cells();
  census_ = scales.census;
  scale_classes_ = scales.total_classes;
  std::vector<ShapeClass> with_cells;
  for (const ShapeClass& sc : scales.irreducible) {
    if (count_semitone_cells(sc.canonical) > 0) with_cells.push_back(sc);
  }
  scales_ = name_classes(with_cells, kIrreducibleScalesWithCells, 4,
                         Family::scale_irreducible);
  // The harmonies are irreducible scales too; keep the full family together.
  for (const CatalogEntry& h : harmonies_) {
    auto it = std::find_if(scales.irreducible.begin(), scales.irreducible.end(),
                           [&](const ShapeClass& c) { return c == h.shape; });
    if (it == scales.irreducible.end())
      throw std::logic_error("harmony missing from irreducible scales: " + h.name);
  }
  if (scales.irreducible.size() != harmonies_.size() + scales_.size())
    throw std::logic_error("irreducible scale count");

  for (const auto& np : kReducibleChords) {
    PitchClassSet pattern = PitchClassSet::of(np.tones);
    if (!is_chord_complete(pattern))
      throw std::logic_error(std::string("reducible named chord not complete: ") + np.name);
    reducible_chords_.push_back({np.name, ShapeClass::of(pattern), pattern,
                                 Family::chord_reducible_named,
                                 ShapeClass::of(pattern).multiplicity});
  }
}

const Catalog& Catalog::instance() {
  static const Catalog catalog;
  return catalog;
}

namespace {

const CatalogEntry& find_by_name(const std::vector<CatalogEntry>& entries,
                                 std::string_view name, const char* what) {
  for (const CatalogEntry& e : entries)
    if (e.name == name) return e;
  throw std::invalid_argument(std::string("unknown ") + what + ": " + std::string(name));
}

}  // namespace

const CatalogEntry& Catalog::harmony(std::string_view name) const {
  return find_by_name(harmonies_, name, "harmony");
}
const CatalogEntry& Catalog::packing(std::string_view name) const {
  return find_by_name(packings_, name, "packing");
}
const CatalogEntry& Catalog::chord(std::string_view name) const {
  return find_by_name(chords_, name, "chord");
}

const CatalogEntry* Catalog::find_harmony(PitchClassSet s) const {
  ShapeClass sc = ShapeClass::of(s);
  for (const CatalogEntry& e : harmonies_)
    if (e.shape == sc) return &e;
  return nullptr;
}

std::vector<DualityPair> Catalog::verify_duality() const {
  // The published pairing, paper order.
  static const std::pair<const char*, const char*> kPairs[] = {
      {"MAJ", "penta"}, {"MEL", "dpenta"}, {"WTONE", "wtone"}, {"DIM", "dim"},
      {"AUG", "aug"},   {"HMIN", "hmin"},  {"HMAJ", "hmaj"},
  };
  std::vector<DualityPair> out;
  for (const auto& [hn, pn] : kPairs) {
    const CatalogEntry& h = harmony(hn);
    const CatalogEntry& p = packing(pn);
    if (!(ShapeClass::of(h.pattern.complement()) == p.shape)) {
      throw std::logic_error(std::string("duality mismatch: ") + hn + " vs " + pn);
    }
    out.push_back({&h, &p, h.shape == p.shape});
  }
  // Auxiliary equivalence: s has a cell  <=>  complement(s) is incomplete.
  for (int m = 0; m < 4096; ++m) {
    PitchClassSet s = PitchClassSet::from_mask(std::uint16_t(m));
    bool has_cell = count_semitone_cells(s) > 0;
    bool comp_incomplete = !is_packing_complete(s.complement());
    if (has_cell != comp_incomplete)
      throw std::logic_error("auxiliary result fails at mask " + std::to_string(m));
  }
  return out;
}

const std::vector<CatalogEntry>& basic_triads() {
  static const std::vector<CatalogEntry> triads = [] {
    std::vector<CatalogEntry> out;
    for (const auto& np : kBasicTriads) {
      PitchClassSet pattern = PitchClassSet::of(np.tones);
      out.push_back({np.name, ShapeClass::of(pattern), pattern, Family::triad,
                     ShapeClass::of(pattern).multiplicity});
    }
    return out;
  }();
  return triads;
}

std::vector<PitchClassSet> complete_triad_in_harmony(PitchClassSet triad,
                                                     PitchClassSet harmony) {
  if (!triad.subset_of(harmony))
    throw std::invalid_argument("triad is not contained in the harmony");
  bool is_basic = false;
  ShapeClass tc = ShapeClass::of(triad);
  for (const CatalogEntry& t : basic_triads())
    if (t.shape == tc) is_basic = true;
  if (!is_basic) throw std::invalid_argument("not one of the four basic triads");
  if (!Catalog::instance().find_harmony(harmony))
    throw std::invalid_argument("not one of the seven harmonies");

  std::vector<PitchClassSet> out;
  for (const CatalogEntry& chord : Catalog::instance().chords()) {
    for (int r = 0; r < 12; ++r) {
      PitchClassSet c = chord.pattern.transposed(r);
      if (triad.subset_of(c) && c.subset_of(harmony)) {
        if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tonality
