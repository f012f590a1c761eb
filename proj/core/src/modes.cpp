#include "tonality/modes.hpp"

#include <algorithm>
#include <stdexcept>

namespace tonality {

namespace {

const char* kGreek[7] = {"Ionian",     "Dorian",  "Phrygian", "Lydian",
                         "Mixolydian", "Aeolian", "Locrian"};

std::string ordinal(int n) {
  if (n == 1) return "1st";
  if (n == 2) return "2nd";
  if (n == 3) return "3rd";
  return std::to_string(n) + "th";
}

int degree_of(PitchClassSet scale, PitchClass root, PitchClass bass) {
  int degree = 0;
  for (int i = 0; i < 12; ++i) {
    PitchClass t = root + i;
    if (scale.contains(t)) {
      ++degree;
      if (t == bass) return degree;
    }
  }
  throw std::invalid_argument("bass is not in the scale");
}

}  // namespace

std::string Mode::description() const {
  std::string root_name = root.flat_name();
  if (harmony->name == "MAJ") {
    return std::string(bass.flat_name()) + " " + mode_name(*harmony, degree) + " (" +
           ordinal(degree) + " mode of " + root_name + " MAJ)";
  }
  return ordinal(degree) + " mode of " + root_name + " " + harmony->name;
}

int distinct_modes(const CatalogEntry& harmony) {
  return harmony.pattern.size() * harmony.transposition_count / 12;
}

Mode make_mode(const CatalogEntry& harmony, PitchClass root, PitchClass bass) {
  PitchClassSet scale = harmony.pattern.transposed(root.value());
  Mode m{&harmony, scale, root, bass, 0, -1};
  m.degree = degree_of(scale, root, bass);
  return m;
}

std::vector<Mode> major_modes_for_bass(PitchClass bass) {
  const CatalogEntry& maj = Catalog::instance().harmony("MAJ");
  std::vector<Mode> out;
  for (int p = 0; p < 7; ++p) {
    // Window of 7 consecutive fifths with the bass at position p; p = 0 puts
    // the bass first (Lydian, brightest).
    PitchClassSet scale;
    for (int k = 0; k < 7; ++k) scale = scale.with(bass + 7 * (k - p));
    // The major-scale root is the second window tone in fifths order.
    PitchClass root = bass + 7 * (1 - p);
    Mode m = make_mode(maj, root, bass);
    m.brightness_rank = p;
    out.push_back(m);
  }
  return out;
}

std::string mode_name(const CatalogEntry& harmony, int degree) {
  if (degree < 1 || degree > harmony.pattern.size())
    throw std::invalid_argument("mode degree out of range");
  if (harmony.name == "MAJ") return kGreek[degree - 1];
  if (harmony.name == "MEL") {
    if (degree == 4) return "Lydian Dominant";
    if (degree == 7) return "altered";
  }
  return ordinal(degree) + " mode of " + harmony.name;
}

namespace {

// Alteration labels against the Mixolydian reference, grouped by degree:
// 9th {1 -> b9, 3 -> #9}, 11th {6 -> #11, else "no 11th" when 5 absent},
// 5th {"no 5th" when 7 absent}, 13th {8 -> b13}.
std::vector<std::string> dominant_alterations(PitchClassSet rel) {
  std::vector<std::string> out;
  if (rel.contains(PitchClass(1))) out.push_back("b9");
  if (rel.contains(PitchClass(3))) out.push_back("#9");
  if (rel.contains(PitchClass(6))) out.push_back("#11");
  else if (!rel.contains(PitchClass(5))) out.push_back("no 11th");
  if (!rel.contains(PitchClass(7))) out.push_back("no 5th");
  if (rel.contains(PitchClass(8))) out.push_back("b13");
  return out;
}

}  // namespace

std::vector<DominantEmbeddingRow> classify_dominant_modes() {
  // Row order: the published order of harmonies, degrees ascending within.
  static const char* kOrder[] = {"MAJ", "MEL", "HMIN", "HMAJ", "DIM", "WTONE", "AUG"};
  const Catalog& cat = Catalog::instance();
  std::vector<DominantEmbeddingRow> rows;
  for (const char* hn : kOrder) {
    const CatalogEntry& h = cat.harmony(hn);
    std::vector<PitchClassSet> seen_rel;
    for (PitchClass bass : h.pattern.tones()) {
      bool dominant = h.pattern.contains(bass) && h.pattern.contains(bass + 4) &&
                      h.pattern.contains(bass + 10);
      if (!dominant) continue;
      PitchClassSet rel = h.pattern.transposed(-bass.value());
      if (std::find(seen_rel.begin(), seen_rel.end(), rel) != seen_rel.end()) continue;
      seen_rel.push_back(rel);
      Mode m = make_mode(h, PitchClass(0), bass);
      DominantEmbeddingRow row{m, "", dominant_alterations(rel)};
      if (h.name == "MAJ") {
        row.mode_label = "Mixolydian (5th mode of MAJ)";
      } else {
        row.mode_label = ordinal(m.degree) + " mode of " + h.name;
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

Mode dim_aug_bright_mode(const CatalogEntry& harmony, PitchClass bass) {
  if (harmony.name != "DIM" && harmony.name != "AUG")
    throw std::invalid_argument("brightness rule defined for DIM and AUG only");
  // The two scales containing the bass; symmetric roots collapse to the one
  // that gives the bass its smallest degree.
  std::vector<Mode> candidates;
  for (int r = 0; r < 12; ++r) {
    PitchClassSet scale = harmony.pattern.transposed(r);
    if (!scale.contains(bass)) continue;
    Mode m = make_mode(harmony, PitchClass(r), bass);
    bool dup = false;
    for (Mode& prev : candidates) {
      if (prev.scale == scale) {
        dup = true;
        if (m.degree < prev.degree) prev = m;
      }
    }
    if (!dup) candidates.push_back(m);
  }
  if (candidates.size() != 2)
    throw std::logic_error("expected exactly two modes over the bass");

  // Auxiliary chord = scale minus the dim7 / aug chord through the bass;
  // nearer to the bass along ascending fifths means brighter.
  PitchClassSet base_chord;
  int step = harmony.name == "DIM" ? 3 : 4;
  for (int k = 0; k < 12; k += step) base_chord = base_chord.with(bass + k);

  auto fifths_distance = [&](PitchClassSet scale) {
    int best = 12;
    for (PitchClass t : scale.tones()) {
      if (base_chord.contains(t)) continue;
      int d = (t.value() - bass.value() + 12) % 12;
      int fifths = (7 * d) % 12;  // ascending fifths from the bass
      best = std::min(best, fifths);
    }
    return best;
  };

  Mode bright = candidates[0];
  if (fifths_distance(candidates[1].scale) < fifths_distance(candidates[0].scale))
    bright = candidates[1];
  bright.brightness_rank = 0;
  return bright;
}

}  // namespace tonality
