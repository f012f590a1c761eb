#include "tonality/tables.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "tonality/catalog.hpp"
#include "tonality/embedding.hpp"
#include "tonality/leadsheet.hpp"
#include "tonality/modes.hpp"

namespace tonality {

namespace {

// Maximal run of consecutive whole-tone steps inside the scale, over all
// rotations; the whole tone scale itself closes the circle at 6.
int whole_tone_overlap(PitchClassSet s) {
  int best = 0;
  for (PitchClass start : s.tones()) {
    int run = 1;
    PitchClass t = start;
    while (run < 6) {
      t = t + 2;
      if (!s.contains(t)) break;
      ++run;
    }
    best = std::max(best, run);
  }
  return best;
}

std::string join_roots(const std::vector<PitchClass>& roots) {
  if (roots.empty()) return "-";
  std::string out;
  for (PitchClass r : roots) {
    if (!out.empty()) out += ',';
    out += r.flat_name();
  }
  return out;
}

void emit_row(std::ostringstream& os, const std::vector<std::string>& cells,
              const std::vector<int>& widths) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) os << "  ";
    os << cells[i];
    int pad = widths[i] - int(cells[i].size());
    if (i + 1 < cells.size())
      for (int p = 0; p < pad; ++p) os << ' ';
  }
  os << '\n';
}

std::string layout(const std::vector<std::vector<std::string>>& rows) {
  std::vector<int> widths;
  for (const auto& row : rows) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i)
      widths[i] = std::max(widths[i], int(row[i].size()));
  }
  std::ostringstream os;
  for (const auto& row : rows) emit_row(os, row, widths);
  return os.str();
}

}  // namespace

std::string render_table1() {
  const Catalog& cat = Catalog::instance();
  static const char* kOrder[] = {"WTONE", "MEL", "MAJ", "HMIN", "HMAJ", "DIM", "AUG"};
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"harmony"}, overlap{"overlap with WTONE"};
  for (const char* name : kOrder) {
    header.push_back(name);
    overlap.push_back(std::to_string(whole_tone_overlap(cat.harmony(name).pattern)));
  }
  rows.push_back(header);
  rows.push_back(overlap);
  return "Table 1: Harmony by overlap with the whole tone scale.\n" + layout(rows);
}

std::string render_table2() {
  static const char* kRowOrder[] = {"WTONE", "AUG", "MAJ", "MEL", "DIM", "HMIN", "HMAJ"};
  const Catalog& cat = Catalog::instance();
  auto table = packing_embeddings_table(PitchClass(0));
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{""};
  for (const CatalogEntry& p : cat.packings()) header.push_back(p.name);
  rows.push_back(header);
  for (const char* name : kRowOrder) {
    for (const PackingEmbeddingRow& row : table) {
      if (row.harmony->name != name) continue;
      std::vector<std::string> cells{std::string("C ") + name};
      for (const auto& roots : row.roots_per_packing) cells.push_back(join_roots(roots));
      rows.push_back(cells);
    }
  }
  return "Table 2: Embedding packings into harmonies starting in C.\n" + layout(rows);
}

std::string render_table3() {
  static const char* kRowOrder[] = {"WTONE", "MAJ", "MEL", "HMIN", "HMAJ", "DIM", "AUG"};
  const Catalog& cat = Catalog::instance();
  auto table = chord_embeddings_table(PitchClass(0));
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{""};
  for (const CatalogEntry& c : cat.chords()) header.push_back(c.name);
  rows.push_back(header);
  for (const char* name : kRowOrder) {
    for (const ChordEmbeddingRow& row : table) {
      if (row.harmony->name != name) continue;
      std::vector<std::string> cells{std::string("C ") + name};
      for (const auto& roots : row.roots_per_chord) cells.push_back(join_roots(roots));
      rows.push_back(cells);
    }
  }
  return "Table 3: Embedding irreducible chords into harmony starting at C.\n" +
         layout(rows);
}

std::string render_table4() {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"mode", "alterations"});
  for (const DominantEmbeddingRow& row : classify_dominant_modes()) {
    std::string alts;
    for (const std::string& a : row.alterations) {
      if (!alts.empty()) alts += ", ";
      alts += a;
    }
    if (alts.empty()) alts = "none";
    rows.push_back({row.mode_label, alts});
  }
  return "Table 4: Possible Dominant Chords.\n" + layout(rows);
}

std::string render_table5() {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"chord symbol", "mode(s)", "voicings (all /C)"});
  for (const CorrespondenceRow& row : correspondence_table()) {
    std::string sym = row.symbol;
    std::string voicing = row.voicing;
    for (const std::string& alt : row.voicing_alternatives) voicing += " (" + alt + ")";
    rows.push_back({sym, row.mode_text, voicing});
  }
  return "Table 5: Chord Notation/Mode/Voicing Correspondence.\n" + layout(rows);
}

std::string render_table6() {
  const Catalog& cat = Catalog::instance();
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"number of cells"}, counts{"number of complete scales"};
  for (int i = 0; i <= 12; ++i) {
    header.push_back(std::to_string(i));
    counts.push_back(std::to_string(cat.scale_census()[std::size_t(i)]));
  }
  rows.push_back(header);
  rows.push_back(counts);
  std::ostringstream os;
  os << "Table 6: Complete scales by number of cells.\n"
     << layout(rows) << "total " << cat.complete_scale_classes() << '\n';
  return os.str();
}

std::string render_all_tables() {
  return render_table1() + "\n" + render_table2() + "\n" + render_table3() + "\n" +
         render_table4() + "\n" + render_table5() + "\n" + render_table6();
}

}  // namespace tonality
