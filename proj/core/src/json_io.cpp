#include "tonality/json_io.hpp"

namespace tonality {

namespace {

Json pcs_to_json(PitchClassSet s) {
  Json arr = Json::array();
  for (PitchClass t : s.tones()) arr.push_back(t.value());
  return arr;
}

char hex_digit(int v) { return v < 10 ? char('0' + v) : char('a' + v - 10); }

std::string mask_hex(PitchClassSet s) {
  int m = s.mask();
  std::string out = "0x";
  out += hex_digit((m >> 8) & 0xF);
  out += hex_digit((m >> 4) & 0xF);
  out += hex_digit(m & 0xF);
  return out;
}

}  // namespace

Json entry_to_json(const CatalogEntry& entry) {
  Json j;
  j["name"] = entry.name;
  j["family"] = family_name(entry.family);
  j["pattern"] = pcs_to_json(entry.pattern);
  j["pattern_notes"] = entry.pattern.str();
  j["canonical_mask"] = mask_hex(entry.shape.canonical);
  j["transpositions"] = entry.transposition_count;
  return j;
}

Json catalog_to_json() {
  const Catalog& cat = Catalog::instance();
  Json j;
  j["version"] = 1;
  Json families;
  auto fill = [&](const char* key, const std::vector<CatalogEntry>& entries) {
    Json arr = Json::array();
    for (const CatalogEntry& e : entries) arr.push_back(entry_to_json(e));
    families[key] = arr;
  };
  fill("harmonies", cat.harmonies());
  fill("packings", cat.packings());
  fill("chords", cat.chords());
  fill("triads", cat.triads());
  fill("irreducible_scales_with_cells", cat.irreducible_scales());
  fill("named_reducible_chords", cat.named_reducible_chords());
  j["families"] = families;

  Json counts;
  counts["complete_packings"] = {{"classes", cat.packing_complete_classes()},
                                 {"subsets", cat.packing_complete_subsets()}};
  counts["complete_chords"] = {{"classes", cat.chord_complete_classes()},
                               {"subsets", cat.chord_complete_subsets()}};
  counts["complete_scales_classes"] = cat.complete_scale_classes();
  counts["scale_census_by_cells"] = cat.scale_census();
  // The published complete-chord figure is 265; exhaustive enumeration gives
  // 264 transposition classes (3057 subsets). Reported verbatim for audit.
  counts["published_complete_packings"] = 132;
  counts["published_complete_chords"] = 265;
  j["counts"] = counts;
  return j;
}

Json duality_to_json() {
  Json arr = Json::array();
  for (const DualityPair& pair : Catalog::instance().verify_duality()) {
    Json j;
    j["harmony"] = pair.harmony->name;
    j["packing"] = pair.packing->name;
    j["self_dual"] = pair.self_dual;
    j["harmony_complement"] = pcs_to_json(pair.harmony->pattern.complement());
    arr.push_back(j);
  }
  Json out;
  out["pairs"] = arr;
  out["auxiliary_result_verified"] = true;  // verify_duality throws otherwise
  return out;
}

Json mode_to_json(const Mode& mode) {
  Json j;
  j["harmony"] = mode.harmony->name;
  j["root"] = mode.root.value();
  j["bass"] = mode.bass.value();
  j["degree"] = mode.degree;
  j["scale"] = pcs_to_json(mode.scale);
  j["description"] = mode.description();
  if (mode.brightness_rank >= 0) j["brightness_rank"] = mode.brightness_rank;
  return j;
}

Json symbol_to_json(const ChordSymbol& symbol) {
  Json j;
  j["input_normalized"] = print_chord(symbol);
  j["root"] = symbol.root.value();
  j["root_spelling"] = symbol.root_spelling;
  j["quality"] = quality_name(symbol.quality);
  Json ext = Json::array();
  for (int e : symbol.extensions) ext.push_back(e);
  j["extensions"] = ext;
  Json alts = Json::array();
  for (Alteration a : symbol.alterations) alts.push_back(alteration_name(a));
  j["alterations"] = alts;
  Json adds = Json::array();
  for (const Addition& a : symbol.additions) {
    std::string s = "add";
    if (a.accidental < 0) s += "b";
    if (a.accidental > 0) s += "#";
    s += std::to_string(a.degree);
    adds.push_back(s);
  }
  j["additions"] = adds;
  j["major_seventh"] = symbol.major_seventh;
  if (symbol.slash_bass) j["slash_bass"] = symbol.slash_bass->value();
  j["tones"] = pcs_to_json(chord_tones(symbol));
  if (!symbol.warnings.empty()) j["warnings"] = symbol.warnings;
  return j;
}

Json voicing_result_to_json(const VoicingResult& result) {
  Json j;
  j["standard"] = result.standard;
  j["mode"] = mode_to_json(result.mode.primary);
  Json alt_modes = Json::array();
  for (const Mode& m : result.mode.alternatives) alt_modes.push_back(mode_to_json(m));
  j["mode_alternatives"] = alt_modes;
  if (result.voicing) {
    Json v;
    v["voicing"] = result.voicing->str();
    v["tones"] = pcs_to_json(result.voicing->chord);
    j["voicing"] = v;
  }
  Json alts = Json::array();
  for (const Voicing& v : result.alternatives) {
    Json a;
    a["voicing"] = v.str();
    a["tones"] = pcs_to_json(v.chord);
    alts.push_back(a);
  }
  j["alternatives"] = alts;
  Json cands = Json::array();
  for (const Voicing& v : result.candidates) {
    Json a;
    a["voicing"] = v.str();
    a["tones"] = pcs_to_json(v.chord);
    cands.push_back(a);
  }
  j["candidates"] = cands;
  return j;
}

Json blue_note_report_to_json(const BlueNoteReport& report) {
  Json j;
  j["packing"] = pcs_to_json(report.packing);
  j["creates_cell"] = pcs_to_json(report.creates_cell);
  j["unique_projection"] = pcs_to_json(report.unique_projection);
  j["double_resolution"] = pcs_to_json(report.double_resolution);
  return j;
}

Json embedding_to_json(const Embedding& embedding) {
  Json j;
  j["shape"] = embedding.inner->name;
  j["root"] = embedding.root.value();
  j["root_name"] = embedding.root.flat_name();
  j["tones"] = pcs_to_json(embedding.subset);
  return j;
}

Json cover_report_to_json(const CoverReport& report) {
  Json j;
  j["harmony"] = report.harmony->name;
  j["root"] = report.harmony_root.value();
  j["covered_by_dual"] = report.covered_by_dual;
  Json coverage = Json::array();
  for (const Embedding& e : report.packing_copies) coverage.push_back(embedding_to_json(e));
  j["dual_copies"] = coverage;
  Json uncovered = Json::array();
  for (PitchClass t : report.uncovered) uncovered.push_back(t.value());
  j["uncovered"] = uncovered;
  Json chords = Json::array();
  for (const Embedding& e : report.chord_cover) chords.push_back(embedding_to_json(e));
  j["chord_cover"] = chords;
  return j;
}

Json dominant_rows_to_json() {
  Json arr = Json::array();
  for (const DominantEmbeddingRow& row : classify_dominant_modes()) {
    Json j;
    j["mode"] = row.mode_label;
    j["alterations"] = row.alterations;
    j["scale"] = pcs_to_json(row.mode.scale);
    j["bass"] = row.mode.bass.value();
    arr.push_back(j);
  }
  return arr;
}

}  // namespace tonality
