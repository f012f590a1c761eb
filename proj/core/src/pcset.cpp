#include "tonality/pcset.hpp"

#include <algorithm>
#include <cctype>

namespace tonality {

namespace {

constexpr const char* kSharpNames[12] = {"C",  "C#", "D",  "D#", "E",  "F",
                                         "F#", "G",  "G#", "A",  "A#", "B"};
constexpr const char* kFlatNames[12] = {"C",  "Db", "D",  "Eb", "E",  "F",
                                        "Gb", "G",  "Ab", "A",  "Bb", "B"};
constexpr int kLetterPc[7] = {9, 11, 0, 2, 4, 5, 7};  // A..G

// Consumes an accidental at text[pos] if present; returns the offset.
int eat_accidental(std::string_view text, std::size_t& pos) {
  if (pos >= text.size()) return 0;
  if (text[pos] == '#') { ++pos; return 1; }
  if (text[pos] == 'b') { ++pos; return -1; }
  // UTF-8 MUSIC SHARP SIGN (E2 99 AF) and MUSIC FLAT SIGN (E2 99 AD)
  if (pos + 2 < text.size() && (unsigned char)text[pos] == 0xE2 &&
      (unsigned char)text[pos + 1] == 0x99) {
    unsigned char c = text[pos + 2];
    if (c == 0xAF) { pos += 3; return 1; }
    if (c == 0xAD) { pos += 3; return -1; }
  }
  return 0;
}

}  // namespace

const char* PitchClass::sharp_name() const { return kSharpNames[value_]; }
const char* PitchClass::flat_name() const { return kFlatNames[value_]; }

std::optional<PitchClass> PitchClass::parse(std::string_view text) {
  while (!text.empty() && std::isspace((unsigned char)text.front())) text.remove_prefix(1);
  while (!text.empty() && std::isspace((unsigned char)text.back())) text.remove_suffix(1);
  if (text.empty()) return std::nullopt;
  char c = text[0];
  if (c >= 'A' && c <= 'G') {
    std::size_t pos = 1;
    int acc = eat_accidental(text, pos);
    if (pos != text.size()) return std::nullopt;
    return PitchClass(kLetterPc[c - 'A'] + acc);
  }
  if (std::isdigit((unsigned char)c)) {
    int v = 0;
    for (char d : text) {
      if (!std::isdigit((unsigned char)d)) return std::nullopt;
      v = v * 10 + (d - '0');
    }
    if (v > 11) return std::nullopt;
    return PitchClass(v);
  }
  return std::nullopt;
}

std::vector<PitchClass> PitchClassSet::tones() const {
  std::vector<PitchClass> out;
  for (int t = 0; t < 12; ++t)
    if ((mask_ >> t) & 1u) out.push_back(PitchClass(t));
  return out;
}

std::string PitchClassSet::str(bool flats) const {
  std::string out;
  for (int t = 0; t < 12; ++t) {
    if (!((mask_ >> t) & 1u)) continue;
    if (!out.empty()) out += ',';
    out += flats ? kFlatNames[t] : kSharpNames[t];
  }
  return out;
}

std::optional<PitchClassSet> PitchClassSet::parse(std::string_view text) {
  while (!text.empty() && std::isspace((unsigned char)text.front())) text.remove_prefix(1);
  while (!text.empty() && std::isspace((unsigned char)text.back())) text.remove_suffix(1);
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    std::uint32_t m = 0;
    for (char c : text.substr(2)) {
      int d;
      if (c >= '0' && c <= '9') d = c - '0';
      else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
      else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
      else return std::nullopt;
      m = m * 16 + std::uint32_t(d);
      if (m > 0xFFF) return std::nullopt;
    }
    return from_mask(std::uint16_t(m));
  }
  PitchClassSet out;
  if (text.empty()) return out;  // empty set is legal
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(
        start, comma == std::string_view::npos ? text.size() - start : comma - start);
    auto pc = PitchClass::parse(item);
    if (!pc) return std::nullopt;
    out = out.with(*pc);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

ShapeClass ShapeClass::of(PitchClassSet s) {
  ShapeClass sc;
  std::uint16_t best = s.mask();
  int distinct = 0;
  std::array<std::uint16_t, 12> seen{};
  for (int k = 0; k < 12; ++k) {
    std::uint16_t m = s.transposed(k).mask();
    best = std::min(best, m);
    bool dup = false;
    for (int j = 0; j < distinct; ++j)
      if (seen[std::size_t(j)] == m) dup = true;
    if (!dup) seen[std::size_t(distinct++)] = m;
  }
  sc.canonical = PitchClassSet::from_mask(best);
  sc.multiplicity = distinct;
  return sc;
}

namespace {

PcPair sorted_pair(int a, int b) {
  if (a > b) std::swap(a, b);
  return {PitchClass(a), PitchClass(b)};
}

PcTriple sorted_triple(int a, int b, int c) {
  std::array<int, 3> v{a, b, c};
  std::sort(v.begin(), v.end());
  return {PitchClass(v[0]), PitchClass(v[1]), PitchClass(v[2])};
}

}  // namespace

std::vector<PcPair> semitone_blocks(PitchClassSet s) {
  std::vector<PcPair> out;
  for (int t = 0; t < 12; ++t) {
    PitchClass a(t), b(t + 1);
    if (s.contains(a) && s.contains(b)) out.push_back(sorted_pair(a.value(), b.value()));
  }
  return out;
}

std::vector<PcTriple> semitone_cells(PitchClassSet s) {
  std::vector<PcTriple> out;
  for (int t = 0; t < 12; ++t) {
    PitchClass a(t), b(t + 1), c(t + 2);
    if (s.contains(a) && s.contains(b) && s.contains(c))
      out.push_back(sorted_triple(a.value(), b.value(), c.value()));
  }
  return out;
}

std::vector<PcPair> tone_blocks(PitchClassSet s) {
  std::vector<PcPair> out;
  for (int t = 0; t < 12; ++t) {
    for (int d = 1; d <= 2; ++d) {
      PitchClass a(t), b(t + d);
      if (s.contains(a) && s.contains(b)) out.push_back(sorted_pair(a.value(), b.value()));
    }
  }
  return out;
}

std::vector<PcTriple> tone_cells(PitchClassSet s) {
  std::vector<PcTriple> out;
  for (int t = 0; t < 12; ++t) {
    for (int d1 = 1; d1 <= 2; ++d1) {
      for (int d2 = 1; d2 <= 2; ++d2) {
        PitchClass a(t), b(t + d1), c(t + d1 + d2);
        if (s.contains(a) && s.contains(b) && s.contains(c))
          out.push_back(sorted_triple(a.value(), b.value(), c.value()));
      }
    }
  }
  return out;
}

}  // namespace tonality
