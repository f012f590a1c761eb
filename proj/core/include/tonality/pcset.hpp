#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tonality {

/// One of the twelve pitch classes, C = 0, reduced modulo 12.
class PitchClass {
 public:
  constexpr PitchClass() : value_(0) {}
  constexpr explicit PitchClass(int v) : value_(((v % 12) + 12) % 12) {}

  constexpr int value() const { return value_; }

  constexpr PitchClass operator+(int semitones) const {
    return PitchClass(value_ + semitones);
  }
  constexpr PitchClass operator-(int semitones) const {
    return PitchClass(value_ - semitones);
  }

  /// Circular distance: min(d, 12 - d).
  constexpr int distance_to(PitchClass other) const {
    int d = (other.value_ - value_ + 12) % 12;
    return d < 6 ? d : 12 - d;
  }

  const char* sharp_name() const;
  const char* flat_name() const;

  /// Accepts note names ("C", "F#", "Gb", unicode accidentals) and digits.
  static std::optional<PitchClass> parse(std::string_view text);

  friend constexpr bool operator==(PitchClass a, PitchClass b) {
    return a.value_ == b.value_;
  }
  friend constexpr bool operator!=(PitchClass a, PitchClass b) {
    return a.value_ != b.value_;
  }
  friend constexpr bool operator<(PitchClass a, PitchClass b) {
    return a.value_ < b.value_;
  }

 private:
  int value_;
};

/// A subset of the twelve pitch classes, stored as a 12-bit membership mask
/// (bit i set iff pitch class i is a member). Set equality is mask equality.
class PitchClassSet {
 public:
  constexpr PitchClassSet() : mask_(0) {}

  static constexpr PitchClassSet from_mask(std::uint16_t mask) {
    PitchClassSet s;
    s.mask_ = mask & 0xFFF;
    return s;
  }

  static PitchClassSet of(std::initializer_list<int> tones) {
    PitchClassSet s;
    for (int t : tones) s.mask_ |= std::uint16_t(1u << PitchClass(t).value());
    return s;
  }

  static PitchClassSet of(const std::vector<PitchClass>& tones) {
    PitchClassSet s;
    for (PitchClass t : tones) s.mask_ |= std::uint16_t(1u << t.value());
    return s;
  }

  static constexpr PitchClassSet chromatic() { return from_mask(0xFFF); }

  constexpr std::uint16_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return __builtin_popcount(mask_); }

  constexpr bool contains(PitchClass t) const {
    return (mask_ >> t.value()) & 1u;
  }

  constexpr PitchClassSet with(PitchClass t) const {
    return from_mask(mask_ | std::uint16_t(1u << t.value()));
  }
  constexpr PitchClassSet without(PitchClass t) const {
    return from_mask(mask_ & ~std::uint16_t(1u << t.value()));
  }

  constexpr PitchClassSet complement() const {
    return from_mask(~mask_ & 0xFFF);
  }

  constexpr PitchClassSet transposed(int k) const {
    k = ((k % 12) + 12) % 12;
    std::uint32_t m = mask_;
    return from_mask(std::uint16_t(((m << k) | (m >> (12 - k))) & 0xFFF));
  }

  constexpr bool subset_of(PitchClassSet other) const {
    return (mask_ & ~other.mask_) == 0;
  }

  std::vector<PitchClass> tones() const;

  /// Comma-separated sharp names by default; flats on request.
  std::string str(bool flats = false) const;

  /// Accepts "C,E,G", "0,4,7", and a hex mask form "0x091".
  static std::optional<PitchClassSet> parse(std::string_view text);

  friend constexpr bool operator==(PitchClassSet a, PitchClassSet b) {
    return a.mask_ == b.mask_;
  }
  friend constexpr bool operator!=(PitchClassSet a, PitchClassSet b) {
    return a.mask_ != b.mask_;
  }
  friend constexpr bool operator<(PitchClassSet a, PitchClassSet b) {
    return a.mask_ < b.mask_;
  }
  friend constexpr PitchClassSet operator|(PitchClassSet a, PitchClassSet b) {
    return from_mask(a.mask_ | b.mask_);
  }
  friend constexpr PitchClassSet operator&(PitchClassSet a, PitchClassSet b) {
    return from_mask(a.mask_ & b.mask_);
  }

 private:
  std::uint16_t mask_;
};

/// Transposition-equivalence class of a pitch-class set. The canonical
/// representative is the numerically smallest mask among the 12 rotations;
/// multiplicity counts the distinct rotations (12 / symmetry order).
struct ShapeClass {
  PitchClassSet canonical;
  int multiplicity = 0;

  static ShapeClass of(PitchClassSet s);

  friend bool operator==(const ShapeClass& a, const ShapeClass& b) {
    return a.canonical == b.canonical;
  }
  friend bool operator<(const ShapeClass& a, const ShapeClass& b) {
    return a.canonical < b.canonical;
  }
};

using PcPair = std::array<PitchClass, 2>;
using PcTriple = std::array<PitchClass, 3>;

/// Pairs {t, t+1} fully inside s. Reported as numerically sorted tuples.
std::vector<PcPair> semitone_blocks(PitchClassSet s);

/// Triples {t, t+1, t+2} fully inside s.
std::vector<PcTriple> semitone_cells(PitchClassSet s);

/// Pairs at circular distance 1 or 2.
std::vector<PcPair> tone_blocks(PitchClassSet s);

/// Triples a, a+d1, a+d1+d2 with d1, d2 in {1,2}, all inside s.
std::vector<PcTriple> tone_cells(PitchClassSet s);

inline int count_semitone_blocks(PitchClassSet s) {
  return int(semitone_blocks(s).size());
}
inline int count_semitone_cells(PitchClassSet s) {
  return int(semitone_cells(s).size());
}
inline int count_tone_blocks(PitchClassSet s) {
  return int(tone_blocks(s).size());
}
inline int count_tone_cells(PitchClassSet s) {
  return int(tone_cells(s).size());
}

inline PitchClassSet transpose(PitchClassSet s, int k) { return s.transposed(k); }
inline PitchClassSet complement(PitchClassSet s) { return s.complement(); }

}  // namespace tonality
