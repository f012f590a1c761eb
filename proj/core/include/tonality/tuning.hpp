#pragma once

#include <cstdint>
#include <vector>

namespace tonality {

/// Fractional part of log2 of a frequency ratio, placed on the unit circle.
struct CirclePoint {
  double position = 0.0;  // in [0, 1)
  int index = 0;
};

/// Reduced continued-fraction convergent.
struct Convergent {
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 1;
};

/// Arc distance on the unit circle: min(|a-b|, 1-|a-b|).
double arc_distance(double a, double b);

double log2_fifth();              // log2(3/2)
double equal_temperament_ratio(); // 2^(7/12)
double pythagorean_comma();       // 3^12 / 2^19

/// Positions frac(k * log2(3/2)) for k = 0..n-1.
std::vector<CirclePoint> pythagorean_points(int n);

/// All n in [2, max_n] where point n lands within half the minimal gap
/// between circularly adjacent points among the first n. Reading of the
/// criterion: adjacent-gap, recorded because "minimal distance seen before"
/// is ambiguous; this reading yields 2, 5, 12 as the first stops.
std::vector<int> stopping_points(int max_n);

/// min over k of |log2(3/2) - k/n|.
double et_fifth_error(int n);

/// First k convergents of log2(3/2): 1/1, 1/2, 3/5, 7/12, 24/41, 31/53, ...
/// Computed in exact integer arithmetic from a 30-digit decimal expansion.
std::vector<Convergent> fifth_convergents(int k);

/// Positions frac(log2(2k-1)) for k = 1..n (the odd overtones).
std::vector<CirclePoint> odd_overtone_points(int n);

/// Pointwise deviation between the 12 Pythagorean fifths and 12-ET, pairing
/// point k with step 7k mod 12. Max equals 11/12 of the comma in log units.
std::vector<double> pythagorean_vs_et_deviation();

}  // namespace tonality
