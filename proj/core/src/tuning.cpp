#include "tonality/tuning.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tonality {

double arc_distance(double a, double b) {
  double d = std::fabs(a - b);
  d -= std::floor(d);
  return std::min(d, 1.0 - d);
}

double log2_fifth() { return std::log2(1.5); }

double equal_temperament_ratio() { return std::pow(2.0, 7.0 / 12.0); }

double pythagorean_comma() { return 531441.0 / 524288.0; }  // 3^12 / 2^19

std::vector<CirclePoint> pythagorean_points(int n) {
  if (n < 1) throw std::invalid_argument("pythagorean_points: n >= 1 required");
  std::vector<CirclePoint> out;
  out.reserve(std::size_t(n));
  double x = log2_fifth();
  for (int k = 0; k < n; ++k) {
    double pos = std::fmod(double(k) * x, 1.0);
    out.push_back({pos, k});
  }
  return out;
}

std::vector<int> stopping_points(int max_n) {
  if (max_n < 2) throw std::invalid_argument("stopping_points: max_n >= 2 required");
  std::vector<int> out;
  std::vector<CirclePoint> pts = pythagorean_points(max_n + 1);
  for (int n = 2; n <= max_n; ++n) {
    std::vector<double> placed;
    placed.reserve(std::size_t(n));
    for (int k = 0; k < n; ++k) placed.push_back(pts[std::size_t(k)].position);
    std::sort(placed.begin(), placed.end());
    double min_gap = 1.0;
    for (std::size_t i = 0; i < placed.size(); ++i) {
      double next = i + 1 < placed.size() ? placed[i + 1] : placed[0] + 1.0;
      min_gap = std::min(min_gap, next - placed[i]);
    }
    double dist = arc_distance(pts[std::size_t(n)].position, 0.0);
    if (dist < 0.5 * min_gap) out.push_back(n);
  }
  return out;
}

double et_fifth_error(int n) {
  if (n < 1) throw std::invalid_argument("et_fifth_error: n >= 1 required");
  double x = log2_fifth();
  double best = 1.0;
  for (int k = 0; k <= n; ++k) {
    best = std::min(best, std::fabs(x - double(k) / double(n)));
  }
  return best;
}

std::vector<Convergent> fifth_convergents(int k) {
  if (k < 1) throw std::invalid_argument("fifth_convergents: k >= 1 required");
  if (k > 9)
    throw std::invalid_argument(
        "fifth_convergents: only 9 convergents supported by the stored precision");
  // log2(3/2) = 0.584962500721156181453738943947... (30 decimal digits).
  // Exact Euclid on the truncated rational; the truncation error (1e-30) is
  // far below 1/(q8*q9), so the first nine convergents are exact.
  __int128 num = (__int128)584962500721156ULL * 1000000000000000ULL +
                 (__int128)181453738943947ULL;
  __int128 den = 1;
  for (int i = 0; i < 30; ++i) den *= 10;

  std::vector<Convergent> out;
  std::uint64_t h1 = 1, h2 = 0;  // h(n-1), h(n-2)
  std::uint64_t k1 = 0, k2 = 1;
  __int128 a = num, b = den;
  bool skipped_a0 = false;
  while (int(out.size()) < k && b != 0) {
    __int128 term = a / b;
    __int128 rem = a - term * b;
    a = b;
    b = rem;
    std::uint64_t t = std::uint64_t(term);
    std::uint64_t h = t * h1 + h2;
    std::uint64_t q = t * k1 + k2;
    h2 = h1;
    h1 = h;
    k2 = k1;
    k1 = q;
    if (!skipped_a0) {
      skipped_a0 = true;  // a0 = 0 gives the trivial 0/1; the published list starts at 1/1
      continue;
    }
    out.push_back({h, q});
  }
  return out;
}

std::vector<CirclePoint> odd_overtone_points(int n) {
  if (n < 1) throw std::invalid_argument("odd_overtone_points: n >= 1 required");
  std::vector<CirclePoint> out;
  out.reserve(std::size_t(n));
  for (int k = 1; k <= n; ++k) {
    double v = std::log2(double(2 * k - 1));
    out.push_back({v - std::floor(v), k});
  }
  return out;
}

std::vector<double> pythagorean_vs_et_deviation() {
  std::vector<double> out;
  double x = log2_fifth();
  for (int k = 0; k < 12; ++k) {
    double pyth = std::fmod(double(k) * x, 1.0);
    double et = double((7 * k) % 12) / 12.0;
    out.push_back(arc_distance(pyth, et));
  }
  return out;
}

}  // namespace tonality
