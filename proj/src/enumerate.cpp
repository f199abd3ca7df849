#include <mutex>

#include "rtau/polyq.hpp"

namespace rtau {

namespace {

// Appends the members of I with the given degree and height, in lex order of
// (a_0, ..., a_d).
void append_block(int degree, long h, std::vector<IntPoly>& out) {
  const std::size_t len = static_cast<std::size_t>(degree) + 1;
  std::vector<long> c(len, -h);
  c[len - 1] = 1;
  for (;;) {
    bool has_h = false;
    for (long a : c) has_h = has_h || a == h || a == -h;
    if (has_h) {
      std::vector<Integer> coeffs(c.begin(), c.end());
      IntPoly g(std::move(coeffs));
      if (irreducible_over_Z(g)) out.push_back(std::move(g));
    }
    // odometer in lex order: a_0 most significant, a_d varies fastest
    std::size_t i = len;
    for (;;) {
      if (i == 0) return;
      --i;
      const long lo = (i == len - 1) ? 1 : -h;
      if (c[i] < h) {
        ++c[i];
        for (std::size_t j = i + 1; j < len; ++j) c[j] = (j == len - 1) ? 1 : -h;
        break;
      }
      c[i] = lo;
    }
  }
}

}  // namespace

IntPoly enumerate_I(std::size_t i) {
  static std::mutex mutex;
  static std::vector<IntPoly> cache;
  static long weight = 1;  // degree + height of the last completed block group
  std::lock_guard lock(mutex);
  while (cache.size() <= i) {
    ++weight;
    for (int d = 1; d < weight; ++d) append_block(d, weight - d, cache);
  }
  return cache[i];
}

}  // namespace rtau
