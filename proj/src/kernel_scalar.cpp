#include <limits>
#include <vector>

#include "lechlab/kernel.hpp"

namespace lechlab::kernel {

int64_t countScalar(const int32_t* box, int d, const int32_t* gens, int m) {
  if (d == 0) return m > 0 ? 0 : 1;  // any generator dominates the origin
  const int32_t b0 = box[0];
  if (d == 1) {
    int32_t lim = b0;
    for (int j = 0; j < m; ++j)
      if (gens[j * d] < lim) lim = gens[j * d];
    return lim < 0 ? 0 : lim;
  }

  // Odometer over suffixes (v_1,...,v_{d-1}).
  std::vector<int32_t> s(d - 1, 0);
  for (int i = 0; i < d - 1; ++i)
    if (box[i + 1] <= 0) return 0;
  if (b0 <= 0) return 0;

  int64_t total = 0;
  for (;;) {
    int32_t lim = b0;
    for (int j = 0; j < m; ++j) {
      const int32_t* g = gens + static_cast<size_t>(j) * d;
      if (g[0] >= lim) continue;
      bool active = true;
      for (int i = 1; i < d; ++i) {
        if (s[i - 1] < g[i]) { active = false; break; }
      }
      if (active) lim = g[0];
    }
    total += lim;

    int i = 0;
    while (i < d - 1) {
      if (++s[i] < box[i + 1]) break;
      s[i] = 0;
      ++i;
    }
    if (i == d - 1) break;
  }
  return total;
}

}  // namespace lechlab::kernel
